use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rank, IntVector, Rational};
use crate::polytope::{cone_extreme_rays, Cone};

/// Component of `v` orthogonal to the span of `face`.
fn orthogonal_part(v: &IntVector, face: &[&IntVector]) -> Vec<Rational> {
    let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for f in face {
        let mut u = f.to_rational();
        for b in &basis {
            let c = dot(&u, b) / dot(b, b);
            for (ui, bi) in u.iter_mut().zip(b) {
                *ui -= &c * bi;
            }
        }
        if u.iter().any(|x| !x.is_zero()) {
            basis.push(u);
        }
    }
    let mut u = v.to_rational();
    for b in &basis {
        let c = dot(&u, b) / dot(b, b);
        for (ui, bi) in u.iter_mut().zip(b) {
            *ui -= &c * bi;
        }
    }
    u
}

/// Checks that the generators span the space and that no nonnegative
/// combination of them vanishes.
pub(crate) fn check_pointed_full(c: &Cone) -> Result<()> {
    let d = c.dim();
    if c.generators.iter().any(|g| g.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: c.generators.len() });
    }
    if c.generators.iter().any(IntVector::is_zero) || rank(&c.generators) < d {
        return Err(Error::Degenerate);
    }
    let negated: Vec<IntVector> = c.generators.iter().map(IntVector::neg).collect();
    if rank(&cone_extreme_rays(&negated, d)) < d {
        return Err(Error::NonPointedCone);
    }
    Ok(())
}

/// Placing triangulation in the stored generator order.
///
/// Each generator either raises the dimension (coned over every simplex) or
/// is joined to every boundary facet it sees. Simplices keep the stored order
/// of their generators.
pub fn triangulate(c: &Cone) -> Result<Vec<Cone>> {
    check_pointed_full(c)?;
    if c.is_simplicial() {
        return Ok(alloc::vec![c.clone()]);
    }
    let gens = &c.generators;
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut used: Vec<IntVector> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if simplices.is_empty() {
            simplices.push(alloc::vec![i]);
            used.push(g.clone());
            continue;
        }
        let before = rank(&used);
        used.push(g.clone());
        if rank(&used) > before {
            for s in simplices.iter_mut() {
                s.push(i);
            }
            continue;
        }
        // facet -> (owning simplex, opposite vertex), boundary iff seen once
        let mut facets: BTreeMap<Vec<usize>, (usize, Option<usize>)> = BTreeMap::new();
        for s in &simplices {
            for (k, &v) in s.iter().enumerate() {
                let mut f = s.clone();
                f.remove(k);
                facets.entry(f).and_modify(|e| e.1 = None).or_insert((v, Some(v)));
            }
        }
        let mut added = Vec::new();
        for (f, (_, opposite)) in facets {
            let Some(v) = opposite else { continue };
            let face: Vec<&IntVector> = f.iter().map(|&j| &gens[j]).collect();
            let n = orthogonal_part(&gens[v], &face);
            if g.dot_rational(&n).is_negative() {
                let mut s = f;
                s.push(i);
                s.sort_unstable();
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    Ok(simplices
        .into_iter()
        .map(|s| Cone::new(c.apex.clone(), s.into_iter().map(|j| gens[j].clone()).collect()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::det;
    use crate::polytope::origin;
    use alloc::vec;

    fn cone(g: &[&[i64]]) -> Cone {
        Cone::new(origin(g[0].len()), g.iter().map(|x| IntVector::from_i64s(x)).collect())
    }

    #[test]
    fn fan_split() {
        let t = triangulate(&cone(&[&[1, 0], &[1, 1], &[0, 1]])).unwrap();
        assert_eq!(t, vec![cone(&[&[1, 0], &[1, 1]]), cone(&[&[1, 1], &[0, 1]])]);
    }

    #[test]
    fn simplicial_is_identity() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(triangulate(&c).unwrap(), vec![c]);
    }

    #[test]
    fn rejects_non_pointed() {
        assert_eq!(triangulate(&cone(&[&[1, 0], &[-1, 0], &[0, 1]])), Err(Error::NonPointedCone));
    }

    #[test]
    fn square_pyramid_volume() {
        // cone over a square: two simplices whose volumes add to the total
        let c = cone(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]);
        let t = triangulate(&c).unwrap();
        assert_eq!(t.len(), 2);
        let vol: num_bigint::BigInt = t.iter().map(|s| det(&s.generators).abs()).sum();
        assert_eq!(vol, num_bigint::BigInt::from(8));
    }
}
