//! Rational polytopes given by integer inequalities.

mod polyhedron;

pub use polyhedron::{cone_extreme_rays, origin, Polyhedron};

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_to_rat, rank, IntVector, Rational, RationalPoint};

/// A bounded rational polyhedron `{x : <c, x> <= b}`; possibly empty or lower
/// dimensional. Vertices are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    hrep: Polyhedron,
    vertices: VertexSet,
}

/// Vertices of a polytope, deduplicated and lexicographically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexSet {
    pub vertices: Vec<RationalPoint>,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, RationalPoint> {
        self.vertices.iter()
    }
}

/// A pointed cone `apex + cone(generators)` with primitive integer generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub apex: RationalPoint,
    pub generators: Vec<IntVector>,
}

impl Cone {
    pub fn new(apex: RationalPoint, generators: Vec<IntVector>) -> Self {
        Cone { apex, generators }
    }

    /// Cone at the origin.
    pub fn at_origin(generators: Vec<IntVector>) -> Self {
        let d = generators.first().map_or(0, IntVector::len);
        Cone { apex: origin(d), generators }
    }

    pub fn dim(&self) -> usize {
        self.apex.len()
    }

    pub fn is_simplicial(&self) -> bool {
        self.generators.len() == self.dim() && rank(&self.generators) == self.dim()
    }
}

impl Polytope {
    /// Validates an inequality system `<c, x> <= b`.
    ///
    /// Fails on an empty system, rows of the wrong length, or an unbounded
    /// solution set. Empty solution sets are accepted.
    pub fn new(dim: usize, inequalities: Vec<(IntVector, BigInt)>) -> Result<Self> {
        if inequalities.is_empty() {
            return Err(Error::NoInequalities);
        }
        if let Some((c, _)) = inequalities.iter().find(|(c, _)| c.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: c.len() });
        }
        let hrep = Polyhedron::new(dim, inequalities);
        if !hrep.is_pointed() {
            // the recession cone contains a line; bounded only if empty
            return if hrep.is_empty_fm() {
                Ok(Polytope { hrep, vertices: VertexSet::default() })
            } else {
                Err(Error::NotAPolytope)
            };
        }
        let vertices = hrep.vertices();
        if !vertices.is_empty() && !hrep.recession_rays().is_empty() {
            return Err(Error::NotAPolytope);
        }
        Ok(Polytope { hrep, vertices: VertexSet { vertices } })
    }

    /// Convenience constructor from rows `[c_1, ..., c_d, b]`.
    pub fn from_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let mut ineqs = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != dim + 1 {
                return Err(Error::DimensionMismatch { expected: dim + 1, found: r.len() });
            }
            ineqs.push((IntVector::from_i64s(&r[..dim]), BigInt::from(r[dim])));
        }
        Self::new(dim, ineqs)
    }

    /// The pentagon with vertices (0,0), (0,-1/s), (D,-1/s), (D,0), (1,(D-1)/D).
    /// Its denominator is `D` while its minimum period is `s`.
    pub fn pentagon(big_d: i64, s: i64) -> Result<Self> {
        if big_d < 1 || s < 1 || big_d % s != 0 {
            return Err(Error::InvalidArgument("pentagon needs D >= 1 and s dividing D".into()));
        }
        Self::from_rows(
            2,
            &[
                &[-1, 0, 0],
                &[0, -s, 1],
                &[1, 0, big_d],
                &[1, big_d, big_d],
                &[-(big_d - 1), big_d, 0],
            ],
        )
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim
    }

    pub fn inequalities(&self) -> &[(IntVector, BigInt)] {
        &self.hrep.rows
    }

    pub fn hrep(&self) -> &Polyhedron {
        &self.hrep
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// `D(P)`: lcm of the denominators of all vertex coordinates (1 if empty).
    pub fn denominator(&self) -> BigInt {
        self.vertices
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// `tP = {t x : x in P}`: every `(c, b)` becomes `(c, t b)`. The empty
    /// polytope dilates to itself, including for `t = 0`.
    pub fn dilate(&self, t: &BigInt) -> Polytope {
        assert!(!t.is_negative(), "dilation factor must be nonnegative");
        if self.is_empty() {
            return self.clone();
        }
        let rows = self.hrep.rows.iter().map(|(c, b)| (c.clone(), b * t)).collect();
        let vertices = if t.is_zero() {
            alloc::vec![origin(self.dim())]
        } else {
            let tr = int_to_rat(t);
            self.vertices.iter().map(|v| v.iter().map(|x| x * &tr).collect()).collect()
        };
        Polytope { hrep: Polyhedron::new(self.dim(), rows), vertices: VertexSet { vertices } }
    }

    /// Tangent cone at a vertex: apex `v`, generators the primitive edge
    /// directions leaving `v`, sorted lexicographically.
    pub fn tangent_cone(&self, v: &[Rational]) -> Result<Cone> {
        if !self.vertices.vertices.iter().any(|u| u.as_slice() == v) {
            return Err(Error::NotAVertex);
        }
        let tight: Vec<IntVector> = self.hrep.tight_rows(v).into_iter().map(|i| self.hrep.rows[i].0.clone()).collect();
        Ok(Cone::new(v.to_vec(), cone_extreme_rays(&tight, self.dim())))
    }

    /// `Q_j = {(z, y) : 0 <= z <= D - 1, y in (jD + z) P}` in dimension `d + 1`,
    /// with `z` as the first coordinate.
    pub fn build_q(&self, j: u64, big_d: &BigInt) -> Polytope {
        let d = self.dim();
        let shift = BigInt::from(j) * big_d;
        let mut rows = Vec::with_capacity(self.hrep.rows.len() + 2);
        let lift = |z: BigInt, y: &IntVector| {
            let mut e = alloc::vec![z];
            e.extend(y.iter().cloned());
            IntVector::new(e)
        };
        rows.push((lift(BigInt::from(-1), &IntVector::zeros(d)), BigInt::zero()));
        rows.push((lift(BigInt::one(), &IntVector::zeros(d)), big_d - 1));
        for (c, b) in &self.hrep.rows {
            rows.push((lift(-b, c), b * &shift));
        }
        Polytope::new(d + 1, rows).expect("Q_j is bounded whenever P is")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use alloc::vec;

    fn pt(xs: &[(i64, i64)]) -> RationalPoint {
        xs.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    fn unit_square() -> Polytope {
        Polytope::from_rows(2, &[&[-1, 0, 0], &[1, 0, 1], &[0, -1, 0], &[0, 1, 1]]).unwrap()
    }

    fn half_square() -> Polytope {
        Polytope::from_rows(2, &[&[2, 0, 1], &[0, 2, 1], &[-1, 0, 0], &[0, -1, 0]]).unwrap()
    }

    #[test]
    fn square_vertices() {
        let p = unit_square();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(
            p.vertices().vertices,
            vec![pt(&[(0, 1), (0, 1)]), pt(&[(0, 1), (1, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(1, 1), (1, 1)])]
        );
        assert_eq!(p.denominator(), BigInt::one());
    }

    #[test]
    fn half_square_vertices() {
        let p = half_square();
        assert_eq!(
            p.vertices().vertices,
            vec![pt(&[(0, 1), (0, 1)]), pt(&[(0, 1), (1, 2)]), pt(&[(1, 2), (0, 1)]), pt(&[(1, 2), (1, 2)])]
        );
        assert_eq!(p.denominator(), BigInt::from(2));
    }

    #[test]
    fn pentagon_vertices() {
        let p = Polytope::pentagon(4, 2).unwrap();
        let expected = vec![
            pt(&[(0, 1), (-1, 2)]),
            pt(&[(0, 1), (0, 1)]),
            pt(&[(1, 1), (3, 4)]),
            pt(&[(4, 1), (-1, 2)]),
            pt(&[(4, 1), (0, 1)]),
        ];
        assert_eq!(p.vertices().vertices, expected);
        assert_eq!(p.denominator(), BigInt::from(4));
    }

    #[test]
    fn empty_and_unbounded() {
        let empty = Polytope::from_rows(1, &[&[-1, -1], &[1, 0]]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.denominator(), BigInt::one());
        assert_eq!(Polytope::from_rows(1, &[&[-1, 0]]), Err(Error::NotAPolytope));
        assert_eq!(Polytope::new(2, vec![]), Err(Error::NoInequalities));
        // a strip is unbounded even though it has no vertices
        assert_eq!(Polytope::from_rows(2, &[&[1, 0, 1], &[-1, 0, 0]]), Err(Error::NotAPolytope));
    }

    #[test]
    fn dilation() {
        let p = unit_square().dilate(&BigInt::from(3));
        assert_eq!(p.vertices().vertices.last().unwrap(), &vec![rat(3), rat(3)]);
        let h = half_square().dilate(&BigInt::from(2));
        assert_eq!(h.vertices(), unit_square().vertices());
        let z = unit_square().dilate(&BigInt::zero());
        assert_eq!(z.vertices().vertices, vec![origin(2)]);
    }

    #[test]
    fn tangent_cones() {
        let p = unit_square();
        let c = p.tangent_cone(&pt(&[(0, 1), (0, 1)])).unwrap();
        assert_eq!(c.generators, vec![IntVector::from_i64s(&[0, 1]), IntVector::from_i64s(&[1, 0])]);
        let c = p.tangent_cone(&pt(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(c.generators, vec![IntVector::from_i64s(&[-1, 0]), IntVector::from_i64s(&[0, -1])]);
        assert_eq!(p.tangent_cone(&pt(&[(1, 2), (0, 1)])), Err(Error::NotAVertex));

        let pent = Polytope::pentagon(4, 2).unwrap();
        let c = pent.tangent_cone(&pt(&[(1, 1), (3, 4)])).unwrap();
        assert_eq!(c.generators, vec![IntVector::from_i64s(&[-4, -3]), IntVector::from_i64s(&[4, -1])]);
    }

    fn lattice_points(p: &Polytope, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let d = p.dim();
        let mut x = vec![lo; d];
        loop {
            if p.hrep().contains_int(&IntVector::from_i64s(&x)) {
                out.push(x.clone());
            }
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                x[i] += 1;
                if x[i] <= hi {
                    break;
                }
                x[i] = lo;
                i += 1;
            }
        }
    }

    #[test]
    fn q_polytopes_of_half_segment() {
        let p = Polytope::from_rows(1, &[&[2, 1], &[-1, 0]]).unwrap();
        let d = p.denominator();
        assert_eq!(d, BigInt::from(2));
        let q0 = p.build_q(0, &d);
        assert_eq!(lattice_points(&q0, -3, 6), vec![vec![0, 0], vec![1, 0]]);
        let q1 = p.build_q(1, &d);
        assert_eq!(lattice_points(&q1, -3, 6), vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        let point = Polytope::from_rows(1, &[&[1, 0], &[-1, 0]]).unwrap();
        let q = point.build_q(0, &BigInt::one());
        assert_eq!(lattice_points(&q, -3, 3), vec![vec![0, 0]]);
    }

    #[test]
    fn q_slices_match_dilates() {
        let p = Polytope::pentagon(4, 2).unwrap();
        let big_d = p.denominator();
        for j in 0..=2u64 {
            let q = p.build_q(j, &big_d);
            let pts = lattice_points(&q, -1, 40);
            for a in 0..4i64 {
                let t = BigInt::from(j as i64 * 4 + a);
                let slice: Vec<Vec<i64>> = pts.iter().filter(|x| x[0] == a).map(|x| x[1..].to_vec()).collect();
                let mut slice = slice;
                slice.sort();
                let mut direct = lattice_points(&p.dilate(&t), -1, 40);
                direct.sort();
                assert_eq!(slice, direct, "j={j} a={a}");
            }
        }
    }

    #[test]
    fn vertex_denominator_property() {
        for (dd, s) in [(4, 2), (6, 3), (6, 2), (5, 1)] {
            let p = Polytope::pentagon(dd, s).unwrap();
            let big_d = p.denominator();
            assert_eq!(big_d, BigInt::from(dd));
            for m in 1..dd {
                let scaled_integral = p
                    .dilate(&BigInt::from(m))
                    .vertices()
                    .iter()
                    .all(|v| v.iter().all(Rational::is_integer));
                assert_eq!(scaled_integral, m % dd == 0);
            }
        }
    }
}
