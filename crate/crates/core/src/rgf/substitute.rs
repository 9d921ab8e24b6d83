use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::Series;
use super::{moment_vector, MonomialMap, ShortRGF, Term};
use crate::error::{Error, Result};
use crate::exact::{IntVector, Rational};

fn check_source(f: &ShortRGF, map: &MonomialMap) -> Result<()> {
    if map.source_dim() != f.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: map.source_dim() });
    }
    Ok(())
}

/// Term-wise substitution. Fails with [`Error::ImageInPoles`] if some
/// denominator is sent to the constant monomial; use
/// [`substitute_monomial_limit`] in that case.
pub fn substitute_monomial(f: &ShortRGF, map: &MonomialMap) -> Result<ShortRGF> {
    check_source(f, map)?;
    let mut out = ShortRGF::zero(map.target_dim);
    for t in f.terms() {
        let den: Vec<IntVector> = t.den.iter().map(|b| map.apply(b)).collect();
        if den.iter().any(IntVector::is_zero) {
            return Err(Error::ImageInPoles);
        }
        out.push(Term::new(t.coeff.clone(), map.apply(&t.num), den));
    }
    Ok(out)
}

/// Substitution that stays valid when denominators map to 1.
///
/// Each variable is perturbed to `x_i -> z^{l_i} (1 + s)^{lambda_i}` with one
/// `lambda` shared by all terms and not orthogonal to any denominator, and the
/// constant coefficient in `s` is extracted term by term. The result has no
/// more denominators per term than the input.
pub fn substitute_monomial_limit(f: &ShortRGF, map: &MonomialMap) -> Result<ShortRGF> {
    check_source(f, map)?;
    let poles: Vec<&IntVector> = f
        .terms()
        .iter()
        .flat_map(|t| t.den.iter())
        .filter(|b| map.apply(b).is_zero())
        .collect();
    if poles.is_empty() {
        return substitute_monomial(f, map);
    }
    let lambda = moment_vector(f.dim(), &poles);
    let mut out = ShortRGF::zero(map.target_dim);
    for t in f.terms() {
        limit_term(t, map, &lambda, &mut out);
    }
    Ok(out)
}

fn limit_term(t: &Term, map: &MonomialMap, lambda: &IntVector, out: &mut ShortRGF) {
    let num = map.apply(&t.num);
    let mut poles: Vec<BigInt> = Vec::new();
    let mut mixed: Vec<(IntVector, BigInt)> = Vec::new();
    let mut plain: Vec<IntVector> = Vec::new();
    for b in &t.den {
        let w = map.apply(b);
        let c = lambda.dot(b);
        if w.is_zero() {
            poles.push(c);
        } else if c.is_zero() {
            plain.push(w);
        } else {
            mixed.push((w, c));
        }
    }
    let r = poles.len();
    if r == 0 {
        let mut den = plain;
        den.extend(mixed.into_iter().map(|(w, _)| w));
        out.push(Term::new(t.coeff.clone(), num, den));
        return;
    }

    // coeff (1+s)^{<lambda,p>} prod_j -1/E1_j(s), to be read off at s^r
    let mut scalar = Series::binomial_power(&lambda.dot(&t.num), r);
    for c in &poles {
        scalar = scalar.mul(&Series::divided_difference(c, r).inverse());
    }
    let sign = if r % 2 == 0 { Rational::one() } else { -Rational::one() };
    scalar.scale(&(&t.coeff * sign));

    let e_powers: Vec<Vec<Series>> = mixed
        .iter()
        .map(|(_, c)| {
            let e = Series::shifted_power(c, r);
            let mut pw = alloc::vec![Series::one(r)];
            for n in 1..=r {
                pw.push(pw[n - 1].mul(&e));
            }
            pw
        })
        .collect();

    let mut counts = alloc::vec![0usize; mixed.len()];
    enumerate(&mut counts, 0, r, &mut |n: &[usize]| {
        let mut s = scalar.clone();
        for (j, &nj) in n.iter().enumerate() {
            if nj > 0 {
                s = s.mul(&e_powers[j][nj]);
            }
        }
        let coeff = s.0[r].clone();
        if coeff.is_zero() {
            return;
        }
        let mut exp = num.clone();
        let mut den = plain.clone();
        for (j, &nj) in n.iter().enumerate() {
            let w = &mixed[j].0;
            exp = exp.add_scaled(w, &BigInt::from(nj));
            den.extend(core::iter::repeat(w.clone()).take(nj + 1));
        }
        out.push(Term::new(coeff, exp, den));
    });
}

/// Calls `f` on every tuple with `sum <= budget`.
fn enumerate(counts: &mut [usize], i: usize, budget: usize, f: &mut impl FnMut(&[usize])) {
    if i == counts.len() {
        f(counts);
        return;
    }
    for n in 0..=budget {
        counts[i] = n;
        enumerate(counts, i + 1, budget - n, f);
    }
    counts[i] = 0;
}

/// Value at `x = (1, ..., 1)` of a function regular there, e.g. a Laurent
/// polynomial: its number of lattice points for a polytope generating function.
///
/// Computed as the limit along `x_i = (1 + s)^{lambda_i}`; fails with
/// [`Error::PoleAtOne`] if the polar parts of the terms do not cancel.
pub fn specialize_all_ones(f: &ShortRGF) -> Result<Rational> {
    let dens: Vec<&IntVector> = f.terms().iter().flat_map(|t| t.den.iter()).collect();
    let lambda = moment_vector(f.dim(), &dens);
    let order = f.max_denominators();
    // laurent[k] is the coefficient of s^{k - order}
    let mut laurent = alloc::vec![Rational::zero(); order + 1];
    for t in f.terms() {
        let r = t.den.len();
        let mut s = Series::binomial_power(&lambda.dot(&t.num), r);
        for b in &t.den {
            s = s.mul(&Series::divided_difference(&lambda.dot(b), r).inverse());
        }
        let sign = if r % 2 == 0 { Rational::one() } else { -Rational::one() };
        for (i, c) in s.0.iter().enumerate() {
            laurent[order - r + i] += c * &t.coeff * &sign;
        }
    }
    if laurent[..order].iter().any(|c| !c.is_zero()) {
        return Err(Error::PoleAtOne);
    }
    Ok(laurent.swap_remove(order))
}

/// Sets every variable after the first `keep` to 1.
pub fn specialize_partial(f: &ShortRGF, keep: usize) -> Result<ShortRGF> {
    if keep > f.dim() {
        return Err(Error::InvalidArgument("cannot keep more variables than present".into()));
    }
    let images = (0..f.dim())
        .map(|i| if i < keep { IntVector::unit(keep, i) } else { IntVector::zeros(keep) })
        .collect();
    substitute_monomial_limit(f, &MonomialMap::new(images, keep))
}
