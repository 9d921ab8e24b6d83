use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::window::is_polynomial;
use super::{expand_window, specialize_all_ones, substitute_monomial_limit, Direction, MonomialMap, ShortRGF, Term};
use crate::barvinok::polyhedron_rgf;
use crate::error::{Error, Result};
use crate::exact::{solve_integer_system, IntVector, Rational};
use crate::polytope::Polyhedron;

/// Widest exponent range for which a univariate product against a monomial
/// list is read off a dense expansion instead of the lattice-point route.
const DENSE_LOOKUP_LIMIT: i64 = 1 << 16;

/// Hadamard product: the series whose coefficient at `x^m` is the product of
/// the operands' coefficients at `x^m`, both expanded in direction `l`.
pub fn hadamard(g1: &ShortRGF, g2: &ShortRGF, l: &Direction) -> Result<ShortRGF> {
    if g1.dim() != g2.dim() {
        return Err(Error::DimensionMismatch { expected: g1.dim(), found: g2.dim() });
    }
    let a = g1.oriented(l)?;
    let b = g2.oriented(l)?;
    if a.is_empty() || b.is_empty() {
        return Ok(ShortRGF::zero(a.dim()));
    }
    if is_polynomial(&a) && is_polynomial(&b) {
        return Ok(monomial_product(&a, &b));
    }
    if a.dim() == 1 && l.0[0].is_positive() {
        if let Some(f) = dense_lookup(&a, &b).or_else(|| dense_lookup(&b, &a)) {
            return Ok(f);
        }
    }
    let mut out = ShortRGF::zero(a.dim());
    for s in a.terms() {
        for t in b.terms() {
            out.extend_terms(hadamard_terms(s, t)?);
        }
    }
    Ok(out.consolidate())
}

fn monomial_product(a: &ShortRGF, b: &ShortRGF) -> ShortRGF {
    let mut left: BTreeMap<&IntVector, Rational> = BTreeMap::new();
    for t in a.terms() {
        *left.entry(&t.num).or_insert_with(Rational::zero) += &t.coeff;
    }
    let mut right: BTreeMap<&IntVector, Rational> = BTreeMap::new();
    for t in b.terms() {
        *right.entry(&t.num).or_insert_with(Rational::zero) += &t.coeff;
    }
    let mut out = ShortRGF::zero(a.dim());
    for (m, c) in left {
        if let Some(d) = right.get(m) {
            out.push(Term::monomial(&c * d, m.clone()));
        }
    }
    out.consolidate()
}

/// Univariate `poly * f` with `poly` a monomial list of moderate spread.
fn dense_lookup(poly: &ShortRGF, f: &ShortRGF) -> Option<ShortRGF> {
    if !is_polynomial(poly) {
        return None;
    }
    let exps: Vec<i64> = poly.terms().iter().map(|t| t.num[0].to_i64()).collect::<Option<_>>()?;
    let lo = *exps.iter().min()?;
    let hi = *exps.iter().max()?;
    if hi - lo > DENSE_LOOKUP_LIMIT {
        return None;
    }
    let coeffs = expand_window(f, lo, hi);
    let mut out = ShortRGF::zero(1);
    for (t, e) in poly.terms().iter().zip(&exps) {
        let c = &coeffs[(e - lo) as usize];
        if !c.is_zero() {
            out.push(Term::monomial(&t.coeff * c, t.num.clone()));
        }
    }
    Some(out.consolidate())
}

/// Hadamard product of two single terms already oriented along a common
/// direction.
///
/// Pairs `(lambda, mu) >= 0` with `p + A lambda = q + C mu` are the lattice
/// points of a pointed polyhedron; its generating function, pushed forward
/// along `(lambda, mu) -> p + A lambda`, is the product.
pub fn hadamard_terms(s: &Term, t: &Term) -> Result<Vec<Term>> {
    let dim = s.num.len();
    let (k1, k2) = (s.den.len(), t.den.len());
    let coeff = &s.coeff * &t.coeff;
    if k1 + k2 == 0 {
        return Ok(if s.num == t.num { alloc::vec![Term::monomial(coeff, s.num.clone())] } else { Vec::new() });
    }
    let n = k1 + k2;
    let rows: Vec<IntVector> = (0..dim)
        .map(|i| {
            let mut r: Vec<BigInt> = s.den.iter().map(|a| a[i].clone()).collect();
            r.extend(t.den.iter().map(|c| -&c[i]));
            IntVector::new(r)
        })
        .collect();
    let rhs: Vec<BigInt> = (0..dim).map(|i| &t.num[i] - &s.num[i]).collect();
    let Some(sol) = solve_integer_system(&rows, &rhs, n) else {
        return Ok(Vec::new());
    };
    let lam0 = IntVector::new(sol.particular.entries()[..k1].to_vec());
    let base = s.num.add(&IntVector::combine(&s.den, &lam0, dim));
    let r = sol.kernel.len();
    if r == 0 {
        let feasible = sol.particular.iter().all(|x| !x.is_negative());
        return Ok(if feasible { alloc::vec![Term::monomial(coeff, base)] } else { Vec::new() });
    }

    // (lambda, mu) = x0 + K nu >= 0
    let ineqs = (0..n)
        .map(|i| (IntVector::new(sol.kernel.iter().map(|col| -&col[i]).collect()), sol.particular[i].clone()))
        .collect();
    let f = polyhedron_rgf(&Polyhedron::new(r, ineqs))?;
    let images = sol
        .kernel
        .iter()
        .map(|col| IntVector::combine(&s.den, &IntVector::new(col.entries()[..k1].to_vec()), dim))
        .collect();
    let g = substitute_monomial_limit(&f, &MonomialMap::new(images, dim))?;
    Ok(g.shift(&base)?.scale(&coeff).into_terms())
}

/// Applies `hadamard(_, kernel, l)` to every coefficient of a graded family.
pub fn hadamard_z(coeffs: &[ShortRGF], kernel: &ShortRGF, l: &Direction) -> Result<Vec<ShortRGF>> {
    coeffs.iter().map(|c| hadamard(c, kernel, l)).collect()
}

/// Decides `g1 == g2` for RGFs that represent Laurent polynomials: with
/// `h = g1 - g2`, the sum of squared coefficients of `h` is the value at 1
/// of `h * h` (Hadamard), which vanishes iff `h` does.
pub fn equals_laurent(g1: &ShortRGF, g2: &ShortRGF) -> Result<bool> {
    let h = g1.sub(g2)?.consolidate();
    if h.is_empty() {
        return Ok(true);
    }
    if is_polynomial(&h) {
        return Ok(false);
    }
    let l = if h.dim() == 1 { Direction::ascending() } else { Direction::generic_for(h.dim(), &[&h]) };
    let sq = hadamard(&h, &h, &l)?;
    Ok(specialize_all_ones(&sq)?.is_zero())
}
