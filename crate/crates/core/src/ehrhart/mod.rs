//! Ehrhart quasi-polynomials through generating functions: the constituent
//! generating function `F_P(t, z)`, period tests by cyclic shifts, and the
//! minimum period by descending through prime divisors of `D(P)`.

mod count;
mod factor;

pub use count::{count, DilationCounter};
pub use factor::{distinct_primes, is_probable_prime, DefaultFactoring, FactoringOracle};

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::barvinok::polytope_rgf;
use crate::error::{Error, Result};
use crate::exact::{binomial, int_to_rat, Rational, RationalMatrix};
use crate::polytope::Polytope;
use crate::rgf::{
    compact_univariate, equals_laurent, expand_window, hadamard, power_sum_rgf, specialize_partial, window_kernel,
    Direction, ShortRGF,
};

/// `i_P(t) = f_{t mod D}(t)`; `constituents[i]` lists the coefficients of
/// `f_i` in ascending powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: u64,
    pub constituents: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn evaluate(&self, t: &BigInt) -> Rational {
        let i = t.mod_floor(&BigInt::from(self.period)).to_usize().expect("residue fits");
        let tr = int_to_rat(t);
        self.constituents[i].iter().rev().fold(Rational::zero(), |acc, c| acc * &tr + c)
    }
}

/// `F_P(t, z) = sum_m t^m coeffs[m](z)`, each coefficient a univariate RGF
/// supported on `[0, D - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPolyRGF {
    pub degree_bound: usize,
    pub period: BigInt,
    pub coeffs: Vec<ShortRGF>,
}

/// Tuning knobs for the pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Univariate RGFs supported on `[0, D - 1]` are rewritten as monomial
    /// lists when `D` is at most this. `0` keeps every intermediate short.
    pub compact_limit: u64,
    /// Largest `D` for which [`quasipolynomial`] expands constituents.
    pub dense_limit: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { compact_limit: 4096, dense_limit: 10_000 }
    }
}

impl PipelineOptions {
    fn compacts(&self, d: &BigInt) -> bool {
        *d <= BigInt::from(self.compact_limit)
    }
}

fn compact(f: ShortRGF, big_d: &BigInt, opts: &PipelineOptions) -> ShortRGF {
    if opts.compacts(big_d) {
        compact_univariate(&f, 0, big_d.to_i64().expect("D fits") - 1)
    } else {
        f.consolidate()
    }
}

/// `h_j(z) = sum_i i_P(jD + i) z^i` for `j = 0..=d`, then
/// `a_k(z) = sum_i a_{ik} z^i` with `i_P(sD + i) = sum_k a_{ik} s^k`.
pub fn interpolate_ak(p: &Polytope, opts: &PipelineOptions) -> Result<Vec<ShortRGF>> {
    let d = p.dim();
    let big_d = p.denominator();
    let mut h = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let q = p.build_q(j as u64, &big_d);
        let hj = specialize_partial(&polytope_rgf(&q), 1)?;
        h.push(compact(hj, &big_d, opts));
    }
    let vinv = RationalMatrix::vandermonde(d + 1).inverse().expect("Vandermonde matrix is invertible");
    let mut a = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut ak = ShortRGF::zero(1);
        for (j, hj) in h.iter().enumerate() {
            let c = &vinv[(k, j)];
            if !c.is_zero() {
                ak = ak.add(&hj.scale(c))?;
            }
        }
        a.push(ak.consolidate());
    }
    Ok(a)
}

/// Assembles `F_P(t, z) = sum_k a_k(z) * sum_i ((t - i)/D)^k z^i`, with the
/// inner sum expanded in powers of `t` over the power-sum kernels.
pub fn build_f(p: &Polytope, opts: &PipelineOptions) -> Result<TPolyRGF> {
    let d = p.dim();
    if p.is_empty() {
        let coeffs = alloc::vec![ShortRGF::zero(1); d + 1];
        return Ok(TPolyRGF { degree_bound: d, period: BigInt::one(), coeffs });
    }
    let big_d = p.denominator();
    let a = interpolate_ak(p, opts)?;
    let l = Direction::ascending();
    let kernels: Vec<ShortRGF> = (0..=d as u32).map(|j| power_sum_rgf(j, &big_d)).collect();
    let dk: Vec<Rational> = (0..=d as u32).map(|k| Rational::one() / int_to_rat(&big_d.pow(k))).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let mut fm = ShortRGF::zero(1);
        for k in m..=d {
            if a[k].is_empty() {
                continue;
            }
            let sign = if (k - m) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let c = binomial(&BigInt::from(k), m) * sign * &dk[k];
            fm = fm.add(&hadamard(&a[k], &kernels[k - m], &l)?.scale(&c))?;
        }
        coeffs.push(compact(fm, &big_d, opts));
    }
    let f = TPolyRGF { degree_bound: d, period: big_d, coeffs };
    check_denominators(&f)?;
    Ok(f)
}

fn check_denominators(f: &TPolyRGF) -> Result<()> {
    let bound = 2 * (f.degree_bound + 2);
    for c in &f.coeffs {
        if c.max_denominators() > bound {
            return Err(Error::DenominatorBound { found: c.max_denominators(), bound });
        }
    }
    Ok(())
}

/// `G_n = [F * (z^n - z^D)/(1 - z)] z^-n + [F * (1 - z^n)/(1 - z)] z^(D - n)`:
/// the constituent sequence rotated left by `n`.
pub fn cyclic_shift(f: &TPolyRGF, n: &BigInt) -> Result<TPolyRGF> {
    let big_d = &f.period;
    if !n.is_positive() || n > big_d {
        return Err(Error::ShiftOutOfRange { n: n.to_string(), period: big_d.to_string() });
    }
    let l = Direction::ascending();
    let upper = window_kernel(n, big_d);
    let lower = window_kernel(&BigInt::zero(), n);
    let down = crate::exact::IntVector::new(alloc::vec![-n]);
    let up = crate::exact::IntVector::new(alloc::vec![big_d - n]);
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        let a = hadamard(c, &upper, &l)?.shift(&down)?;
        let b = hadamard(c, &lower, &l)?.shift(&up)?;
        coeffs.push(a.add(&b)?.consolidate());
    }
    Ok(TPolyRGF { degree_bound: f.degree_bound, period: big_d.clone(), coeffs })
}

/// Whether `n` is a period of the quasi-polynomial encoded by `f`.
pub fn is_period_of(f: &TPolyRGF, n: &BigInt) -> Result<bool> {
    if !n.is_positive() {
        return Err(Error::NonPositivePeriod);
    }
    let r = n.mod_floor(&f.period);
    if r.is_zero() {
        return Ok(true);
    }
    let g = cyclic_shift(f, &r)?;
    for (a, b) in f.coeffs.iter().zip(&g.coeffs) {
        if !equals_laurent(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_period(p: &Polytope, n: &BigInt) -> Result<bool> {
    if !n.is_positive() {
        return Err(Error::NonPositivePeriod);
    }
    is_period_of(&build_f(p, &PipelineOptions::default())?, n)
}

/// Minimum period of `i_P`: starting from `D(P)`, divide by the smallest
/// prime `p` for which the quotient is still a period, until none is.
pub fn min_period_of(f: &TPolyRGF, oracle: &dyn FactoringOracle) -> Result<BigInt> {
    let mut n = f.period.clone();
    'descend: loop {
        for p in distinct_primes(oracle, &n) {
            let m = &n / &p;
            if is_period_of(f, &m)? {
                n = m;
                continue 'descend;
            }
        }
        return Ok(n);
    }
}

pub fn min_period(p: &Polytope, oracle: &dyn FactoringOracle) -> Result<BigInt> {
    min_period_of(&build_f(p, &PipelineOptions::default())?, oracle)
}

/// Dense constituent table read off `F_P(t, z)`.
pub fn quasipolynomial(p: &Polytope, opts: &PipelineOptions) -> Result<QuasiPolynomial> {
    let big_d = p.denominator();
    if big_d > BigInt::from(opts.dense_limit) {
        return Err(Error::ExpansionGuard { period: big_d.to_string(), limit: opts.dense_limit });
    }
    quasipolynomial_of(&build_f(p, opts)?)
}

pub fn quasipolynomial_of(f: &TPolyRGF) -> Result<QuasiPolynomial> {
    let period = f.period.to_u64().expect("guarded period fits");
    let mut constituents = alloc::vec![alloc::vec![Rational::zero(); f.coeffs.len()]; period as usize];
    for (m, c) in f.coeffs.iter().enumerate() {
        for (i, v) in expand_window(c, 0, period as i64 - 1).into_iter().enumerate() {
            constituents[i][m] = v;
        }
    }
    Ok(QuasiPolynomial { period, constituents })
}
