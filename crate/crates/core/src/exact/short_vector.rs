use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::{det, hermite_normal_form, int_to_rat, lll_reduce, IntVector, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// `|g|^d * index <= 1` for every coordinate, i.e. `|g_i| <= index^(-1/d)`.
fn within_bound(gamma: &[Rational], index: &BigInt) -> bool {
    let d = gamma.len() as u32;
    let idx = int_to_rat(index);
    gamma.iter().all(|g| Pow::pow(g.abs(), d) * &idx <= Rational::one())
}

struct Candidate {
    w: IntVector,
    gamma: Vec<Rational>,
}

impl Candidate {
    fn key(&self) -> (usize, &IntVector) {
        (self.gamma.iter().filter(|g| g.is_negative()).count(), &self.w)
    }
}

/// Builds the primitive lattice vector `U gamma` and its coordinates.
fn candidate(basis: &[IntVector], gamma: &[Rational]) -> Option<Candidate> {
    let n = basis.len();
    let mut w_rat = alloc::vec![Rational::zero(); n];
    for (u, g) in basis.iter().zip(gamma) {
        for i in 0..n {
            w_rat[i] += int_to_rat(&u[i]) * g;
        }
    }
    debug_assert!(w_rat.iter().all(|x| x.is_integer()));
    let w = IntVector::new(w_rat.iter().map(|x| x.to_integer()).collect());
    if w.is_zero() {
        return None;
    }
    let g = w.content();
    let gr = int_to_rat(&g);
    Some(Candidate { w: w.primitive(), gamma: gamma.iter().map(|x| x / &gr).collect() })
}

fn pick(cands: Vec<Candidate>) -> Option<Candidate> {
    cands.into_iter().min_by(|a, b| a.key().cmp(&b.key()))
}

/// Short vector for one step of Barvinok's signed decomposition.
///
/// Given linearly independent `basis = u_1..u_d` with index `|det| >= 2`,
/// returns a primitive `w = sum gamma_i u_i` with `|gamma_i| <= index^(-1/d)`.
/// Replacing any `u_i` with `gamma_i != 0` by `w` then yields a cone of index
/// `|gamma_i| * index`.
///
/// Candidates come from small combinations of an LLL-reduced basis of
/// `U^-1 Z^d`; if none meets the bound, every coset of `Z^d / U Z^d` is
/// scanned (Minkowski guarantees a hit). Among valid vectors the one with the
/// fewest negative coordinates wins, ties broken by lexicographic order of `w`.
pub fn barvinok_short_vector(basis: &[IntVector]) -> Result<(IntVector, Vec<Rational>)> {
    let d = basis.len();
    if d == 0 || basis.iter().any(|u| u.len() != d) {
        return Err(Error::InvalidArgument("expected d vectors of length d".into()));
    }
    let index = det(basis).abs();
    if index.is_zero() {
        return Err(Error::Degenerate);
    }
    if index.is_one() {
        return Err(Error::AlreadyUnimodular);
    }
    let inv = RationalMatrix::from_int_columns(basis).inverse().expect("nonsingular");
    let idx_rat = int_to_rat(&index);

    // index * U^-1 columns: an integer basis of the scaled coordinate lattice
    let scaled: Vec<IntVector> = (0..d)
        .map(|j| IntVector::new((0..d).map(|i| (&inv[(i, j)] * &idx_rat).to_integer()).collect()))
        .collect();
    let reduced = lll_reduce(&scaled);

    let mut cands = Vec::new();
    let total = 3usize.pow(d as u32);
    for code in 1..total {
        let mut c = code;
        let mut v = IntVector::zeros(d);
        for r in &reduced {
            let digit = (c % 3) as i64 - 1;
            c /= 3;
            if digit != 0 {
                v = v.add_scaled(r, &BigInt::from(digit));
            }
        }
        let gamma: Vec<Rational> = v.iter().map(|x| int_to_rat(x) / &idx_rat).collect();
        if !v.is_zero() && within_bound(&gamma, &index) {
            cands.extend(candidate(basis, &gamma));
        }
    }
    if let Some(best) = pick(cands) {
        return Ok((best.w, best.gamma));
    }
    let best = pick(exhaustive(basis, &inv, &index)).expect("Minkowski bound guarantees a short vector");
    Ok((best.w, best.gamma))
}

fn exhaustive(basis: &[IntVector], inv: &RationalMatrix, index: &BigInt) -> Vec<Candidate> {
    let d = basis.len();
    let (h, _) = hermite_normal_form(basis);
    let diag: Vec<BigInt> = (0..d).map(|i| h[i][i].clone()).collect();
    let mut cands = Vec::new();
    let mut rep = IntVector::zeros(d);
    loop {
        let gamma0: Vec<Rational> = inv.mul_vec(&rep.to_rational()).iter().map(|g| g - g.floor()).collect();
        for mask in 0u32..(1 << d) {
            let gamma: Vec<Rational> = gamma0
                .iter()
                .enumerate()
                .map(|(i, g)| if mask & (1 << i) != 0 { g - Rational::one() } else { g.clone() })
                .collect();
            if gamma.iter().any(|g| !g.is_zero()) && within_bound(&gamma, index) {
                cands.extend(candidate(basis, &gamma));
            }
        }
        // odometer over the box prod [0, h_ii)
        let mut i = 0;
        loop {
            if i == d {
                return cands;
            }
            rep[i] += 1;
            if rep[i] < diag[i] {
                break;
            }
            rep[i] = BigInt::zero();
            i += 1;
        }
    }
}
