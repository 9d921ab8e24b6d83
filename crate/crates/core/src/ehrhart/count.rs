use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::barvinok::{polytope_rgf, vertex_decomposition, SignedUnimodularCone};
use crate::exact::{binomial, ceil, floor, int_to_rat, IntVector, Rational, RationalMatrix};
use crate::polytope::Polytope;
use crate::rgf::series::Series;
use crate::rgf::{moment_vector, specialize_all_ones};

/// `#(tP ∩ Z^d)`: the generating function of `tP` evaluated at 1.
pub fn count(p: &Polytope, t: &BigInt) -> BigInt {
    assert!(!t.is_negative(), "dilation factor must be nonnegative");
    let v = specialize_all_ones(&polytope_rgf(&p.dilate(t))).expect("polytope generating functions are regular at 1");
    assert!(v.is_integer(), "lattice point count is an integer");
    v.to_integer()
}

struct PreparedCone {
    beta: Vec<Rational>,
    closed: Vec<bool>,
    /// `<lambda, u_j>` for each generator
    weights_u: Vec<BigInt>,
    /// value of the term is `sum_i coeffs[i] * C(N, i)` with `N = <lambda, p>`
    coeffs: Vec<Rational>,
}

/// Counts `tP` for many `t` with one cone decomposition.
///
/// The vertex cones of `tP` are those of `P` with apexes scaled, so the
/// decomposition and the pole-limit series are computed once. Only the
/// numerator exponents depend on `t`. Lower-dimensional polytopes fall back to
/// [`count`].
pub struct DilationCounter {
    polytope: Polytope,
    cones: Option<Vec<PreparedCone>>,
}

impl DilationCounter {
    pub fn new(p: &Polytope) -> Self {
        let full = !p.is_empty()
            && p.hrep().implicit_equalities(&p.vertices().vertices, &[]).is_empty();
        let cones = full.then(|| prepare(&vertex_decomposition(p.hrep(), &p.vertices().vertices), p.dim()));
        DilationCounter { polytope: p.clone(), cones }
    }

    pub fn count(&self, t: &BigInt) -> BigInt {
        if self.polytope.is_empty() {
            return BigInt::zero();
        }
        if t.is_zero() {
            return BigInt::one();
        }
        let Some(cones) = &self.cones else {
            return count(&self.polytope, t);
        };
        let tr = int_to_rat(t);
        let mut total = Rational::zero();
        for c in cones {
            let n: BigInt = c
                .beta
                .iter()
                .zip(&c.closed)
                .zip(&c.weights_u)
                .map(|((b, &closed), w)| {
                    let b = b * &tr;
                    let mu = if closed { ceil(&b) } else { floor(&b) + 1 };
                    mu * w
                })
                .sum();
            for (i, k) in c.coeffs.iter().enumerate() {
                if !k.is_zero() {
                    total += k * binomial(&n, i);
                }
            }
        }
        assert!(total.is_integer(), "lattice point count is an integer");
        total.to_integer()
    }
}

fn prepare(cones: &[SignedUnimodularCone], d: usize) -> Vec<PreparedCone> {
    let gens: Vec<&IntVector> = cones.iter().flat_map(|c| c.generators.iter()).collect();
    let lambda = moment_vector(d, &gens);
    cones
        .iter()
        .map(|c| {
            let inv = RationalMatrix::from_int_columns(&c.generators).inverse().expect("unimodular");
            let weights_u: Vec<BigInt> = c.generators.iter().map(|u| lambda.dot(u)).collect();
            // sign * (-1)^d * prod 1/E1_j(s), read at s^(d - i)
            let mut s = Series::one(d);
            for w in &weights_u {
                s = s.mul(&Series::divided_difference(w, d).inverse());
            }
            let sign = if d % 2 == 0 { c.sign } else { -c.sign };
            s.scale(&Rational::from_integer(BigInt::from(sign)));
            let coeffs = (0..=d).map(|i| s.0[d - i].clone()).collect();
            PreparedCone { beta: inv.mul_vec(&c.apex), closed: c.closed.clone(), weights_u, coeffs }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn half_square() {
        let p = Polytope::from_rows(2, &[&[-1, 0, 0], &[0, -1, 0], &[2, 0, 1], &[0, 2, 1]]).unwrap();
        assert_eq!(count(&p, &n(2)), n(4));
        assert_eq!(count(&p, &n(3)), n(4));
        assert_eq!(count(&p, &n(0)), n(1));
        let c = DilationCounter::new(&p);
        for t in 0..12 {
            let want = ((t + 2) / 2) * ((t + 2) / 2);
            assert_eq!(c.count(&n(t)), n(want));
            assert_eq!(count(&p, &n(t)), n(want));
        }
    }

    #[test]
    fn lower_dimensional_and_empty() {
        let seg = Polytope::from_rows(2, &[&[1, 1, 1], &[-1, -1, -1], &[-2, 0, 0], &[2, 0, 1]]).unwrap();
        let c = DilationCounter::new(&seg);
        for t in 0..8 {
            // x + y = t, 0 <= x <= t/2
            assert_eq!(c.count(&n(t)), n(t / 2 + 1));
        }
        let empty = Polytope::from_rows(1, &[&[-2, -1], &[2, 0]]).unwrap();
        assert_eq!(DilationCounter::new(&empty).count(&n(0)), n(0));
    }
}
