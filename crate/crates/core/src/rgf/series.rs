//! Power series in one variable `s`, truncated at a fixed order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series(pub Vec<Rational>);

impl Series {
    /// Keeps coefficients of `s^0 .. s^order`.
    pub fn one(order: usize) -> Self {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = Rational::one();
        Series(c)
    }

    pub fn scale(&mut self, k: &Rational) {
        for c in self.0.iter_mut() {
            *c *= k;
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.0.len().min(other.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.0.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Series {
        let n = self.0.len();
        let c0 = self.0[0].clone();
        assert!(!c0.is_zero(), "series with zero constant term has no inverse");
        let mut out = vec![Rational::zero(); n];
        out[0] = Rational::one() / &c0;
        for k in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.0[i] * &out[k - i];
            }
            out[k] = -acc / &c0;
        }
        Series(out)
    }

    /// `(1 + s)^c`.
    pub fn binomial_power(c: &BigInt, order: usize) -> Series {
        Series((0..=order).map(|i| binomial(c, i)).collect())
    }

    /// `((1 + s)^c - 1) / s`, whose constant term is `c`.
    pub fn divided_difference(c: &BigInt, order: usize) -> Series {
        Series((0..=order).map(|i| binomial(c, i + 1)).collect())
    }

    /// `(1 + s)^c - 1`.
    pub fn shifted_power(c: &BigInt, order: usize) -> Series {
        let mut s = Self::binomial_power(c, order);
        s.0[0] = Rational::zero();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn inverse_of_geometric() {
        // (1 - s)^-1 = 1 + s + s^2 + ...
        let s = Series(vec![rat(1), rat(-1), rat(0), rat(0)]);
        assert_eq!(s.inverse().0, vec![rat(1); 4]);
    }

    #[test]
    fn negative_binomial_power() {
        let s = Series::binomial_power(&BigInt::from(-1), 3);
        assert_eq!(s.0, vec![rat(1), rat(-1), rat(1), rat(-1)]);
        let t = Series::binomial_power(&BigInt::from(1), 3);
        assert_eq!(s.mul(&t), Series::one(3));
    }
}
