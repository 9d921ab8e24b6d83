use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Direction, ShortRGF};
use crate::exact::Rational;

/// Coefficients of `z^lo .. z^hi` in the ascending power-series expansion of
/// a univariate RGF. Terms sharing a denominator multiset are expanded
/// together with one coin-change pass.
pub fn expand_window(f: &ShortRGF, lo: i64, hi: i64) -> Vec<Rational> {
    assert_eq!(f.dim(), 1, "window expansion is univariate");
    if hi < lo {
        return Vec::new();
    }
    let f = f.oriented(&Direction::ascending()).expect("univariate denominators are nonzero");

    // denominators -> (exponent -> coefficient); exponents above hi never contribute
    let mut groups: BTreeMap<Vec<i64>, BTreeMap<i64, Rational>> = BTreeMap::new();
    for t in f.terms() {
        if t.num[0] > BigInt::from(hi) {
            continue;
        }
        let p = t.num[0].to_i64().expect("exponent fits in i64");
        let den: Vec<i64> = t
            .den
            .iter()
            .map(|a| a[0].to_i64().unwrap_or(i64::MAX))
            .collect();
        *groups.entry(den).or_default().entry(p).or_insert_with(Rational::zero) += &t.coeff;
    }

    let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (den, nums) in groups {
        let start = nums.keys().next().copied().unwrap_or(lo).min(lo);
        let len = (hi - start + 1) as usize;
        let lcm = nums.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut arr = vec![BigInt::zero(); len];
        for (p, c) in &nums {
            arr[(p - start) as usize] += c.numer() * (&lcm / c.denom());
        }
        for a in den {
            if a as u64 >= len as u64 {
                continue;
            }
            let a = a as usize;
            for e in a..len {
                let (head, tail) = arr.split_at_mut(e);
                if !head[e - a].is_zero() {
                    tail[0] += &head[e - a];
                }
            }
        }
        let lcm = Rational::from_integer(lcm);
        for (i, slot) in out.iter_mut().enumerate() {
            let v = &arr[(lo - start) as usize + i];
            if !v.is_zero() {
                *slot += Rational::from_integer(v.clone()) / &lcm;
            }
        }
    }
    out
}

/// Rewrites a univariate RGF known to be a Laurent polynomial supported in
/// `[lo, hi]` as an explicit sum of monomials.
pub fn compact_univariate(f: &ShortRGF, lo: i64, hi: i64) -> ShortRGF {
    let coeffs = expand_window(f, lo, hi);
    ShortRGF::univariate_polynomial(lo, &coeffs)
}

/// Whether `f` is a plain list of monomials.
pub(crate) fn is_polynomial(f: &ShortRGF) -> bool {
    f.terms().iter().all(|t| t.den.is_empty())
}
