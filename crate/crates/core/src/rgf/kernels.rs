use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ShortRGF, Term};
use crate::exact::{int_to_rat, IntVector};

/// `z d/dz` on a univariate RGF, using
/// `z d/dz [z^p / prod (1 - z^a)] = p z^p / prod + sum_i a_i z^{p + a_i} / (prod * (1 - z^{a_i}))`.
pub fn euler_operator(f: &ShortRGF) -> ShortRGF {
    assert_eq!(f.dim(), 1, "euler operator is univariate");
    let mut out = ShortRGF::zero(1);
    for t in f.terms() {
        let p = &t.num[0];
        if !p.is_zero() {
            out.push(Term::new(&t.coeff * int_to_rat(p), t.num.clone(), t.den.clone()));
        }
        for a in &t.den {
            let mut den = t.den.clone();
            den.push(a.clone());
            out.push(Term::new(&t.coeff * int_to_rat(&a[0]), t.num.add(a), den));
        }
    }
    out.consolidate()
}

/// `sum_{i=0}^{D-1} i^j z^i`, as `(z d/dz)^j` applied to `(1 - z^D)/(1 - z)`.
/// Uses the convention `0^0 = 1`.
pub fn power_sum_rgf(j: u32, big_d: &BigInt) -> ShortRGF {
    assert!(*big_d > BigInt::zero(), "D must be positive");
    let mut f = window_kernel(&BigInt::zero(), big_d);
    for _ in 0..j {
        f = euler_operator(&f);
    }
    f
}

/// `(z^lo - z^hi) / (1 - z)`, i.e. `sum_{lo <= i < hi} z^i`; zero if `lo >= hi`.
pub fn window_kernel(lo: &BigInt, hi: &BigInt) -> ShortRGF {
    if lo >= hi {
        return ShortRGF::zero(1);
    }
    let one = Vec::from([IntVector::new(Vec::from([BigInt::from(1)]))]);
    let terms = Vec::from([
        Term::new(crate::exact::rat(1), IntVector::new(Vec::from([lo.clone()])), one.clone()),
        Term::new(crate::exact::rat(-1), IntVector::new(Vec::from([hi.clone()])), one),
    ]);
    ShortRGF::from_terms(1, terms).expect("valid kernel")
}
