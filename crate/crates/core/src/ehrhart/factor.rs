use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Prime factorization with multiplicity, in any order.
pub trait FactoringOracle {
    fn factor(&self, n: &BigInt) -> Vec<BigInt>;
}

impl<F: Fn(&BigInt) -> Vec<BigInt>> FactoringOracle for F {
    fn factor(&self, n: &BigInt) -> Vec<BigInt> {
        self(n)
    }
}

/// Trial division by small primes, then Pollard rho on what remains.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultFactoring;

const TRIAL_LIMIT: u32 = 10_000;

impl FactoringOracle for DefaultFactoring {
    fn factor(&self, n: &BigInt) -> Vec<BigInt> {
        assert!(n.is_positive(), "factoring needs a positive integer");
        let mut out = Vec::new();
        let mut m = n.clone();
        let mut p = 2u32;
        while p <= TRIAL_LIMIT {
            let bp = BigInt::from(p);
            if &bp * &bp > m {
                break;
            }
            while (&m % &bp).is_zero() {
                out.push(bp.clone());
                m /= &bp;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if !m.is_one() {
            split(&m, &mut out);
        }
        out.sort();
        out
    }
}

fn split(n: &BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(n) {
        out.push(n.clone());
        return;
    }
    let d = pollard_rho(n);
    split(&d, out);
    split(&(n / &d), out);
}

/// Distinct primes dividing `n`, ascending.
pub fn distinct_primes(oracle: &dyn FactoringOracle, n: &BigInt) -> Vec<BigInt> {
    let mut ps = oracle.factor(n);
    ps.sort();
    ps.dedup();
    ps
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        let b = BigInt::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for b in BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n`.
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}
