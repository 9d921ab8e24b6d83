use alloc::vec::Vec;

use num_traits::Zero;

use super::{ratio, IntVector, Rational};

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn gram_schmidt(basis: &[IntVector]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n = basis.len();
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut mu = alloc::vec![alloc::vec![Rational::zero(); n]; n];
    for i in 0..n {
        let bi = basis[i].to_rational();
        let mut v = bi.clone();
        for j in 0..i {
            let denom = dot(&star[j], &star[j]);
            mu[i][j] = dot(&bi, &star[j]) / denom;
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= &mu[i][j] * sk;
            }
        }
        star.push(v);
    }
    (star, mu)
}

/// LLL reduction (delta = 3/4) of linearly independent integer vectors.
pub fn lll_reduce(basis: &[IntVector]) -> Vec<IntVector> {
    let mut b = basis.to_vec();
    let n = b.len();
    if n < 2 {
        return b;
    }
    let delta = ratio(3, 4);
    let (mut star, mut mu) = gram_schmidt(&b);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if !q.is_zero() {
                let qi = q.to_integer();
                b[k] = b[k].add_scaled(&b[j], &-&qi);
                for l in 0..=j {
                    let sub = if l == j { q.clone() } else { &q * &mu[j][l] };
                    mu[k][l] -= sub;
                }
            }
        }
        let lhs = dot(&star[k], &star[k]);
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * dot(&star[k - 1], &star[k - 1]);
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            (star, mu) = gram_schmidt(&b);
            k = if k > 1 { k - 1 } else { 1 };
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::det;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn norm2(v: &IntVector) -> BigInt {
        v.dot(v)
    }

    #[test]
    fn reduces_skewed_basis() {
        let b = [IntVector::from_i64s(&[1, 0]), IntVector::from_i64s(&[100, 1])];
        let r = lll_reduce(&b);
        assert_eq!(det(&r).abs(), det(&b).abs());
        assert!(r.iter().all(|v| norm2(v) <= BigInt::from(1)));
    }

    #[test]
    fn preserves_lattice_volume() {
        let b = [
            IntVector::from_i64s(&[3, 7, 1]),
            IntVector::from_i64s(&[15, 36, 4]),
            IntVector::from_i64s(&[-8, 2, 31]),
        ];
        let r = lll_reduce(&b);
        assert_eq!(det(&r).abs(), det(&b).abs());
        assert!(norm2(&r[0]) <= norm2(&b[0]));
    }
}
