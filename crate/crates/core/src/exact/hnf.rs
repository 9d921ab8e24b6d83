use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntVector;

/// Column Hermite normal form.
///
/// `columns` are the columns of an `n x m` integer matrix `B`. Returns `(H, U)`
/// (both as column lists) with `B U = H`, `U` unimodular and `H` in column
/// echelon form: each pivot is positive and the entries to its left in the
/// pivot row lie in `[0, pivot)`. Zero columns of `H` come last.
pub fn hermite_normal_form(columns: &[IntVector]) -> (Vec<IntVector>, Vec<IntVector>) {
    let m = columns.len();
    assert!(m > 0, "hermite_normal_form needs at least one vector");
    let n = columns[0].len();
    assert!(columns.iter().all(|c| c.len() == n), "vectors of unequal length");

    let mut h: Vec<IntVector> = columns.to_vec();
    let mut u: Vec<IntVector> = (0..m).map(|i| IntVector::unit(m, i)).collect();
    let mut pivot_col = 0;

    for row in 0..n {
        if pivot_col == m {
            break;
        }
        for j in pivot_col + 1..m {
            let b = h[j][row].clone();
            if b.is_zero() {
                continue;
            }
            let a = h[pivot_col][row].clone();
            let e = a.extended_gcd(&b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (ag, bg) = (&a / &g, &b / &g);
            // [col_p, col_j] <- [s col_p + t col_j, -b/g col_p + a/g col_j]
            let new_p = h[pivot_col].scale(&s).add_scaled(&h[j], &t);
            let new_j = h[pivot_col].scale(&-&bg).add_scaled(&h[j], &ag);
            h[pivot_col] = new_p;
            h[j] = new_j;
            let new_p = u[pivot_col].scale(&s).add_scaled(&u[j], &t);
            let new_j = u[pivot_col].scale(&-&bg).add_scaled(&u[j], &ag);
            u[pivot_col] = new_p;
            u[j] = new_j;
        }
        let p = h[pivot_col][row].clone();
        if p.is_zero() {
            continue;
        }
        if p.is_negative() {
            h[pivot_col] = h[pivot_col].neg();
            u[pivot_col] = u[pivot_col].neg();
        }
        let p = h[pivot_col][row].clone();
        for j in 0..pivot_col {
            let q = h[j][row].div_floor(&p);
            if !q.is_zero() {
                let k = -q;
                h[j] = h[j].add_scaled(&h[pivot_col], &k);
                u[j] = u[j].add_scaled(&u[pivot_col], &k);
            }
        }
        pivot_col += 1;
    }
    (h, u)
}

/// All integer solutions `x0 + K z` of an integer linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution {
    pub particular: IntVector,
    /// Basis of the integer kernel lattice.
    pub kernel: Vec<IntVector>,
}

/// Solves `A x = b` over the integers. `rows` are the rows of `A`, each of
/// length `vars`. Returns `None` if there is no integer solution.
pub fn solve_integer_system(rows: &[IntVector], rhs: &[BigInt], vars: usize) -> Option<IntegerSolution> {
    assert_eq!(rows.len(), rhs.len());
    if vars == 0 {
        return rhs.iter().all(Zero::is_zero).then(|| IntegerSolution {
            particular: IntVector::zeros(0),
            kernel: Vec::new(),
        });
    }
    if rows.is_empty() {
        return Some(IntegerSolution {
            particular: IntVector::zeros(vars),
            kernel: (0..vars).map(|i| IntVector::unit(vars, i)).collect(),
        });
    }
    // columns of A
    let cols: Vec<IntVector> = (0..vars)
        .map(|j| IntVector::new(rows.iter().map(|r| r[j].clone()).collect()))
        .collect();
    let (h, u) = hermite_normal_form(&cols);
    let rank = h.iter().take_while(|c| !c.is_zero()).count();

    // forward substitution on the echelon form H y = b
    let mut y: Vec<BigInt> = Vec::with_capacity(vars);
    let mut next = 0;
    for (i, b) in rhs.iter().enumerate() {
        let acc: BigInt = (0..y.len()).map(|k| &h[k][i] * &y[k]).sum();
        if next < rank && !h[next][i].is_zero() {
            let (q, r) = (b - &acc).div_rem(&h[next][i]);
            if !r.is_zero() {
                return None;
            }
            y.push(q);
            next += 1;
        } else if acc != *b {
            return None;
        }
    }
    debug_assert_eq!(y.len(), rank);
    y.resize(vars, BigInt::zero());
    let particular = IntVector::combine(&u, &IntVector::new(y), vars);
    Some(IntegerSolution { particular, kernel: u[rank..].to_vec() })
}
