//! Exact integer and rational linear algebra.
//!
//! Everything downstream (vertex enumeration, cone decomposition, generating
//! function algebra) is built on the types here. Nothing in this crate uses
//! floating point.

mod hnf;
mod lll;
mod short_vector;

pub use hnf::{hermite_normal_form, solve_integer_system, IntegerSolution};
pub use lll::lll_reduce;
pub use short_vector::barvinok_short_vector;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// A point with rational coordinates.
pub type RationalPoint = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Integer vector of fixed length; used for exponents, generators and normals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_rational(&self, point: &[Rational]) -> Rational {
        debug_assert_eq!(self.len(), point.len());
        self.0
            .iter()
            .zip(point)
            .map(|(a, b)| b * a)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn add_scaled(&self, other: &IntVector, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divides out the gcd of the entries. The zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVector(self.0.iter().map(|a| a / &g).collect())
    }

    pub fn to_rational(&self) -> RationalPoint {
        self.0.iter().map(int_to_rat).collect()
    }

    /// Clears denominators of a rational direction and makes it primitive.
    pub fn primitive_from_rational(v: &[Rational]) -> IntVector {
        let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * int_to_rat(&l)).to_integer()).collect();
        IntVector(ints).primitive()
    }

    /// Image under a matrix given by its columns (`cols[i]` multiplies entry i).
    pub fn combine(cols: &[IntVector], coeffs: &IntVector, out_len: usize) -> IntVector {
        let mut out = IntVector::zeros(out_len);
        for (c, k) in cols.iter().zip(coeffs.iter()) {
            if !k.is_zero() {
                out = out.add_scaled(c, k);
            }
        }
        out
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl IndexMut<usize> for IntVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.0[i]
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        IntVector(v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[IntVector]) -> Self {
        Self::from_rows(rows.iter().map(IntVector::to_rational).collect())
    }

    /// Matrix whose columns are the given integer vectors.
    pub fn from_int_columns(cols: &[IntVector]) -> Self {
        let n = cols.first().map_or(0, IntVector::len);
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = int_to_rat(&c[i]);
            }
        }
        m
    }

    /// The Vandermonde matrix with entry (i, j) equal to i^j, 0-indexed.
    pub fn vandermonde(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            let mut p = Rational::one();
            for j in 0..n {
                m[(i, j)] = p.clone();
                p *= rat(i as i64);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut inv = RationalMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            let col = solve_linear(self, &e)?;
            for i in 0..n {
                inv[(i, j)] = col[i].clone();
            }
        }
        Some(inv)
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(r, j)] * &f;
                        self[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<RationalPoint> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `a · x = rhs` for square `a`. Returns `None` when `a` is singular.
pub fn solve_linear(a: &RationalMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), a.cols(), "solve_linear needs a square matrix");
    assert_eq!(rhs.len(), a.rows());
    let n = a.rows();
    let mut m = RationalMatrix::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = a[(i, j)].clone();
        }
        m[(i, n)] = rhs[i].clone();
    }
    let pivots = m.rref();
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some((0..n).map(|i| m[(i, n)].clone()).collect())
}

/// Determinant of the square integer matrix with the given columns (Bareiss).
pub fn det(cols: &[IntVector]) -> BigInt {
    let n = cols.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(cols.iter().all(|c| c.len() == n), "det of a non-square matrix");
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of a list of integer vectors.
pub fn rank(vectors: &[IntVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_int_rows(vectors).rank()
}

/// Generalized cross product: an integer normal to `n - 1` vectors in `Z^n`.
pub fn normal_vector(vectors: &[IntVector], n: usize) -> IntVector {
    assert_eq!(vectors.len() + 1, n);
    let mut out = IntVector::zeros(n);
    for k in 0..n {
        let minor: Vec<IntVector> = (0..n - 1)
            .map(|r| {
                IntVector::new(
                    vectors.iter().map(|v| v[if r < k { r } else { r + 1 }].clone()).collect(),
                )
            })
            .collect();
        let d = det(&minor);
        out[k] = if k % 2 == 0 { d } else { -d };
    }
    out
}

/// Ceiling of a rational.
pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Floor of a rational.
pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn abs_rat(x: &Rational) -> Rational {
    x.abs()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Binomial coefficient C(n, k) for a possibly negative integer `n`.
pub fn binomial(n: &BigInt, k: usize) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}
