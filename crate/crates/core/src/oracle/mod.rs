//! Brute-force reference computations. Only the exact arithmetic layer and
//! the vertex list of the input are shared with the generating-function
//! pipeline.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::ehrhart::QuasiPolynomial;
use crate::error::{Error, Result};
use crate::exact::{int_to_rat, solve_linear, IntVector, Rational, RationalMatrix};
use crate::polytope::Polytope;
use crate::rgf::ShortRGF;

/// Coefficients of a Laurent series on a box of exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSeries {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<Vec<i64>, Rational>,
}

impl DenseSeries {
    pub fn get(&self, e: &[i64]) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Every exponent of the window in lexicographic order.
    pub fn exponents(&self) -> Vec<Vec<i64>> {
        box_points(&self.lo, &self.hi)
    }
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|p| {
                (*a..=*b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Integer box `[floor(min), ceil(max)]` around the vertices; `None` if empty.
pub fn bounding_box(p: &Polytope) -> Option<(Vec<i64>, Vec<i64>)> {
    let vs = &p.vertices().vertices;
    let first = vs.first()?;
    let mut lo: Vec<Rational> = first.clone();
    let mut hi: Vec<Rational> = first.clone();
    for v in vs {
        for i in 0..v.len() {
            if v[i] < lo[i] {
                lo[i] = v[i].clone();
            }
            if v[i] > hi[i] {
                hi[i] = v[i].clone();
            }
        }
    }
    let lo = lo.iter().map(|x| x.floor().to_integer().to_i64().expect("box fits in i64")).collect();
    let hi = hi.iter().map(|x| x.ceil().to_integer().to_i64().expect("box fits in i64")).collect();
    Some((lo, hi))
}

/// All lattice points of `P` by scanning the bounding box.
pub fn enumerate(p: &Polytope) -> Vec<IntVector> {
    let Some((lo, hi)) = bounding_box(p) else {
        return Vec::new();
    };
    box_points(&lo, &hi)
        .into_iter()
        .map(|x| IntVector::from_i64s(&x))
        .filter(|x| p.inequalities().iter().all(|(c, b)| c.dot(x) <= *b))
        .collect()
}

type Row = (Vec<i128>, i128);

/// Lattice-point counts of `tP` by nested scanning.
///
/// Fourier-Motzkin projections onto each coordinate prefix bound the scan so
/// only prefixes of the real projection are visited, and the innermost
/// coordinate is counted as an interval length. Projections of `tP` are the
/// projections of `P` with right-hand sides scaled by `t`.
pub struct BruteCounter {
    dim: usize,
    empty: bool,
    /// `levels[k]`: constraints in the first `k + 1` coordinates
    levels: Vec<Vec<Row>>,
}

impl BruteCounter {
    pub fn new(p: &Polytope) -> Self {
        let dim = p.dim();
        let empty = p.vertices().is_empty();
        let to_i128 = |x: &BigInt| x.to_i128().expect("coefficient fits in i128");
        let mut sys: Vec<Row> =
            p.inequalities().iter().map(|(c, b)| (c.iter().map(to_i128).collect(), to_i128(b))).collect();
        let mut levels = vec![Vec::new(); dim];
        for k in (0..dim).rev() {
            levels[k] = sys.clone();
            sys = eliminate(&sys, k);
        }
        BruteCounter { dim, empty, levels }
    }

    pub fn count(&self, t: u64) -> u128 {
        if self.empty {
            return 0;
        }
        if self.dim == 0 {
            return 1;
        }
        let mut prefix = vec![0i128; self.dim];
        self.scan(0, &mut prefix, t as i128)
    }

    fn scan(&self, k: usize, prefix: &mut [i128], t: i128) -> u128 {
        let (mut lo, mut hi) = (i128::MIN, i128::MAX);
        for (c, b) in &self.levels[k] {
            let ck = c[k];
            let rest = t * b - (0..k).map(|i| c[i] * prefix[i]).sum::<i128>();
            if ck > 0 {
                hi = hi.min(Integer::div_floor(&rest, &ck));
            } else if ck < 0 {
                lo = lo.max(Integer::div_ceil(&rest, &ck));
            } else if rest < 0 {
                return 0;
            }
        }
        assert!(lo > i128::MIN && hi < i128::MAX, "polytope is bounded");
        if hi < lo {
            return 0;
        }
        if k + 1 == self.dim {
            return (hi - lo + 1) as u128;
        }
        let mut total = 0;
        for x in lo..=hi {
            prefix[k] = x;
            total += self.scan(k + 1, prefix, t);
        }
        total
    }
}

/// Projects out coordinate `k` (the last one in use), keeping rows that do
/// not involve it.
fn eliminate(rows: &[Row], k: usize) -> Vec<Row> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        match r.0[k].signum() {
            1 => pos.push(r),
            -1 => neg.push(r),
            _ => out.push(r.clone()),
        }
    }
    for (cp, bp) in &pos {
        for (cn, bn) in &neg {
            let (a, b) = (-cn[k], cp[k]);
            let c: Vec<i128> = cp.iter().zip(cn.iter()).map(|(x, y)| a * x + b * y).collect();
            out.push((c, a * bp + b * bn));
        }
    }
    for (c, b) in out.iter_mut() {
        let g = c.iter().fold(b.abs(), |g, x| g.gcd(x));
        if g > 1 {
            c.iter_mut().for_each(|x| *x /= g);
            *b /= g;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Series coefficients of `f` on the window `[lo, hi]`, expanding every term
/// as a geometric series. Univariate functions are expanded in ascending
/// powers; otherwise along a small vector not orthogonal to any denominator.
pub fn expand_dense(f: &ShortRGF, lo: &[i64], hi: &[i64]) -> DenseSeries {
    let dens: Vec<Vec<i64>> = f.terms().iter().flat_map(|t| t.den.iter().map(small)).collect();
    expand_dense_along(f, &orientation(f.dim(), &dens), lo, hi)
}

/// As [`expand_dense`], expanding each denominator `b` in powers of `x^b`
/// with `<l, b> > 0`.
pub fn expand_dense_along(f: &ShortRGF, l: &[i64], lo: &[i64], hi: &[i64]) -> DenseSeries {
    let d = f.dim();
    assert!(lo.len() == d && hi.len() == d && l.len() == d, "window dimension");
    let top: i64 = (0..d).map(|i| if l[i] > 0 { l[i] * hi[i] } else { l[i] * lo[i] }).sum();

    let mut coeffs: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    for t in f.terms() {
        let mut p = small(&t.num);
        let mut c = t.coeff.clone();
        let mut gens = Vec::new();
        for b in &t.den {
            let mut b = small(b);
            assert!(dot(l, &b) != 0, "direction orthogonal to a denominator");
            if dot(l, &b) < 0 {
                b.iter_mut().for_each(|x| *x = -*x);
                p.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                c = -c;
            }
            gens.push(b);
        }
        walk(&p, &gens, l, top, lo, hi, &mut |e| {
            *coeffs.entry(e.to_vec()).or_insert_with(Rational::zero) += &c;
        });
    }
    coeffs.retain(|_, v| !v.is_zero());
    DenseSeries { lo: lo.to_vec(), hi: hi.to_vec(), coeffs }
}

fn small(v: &IntVector) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("exponent fits in i64")).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn orientation(d: usize, dens: &[Vec<i64>]) -> Vec<i64> {
    if d == 1 {
        return vec![1];
    }
    for r in 1i64.. {
        for cand in box_points(&vec![-r; d], &vec![r; d]) {
            if dens.iter().all(|b| dot(&cand, b) != 0) {
                return cand;
            }
        }
    }
    unreachable!()
}

/// Visits `p + sum n_j g_j` for all `n >= 0` with `<l, .>` at most `top`,
/// reporting the points inside the window.
fn walk(p: &[i64], gens: &[Vec<i64>], l: &[i64], top: i64, lo: &[i64], hi: &[i64], f: &mut impl FnMut(&[i64])) {
    if dot(l, p) > top {
        return;
    }
    match gens.split_first() {
        None => {
            if p.iter().zip(lo.iter().zip(hi)).all(|(x, (a, b))| a <= x && x <= b) {
                f(p);
            }
        }
        Some((g, rest)) => {
            let mut q = p.to_vec();
            while dot(l, &q) <= top {
                walk(&q, rest, l, top, lo, hi, f);
                q.iter_mut().zip(g).for_each(|(x, y)| *x += y);
            }
        }
    }
}

/// `D(P)` straight from the vertex coordinates.
pub fn vertex_denominator(p: &Polytope) -> u64 {
    p.vertices()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .to_u64()
        .expect("denominator fits in u64")
}

/// Quasi-polynomial from raw counts: a degree-`d` fit per residue class at
/// `t = i, i + D, ..., i + dD`, checked at `t = i + (d + 1) D`.
pub fn brute_quasipolynomial(p: &Polytope) -> Result<QuasiPolynomial> {
    let counter = BruteCounter::new(p);
    quasipolynomial_from_counts(p, |t| counter.count(t))
}

/// As [`brute_quasipolynomial`] with counts supplied by the caller for
/// `t < (d + 2) D`.
pub fn quasipolynomial_from_counts(p: &Polytope, count: impl Fn(u64) -> u128) -> Result<QuasiPolynomial> {
    let d = p.dim();
    let period = vertex_denominator(p);
    let mut constituents = Vec::with_capacity(period as usize);
    for i in 0..period {
        let ts: Vec<u64> = (0..=d as u64 + 1).map(|k| i + k * period).collect();
        let mut m = RationalMatrix::zeros(d + 1, d + 1);
        let mut rhs = Vec::with_capacity(d + 1);
        for (r, &t) in ts[..=d].iter().enumerate() {
            let tr = int_to_rat(&BigInt::from(t));
            let mut pw = Rational::one();
            for j in 0..=d {
                m[(r, j)] = pw.clone();
                pw *= &tr;
            }
            rhs.push(int_to_rat(&BigInt::from(count(t))));
        }
        let coeffs = solve_linear(&m, &rhs).expect("distinct sample points");
        let check = ts[d + 1];
        let tr = int_to_rat(&BigInt::from(check));
        let fitted = coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &tr + c);
        let actual = int_to_rat(&BigInt::from(count(check)));
        if fitted != actual {
            return Err(Error::OracleMismatch(format!("residue {i}: fit gives {fitted} at t = {check}, count is {actual}")));
        }
        constituents.push(coeffs);
    }
    Ok(QuasiPolynomial { period, constituents })
}

/// Smallest `n >= 1` such that rotating the constituent list by `n` fixes it.
pub fn brute_min_period(q: &QuasiPolynomial) -> u64 {
    let len = q.constituents.len();
    (1..=len)
        .find(|&n| (0..len).all(|i| q.constituents[i] == q.constituents[(i + n) % len]))
        .map_or(1, |n| n as u64)
}
