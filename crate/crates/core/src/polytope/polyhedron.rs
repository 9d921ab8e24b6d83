//! Inequality-described polyhedra, possibly unbounded or lower dimensional.
//!
//! Used directly for the auxiliary polyhedra of Hadamard products and
//! wrapped by [`Polytope`](super::Polytope) for bounded inputs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact::{combinations, int_to_rat, rank, IntVector, Rational, RationalMatrix, RationalPoint};

/// `{x in R^dim : <c, x> <= b for every (c, b)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub rows: Vec<(IntVector, BigInt)>,
}

impl Polyhedron {
    pub fn new(dim: usize, rows: Vec<(IntVector, BigInt)>) -> Self {
        assert!(rows.iter().all(|(c, _)| c.len() == dim), "row length differs from dimension");
        Polyhedron { dim, rows }
    }

    pub fn normals(&self) -> Vec<IntVector> {
        self.rows.iter().map(|(c, _)| c.clone()).collect()
    }

    /// No lines: the constraint normals span the space.
    pub fn is_pointed(&self) -> bool {
        rank(&self.normals()) == self.dim
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|(c, b)| c.dot_rational(x) <= int_to_rat(b))
    }

    pub fn contains_int(&self, x: &IntVector) -> bool {
        self.rows.iter().all(|(c, b)| c.dot(x) <= *b)
    }

    /// Vertices by solving every `dim`-subset of the constraints, deduplicated
    /// and sorted lexicographically. Empty for non-pointed polyhedra.
    pub fn vertices(&self) -> Vec<RationalPoint> {
        let d = self.dim;
        let mut out: Vec<RationalPoint> = Vec::new();
        if d == 0 {
            if self.rows.iter().all(|(_, b)| !b.is_negative()) {
                out.push(Vec::new());
            }
            return out;
        }
        for subset in combinations(self.rows.len(), d) {
            let mut a = RationalMatrix::zeros(d, d);
            let mut rhs = Vec::with_capacity(d);
            for (i, &r) in subset.iter().enumerate() {
                for j in 0..d {
                    a[(i, j)] = int_to_rat(&self.rows[r].0[j]);
                }
                rhs.push(int_to_rat(&self.rows[r].1));
            }
            if let Some(x) = crate::exact::solve_linear(&a, &rhs) {
                if self.contains(&x) {
                    out.push(x);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn tight_rows(&self, v: &[Rational]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| self.rows[i].0.dot_rational(v) == int_to_rat(&self.rows[i].1))
            .collect()
    }

    /// Extreme rays of the recession cone `{x : <c, x> <= 0}`.
    pub fn recession_rays(&self) -> Vec<IntVector> {
        cone_extreme_rays(&self.normals(), self.dim)
    }

    /// Constraints that hold with equality on the whole (nonempty, pointed)
    /// polyhedron, given its vertices and recession rays.
    pub fn implicit_equalities(&self, vertices: &[RationalPoint], rays: &[IntVector]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| {
                let (c, b) = &self.rows[i];
                let b = int_to_rat(b);
                vertices.iter().all(|v| c.dot_rational(v) == b) && rays.iter().all(|r| c.dot(r).is_zero())
            })
            .collect()
    }

    /// Exact emptiness test by Fourier-Motzkin elimination. Works for
    /// polyhedra containing lines, where vertex enumeration says nothing.
    pub fn is_empty_fm(&self) -> bool {
        let mut rows: Vec<(Vec<Rational>, Rational)> =
            self.rows.iter().map(|(c, b)| (c.to_rational(), int_to_rat(b))).collect();
        for k in 0..self.dim {
            let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for (c, b) in rows {
                if c[k].is_positive() {
                    pos.push((c, b));
                } else if c[k].is_negative() {
                    neg.push((c, b));
                } else {
                    rest.push((c, b));
                }
            }
            for (cp, bp) in &pos {
                for (cn, bn) in &neg {
                    let (sp, sn) = (cp[k].clone(), -cn[k].clone());
                    let c: Vec<Rational> = cp.iter().zip(cn).map(|(x, y)| x * &sn + y * &sp).collect();
                    let b = bp * &sn + bn * &sp;
                    rest.push((c, b));
                }
            }
            rest.sort();
            rest.dedup();
            rows = rest;
        }
        rows.iter().any(|(_, b)| b.is_negative())
    }
}

/// Extreme rays (primitive, sorted) of the pointed cone `{x : <n, x> <= 0}`.
pub fn cone_extreme_rays(normals: &[IntVector], dim: usize) -> Vec<IntVector> {
    let mut out = Vec::new();
    if dim == 0 {
        return out;
    }
    for subset in combinations(normals.len(), dim - 1) {
        let mut m = RationalMatrix::zeros(subset.len(), dim);
        for (i, &r) in subset.iter().enumerate() {
            for j in 0..dim {
                m[(i, j)] = int_to_rat(&normals[r][j]);
            }
        }
        let ns = m.nullspace();
        if ns.len() != 1 {
            continue;
        }
        let r = IntVector::primitive_from_rational(&ns[0]);
        for cand in [r.clone(), r.neg()] {
            if normals.iter().all(|n| !n.dot(&cand).is_positive()) {
                out.push(cand);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Zero vector of the given length as a rational point.
pub fn origin(dim: usize) -> RationalPoint {
    vec![Rational::zero(); dim]
}
