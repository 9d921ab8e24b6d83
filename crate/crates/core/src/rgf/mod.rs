//! Short rational generating functions.
//!
//! A [`ShortRGF`] is a finite sum of terms `alpha * x^p / prod_j (1 - x^{b_j})`.
//! Equality between two of them is semantic and is decided by
//! [`equals_laurent`]; no canonical form is maintained.

mod hadamard;
mod kernels;
pub(crate) mod series;
mod substitute;
mod window;

pub use hadamard::{equals_laurent, hadamard, hadamard_terms, hadamard_z};
pub use kernels::{euler_operator, power_sum_rgf, window_kernel};
pub use substitute::{specialize_all_ones, specialize_partial, substitute_monomial, substitute_monomial_limit};
pub use window::{compact_univariate, expand_window};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntVector, Rational};

/// One summand `coeff * x^num / prod (1 - x^den_j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub num: IntVector,
    pub den: Vec<IntVector>,
    pub coeff: Rational,
}

impl Term {
    pub fn new(coeff: Rational, num: IntVector, den: Vec<IntVector>) -> Self {
        Term { num, den, coeff }
    }

    pub fn monomial(coeff: Rational, num: IntVector) -> Self {
        Term { num, den: Vec::new(), coeff }
    }

    /// Rewrites `1/(1 - x^b)` as `-x^{-b}/(1 - x^{-b})` wherever `<l, b> < 0`.
    fn oriented(&self, l: &IntVector) -> Result<Term> {
        let mut t = self.clone();
        for b in t.den.iter_mut() {
            let s = l.dot(b);
            if s.is_zero() {
                return Err(Error::DirectionVanishes);
            }
            if s.is_negative() {
                *b = b.neg();
                t.num = t.num.add(b);
                t.coeff = -t.coeff;
            }
        }
        t.den.sort();
        Ok(t)
    }
}

/// A finite sum of [`Term`]s in `dim` variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ShortRGF {
    dim: usize,
    terms: Vec<Term>,
}

impl ShortRGF {
    pub fn zero(dim: usize) -> Self {
        ShortRGF { dim, terms: Vec::new() }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(c, IntVector::zeros(dim))
    }

    pub fn monomial(coeff: Rational, exponent: IntVector) -> Self {
        ShortRGF { dim: exponent.len(), terms: alloc::vec![Term::monomial(coeff, exponent)] }
    }

    /// Validated constructor: every vector has length `dim`, no denominator is zero.
    pub fn from_terms(dim: usize, terms: Vec<Term>) -> Result<Self> {
        for t in &terms {
            if t.num.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: t.num.len() });
            }
            for b in &t.den {
                if b.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: b.len() });
                }
                if b.is_zero() {
                    return Err(Error::InvalidArgument("zero denominator vector".into()));
                }
            }
        }
        Ok(ShortRGF { dim, terms })
    }

    /// Univariate helper: `sum coeff z^p / prod (1 - z^a)`.
    pub fn univariate(terms: &[(Rational, i64, &[i64])]) -> Self {
        let terms = terms
            .iter()
            .map(|(c, p, den)| {
                Term::new(
                    c.clone(),
                    IntVector::from_i64s(&[*p]),
                    den.iter().map(|a| IntVector::from_i64s(&[*a])).collect(),
                )
            })
            .collect();
        ShortRGF::from_terms(1, terms).expect("valid univariate terms")
    }

    /// Laurent polynomial `sum c_i z^{lo + i}` as monomial terms.
    pub fn univariate_polynomial(lo: i64, coeffs: &[Rational]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Term::monomial(c.clone(), IntVector::from_i64s(&[lo + i as i64])))
            .collect();
        ShortRGF { dim: 1, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_denominators(&self) -> usize {
        self.terms.iter().map(|t| t.den.len()).max().unwrap_or(0)
    }

    pub(crate) fn push(&mut self, term: Term) {
        debug_assert_eq!(term.num.len(), self.dim);
        self.terms.push(term);
    }

    pub(crate) fn extend_terms(&mut self, terms: impl IntoIterator<Item = Term>) {
        self.terms.extend(terms);
    }

    fn check_dim(&self, other: &ShortRGF) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &ShortRGF) -> Result<ShortRGF> {
        self.check_dim(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(ShortRGF { dim: self.dim, terms })
    }

    pub fn sub(&self, other: &ShortRGF) -> Result<ShortRGF> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ShortRGF {
        if c.is_zero() {
            return ShortRGF::zero(self.dim);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, ..t.clone() })
            .collect();
        ShortRGF { dim: self.dim, terms }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &IntVector) -> Result<ShortRGF> {
        if e.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: e.len() });
        }
        let terms = self.terms.iter().map(|t| Term { num: t.num.add(e), ..t.clone() }).collect();
        Ok(ShortRGF { dim: self.dim, terms })
    }

    /// Product of two RGFs (term-wise, denominators concatenated).
    pub fn mul(&self, other: &ShortRGF) -> Result<ShortRGF> {
        self.check_dim(other)?;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut den = a.den.clone();
                den.extend(b.den.iter().cloned());
                terms.push(Term::new(&a.coeff * &b.coeff, a.num.add(&b.num), den));
            }
        }
        Ok(ShortRGF { dim: self.dim, terms })
    }

    /// Every denominator made to satisfy `<l, b> > 0`; same function.
    pub fn oriented(&self, l: &Direction) -> Result<ShortRGF> {
        if l.0.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: l.0.len() });
        }
        let terms = self.terms.iter().map(|t| t.oriented(&l.0)).collect::<Result<_>>()?;
        Ok(ShortRGF { dim: self.dim, terms })
    }

    /// Merges terms with identical numerator and denominator multiset and
    /// drops zero coefficients. The result is sorted, so it doubles as the
    /// canonical term order used for deterministic output.
    pub fn consolidate(&self) -> ShortRGF {
        let mut acc: BTreeMap<(IntVector, Vec<IntVector>), Rational> = BTreeMap::new();
        for t in &self.terms {
            let mut den = t.den.clone();
            den.sort();
            *acc.entry((t.num.clone(), den)).or_insert_with(Rational::zero) += &t.coeff;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((num, den), coeff)| Term { num, den, coeff })
            .collect();
        ShortRGF { dim: self.dim, terms }
    }

    /// Exact value at a rational point where no denominator vanishes.
    pub fn evaluate(&self, x: &[Rational]) -> Option<Rational> {
        assert_eq!(x.len(), self.dim);
        let mono = |e: &IntVector| -> Option<Rational> {
            let mut v = Rational::one();
            for (xi, ei) in x.iter().zip(e.iter()) {
                if ei.is_zero() {
                    continue;
                }
                if xi.is_zero() {
                    return None;
                }
                let k: i32 = i32::try_from(ei).ok()?;
                v *= num_traits::Pow::pow(xi, k);
            }
            Some(v)
        };
        let mut total = Rational::zero();
        for t in &self.terms {
            let mut v = &t.coeff * mono(&t.num)?;
            for b in &t.den {
                let d = Rational::one() - mono(b)?;
                if d.is_zero() {
                    return None;
                }
                v /= d;
            }
            total += v;
        }
        Some(total)
    }
}

/// Monomial map `z -> (z^{l_1}, ..., z^{l_d})`: variable `i` of the source is
/// replaced by the monomial with exponent `images[i]` in `target_dim` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub images: Vec<IntVector>,
    pub target_dim: usize,
}

impl MonomialMap {
    pub fn new(images: Vec<IntVector>, target_dim: usize) -> Self {
        assert!(images.iter().all(|l| l.len() == target_dim), "image length differs from target dimension");
        MonomialMap { images, target_dim }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new((0..dim).map(|i| IntVector::unit(dim, i)).collect(), dim)
    }

    pub fn source_dim(&self) -> usize {
        self.images.len()
    }

    /// Exponent of the image of `x^e`.
    pub fn apply(&self, e: &IntVector) -> IntVector {
        IntVector::combine(&self.images, e, self.target_dim)
    }
}

/// Orientation `l` for Laurent expansions: every denominator `b` is expanded
/// as a geometric series in `x^b` with `<l, b> > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction(pub IntVector);

impl Direction {
    /// `l = (1)`: ordinary ascending power series in one variable.
    pub fn ascending() -> Self {
        Direction(IntVector::from_i64s(&[1]))
    }

    /// A vector on the moment curve `(1, m, m^2, ...)` that is not orthogonal
    /// to any denominator of the given functions.
    pub fn generic_for(dim: usize, fs: &[&ShortRGF]) -> Self {
        let dens: Vec<&IntVector> = fs.iter().flat_map(|f| f.terms.iter().flat_map(|t| t.den.iter())).collect();
        Direction(moment_vector(dim, &dens))
    }
}

/// First vector `(1, m, m^2, ...)`, `m = 1, 2, ...`, with nonzero inner
/// product against every given nonzero vector.
pub(crate) fn moment_vector(dim: usize, avoid: &[&IntVector]) -> IntVector {
    let mut m: i64 = 1;
    loop {
        let mut v = IntVector::zeros(dim);
        let mut p = BigInt::one();
        for i in 0..dim {
            v[i] = p.clone();
            p *= m;
        }
        if avoid.iter().all(|b| !v.dot(b).is_zero()) {
            return v;
        }
        m += 1;
        assert!(
            m as usize <= avoid.len() * dim + 2,
            "a nonzero vector has at most dim - 1 orthogonal points on the moment curve"
        );
    }
}
