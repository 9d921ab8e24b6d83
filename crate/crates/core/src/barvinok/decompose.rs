use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{barvinok_short_vector, ceil, det, floor, IntVector, Rational, RationalMatrix, RationalPoint};
use crate::polytope::Cone;
use crate::rgf::Term;

/// A unimodular cone with a sign and a choice of open or closed facets.
///
/// `closed[i]` says whether the facet not containing `generators[i]` belongs
/// to the cone. A fully closed cone is the usual `apex + cone(generators)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedUnimodularCone {
    pub sign: i32,
    pub apex: RationalPoint,
    pub generators: Vec<IntVector>,
    pub closed: Vec<bool>,
}

impl SignedUnimodularCone {
    /// The same cone moved to a different apex.
    pub fn with_apex(&self, apex: RationalPoint) -> Self {
        SignedUnimodularCone { apex, ..self.clone() }
    }
}

/// Facet `i` is closed when the perturbed reference point
/// `r + eps e_1 + eps^2 e_2 + ...` lies strictly on the cone's side of it.
fn closed_facets(inv: &RationalMatrix, reference: &IntVector) -> Vec<bool> {
    (0..inv.rows())
        .map(|i| {
            let row = inv.row(i);
            let lead = reference.dot_rational(row);
            let first = core::iter::once(&lead).chain(row.iter()).find(|x| !x.is_zero());
            first.expect("inverse rows are nonzero").is_positive()
        })
        .collect()
}

fn check_simplicial(c: &Cone) -> Result<()> {
    let d = c.dim();
    if c.generators.len() != d || c.generators.iter().any(|g| g.len() != d) {
        return Err(Error::InvalidArgument("simplicial cone needs d generators of length d".into()));
    }
    if det(&c.generators).is_zero() {
        return Err(Error::Degenerate);
    }
    Ok(())
}

/// Signed decomposition of a simplicial cone into unimodular cones.
///
/// The output is an exact identity of indicator functions: on every finite
/// window the signed sum of the (half-open) output cones' lattice points
/// equals the lattice points of the closed input cone.
pub fn decompose_unimodular(c: &Cone) -> Result<Vec<SignedUnimodularCone>> {
    check_simplicial(c)?;
    let reference = c.generators.iter().fold(IntVector::zeros(c.dim()), |acc, g| acc.add(g));
    decompose_with(c, &reference)
}

/// As [`decompose_unimodular`], with facets opened relative to `reference`.
/// Pieces of a triangulation decomposed against the same interior reference
/// point of the parent cone sum exactly to the parent cone.
pub(crate) fn decompose_with(c: &Cone, reference: &IntVector) -> Result<Vec<SignedUnimodularCone>> {
    check_simplicial(c)?;
    let mut out = Vec::new();
    let mut stack: Vec<(i32, Vec<IntVector>)> = alloc::vec![(1, c.generators.clone())];
    while let Some((sign, gens)) = stack.pop() {
        match barvinok_short_vector(&gens) {
            Err(Error::AlreadyUnimodular) => {
                let inv = RationalMatrix::from_int_columns(&gens).inverse().expect("unimodular");
                let closed = closed_facets(&inv, reference);
                out.push(SignedUnimodularCone { sign, apex: c.apex.clone(), generators: gens, closed });
            }
            Err(e) => return Err(e),
            Ok((w, gamma)) => {
                for (i, g) in gamma.iter().enumerate().rev() {
                    if g.is_zero() {
                        continue;
                    }
                    let mut child = gens.clone();
                    child[i] = w.clone();
                    let s = if g.is_negative() { -sign } else { sign };
                    stack.push((s, child));
                }
            }
        }
    }
    out.reverse();
    for u in &out {
        assert!(det(&u.generators).abs().is_one(), "decomposition emitted a non-unimodular cone");
    }
    Ok(out)
}

/// Generating function of one signed unimodular cone: `sign * x^p / prod (1 - x^u_i)`
/// with `p` the first lattice point of the half-open cone at its apex.
pub fn cone_rgf(c: &SignedUnimodularCone) -> Term {
    let inv = RationalMatrix::from_int_columns(&c.generators).inverse().expect("unimodular");
    let beta = inv.mul_vec(&c.apex);
    let mu: Vec<BigInt> = beta
        .iter()
        .zip(&c.closed)
        .map(|(b, &closed)| if closed { ceil(b) } else { floor(b) + 1 })
        .collect();
    let p = IntVector::combine(&c.generators, &IntVector::new(mu), c.apex.len());
    Term::new(Rational::from_integer(BigInt::from(c.sign)), p, c.generators.clone())
}
