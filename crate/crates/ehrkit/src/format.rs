//! JSON formats: H-representations, quasi-polynomials and short rational
//! generating functions.

use std::str::FromStr;

use ehrkit_core::ehrhart::QuasiPolynomial;
use ehrkit_core::exact::{IntVector, Rational};
use ehrkit_core::polytope::Polytope;
use ehrkit_core::rgf::{ShortRGF, Term};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] ehrkit_core::Error),
}

/// `{"dim": d, "inequalities": [[c_1, ..., c_d, b], ...]}` for `<c, x> <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HRepJson {
    pub dim: usize,
    pub inequalities: Vec<Vec<i64>>,
}

impl HRepJson {
    pub fn from_polytope(p: &Polytope) -> Result<Self, FormatError> {
        let inequalities = p
            .inequalities()
            .iter()
            .map(|(c, b)| c.iter().chain(std::iter::once(b)).map(to_i64).collect())
            .collect::<Result<_, _>>()?;
        Ok(HRepJson { dim: p.dim(), inequalities })
    }

    pub fn to_polytope(&self) -> Result<Polytope, FormatError> {
        if let Some(r) = self.inequalities.iter().find(|r| r.len() != self.dim + 1) {
            return Err(FormatError::Invalid(format!(
                "inequality has {} entries, expected {}",
                r.len(),
                self.dim + 1
            )));
        }
        let rows: Vec<&[i64]> = self.inequalities.iter().map(|r| &r[..]).collect();
        Ok(Polytope::from_rows(self.dim, &rows)?)
    }
}

pub fn parse_polytope(text: &str) -> Result<Polytope, FormatError> {
    serde_json::from_str::<HRepJson>(text)?.to_polytope()
}

pub fn write_polytope(p: &Polytope) -> Result<String, FormatError> {
    Ok(serde_json::to_string(&HRepJson::from_polytope(p)?)?)
}

/// `{"period": D, "constituents": [["p/q", ...], ...]}`, ascending in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasiPolynomialJson {
    pub period: u64,
    pub constituents: Vec<Vec<String>>,
}

impl QuasiPolynomialJson {
    pub fn from_quasipolynomial(q: &QuasiPolynomial) -> Self {
        let constituents = q.constituents.iter().map(|c| c.iter().map(|x| x.to_string()).collect()).collect();
        QuasiPolynomialJson { period: q.period, constituents }
    }

    pub fn to_quasipolynomial(&self) -> Result<QuasiPolynomial, FormatError> {
        if self.period == 0 || self.constituents.len() as u64 != self.period {
            return Err(FormatError::Invalid("constituent count must equal the positive period".into()));
        }
        let constituents = self
            .constituents
            .iter()
            .map(|c| c.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<_, _>>()?;
        Ok(QuasiPolynomial { period: self.period, constituents })
    }
}

/// `{"dim": d, "terms": [{"alpha": "p/q", "p": [...], "denoms": [[...], ...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShortRgfJson {
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub alpha: String,
    pub p: Vec<i64>,
    pub denoms: Vec<Vec<i64>>,
}

impl ShortRgfJson {
    pub fn from_rgf(f: &ShortRGF) -> Result<Self, FormatError> {
        let terms = f
            .terms()
            .iter()
            .map(|t| {
                Ok(TermJson {
                    alpha: t.coeff.to_string(),
                    p: to_i64s(&t.num)?,
                    denoms: t.den.iter().map(to_i64s).collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(ShortRgfJson { dim: f.dim(), terms })
    }

    pub fn to_rgf(&self) -> Result<ShortRGF, FormatError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let den = t.denoms.iter().map(|b| IntVector::from_i64s(b)).collect();
                Ok(Term::new(parse_rational(&t.alpha)?, IntVector::from_i64s(&t.p), den))
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(ShortRGF::from_terms(self.dim, terms)?)
    }
}

/// Accepts `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, FormatError> {
    let bad = || FormatError::Invalid(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn to_i64(x: &BigInt) -> Result<i64, FormatError> {
    x.to_i64().ok_or_else(|| FormatError::Invalid(format!("integer {x} does not fit in 64 bits")))
}

fn to_i64s(v: &IntVector) -> Result<Vec<i64>, FormatError> {
    v.iter().map(to_i64).collect()
}
