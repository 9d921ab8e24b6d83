use alloc::string::String;

/// Errors raised by the library. Internal invariant violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedron has no inequalities")]
    NoInequalities,
    #[error("not a polytope: the solution set is unbounded")]
    NotAPolytope,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("basis is already unimodular")]
    AlreadyUnimodular,
    #[error("vectors are linearly dependent")]
    Degenerate,
    #[error("cone is not pointed")]
    NonPointedCone,
    #[error("monomial image lies in the poles of the generating function")]
    ImageInPoles,
    #[error("function has a pole at (1, ..., 1)")]
    PoleAtOne,
    #[error("direction is orthogonal to a denominator vector")]
    DirectionVanishes,
    #[error("shift {n} outside [1, {period}]")]
    ShiftOutOfRange { n: String, period: String },
    #[error("period must be positive")]
    NonPositivePeriod,
    #[error("denominator {period} exceeds the dense expansion limit {limit}; use generating-function level queries")]
    ExpansionGuard { period: String, limit: u64 },
    #[error("term with {found} denominators exceeds the bound {bound}")]
    DenominatorBound { found: usize, bound: usize },
    #[error("reference computation disagrees: {0}")]
    OracleMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
