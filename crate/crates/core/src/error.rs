use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarCountMismatch { expected: usize, found: usize },
    #[error("zero vector has no isolated level")]
    ZeroVector,
    #[error("answer depends on truncated tail: {0}")]
    Undecidable(String),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("division did not reach the requested order within {0} steps")]
    DivisionDidNotTerminate(usize),
    #[error("sign of t^{0} is undefined for this sign character")]
    SignUndefined(String),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("invalid curvette: {0}")]
    InvalidCurvette(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weights must be strictly positive")]
    NonPositiveWeight,
    #[error("no binomial of shape {shape} with leading exponent <= {bound}")]
    BoundExceeded { shape: &'static str, bound: u32 },
    #[error("exponent differences are not coplanar")]
    NotCoplanar,
    #[error("exponent differences are collinear: {0}")]
    Collinear(String),
    #[error("integer overflow in lattice computation")]
    Overflow,
    #[error("evaluation vanishes: {0}")]
    VanishingEvaluation(String),
    #[error("no candidate changes sign")]
    NoSignChanger,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("data inconsistent with hypothesis: {0}")]
    HypothesisInconsistent(String),
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(String),
    #[error("factor {0} is not a unit (zero constant term)")]
    NotAUnit(String),
    #[error("truncations agree up to order {0}; extend the expansion")]
    ExtendTruncation(usize),
    #[error("hyperplane vanishes on the whole segment")]
    DegenerateSegment,
    #[error("violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
