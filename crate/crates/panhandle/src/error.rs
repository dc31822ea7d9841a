use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by {divisor} is not exact")]
    NonExactDivision { divisor: String },
    #[error("v^{v_exp} column is not a polynomial in z = q - 1/q")]
    NotInZSubring { v_exp: i64 },
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(u32, u32),
    #[error("rank {n} too small for composite needing {need} rows")]
    RankTooSmall { n: usize, need: usize },
    #[error("v-bracket {0} left in the denominator of a composite dimension")]
    CancellationFailure(String),
    #[error("composite has |R| = {0} but |P| = {1}")]
    GradeMismatch(u32, u32),
    #[error("non-integral exponent {num}/{den}")]
    NonIntegralExponent { num: i64, den: i64 },
    #[error("T({m},{n}) is not a knot")]
    NotAKnot { m: u32, n: u32 },
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("degree condition unmet: min deg_v = {min}, max deg_v = {max}")]
    DegreeConditionUnmet { min: i64, max: i64 },
    #[error("framing {0:?} is not admissible")]
    InadmissibleFraming(Vec<i64>),
    #[error("diagram has {crossings} crossings, budget is {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("framing tuple {0:?} is not realizable")]
    NotRealizable(Vec<i64>),
    #[error("corrected framing {0:?} has a negative entry")]
    NegativeCorrectedFraming(Vec<i64>),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonExactDivision { .. } => "NonExactDivision",
            Error::NotInZSubring { .. } => "NotInZSubring",
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::RankTooSmall { .. } => "RankTooSmall",
            Error::CancellationFailure(_) => "CancellationFailure",
            Error::GradeMismatch(..) => "GradeMismatch",
            Error::NonIntegralExponent { .. } => "NonIntegralExponent",
            Error::NotAKnot { .. } => "NotAKnot",
            Error::ShapeViolation(_) => "ShapeViolation",
            Error::DegreeConditionUnmet { .. } => "DegreeConditionUnmet",
            Error::InadmissibleFraming(_) => "InadmissibleFraming",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::MalformedDiagram(_) => "MalformedDiagram",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotRealizable(_) => "NotRealizable",
            Error::NegativeCorrectedFraming(_) => "NegativeCorrectedFraming",
            Error::Invalid(_) => "Invalid",
        }
    }
}
