use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resultant undefined for two constants")]
    ResultantOfConstants,
    #[error("discriminant requires a monic polynomial")]
    NotMonic,
    #[error("discriminant requires degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("order undefined for the zero polynomial")]
    OrderOfZero,
    #[error("main variable mismatch: `{0}` vs `{1}`")]
    VariableMismatch(String, String),
    #[error("coefficient depends on the main variable `{0}`")]
    CoefficientInMainVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational function has a pole at the evaluation point")]
    Pole,
    #[error("variable `{0}` left unassigned")]
    Unassigned(String),
    #[error("malformed polynomial literal: {0}")]
    Encoding(String),
    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("factorization violated, residual {residual}")]
    FactorizationViolated { residual: String },
    #[error("odd coefficient of v^{0} is nonzero")]
    OddCoefficient(usize),
    #[error("family degenerate, choose different generic constants ({0})")]
    DegenerateFamily(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("local monodromy mismatch: {0}")]
    MonodromyMismatch(String),
    #[error("unsupported group `{0}`")]
    UnsupportedGroup(String),
    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("report invariant breached: {0}")]
    ReportInvariant(String),
}
