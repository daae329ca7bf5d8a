use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names are stable: they are emitted verbatim as the `reason`
/// field of CLI error objects and mapped to FFI error codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid field size: {0}")]
    InvalidField(String),
    #[error("polynomial has odd degree {0}")]
    DegreeOdd(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("functional equation fails: {0}")]
    FunctionalEquationFailure(String),
    #[error("Riemann hypothesis fails: {0}")]
    RiemannHypothesisFailure(String),
    #[error("point counts are not realizable: {0}")]
    ValidationFailure(String),
    #[error("field mismatch: q = {0} vs q = {1}")]
    FieldMismatch(String, String),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("denominator vanishes at t = 1/q")]
    DenominatorVanishes,
    #[error("pole at t = {0}")]
    PoleAtPoint(String),
    #[error("analytic rank {analytic} differs from algebraic rank {algebraic}")]
    RankMismatch { analytic: usize, algebraic: usize },
    #[error("elements live in different orders Z[pi]")]
    AmbientMismatch,
    #[error("basis lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("special product {sp} is not an integer multiple of the regulator {regulator}")]
    NonIntegralSha { sp: String, regulator: String },
    #[error("report identity fails: {0}")]
    ReportInconsistent(String),
    #[error("prime {0} equals the characteristic")]
    PrecludedPrime(u64),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input was malformed or failed certification.
    Invalid,
    /// The input was well formed but an asserted identity failed.
    Inconsistent,
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvalidField(_) => "InvalidField",
            Error::DegreeOdd(_) => "DegreeOdd",
            Error::NotMonic => "NotMonic",
            Error::FunctionalEquationFailure(_) => "FunctionalEquationFailure",
            Error::RiemannHypothesisFailure(_) => "RiemannHypothesisFailure",
            Error::ValidationFailure(_) => "ValidationFailure",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::DenominatorVanishes => "DenominatorVanishes",
            Error::PoleAtPoint(_) => "PoleAtPoint",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::NonIntegralSha { .. } => "NonIntegralSha",
            Error::ReportInconsistent(_) => "ReportInconsistent",
            Error::PrecludedPrime(_) => "PrecludedPrime",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::Internal(_) => "Internal",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NonIntegralSha { .. }
            | Error::ReportInconsistent(_)
            | Error::RankMismatch { .. }
            | Error::DenominatorVanishes
            | Error::Internal(_) => ErrorClass::Inconsistent,
            _ => ErrorClass::Invalid,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
