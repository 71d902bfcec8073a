use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroLeadingCoefficient,
    #[error("inner series of a composition must vanish at t = 0 (valuation {0})")]
    CompositionValuation(usize),
    #[error("reversion needs a series of valuation 1, got valuation {0}")]
    ReversionValuation(usize),
    #[error("exp_series needs a series without constant term")]
    ExpConstantTerm,
    #[error("log_series needs a series with constant term 1")]
    LogConstantTerm,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient {index} has negative valuation {valuation}")]
    NegativeValuation { index: usize, valuation: i64 },
    #[error("malformed operator spec: {0}")]
    MalformedSpec(String),
    #[error("operator is not MUM at t = 0: {0}")]
    NotMum(String),
    #[error("monodromy rank check failed: {0}")]
    RankCheckFailed(String),
    #[error("Yukawa coupling requires a rank-4 operator, got rank {0}")]
    NotRankFour(usize),
    #[error("-a3/(2 a4) has nonzero constant term; the operator is not self-dual in this gauge")]
    NonIntegrableRhs,
    #[error("series order {available} is insufficient, need at least {required}")]
    InsufficientOrder { required: usize, available: usize },
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

impl Error {
    /// Variant name, for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
            Error::CompositionValuation(_) => "CompositionValuation",
            Error::ReversionValuation(_) => "ReversionValuation",
            Error::ExpConstantTerm => "ExpConstantTerm",
            Error::LogConstantTerm => "LogConstantTerm",
            Error::NotPrime(_) => "NotPrime",
            Error::NegativeValuation { .. } => "NegativeValuation",
            Error::MalformedSpec(_) => "MalformedSpec",
            Error::NotMum(_) => "NotMum",
            Error::RankCheckFailed(_) => "RankCheckFailed",
            Error::NotRankFour(_) => "NotRankFour",
            Error::NonIntegrableRhs => "NonIntegrableRhs",
            Error::InsufficientOrder { .. } => "InsufficientOrder",
            Error::OrderMismatch(_) => "OrderMismatch",
            Error::UnknownFixture(_) => "UnknownFixture",
        }
    }
}
