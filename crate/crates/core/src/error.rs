use thiserror::Error;

/// Which hypothesis of the two-level extrapolation formula failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtrapolationHypothesis {
    /// `p` divides `i_0`.
    PrimeDividesFirst,
    /// `i_1 >= (p^2 - p + 1) i_0`.
    SecondTooLarge,
    /// `i_1 < i_0`.
    Decreasing,
}

impl std::fmt::Display for ExtrapolationHypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::PrimeDividesFirst => write!(f, "p divides i0"),
            Self::SecondTooLarge => write!(f, "i1 >= (p^2 - p + 1) * i0"),
            Self::Decreasing => write!(f, "i1 < i0"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the prime 2 is not supported here; an odd prime is required")]
    EvenPrime,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} is not {p}-integral (valuation {valuation})")]
    NotPIntegral { value: String, p: u64, valuation: i64 },
    #[error("inner series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("linear coefficient must be {expected}, found {found}")]
    WrongLinearCoefficient { expected: String, found: String },
    #[error("series is known only to degree {have}; degree {needed} is required")]
    InsufficientPrecision { needed: usize, have: usize },
    #[error("extrapolation hypothesis violated: {0}")]
    HypothesisViolated(ExtrapolationHypothesis),
    #[error("coefficients mix the moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("sweep of {rows} rows exceeds the cap of {cap}")]
    SweepTooLarge { rows: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
