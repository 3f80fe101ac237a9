use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("generator index ({i},{j}) out of range for n={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u8, u8),
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("algebra size mismatch: n={0} vs n={1}")]
    SizeMismatch(u8, u8),
    #[error("series has a nonzero t^0 term; expected t-valuation >= 1")]
    ZeroValuation,
    #[error("constant term is not the unit")]
    NonUnitConstantTerm,
    #[error("term-count budget exceeded ({0} terms)")]
    BudgetExceeded(usize),
    #[error("bracket precondition failed: {0}")]
    BracketPrecondition(String),
    #[error("lemma condition violated: {0}")]
    LemmaViolation(String),
    #[error("matrix exponent is not nilpotent (entry survived at power {0})")]
    NotNilpotent(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, TwistError>;
