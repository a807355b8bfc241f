use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("type {ty} is not a type of n = {n}")]
    TypeMismatch { n: usize, ty: String },

    #[error("enumeration needs {required} candidates, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("genus parity failure: n + 1 - parts - faces = {0} is odd or negative")]
    GenusParity(i64),

    #[error("composition needs a series with zero constant term")]
    NonZeroConstantTerm,

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("fractional power needs constant term 1")]
    ConstantTermNotOne,

    #[error("series is not divisible by x^{0}")]
    NotDivisible(usize),

    #[error("fixed point did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("cumulant specification `{0}` is not numeric")]
    NotNumeric(String),

    #[error("no generating function is implemented for genus {0}")]
    UnsupportedGenus(u32),

    #[error("internal consistency check failed: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
