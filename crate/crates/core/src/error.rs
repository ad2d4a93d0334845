use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    ReducibleModulus(Vec<u32>),
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("element order {order} is divisible by the characteristic {p}")]
    OrderDivisibleByP { order: u64, p: u32 },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("characteristic {p} divides the group order {order}")]
    ModularGroupOrder { p: u32, order: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("incompatible operands: {0}")]
    Mismatch(String),
    #[error("degree bound violated: {0}")]
    DegreeBoundViolated(String),
    #[error("operator is not a scalar multiple of the swap: {0}")]
    NotScalar(String),
    #[error("reduction exceeded its step budget of {0}")]
    NonTermination(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalar c_{k} is zero")]
    ZeroScalar { k: usize },
    #[error("partition {0:?} is not {1}-regular")]
    NotPRegular(Vec<usize>, u32),
    #[error("module is not semisimple over the group of diagonal elements: {0}")]
    NotSemisimple(String),
    #[error("scalar unavailable: {0}")]
    ScalarUnavailable(String),
    #[error("incomplete list of simple modules: {0}")]
    IncompleteSimpleList(String),
    #[error("irreducible representations could not be split off: {0}")]
    SplittingFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
