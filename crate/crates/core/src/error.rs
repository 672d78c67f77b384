use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the table bound {bound}")]
    FieldTooLarge { p: u32, m: u32, bound: u64 },
    #[error("modulus must be a monic polynomial of degree {expected} over GF({p})")]
    BadModulus { p: u32, expected: u32 },
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("element encoding {value} is outside GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("cannot parse field element `{0}`")]
    ParseElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("points are not pairwise distinct (value {0} repeats)")]
    DuplicatePoint(u32),
    #[error("exponents must be strictly increasing and positive")]
    BadExponents,
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("extension vector must be nonzero")]
    ZeroVector,
    #[error("column multiplier v[{0}] is zero")]
    ZeroMultiplier(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate code: dimension {k} of length {n} has no meaningful classification")]
    Degenerate { n: usize, k: usize },
    #[error("hypothesis not satisfied: {0}")]
    HypothesisViolated(String),
    #[error("work budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
