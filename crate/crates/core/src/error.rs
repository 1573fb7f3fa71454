use thiserror::Error;

/// Errors raised by the algebraic layers (arity, groups, rings, group rings, checks).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity must be at least 2, got {0}")]
    InvalidArity(u64),

    #[error("polyadic power must be at least 1, got {0}")]
    InvalidPower(u64),

    #[error("word length {len} is not admissible for arity {arity}")]
    InadmissibleLength { arity: u64, len: u64 },

    #[error(
        "quantization mismatch: ring side ell_n*(n_r-1) = {ring_side}, group side ell_g*(n_g-1) = {group_side}"
    )]
    QuantizationMismatch { ring_side: u64, group_side: u64 },

    #[error("expected {expected} operands, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("arithmetic overflow in arity computation")]
    Overflow,

    #[error("not found: {0}")]
    NotFound(String),

    #[error("the ring has no zero")]
    NoZero,

    #[error("{0} is not an element of the structure")]
    NotAMember(String),

    #[error("result {0} leaves the carrier set")]
    NotClosed(String),

    #[error("the universe is infinite")]
    InfiniteUniverse,

    #[error("budget exceeded: {needed} evaluations requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("incompatible structures: {0}")]
    Incompatible(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
