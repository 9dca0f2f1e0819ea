use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("group order {order} exceeds the character bound {bound}")]
    OrderBoundExceeded { order: u128, bound: u128 },

    #[error("no suitable prime ≡ 1 mod {exponent} below 2^31")]
    NoSuitablePrime { exponent: u64 },

    #[error("internal assertion while building the table: {0}")]
    InternalAssertion(String),

    #[error("orthogonality violated for rows/columns ({0}, {1})")]
    Orthogonality(usize, usize),

    #[error(transparent)]
    Core(#[from] permgroup_core::Error),
}
