use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("generators act on different numbers of points ({0} vs {1})")]
    InconsistentDegrees(usize, usize),

    #[error("image array is not a bijection on {{0, …, {degree}-1}}")]
    NotBijective { degree: usize },

    #[error("permutation degree {0} exceeds the supported cap of {1} points")]
    DegreeCapExceeded(usize, usize),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("element is not a member of the group")]
    NotMember,

    #[error("subgroup relation does not hold: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not proper in its parent")]
    NotProper,

    #[error("subgroup index {index} exceeds the configured bound {bound}")]
    IndexBoundExceeded { index: u128, bound: u128 },

    #[error("group order exceeds the bound {bound}")]
    OrderBoundExceeded { bound: u128 },

    #[error("group order overflows 128-bit arithmetic")]
    OrderOverflow,

    #[error("normal subgroup expected: {0}")]
    NotNormal(String),

    #[error("cycle notation parse error: {0}")]
    Parse(String),
}
