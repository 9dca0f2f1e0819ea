use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("zero vector cannot be spun")]
    ZeroVector,

    #[error("vector enumeration exceeds the bound {bound}")]
    VectorBoundExceeded { bound: usize },

    #[error("intertwiner search was inconclusive; treat as a test error, not as false")]
    IsoUnknown,

    #[error("chief factor is not elementary abelian")]
    NotElementaryAbelian,

    #[error("the subgroup does not act trivially on the module")]
    NotActedTrivially,

    #[error(transparent)]
    Lattice(#[from] subgroup_lattice::Error),

    #[error(transparent)]
    Core(#[from] permgroup_core::Error),
}
