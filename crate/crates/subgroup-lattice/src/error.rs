use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("group order {order} exceeds the lattice bound {bound}")]
    OrderBoundExceeded { order: u128, bound: u128 },

    #[error("subgroup is the whole group; a proper subgroup is required")]
    NotProper,

    #[error("subgroup is not normal in the parent")]
    NotNormal,

    #[error("subgroup does not belong to this lattice")]
    NotInLattice,

    #[error("quotient degree {0} exceeds the permutation degree cap {1}")]
    QuotientDegree(usize, usize),

    #[error(transparent)]
    Core(#[from] permgroup_core::Error),
}
