//! Finite permutation group arithmetic: construction from generators,
//! deterministic stabilizer chains, membership, closures, normal cores,
//! derived series, and direct products. Everything is exact and reproducible:
//! no randomized algorithms, and all orderings are canonical.

pub mod chain;
pub mod elements;
pub mod error;
pub mod group;
pub mod ops;
pub mod perm;

pub use chain::StabilizerChain;
pub use elements::ElementTable;
pub use error::Error;
pub use group::{GroupHandle, SubgroupRef};
pub use ops::{
    closure, conjugate_subgroup, derived_series, derived_subgroup, direct_product, intersection,
    is_maximal_in, is_solvable, join, normal_closure, normal_core, right_transversal,
};
pub use perm::{parse_cycles, Permutation, DEGREE_CAP};
