//! Chief factors of small groups as GF(p)-modules: exhaustive-spinning
//! irreducibility, strong irreducibility (irreducible on restriction to
//! every maximal subgroup), quasi-primitivity (homogeneous on restriction to
//! every normal subgroup), module isomorphism by exact intertwiner search,
//! and contragredient duals.

pub mod error;
pub mod gf;
pub mod module;

pub use error::Error;
pub use gf::{nullspace, Mat, Subspace};
pub use module::{
    chief_factor_module, mats_isomorphic, module_isomorphic, restricted_action, GModule,
    Provenance,
};

/// Default cap on `p^dim` for exhaustive vector enumeration.
pub const DEFAULT_VECTOR_BOUND: usize = 10_000;
