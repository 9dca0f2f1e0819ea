//! Complete subgroup lattices of small finite groups: enumeration by layered
//! cyclic extension, cover edges, maximality and normality flags, conjugacy
//! classes of subgroups, Frattini and Fitting subgroups, chief series with
//! non-Frattini flags, supersolvability, and faithful quotient
//! representations.

pub mod bitset;
pub mod chief;
pub mod error;
pub mod lattice;
pub mod quotient;

pub use bitset::ElemSet;
pub use chief::{chief_series, is_supersolvable, ChiefFactor, ChiefSeries};
pub use error::Error;
pub use lattice::{enumerate_subgroups, ChainPosition, ClassInfo, SubNode, SubgroupLattice};
pub use quotient::{quotient_group, QuotientMap};
