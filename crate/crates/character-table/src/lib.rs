//! Exact complex character tables of small finite groups: conjugacy classes
//! in a canonical order, the Dixon–Schneider eigenvector method over a prime
//! field, cyclotomic-integer values with exact zero testing, orthogonality
//! verification, and non-vanishing element detection.

pub mod classes;
pub mod cyclotomic;
pub mod dixon;
pub mod error;
pub mod gfl;
pub mod table;

pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use cyclotomic::{cyclotomic_polynomial, divisors, euler_phi, CyclotomicInteger};
pub use dixon::character_table;
pub use error::Error;
pub use table::{CharacterTable, TableExport, ValueExport};
