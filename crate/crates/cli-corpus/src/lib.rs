//! Corpus ingestion, builtin group constructors, verification-run
//! orchestration, caching, and report emission for the group-theory
//! verification harness.

pub mod builtins;
pub mod cache;
pub mod corpus;
pub mod error;
pub mod report;
pub mod runner;
pub mod show;

pub use builtins::{agl1, alt, build_source, cyclic, dihedral, elem_abelian, quaternion, sym};
pub use corpus::{default_corpus, nonsolvable_corpus, parse_corpus, parse_corpus_str, GroupSpec};
pub use error::CliError;
pub use report::{GroupBundle, GroupEntry, RunReport};
pub use runner::{compute_bundle, run, verify_cache, write_report, RunOptions};
