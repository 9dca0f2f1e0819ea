//! Executable statements of the theorems, lemmas, and remark examples on
//! weak second maximal subgroups, WSM-groups, strongly irreducible chief
//! factors, and non-vanishing elements. Each verifier produces a structured
//! pass/fail/skipped report with replayable witnesses.

pub mod artifacts;
pub mod lemmas;
pub mod remarks;
pub mod report;
pub mod thm_a;
pub mod thm_c;
pub mod wsm;

pub use artifacts::{is_wsm, Bounds, FactorModule, GroupArtifacts};
pub use lemmas::{verify_lemma_4_1, verify_lemma_4_3};
pub use remarks::{
    build_nonsolvable_counterexample, verify_remark_nonsolvable, verify_remark_order72,
    verify_remark_supersolvable,
};
pub use report::{TheoremId, Verdict, VerificationReport, Witness};
pub use thm_a::verify_theorem_a;
pub use thm_c::{verify_lemma_3_1, verify_theorem_c};
pub use wsm::{verify_key_lemma, verify_theorem_b};

/// Run one selected verifier against prepared artifacts.
pub fn verify(theorem: TheoremId, artifacts: &GroupArtifacts) -> VerificationReport {
    match theorem {
        TheoremId::A => verify_theorem_a(artifacts),
        TheoremId::B => verify_theorem_b(artifacts),
        TheoremId::C => verify_theorem_c(artifacts),
        TheoremId::KeyLemma => verify_key_lemma(artifacts),
        TheoremId::Lemma31 => verify_lemma_3_1(artifacts),
        TheoremId::Lemma41 => verify_lemma_4_1(artifacts),
        TheoremId::Lemma43 => verify_lemma_4_3(artifacts),
        TheoremId::RemarkSupersolvable => verify_remark_supersolvable(artifacts),
        TheoremId::RemarkOrder72 => verify_remark_order72(artifacts),
        TheoremId::RemarkNonsolvable => {
            verify_remark_nonsolvable(artifacts, artifacts.bounds.index)
        }
    }
}
