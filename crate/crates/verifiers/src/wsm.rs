use subgroup_lattice::ChainPosition;

use crate::artifacts::GroupArtifacts;
use crate::report::{TheoremId, VerificationReport, Witness};

/// Theorem B: in a solvable group, a weak second maximal subgroup fails to
/// be maximal in at most one member of `Max(G, H)`.
pub fn verify_theorem_b(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    if !a.solvable {
        return VerificationReport::skipped(name, &id, TheoremId::B, "group is not solvable");
    }
    let Some(lattice) = &a.lattice else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::B,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    let mut witnesses = Vec::new();
    for class in lattice.classes() {
        let h = class.rep;
        if h == lattice.full_id() {
            continue;
        }
        let position = lattice.classify_chain_position(h).expect("proper subgroup");
        if !matches!(
            position,
            ChainPosition::SecondMaximal | ChainPosition::WeakSecondMaximalOnly
        ) {
            continue;
        }
        let max_over = lattice.max_over(h).expect("proper subgroup");
        let bad: Vec<u32> = max_over
            .into_iter()
            .filter(|&x| !lattice.is_maximal_in(h, x))
            .collect();
        if bad.len() > 1 {
            witnesses.push(Witness::TheoremB {
                subgroup: lattice.gens_cycle_notation(h),
                bad_members: bad
                    .into_iter()
                    .map(|x| lattice.gens_cycle_notation(x))
                    .collect(),
            });
        }
    }
    if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::B)
    } else {
        VerificationReport::fail(name, &id, TheoremId::B, witnesses)
    }
}

/// The key lemma, with no solvability hypothesis: whenever `H` is maximal in
/// some `M ∈ Max(G,H)` and non-maximal in some `X ∈ Max(G,H)`, the normal
/// cores `H_G` and `M_G` coincide.
pub fn verify_key_lemma(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    let Some(lattice) = &a.lattice else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::KeyLemma,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    let mut witnesses = Vec::new();
    for class in lattice.classes() {
        let h = class.rep;
        if h == lattice.full_id() {
            continue;
        }
        let max_over = lattice.max_over(h).expect("proper subgroup");
        let (good, bad): (Vec<u32>, Vec<u32>) = max_over
            .into_iter()
            .partition(|&m| lattice.is_maximal_in(h, m));
        if good.is_empty() || bad.is_empty() {
            continue;
        }
        let core_h = lattice.core_of(h);
        for &m in &good {
            let core_m = lattice.core_of(m);
            if core_m != core_h {
                witnesses.push(Witness::KeyLemma {
                    subgroup: lattice.gens_cycle_notation(h),
                    maximal_member: lattice.gens_cycle_notation(m),
                    non_maximal_member: lattice.gens_cycle_notation(bad[0]),
                    core_of_subgroup: lattice.gens_cycle_notation(core_h),
                    core_of_member: lattice.gens_cycle_notation(core_m),
                });
            }
        }
    }
    if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::KeyLemma)
    } else {
        VerificationReport::fail(name, &id, TheoremId::KeyLemma, witnesses)
    }
}
