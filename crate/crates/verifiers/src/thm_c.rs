use crate::artifacts::GroupArtifacts;
use crate::report::{TheoremId, VerificationReport, Witness};

/// Theorem C: a solvable group is a WSM-group exactly when every
/// non-Frattini chief factor, as a module over the group, is strongly
/// irreducible. Both sides are computed independently: the left from the
/// subgroup classification, the right from the chief-factor modules reduced
/// to their centralizer quotients.
pub fn verify_theorem_c(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    if !a.solvable {
        return VerificationReport::skipped(name, &id, TheoremId::C, "group is not solvable");
    }
    let Some(_) = &a.lattice else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::C,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    let wsm_side = a.wsm.expect("lattice present implies wsm computed");

    let mut module_side = true;
    let mut failing_factor = None;
    for fm in &a.factor_modules {
        if !fm.non_frattini {
            continue;
        }
        let si = fm
            .reduced
            .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
            .expect("corpus modules stay within the vector bound");
        if !si {
            module_side = false;
            failing_factor = Some(fm.index);
            break;
        }
    }

    if wsm_side == module_side {
        VerificationReport::pass(name, &id, TheoremId::C).with_observation(format!(
            "wsm = {wsm_side}, all non-Frattini chief factors strongly irreducible = {module_side}"
        ))
    } else {
        VerificationReport::fail(
            name,
            &id,
            TheoremId::C,
            vec![Witness::TheoremC {
                wsm_side,
                module_side,
                failing_factor,
            }],
        )
    }
}

/// The reduction lemma behind Theorem C: pushing a chief-factor module
/// through `G → G/N` for `N` inside the kernel changes neither
/// irreducibility nor strong irreducibility. Verified by computing both
/// verdicts on both sides for every chief factor.
pub fn verify_lemma_3_1(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    let Some(lattice) = &a.lattice else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::Lemma31,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    if a.factor_modules.is_empty() {
        let reason = if a.factor_skips.is_empty() {
            "no chief factors (trivial group)"
        } else {
            "no elementary abelian chief factors"
        };
        return VerificationReport::skipped(name, &id, TheoremId::Lemma31, reason);
    }
    let mut witnesses = Vec::new();
    for fm in &a.factor_modules {
        let irr_group = fm
            .over_group
            .is_irreducible(a.bounds.vector)
            .expect("within bounds");
        let irr_reduced = fm
            .reduced
            .is_irreducible(a.bounds.vector)
            .expect("within bounds");
        let si_group = fm
            .over_group
            .is_strongly_irreducible(lattice, a.bounds.vector)
            .expect("within bounds");
        let si_reduced = fm
            .reduced
            .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
            .expect("within bounds");
        if irr_group != irr_reduced || si_group != si_reduced {
            witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: format!(
                    "verdicts changed under centralizer-quotient reduction: \
                     irreducible {irr_group}→{irr_reduced}, strongly irreducible \
                     {si_group}→{si_reduced}"
                ),
            });
        }
    }
    if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::Lemma31)
    } else {
        VerificationReport::fail(name, &id, TheoremId::Lemma31, witnesses)
    }
}
