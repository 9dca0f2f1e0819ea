use modular_rep::module_isomorphic;

use crate::artifacts::GroupArtifacts;
use crate::report::{TheoremId, VerificationReport, Witness};

/// Every strongly irreducible module is quasi-primitive. Checked on every
/// chief-factor module; quasi-primitive non-strongly-irreducible modules are
/// recorded as converse-failure exhibits, not failures.
pub fn verify_lemma_4_1(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    if a.lattice.is_none() {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::Lemma41,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    }
    if a.factor_modules.is_empty() {
        let reason = if a.factor_skips.is_empty() {
            "no chief factors (trivial group)"
        } else {
            "no elementary abelian chief factors"
        };
        return VerificationReport::skipped(name, &id, TheoremId::Lemma41, reason);
    }
    let mut witnesses = Vec::new();
    let mut observations = Vec::new();
    for fm in &a.factor_modules {
        let si = fm
            .reduced
            .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
            .expect("within bounds");
        let qp = fm
            .reduced
            .is_quasi_primitive(&fm.reduced_lattice, a.bounds.vector)
            .expect("chief factors are irreducible");
        if si && !qp {
            witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: "strongly irreducible module is not quasi-primitive".to_string(),
            });
        }
        if qp && !si {
            observations.push(format!(
                "factor {} (order {}): quasi-primitive but not strongly irreducible; \
                 the converse fails here",
                fm.index, fm.order
            ));
        }
    }
    let mut report = if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::Lemma41)
    } else {
        VerificationReport::fail(name, &id, TheoremId::Lemma41, witnesses)
    };
    for o in observations {
        report = report.with_observation(o);
    }
    report
}

/// The contragredient dual preserves the kernel, irreducibility, and (for
/// faithful modules) strong irreducibility.
pub fn verify_lemma_4_3(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    if a.lattice.is_none() {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::Lemma43,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    }
    if a.factor_modules.is_empty() {
        let reason = if a.factor_skips.is_empty() {
            "no chief factors (trivial group)"
        } else {
            "no elementary abelian chief factors"
        };
        return VerificationReport::skipped(name, &id, TheoremId::Lemma43, reason);
    }
    let lattice = a.lattice.as_ref().expect("checked above");
    let mut witnesses = Vec::new();
    for fm in &a.factor_modules {
        // (a) kernel preservation, on the unreduced module where the kernel
        // is interesting.
        let dual_g = fm.over_group.dual_module();
        if fm.over_group.kernel_indices() != dual_g.kernel_indices() {
            witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: "dual module has a different kernel".to_string(),
            });
            continue;
        }
        // (b) irreducibility: chief factors are irreducible, the dual must be.
        let dual = fm.reduced.dual_module();
        let irr = fm.reduced.is_irreducible(a.bounds.vector).expect("within bounds");
        let dual_irr = dual.is_irreducible(a.bounds.vector).expect("within bounds");
        if irr && !dual_irr {
            witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: "dual of an irreducible module is reducible".to_string(),
            });
            continue;
        }
        // (c) faithful strongly irreducible modules stay that way.
        let si = fm
            .reduced
            .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
            .expect("within bounds");
        if fm.reduced.is_faithful() && si {
            let dual_faithful = dual.is_faithful();
            let dual_si = dual
                .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
                .expect("within bounds");
            if !dual_faithful || !dual_si {
                witnesses.push(Witness::Module {
                    factor_index: fm.index,
                    detail: format!(
                        "dual of a faithful strongly irreducible module: faithful = \
                         {dual_faithful}, strongly irreducible = {dual_si}"
                    ),
                });
            }
        }
        // The strong-irreducibility verdicts of the G-level module agree
        // with its dual too (same kernel, same lattice).
        let si_g = fm
            .over_group
            .is_strongly_irreducible(lattice, a.bounds.vector)
            .expect("within bounds");
        let dual_si_g = dual_g
            .is_strongly_irreducible(lattice, a.bounds.vector)
            .expect("within bounds");
        if si_g != dual_si_g {
            witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: "strong irreducibility differs between the module and its dual".to_string(),
            });
        }
        // Duality is an involution up to isomorphism.
        let double = dual.dual_module();
        match module_isomorphic(&double, &fm.reduced, a.bounds.vector) {
            Ok(true) => {}
            Ok(false) => witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: "double dual is not isomorphic to the module".to_string(),
            }),
            Err(e) => witnesses.push(Witness::Module {
                factor_index: fm.index,
                detail: format!("double-dual isomorphism test inconclusive: {e}"),
            }),
        }
    }
    if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::Lemma43)
    } else {
        VerificationReport::fail(name, &id, TheoremId::Lemma43, witnesses)
    }
}
