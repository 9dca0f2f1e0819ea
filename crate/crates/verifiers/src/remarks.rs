use permgroup_core::{
    direct_product, is_maximal_in, GroupHandle, Permutation, SubgroupRef,
};

use crate::artifacts::GroupArtifacts;
use crate::report::{TheoremId, VerificationReport, Witness};

/// Supersolvable groups are WSM-groups; the converse fails. Per group this
/// checks the implication; groups that are WSM but not supersolvable are
/// recorded as converse exhibits.
pub fn verify_remark_supersolvable(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    let (Some(ss), Some(wsm)) = (a.supersolvable, a.wsm) else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkSupersolvable,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    if ss && !wsm {
        return VerificationReport::fail(
            name,
            &id,
            TheoremId::RemarkSupersolvable,
            vec![Witness::Statement {
                detail: "supersolvable group with a weak second maximal subgroup that is not \
                         second maximal"
                    .to_string(),
            }],
        );
    }
    let mut report = VerificationReport::pass(name, &id, TheoremId::RemarkSupersolvable);
    if wsm && !ss {
        report = report.with_observation(
            "WSM-group that is not supersolvable (converse exhibit)".to_string(),
        );
    }
    report
}

/// The order-72 example: an elementary abelian group of order 9 extended by
/// a fixed-point-free automorphism of order 8 is a WSM-group but not
/// supersolvable, and its order-9 chief factor is strongly irreducible.
pub fn verify_remark_order72(a: &GroupArtifacts) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    if a.handle.order() != 72 || !a.solvable {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkOrder72,
            "hypothesis not met: not a solvable group of order 72",
        );
    }
    let Some(lattice) = &a.lattice else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkOrder72,
            a.lattice_skip.as_deref().unwrap_or("lattice unavailable"),
        );
    };
    // Shape check: the Fitting subgroup is elementary abelian of order 9 and
    // the quotient acts faithfully as a cyclic group of order 8.
    let fitting = lattice.fitting();
    let shape = a.factor_modules.iter().find(|fm| {
        fm.order == 9
            && fm.non_frattini
            && lattice.node(lattice.fitting()).order == 9
            && fm.reduced.acting().order() == 8
    });
    let Some(fm) = shape else {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkOrder72,
            "hypothesis not met: no order-9 chief factor with an order-8 faithful quotient",
        );
    };
    let _ = fitting;
    let mut witnesses = Vec::new();
    if a.supersolvable == Some(true) {
        witnesses.push(Witness::Statement {
            detail: "the group is supersolvable, contradicting the remark".to_string(),
        });
    }
    if a.wsm != Some(true) {
        witnesses.push(Witness::Statement {
            detail: "the group is not a WSM-group, contradicting the remark".to_string(),
        });
    }
    let si = fm
        .reduced
        .is_strongly_irreducible(&fm.reduced_lattice, a.bounds.vector)
        .expect("within bounds");
    if !si {
        witnesses.push(Witness::Module {
            factor_index: fm.index,
            detail: "the order-9 chief factor is not strongly irreducible".to_string(),
        });
    }
    // The order-8 quotient acts fixed-point-freely: the generator matrix has
    // no nonzero fixed vector.
    let gen_mat = &fm.reduced.gen_mats()[0];
    let mut shifted = gen_mat.clone();
    for i in 0..shifted.rows {
        let v = (shifted.get(i, i) as i32 - 1).rem_euclid(shifted.p as i32) as u8;
        shifted.set(i, i, v);
    }
    if !shifted.is_invertible() {
        witnesses.push(Witness::Module {
            factor_index: fm.index,
            detail: "the order-8 generator fixes a nonzero vector".to_string(),
        });
    }
    if witnesses.is_empty() {
        VerificationReport::pass(name, &id, TheoremId::RemarkOrder72).with_observation(
            "order-72 group: WSM, not supersolvable, order-9 factor strongly irreducible, \
             order-8 action fixed-point-free"
                .to_string(),
        )
    } else {
        VerificationReport::fail(name, &id, TheoremId::RemarkOrder72, witnesses)
    }
}

fn diag_gens(alt_gens: &[Permutation], p: usize) -> Vec<Permutation> {
    alt_gens
        .iter()
        .map(|g| {
            let mut images: Vec<u8> = g.images().to_vec();
            images.extend(g.images().iter().map(|&x| x + p as u8));
            Permutation::from_images(images).expect("diagonal images are a permutation")
        })
        .collect()
}

fn alt_group(p: usize) -> Result<GroupHandle, permgroup_core::Error> {
    let three = Permutation::from_cycles(p, &[vec![1, 2, 3]])?;
    let long = if p % 2 == 1 {
        Permutation::from_cycles(p, &[(1..=p).collect()])?
    } else {
        Permutation::from_cycles(p, &[(2..=p).collect()])?
    };
    GroupHandle::build(vec![three, long])
}

/// Alternating group on the first `p−1` of `p` points.
fn alt_point_stabilizer(p: usize) -> Vec<Permutation> {
    let n = p - 1;
    let three = Permutation::from_cycles(p, &[vec![1, 2, 3]]).unwrap();
    let long = if n % 2 == 1 {
        Permutation::from_cycles(p, &[(1..=n).collect()]).unwrap()
    } else {
        Permutation::from_cycles(p, &[(2..=n).collect()]).unwrap()
    };
    vec![three, long]
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The structural breakdown of Theorem B without solvability: in
/// `G = A_p × A_p` the diagonal `H = {(x,x) : x ∈ A_{p-1}}` is weak second
/// maximal with two distinct members of `Max(G,H)` in which it is not
/// maximal. All five checks run lattice-free through transversal closures.
pub fn build_nonsolvable_counterexample(p: usize, index_bound: u128) -> VerificationReport {
    let name = format!("A{p}xA{p}");
    if !is_prime(p) || p < 7 {
        return VerificationReport::skipped(
            &name,
            "",
            TheoremId::RemarkNonsolvable,
            "p must be a prime at least 7",
        );
    }
    let a = match alt_group(p) {
        Ok(a) => a,
        Err(e) => {
            return VerificationReport::skipped(
                &name,
                "",
                TheoremId::RemarkNonsolvable,
                &format!("A_{p} is out of range: {e}"),
            )
        }
    };
    // The deciding transversal runs over the cosets of diag(A_p), so the
    // whole construction is gated on |A_p| up front.
    if a.order() > index_bound {
        return VerificationReport::skipped(
            &name,
            "",
            TheoremId::RemarkNonsolvable,
            &format!(
                "index |G : M| = {} exceeds the configured bound {index_bound}",
                a.order()
            ),
        );
    }
    let b_gens = alt_point_stabilizer(p);
    let g = match direct_product(&a, &a) {
        Ok(g) => g,
        Err(e) => {
            return VerificationReport::skipped(
                &name,
                "",
                TheoremId::RemarkNonsolvable,
                &format!("product is out of range: {e}"),
            )
        }
    };
    let id = g.id().to_string();

    // M = diag(A), H = diag(B), X1 = A×B, X2 = B×A, and B×B in between.
    let m = SubgroupRef::new(&g, diag_gens(a.generators(), p)).expect("diagonal inside product");
    let h = SubgroupRef::new(&g, diag_gens(&b_gens, p)).expect("diagonal inside product");
    let mut x1_gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|q| q.extended(2 * p).expect("within degree"))
        .collect();
    let shift = |q: &Permutation| {
        let mut images: Vec<u8> = (0..p as u8).collect();
        images.extend(q.images().iter().map(|&x| x + p as u8));
        Permutation::from_images(images).expect("shifted block is a permutation")
    };
    x1_gens.extend(b_gens.iter().map(&shift));
    let x1 = SubgroupRef::new(&g, x1_gens).expect("A×B inside product");
    let mut x2_gens: Vec<Permutation> = b_gens
        .iter()
        .map(|q| q.extended(2 * p).expect("within degree"))
        .collect();
    x2_gens.extend(a.generators().iter().map(&shift));
    let x2 = SubgroupRef::new(&g, x2_gens).expect("B×A inside product");
    let mut bb_gens: Vec<Permutation> = b_gens
        .iter()
        .map(|q| q.extended(2 * p).expect("within degree"))
        .collect();
    bb_gens.extend(b_gens.iter().map(&shift));
    let bb = SubgroupRef::new(&g, bb_gens).expect("B×B inside product");

    let mut witnesses: Vec<Witness> = Vec::new();
    let fail = |detail: String, witnesses: &mut Vec<Witness>| {
        witnesses.push(Witness::Statement { detail });
    };

    // (i) |M : H| = p and H is maximal in M.
    if m.order() / h.order() != p as u128 {
        fail(format!("|M:H| = {} instead of {p}", m.order() / h.order()), &mut witnesses);
    }
    match is_maximal_in(m.group(), &SubgroupRef::new(m.group(), h.generators().to_vec()).expect("H inside M"), index_bound) {
        Ok(true) => {}
        Ok(false) => fail("H is not maximal in M".to_string(), &mut witnesses),
        Err(e) => fail(format!("maximality of H in M not decided: {e}"), &mut witnesses),
    }

    // (ii) X1 and X2 are maximal in G.
    for (label, x) in [("X1", &x1), ("X2", &x2)] {
        match is_maximal_in(&g, x, index_bound) {
            Ok(true) => {}
            Ok(false) => fail(format!("{label} is not maximal in G"), &mut witnesses),
            Err(e) => fail(format!("maximality of {label} not decided: {e}"), &mut witnesses),
        }
    }

    // (iii) H is not maximal in either X_i: B×B sits strictly between.
    for (label, x) in [("X1", &x1), ("X2", &x2)] {
        let strictly_between = h.order() < bb.order()
            && bb.order() < x.order()
            && h.generators().iter().all(|q| bb.contains(q).unwrap_or(false))
            && bb.generators().iter().all(|q| x.contains(q).unwrap_or(false));
        if !strictly_between {
            fail(
                format!("B×B does not sit strictly between H and {label}"),
                &mut witnesses,
            );
        }
    }

    // (iv) M is maximal in G (the expensive transversal closure).
    match is_maximal_in(&g, &m, index_bound) {
        Ok(true) => {}
        Ok(false) => fail("M = diag(A) is not maximal in G".to_string(), &mut witnesses),
        Err(e) => fail(format!("maximality of M not decided: {e}"), &mut witnesses),
    }

    // (v) Both X_i contain H, so Max(G,H) has two distinct members in which
    // H is not maximal, while H is maximal in the member M: H is weak second
    // maximal but not second maximal, and the bound of the solvable case
    // fails.
    for (label, x) in [("X1", &x1), ("X2", &x2), ("M", &m)] {
        if !h.generators().iter().all(|q| x.contains(q).unwrap_or(false)) {
            fail(format!("H is not contained in {label}"), &mut witnesses);
        }
    }
    if x1.order() != x2.order() || x1.generators() == x2.generators() {
        // Distinctness: orders agree but the subgroups differ on elements.
        let witness_elem = x1.generators()[0].clone();
        if x2.contains(&witness_elem).unwrap_or(true)
            && x1
                .generators()
                .iter()
                .all(|q| x2.contains(q).unwrap_or(false))
        {
            fail("X1 and X2 coincide".to_string(), &mut witnesses);
        }
    }

    if witnesses.is_empty() {
        VerificationReport::pass(&name, &id, TheoremId::RemarkNonsolvable).with_observation(
            format!(
                "counterexample confirmed at p = {p}: |G| = {}, |M:H| = {p}, \
                 two distinct maximal members X1, X2 above H with H non-maximal in both",
                g.order()
            ),
        )
    } else {
        VerificationReport::fail(&name, &id, TheoremId::RemarkNonsolvable, witnesses)
    }
}

/// Run the counterexample when the corpus group matches `A_p × A_p`.
pub fn verify_remark_nonsolvable(a: &GroupArtifacts, index_bound: u128) -> VerificationReport {
    let (name, id) = (a.name.as_str(), a.id().to_string());
    let degree = a.handle.degree();
    let p = degree / 2;
    if degree % 2 != 0 || !is_prime(p) || p < 7 {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkNonsolvable,
            "hypothesis not met: degree is not 2p for a prime p ≥ 7",
        );
    }
    // (p!/2)², with overflow meaning the group cannot match.
    let expected = (1..=p as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .map(|f| f / 2)
        .and_then(|h| h.checked_mul(h));
    if expected != Some(a.handle.order()) {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkNonsolvable,
            "hypothesis not met: group is not A_p × A_p for a prime p ≥ 7",
        );
    }
    // The corpus group must be the standard copy (same generated set).
    let same = match alt_group(p).and_then(|alt| direct_product(&alt, &alt)) {
        Ok(standard) => a
            .handle
            .generators()
            .iter()
            .all(|q| standard.contains(q).unwrap_or(false)),
        Err(_) => false,
    };
    if !same {
        return VerificationReport::skipped(
            name,
            &id,
            TheoremId::RemarkNonsolvable,
            "hypothesis not met: group is not the standard A_p × A_p on 2p points",
        );
    }
    let mut report = build_nonsolvable_counterexample(p, index_bound);
    report.group_name = name.to_string();
    report.group_id = id;
    report
}
