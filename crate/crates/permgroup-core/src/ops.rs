use crate::chain::StabilizerChain;
use crate::error::Error;
use crate::group::{GroupHandle, SubgroupRef};
use crate::perm::{Permutation, DEGREE_CAP};

/// `⟨H, g⟩` as a subgroup of `parent`.
pub fn closure(parent: &GroupHandle, h: &SubgroupRef, g: &Permutation) -> Result<SubgroupRef, Error> {
    if g.degree() != parent.degree() {
        return Err(Error::DegreeMismatch {
            expected: parent.degree(),
            got: g.degree(),
        });
    }
    if !parent.contains(g)? {
        return Err(Error::NotSubgroup(format!("{g} lies outside the parent")));
    }
    let mut gens = h.generators().to_vec();
    gens.push(g.clone());
    SubgroupRef::new(parent, gens)
}

/// The join `⟨A, B⟩` of two subgroups of the same parent.
pub fn join(parent: &GroupHandle, a: &SubgroupRef, b: &SubgroupRef) -> Result<SubgroupRef, Error> {
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    SubgroupRef::new(parent, gens)
}

pub fn conjugate_subgroup(
    parent: &GroupHandle,
    h: &SubgroupRef,
    g: &Permutation,
) -> Result<SubgroupRef, Error> {
    let gens: Vec<Permutation> = h.generators().iter().map(|x| x.conjugate_by(g)).collect();
    SubgroupRef::new(parent, gens)
}

fn check_parent(g: &GroupHandle, h: &SubgroupRef) -> Result<(), Error> {
    if h.parent_id() != g.id() {
        return Err(Error::NotSubgroup(
            "subgroup reference belongs to a different parent".to_string(),
        ));
    }
    Ok(())
}

/// Right coset representatives of `h` in `g`, identity coset first, in BFS
/// order over the generators.
pub fn right_transversal(
    g: &GroupHandle,
    h: &SubgroupRef,
    index_bound: u128,
) -> Result<Vec<Permutation>, Error> {
    check_parent(g, h)?;
    let index = g.order() / h.order();
    if index > index_bound {
        return Err(Error::IndexBoundExceeded {
            index,
            bound: index_bound,
        });
    }
    let expected = index as usize;
    let mut reps: Vec<Permutation> = vec![Permutation::identity(g.degree())];
    let mut rep_invs: Vec<Permutation> = vec![Permutation::identity(g.degree())];
    let mut head = 0;
    while head < reps.len() && reps.len() < expected {
        let current = reps[head].clone();
        head += 1;
        for gen in g.generators() {
            let t = current.product(gen);
            let known = rep_invs
                .iter()
                .any(|rinv| h.group().chain().contains(&t.product(rinv)));
            if !known {
                rep_invs.push(t.inverse());
                reps.push(t);
                if reps.len() == expected {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(reps.len(), expected);
    Ok(reps)
}

/// Transversal-closure maximality test: `h` is maximal in `g` iff adjoining
/// any coset representative outside `h` generates all of `g`. Lattice-free,
/// so it works at A7×A7 scale.
pub fn is_maximal_in(g: &GroupHandle, h: &SubgroupRef, index_bound: u128) -> Result<bool, Error> {
    check_parent(g, h)?;
    if h.order() == g.order() {
        return Err(Error::NotProper);
    }
    let reps = right_transversal(g, h, index_bound)?;
    for rep in reps.iter().skip(1) {
        let joined = closure(g, h, rep)?;
        if joined.order() != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Intersection of two groups of the same degree, by backtrack search over
/// the stabilizer chain of the smaller group with feasibility pruning in the
/// other.
pub fn intersection(a: &GroupHandle, b: &GroupHandle) -> Result<GroupHandle, Error> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            got: b.degree(),
        });
    }
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let degree = small.degree();
    let base = small.chain().base();
    let big_chain = StabilizerChain::build_with_base_hint(degree, big.generators(), &base)?;

    let mut found: Vec<Permutation> = Vec::new();
    let mut found_chain = StabilizerChain::build(degree, &[])?;
    let mut partial_stack: Vec<(usize, Permutation, Vec<u8>)> =
        vec![(0, Permutation::identity(degree), Vec::new())];

    while let Some((level, partial, targets)) = partial_stack.pop() {
        if level == small.chain().levels().len() {
            if big_chain.contains(&partial) && !found_chain.contains(&partial) {
                found_chain.insert(partial.clone());
                found.push(partial);
            }
            continue;
        }
        let lvl = &small.chain().levels()[level];
        // Reverse push order keeps the DFS deterministic (orbit order).
        for &q in lvl.orbit().iter().rev() {
            let u = lvl.transversal_to(q).expect("orbit point has transversal");
            let target = partial.apply(q);
            let mut next_targets = targets.clone();
            next_targets.push(target);
            if !prefix_feasible(&big_chain, &base, &next_targets) {
                continue;
            }
            let next_partial = u.product(&partial);
            partial_stack.push((level + 1, next_partial, next_targets));
        }
    }
    GroupHandle::build_on(degree, found)
}

/// Does `big` contain an element mapping `base[j] -> targets[j]` for all j?
fn prefix_feasible(big: &StabilizerChain, base: &[u8], targets: &[u8]) -> bool {
    let mut t = targets.to_vec();
    for (j, _) in base.iter().enumerate().take(targets.len()) {
        if j >= big.levels().len() {
            // The chain ran out of aligned levels; remaining constraints are
            // checked by the full membership test at the leaf.
            return true;
        }
        let level = &big.levels()[j];
        debug_assert_eq!(level.base(), base[j]);
        let Some(v) = level.transversal_to(t[j]) else {
            return false;
        };
        let vinv = v.inverse();
        for item in t.iter_mut().skip(j + 1) {
            *item = vinv.apply(*item);
        }
    }
    true
}

/// The normal core `H_G`: the largest normal subgroup of `g` inside `h`,
/// computed by iterated conjugate-intersection until stable.
pub fn normal_core(g: &GroupHandle, h: &SubgroupRef) -> Result<SubgroupRef, Error> {
    check_parent(g, h)?;
    let mut core = h.group().clone();
    loop {
        let mut changed = false;
        for gen in g.generators() {
            let conj_gens: Vec<Permutation> =
                core.generators().iter().map(|x| x.conjugate_by(gen)).collect();
            let all_inside = conj_gens
                .iter()
                .all(|x| core.chain().contains(x));
            if all_inside {
                continue;
            }
            let conj = GroupHandle::build_on(core.degree(), conj_gens)?;
            core = intersection(&core, &conj)?;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    SubgroupRef::new(g, core.generators().to_vec())
}

/// Normal closure of the given elements in `g`.
pub fn normal_closure(g: &GroupHandle, seeds: &[Permutation]) -> Result<GroupHandle, Error> {
    let degree = g.degree();
    let mut chain = StabilizerChain::build(degree, &[])?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut queue: Vec<Permutation> = Vec::new();
    let accept = |p: Permutation,
                      chain: &mut StabilizerChain,
                      gens: &mut Vec<Permutation>,
                      queue: &mut Vec<Permutation>| {
        if !p.is_identity() && !chain.contains(&p) {
            chain.insert(p.clone());
            gens.push(p.clone());
            queue.push(p);
        }
    };
    for s in seeds {
        accept(s.clone(), &mut chain, &mut gens, &mut queue);
    }
    let mut head = 0;
    while head < queue.len() {
        let t = queue[head].clone();
        head += 1;
        for gen in g.generators() {
            accept(t.conjugate_by(gen), &mut chain, &mut gens, &mut queue);
        }
    }
    GroupHandle::build_on(degree, gens)
}

/// The derived subgroup `[G, G]`: normal closure of the generator
/// commutators.
pub fn derived_subgroup(g: &GroupHandle) -> Result<GroupHandle, Error> {
    let mut seeds = Vec::new();
    for a in g.generators() {
        for b in g.generators() {
            let c = a.commutator(b);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(g, &seeds)
}

/// The derived series `G ≥ G' ≥ G'' ≥ …`, stopping once it stabilizes.
/// The last term is trivial exactly when the group is solvable.
pub fn derived_series(g: &GroupHandle) -> Result<Vec<SubgroupRef>, Error> {
    let mut terms = vec![SubgroupRef::full(g)];
    loop {
        let current = terms.last().expect("series is nonempty").group().clone();
        if current.order() == 1 {
            break;
        }
        let next = derived_subgroup(&current)?;
        if next.order() == current.order() {
            break;
        }
        terms.push(SubgroupRef::new(g, next.generators().to_vec())?);
    }
    Ok(terms)
}

pub fn is_solvable(g: &GroupHandle) -> Result<bool, Error> {
    let series = derived_series(g)?;
    Ok(series.last().expect("series is nonempty").order() == 1)
}

/// Direct product acting on the disjoint union of the two domains.
pub fn direct_product(g1: &GroupHandle, g2: &GroupHandle) -> Result<GroupHandle, Error> {
    let d1 = g1.degree();
    let d2 = g2.degree();
    let degree = d1 + d2;
    if degree > DEGREE_CAP {
        return Err(Error::DegreeCapExceeded(degree, DEGREE_CAP));
    }
    let mut gens = Vec::new();
    for g in g1.generators() {
        let mut images: Vec<u8> = g.images().to_vec();
        images.extend(d1 as u8..degree as u8);
        gens.push(Permutation::from_images(images)?);
    }
    for g in g2.generators() {
        let mut images: Vec<u8> = (0..d1 as u8).collect();
        images.extend(g.images().iter().map(|&p| p + d1 as u8));
        gens.push(Permutation::from_images(images)?);
    }
    GroupHandle::build_on(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, degree: usize) -> Permutation {
        s.parse::<Permutation>().unwrap().extended(degree).unwrap()
    }

    fn s4() -> GroupHandle {
        GroupHandle::build(vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)]).unwrap()
    }

    #[test]
    fn closure_examples() {
        let g = s4();
        let h = SubgroupRef::new(&g, vec![perm("(1,2)", 4)]).unwrap();
        let joined = closure(&g, &h, &perm("(3,4)", 4)).unwrap();
        assert_eq!(joined.order(), 4);
        // Adjoining a member changes nothing.
        let same = closure(&g, &h, &perm("(1,2)", 4)).unwrap();
        assert_eq!(same.order(), h.order());
    }

    #[test]
    fn transversal_counts_cosets() {
        let g = s4();
        let h = SubgroupRef::new(&g, vec![perm("(1,2)", 4), perm("(1,2,3)", 4)]).unwrap();
        assert_eq!(h.order(), 6);
        let reps = right_transversal(&g, &h, 1000).unwrap();
        assert_eq!(reps.len(), 4);
    }

    #[test]
    fn index_bound_enforced() {
        let g = s4();
        let h = SubgroupRef::trivial(&g);
        let err = right_transversal(&g, &h, 10).unwrap_err();
        assert!(matches!(err, Error::IndexBoundExceeded { .. }));
    }

    #[test]
    fn maximality_in_s4() {
        let g = s4();
        let a4 = SubgroupRef::new(&g, vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
        assert!(is_maximal_in(&g, &a4, 1000).unwrap());
        let c2 = SubgroupRef::new(&g, vec![perm("(1,2)", 4)]).unwrap();
        assert!(!is_maximal_in(&g, &c2, 1000).unwrap());
    }

    #[test]
    fn intersection_of_point_stabilizers() {
        let g = s4();
        let s3a = GroupHandle::build(vec![perm("(1,2)", 4), perm("(1,2,3)", 4)]).unwrap();
        let s3b = GroupHandle::build(vec![perm("(2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
        let meet = intersection(&s3a, &s3b).unwrap();
        // Stabilizer of points 4 and 1: S2 on {2,3}.
        assert_eq!(meet.order(), 2);
    }

    #[test]
    fn core_examples() {
        let g = s4();
        let s3 = SubgroupRef::new(&g, vec![perm("(1,2)", 4), perm("(1,2,3)", 4)]).unwrap();
        assert_eq!(normal_core(&g, &s3).unwrap().order(), 1);
        let a4 = SubgroupRef::new(&g, vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
        assert_eq!(normal_core(&g, &a4).unwrap().order(), 12);
        let c2 = SubgroupRef::new(&g, vec![perm("(1,2)", 4)]).unwrap();
        assert_eq!(normal_core(&g, &c2).unwrap().order(), 1);
    }

    #[test]
    fn derived_series_of_s4() {
        let g = s4();
        let series = derived_series(&g).unwrap();
        let orders: Vec<u128> = series.iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_solvable(&g).unwrap());
    }

    #[test]
    fn products_multiply_orders() {
        let s3 = GroupHandle::build(vec![perm("(1,2)", 3), perm("(1,2,3)", 3)]).unwrap();
        let c2 = GroupHandle::build(vec![perm("(1,2)", 2)]).unwrap();
        let p = direct_product(&s3, &c2).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.degree(), 5);
        let with_trivial = direct_product(&s3, &GroupHandle::trivial(1)).unwrap();
        assert_eq!(with_trivial.order(), 6);
    }
}
