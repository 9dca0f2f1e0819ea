//! Oracle-backed checks: group orders and memberships computed by the
//! stabilizer chain are compared against independent brute-force paths
//! (naive product closure, inversion-count parity, factorial formulas).

use permgroup_core::{
    closure, derived_series, derived_subgroup, direct_product, intersection, is_maximal_in,
    is_solvable, normal_core, right_transversal, GroupHandle, Permutation, SubgroupRef,
};

fn perm(s: &str, degree: usize) -> Permutation {
    s.parse::<Permutation>().unwrap().extended(degree).unwrap()
}

fn sym(n: usize) -> GroupHandle {
    let cycle: Vec<usize> = (1..=n).collect();
    GroupHandle::build(vec![
        Permutation::from_cycles(n, &[vec![1, 2]]).unwrap(),
        Permutation::from_cycles(n, &[cycle]).unwrap(),
    ])
    .unwrap()
}

fn alt(n: usize) -> GroupHandle {
    let three = Permutation::from_cycles(n, &[vec![1, 2, 3]]).unwrap();
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap()
    } else {
        Permutation::from_cycles(n, &[(2..=n).collect()]).unwrap()
    };
    GroupHandle::build(vec![three, long]).unwrap()
}

/// Naive product closure over permutations: the independent order oracle.
fn brute_force_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut elems = vec![Permutation::identity(degree)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let p = a.product(g);
                if !elems.contains(&p) && !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        elems.extend(next.iter().cloned());
        frontier = next;
    }
    elems
}

/// Parity by inversion counting, independent of the cycle-structure path.
fn even_by_inversions(p: &Permutation) -> bool {
    let im = p.images();
    let mut inversions = 0usize;
    for i in 0..im.len() {
        for j in i + 1..im.len() {
            if im[i] > im[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

#[test]
fn order_matches_brute_force_closure() {
    let cases: Vec<(usize, Vec<Permutation>)> = vec![
        (4, vec![perm("(1,2)", 4), perm("(1,2,3,4)", 4)]),
        (4, vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]),
        (5, vec![perm("(1,2,3,4,5)", 5), perm("(1,2)", 5)]),
        (6, vec![perm("(1,2,3,4,5,6)", 6), perm("(2,6)(3,5)", 6)]),
        (8, vec![perm("(1,2,3,4)(5,6,7,8)", 8), perm("(1,5,3,7)(2,8,4,6)", 8)]),
    ];
    for (degree, gens) in cases {
        let brute = brute_force_elements(degree, &gens);
        let g = GroupHandle::build(gens).unwrap();
        assert_eq!(g.order(), brute.len() as u128);
        // Membership agrees with the enumerated element list.
        for e in &brute {
            assert!(g.contains(e).unwrap());
        }
    }
}

#[test]
fn s4_from_paradigm_generators_has_order_24() {
    let brute = brute_force_elements(4, &[perm("(1,2)", 4), perm("(1,2,3,4)", 4)]);
    assert_eq!(brute.len(), 24);
    assert_eq!(sym(4).order(), 24);
}

#[test]
fn membership_agrees_with_parity_oracle() {
    let s4 = sym(4);
    let a4 = alt(4);
    assert!(s4.contains(&perm("(1,2)", 4)).unwrap());
    assert!(!a4.contains(&perm("(1,2)", 4)).unwrap());
    assert!(a4.contains(&Permutation::identity(4)).unwrap());
    // Every element of S4 lies in A4 exactly when the inversion count is even.
    for e in brute_force_elements(4, &[perm("(1,2)", 4), perm("(1,2,3,4)", 4)]) {
        assert_eq!(a4.contains(&e).unwrap(), even_by_inversions(&e));
    }
}

#[test]
fn a7_times_a7_order_by_formula() {
    let factorial7: u128 = (1..=7u128).product();
    let expected = (factorial7 / 2) * (factorial7 / 2);
    assert_eq!(expected, 6_350_400);
    let g = direct_product(&alt(7), &alt(7)).unwrap();
    assert_eq!(g.order(), expected);
    assert_eq!(g.degree(), 14);
}

#[test]
fn closure_matches_brute_force() {
    let s4 = sym(4);
    let h = SubgroupRef::new(&s4, vec![perm("(1,2)", 4)]).unwrap();
    let joined = closure(&s4, &h, &perm("(3,4)", 4)).unwrap();
    let brute = brute_force_elements(4, &[perm("(1,2)", 4), perm("(3,4)", 4)]);
    assert_eq!(joined.order(), brute.len() as u128);

    let s3 = sym(3);
    let a3 = SubgroupRef::new(&s3, vec![perm("(1,2,3)", 3)]).unwrap();
    let full = closure(&s3, &a3, &perm("(1,2)", 3)).unwrap();
    assert_eq!(full.order(), 6);
}

#[test]
fn normal_core_matches_brute_force_conjugate_intersection() {
    let s4 = sym(4);
    // Point stabilizer S3 = <(1,2),(1,2,3)>: intersect all four conjugates.
    let stab_gens = vec![perm("(1,2)", 4), perm("(1,2,3)", 4)];
    let stab = SubgroupRef::new(&s4, stab_gens.clone()).unwrap();
    let core = normal_core(&s4, &stab).unwrap();
    let all = brute_force_elements(4, &[perm("(1,2)", 4), perm("(1,2,3,4)", 4)]);
    let stab_elems = brute_force_elements(4, &stab_gens);
    let mut meet: Vec<Permutation> = stab_elems.clone();
    for g in &all {
        let conj: Vec<Permutation> = stab_elems.iter().map(|h| h.conjugate_by(g)).collect();
        meet.retain(|x| conj.contains(x));
    }
    assert_eq!(core.order(), meet.len() as u128);
    assert_eq!(core.order(), 1);

    let a4 = SubgroupRef::new(&s4, vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
    assert_eq!(normal_core(&s4, &a4).unwrap().order(), 12);
}

#[test]
fn normal_core_output_is_normal_and_contained() {
    let s4 = sym(4);
    let d8 = SubgroupRef::new(&s4, vec![perm("(1,2,3,4)", 4), perm("(1,3)", 4)]).unwrap();
    assert_eq!(d8.order(), 8);
    let core = normal_core(&s4, &d8).unwrap();
    assert_eq!(core.order(), 4);
    for h in core.generators() {
        assert!(d8.contains(h).unwrap());
        for g in s4.generators() {
            assert!(core.contains(&h.conjugate_by(g)).unwrap());
        }
    }
}

#[test]
fn derived_series_with_commutator_oracle() {
    let s4 = sym(4);
    // Oracle: brute-force closure of all element commutators.
    let all = brute_force_elements(4, &[perm("(1,2)", 4), perm("(1,2,3,4)", 4)]);
    let mut comms = Vec::new();
    for a in &all {
        for b in &all {
            let c = a.commutator(b);
            if !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let derived_oracle = brute_force_elements(4, &comms);
    let derived = derived_subgroup(&s4).unwrap();
    assert_eq!(derived.order(), derived_oracle.len() as u128);

    let series = derived_series(&s4).unwrap();
    let orders: Vec<u128> = series.iter().map(|t| t.order()).collect();
    assert_eq!(orders, vec![24, 12, 4, 1]);
    assert!(is_solvable(&s4).unwrap());
    assert!(is_solvable(&GroupHandle::trivial(1)).unwrap());
}

#[test]
fn a7_times_a7_is_perfect() {
    let g = direct_product(&alt(7), &alt(7)).unwrap();
    let derived = derived_subgroup(&g).unwrap();
    assert_eq!(derived.order(), g.order());
    assert!(!is_solvable(&g).unwrap());
}

#[test]
fn direct_product_examples() {
    let s3c2 = direct_product(&sym(3), &GroupHandle::build(vec![perm("(1,2)", 2)]).unwrap()).unwrap();
    assert_eq!(s3c2.order(), 12);
    let with_trivial = direct_product(&sym(3), &GroupHandle::trivial(1)).unwrap();
    assert_eq!(with_trivial.order(), 6);
}

#[test]
fn maximality_examples_small() {
    let s4 = sym(4);
    let a4 = SubgroupRef::new(&s4, vec![perm("(1,2,3)", 4), perm("(2,3,4)", 4)]).unwrap();
    assert!(is_maximal_in(&s4, &a4, 100_000).unwrap());
    let c2 = SubgroupRef::new(&s4, vec![perm("(1,2)", 4)]).unwrap();
    assert!(!is_maximal_in(&s4, &c2, 100_000).unwrap());
}

#[test]
fn diagonal_of_a7_product_is_maximal() {
    let g = direct_product(&alt(7), &alt(7)).unwrap();
    let diag_gens: Vec<Permutation> = alt(7)
        .generators()
        .iter()
        .map(|p| {
            let mut images: Vec<u8> = p.images().to_vec();
            images.extend(p.images().iter().map(|&x| x + 7));
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let diag = SubgroupRef::new(&g, diag_gens).unwrap();
    assert_eq!(diag.order(), 2520);
    assert!(is_maximal_in(&g, &diag, 100_000).unwrap());
}

#[test]
fn transversal_size_equals_index() {
    let s5 = sym(5);
    let stab = SubgroupRef::new(&s5, vec![perm("(1,2)", 5), perm("(1,2,3,4)", 5)]).unwrap();
    assert_eq!(stab.order(), 24);
    let reps = right_transversal(&s5, &stab, 100_000).unwrap();
    assert_eq!(reps.len(), 5);
}

#[test]
fn intersection_backtrack_matches_brute_force() {
    let a = GroupHandle::build(vec![perm("(1,2,3,4)", 4), perm("(1,3)", 4)]).unwrap();
    let b = alt(4);
    let meet = intersection(&a, &b).unwrap();
    let ea = brute_force_elements(4, &[perm("(1,2,3,4)", 4), perm("(1,3)", 4)]);
    let eb = brute_force_elements(4, &[perm("(1,2,3)", 4), perm("(2,3,4)", 4)]);
    let both: Vec<&Permutation> = ea.iter().filter(|x| eb.contains(x)).collect();
    assert_eq!(meet.order(), both.len() as u128);
    for x in both {
        assert!(meet.contains(x).unwrap());
    }
}

#[test]
fn lagrange_for_subgroups() {
    let s4 = sym(4);
    for gens in [
        vec![perm("(1,2)", 4)],
        vec![perm("(1,2,3)", 4)],
        vec![perm("(1,2)(3,4)", 4)],
        vec![perm("(1,2,3,4)", 4), perm("(1,3)", 4)],
    ] {
        let h = SubgroupRef::new(&s4, gens).unwrap();
        assert_eq!(s4.order() % h.order(), 0);
    }
}
