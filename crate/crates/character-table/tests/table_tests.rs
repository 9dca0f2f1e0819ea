//! Character-table checks against independent oracles: class sizes by naive
//! conjugation orbits, the standard character of symmetric groups as
//! fix(g) − 1 on explicit permutations, and exact orthogonality.

use permgroup_core::{GroupHandle, Permutation};

use character_table::{
    character_table, conjugacy_classes, CyclotomicInteger,
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

fn cyclic(n: usize) -> GroupHandle {
    GroupHandle::build(vec![Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap()]).unwrap()
}

fn q8() -> GroupHandle {
    GroupHandle::build(vec![perm("(1,2,3,4)(5,6,7,8)", 8), perm("(1,5,3,7)(2,8,4,6)", 8)]).unwrap()
}

/// Naive conjugation-orbit class sizes, independent of the library path.
fn brute_force_class_sizes(g: &GroupHandle) -> Vec<usize> {
    let degree = g.degree();
    let mut elems = vec![Permutation::identity(degree)];
    let mut head = 0;
    while head < elems.len() {
        let a = elems[head].clone();
        head += 1;
        for gen in g.generators() {
            let b = a.product(gen);
            if !elems.contains(&b) {
                elems.push(b);
            }
        }
    }
    let mut sizes = Vec::new();
    let mut seen: Vec<Permutation> = Vec::new();
    for a in &elems {
        if seen.contains(a) {
            continue;
        }
        let mut orbit = vec![a.clone()];
        let mut oh = 0;
        while oh < orbit.len() {
            let x = orbit[oh].clone();
            oh += 1;
            for g in &elems {
                let y = x.conjugate_by(g);
                if !orbit.contains(&y) {
                    orbit.push(y);
                }
            }
        }
        sizes.push(orbit.len());
        seen.extend(orbit);
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn class_examples() {
    let s4 = sym(4);
    let c = conjugacy_classes(&s4, 2000).unwrap();
    assert_eq!(c.count(), 5);
    assert_eq!(c.sizes(), &[1, 6, 3, 8, 6]);
    let mut brute = brute_force_class_sizes(&s4);
    brute.sort_unstable();
    let mut ours = c.sizes().to_vec();
    ours.sort_unstable();
    assert_eq!(ours, brute);

    let s3 = sym(3);
    let c3 = conjugacy_classes(&s3, 2000).unwrap();
    assert_eq!(c3.sizes(), &[1, 3, 2]);

    // Abelian groups: all classes singletons.
    let c12 = conjugacy_classes(&cyclic(12), 2000).unwrap();
    assert_eq!(c12.count(), 12);
    assert!(c12.sizes().iter().all(|&s| s == 1));
}

#[test]
fn trivial_and_c2_tables() {
    let t = character_table(&GroupHandle::trivial(1), 2000).unwrap();
    assert_eq!(t.degrees(), &[1]);

    let c2 = character_table(&cyclic(2), 2000).unwrap();
    assert_eq!(c2.degrees(), &[1, 1]);
    let one = CyclotomicInteger::from_integer(1);
    let minus = CyclotomicInteger::from_integer(-1);
    // Rows sorted by degree then value: [1, -1] row sorts before [1, 1].
    let values: Vec<Vec<CyclotomicInteger>> = c2.rows().to_vec();
    assert!(values.contains(&vec![one.clone(), one.clone()]));
    assert!(values.contains(&vec![one, minus]));
}

#[test]
fn s3_table_matches_standard_character_oracle() {
    let s3 = sym(3);
    let t = character_table(&s3, 2000).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 2]);
    // Oracle: the standard character is fix(g) − 1 on the permutation
    // action; classes are (1, transpositions, 3-cycles).
    let fixes = |p: &Permutation| {
        (0..3u8).filter(|&q| p.apply(q) == q).count() as i64
    };
    let expected: Vec<i64> = (0..3)
        .map(|c| fixes(t.classes().rep_perm(c)) - 1)
        .collect();
    assert_eq!(expected, vec![2, 0, -1]);
    let row2: Vec<i64> = (0..3)
        .map(|c| t.value(2, c).as_integer().unwrap())
        .collect();
    assert_eq!(row2, expected);
}

#[test]
fn s4_degrees_and_standard_character() {
    let s4 = sym(4);
    let t = character_table(&s4, 2000).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), 24);
    // The standard character fix(g) − 1 must appear among the degree-3 rows.
    let fixes = |p: &Permutation| (0..4u8).filter(|&q| p.apply(q) == q).count() as i64;
    let standard: Vec<CyclotomicInteger> = (0..5)
        .map(|c| CyclotomicInteger::from_integer(fixes(t.classes().rep_perm(c)) - 1))
        .collect();
    assert!(t.rows().iter().any(|row| *row == standard));
}

#[test]
fn orthogonality_exact() {
    for g in [sym(3), sym(4), cyclic(12), q8(), cyclic(30)] {
        let t = character_table(&g, 2000).unwrap();
        t.check_row_orthogonality().unwrap();
        t.check_column_orthogonality().unwrap();
    }
}

#[test]
fn galois_consistency() {
    for g in [sym(4), cyclic(12), q8()] {
        let t = character_table(&g, 2000).unwrap();
        t.check_galois_consistency().unwrap();
    }
}

#[test]
fn degree_one_count_equals_abelianization_order() {
    for g in [sym(3), sym(4), q8(), cyclic(12)] {
        let t = character_table(&g, 2000).unwrap();
        let derived = permgroup_core::derived_subgroup(&g).unwrap();
        let expected = (g.order() / derived.order()) as usize;
        let linear = t.degrees().iter().filter(|&&d| d == 1).count();
        assert_eq!(linear, expected);
    }
}

#[test]
fn nonvanishing_examples() {
    // Abelian: every class is non-vanishing.
    let c6 = character_table(&cyclic(6), 2000).unwrap();
    assert_eq!(c6.nonvanishing_classes().len(), 6);

    // S3: identity and the 3-cycles; the union is A3.
    let s3 = sym(3);
    let t3 = character_table(&s3, 2000).unwrap();
    let nv = t3.nonvanishing_elements();
    assert_eq!(nv.len(), 3);
    let table = s3.element_table(2000).unwrap();
    for &e in &nv {
        assert!(table.perm(e).is_even());
    }

    // S4: identity plus the double transpositions; the union is V4.
    let s4 = sym(4);
    let t4 = character_table(&s4, 2000).unwrap();
    let nv4 = t4.nonvanishing_elements();
    assert_eq!(nv4.len(), 4);
    let table4 = s4.element_table(2000).unwrap();
    for &e in &nv4 {
        let p = table4.perm(e);
        assert!(p.is_identity() || p.cycles().len() == 2);
    }
}

#[test]
fn nonvanishing_closed_under_inversion_and_conjugation() {
    for g in [sym(3), sym(4), q8()] {
        let t = character_table(&g, 2000).unwrap();
        let classes = t.classes();
        let nv = t.nonvanishing_classes();
        for &c in &nv {
            assert!(nv.contains(&classes.inverse_class(c)));
        }
    }
}

#[test]
fn table_export_is_deterministic() {
    let a = character_table(&sym(4), 2000).unwrap().export();
    let b = character_table(&sym(4), 2000).unwrap().export();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn bound_is_enforced() {
    match character_table(&sym(4), 10) {
        Err(character_table::Error::OrderBoundExceeded { .. }) => {}
        other => panic!("expected bound error, got {:?}", other.map(|t| t.degrees().to_vec())),
    }
}
