//! Manual probe for large-conductor tables. Run with
//! `cargo test -p character-table --test perf_probe -- --ignored --nocapture`.

use character_table::character_table;
use permgroup_core::{GroupHandle, Permutation};

#[test]
#[ignore]
fn c199_table_and_orthogonality() {
    let g = GroupHandle::build(vec![
        Permutation::from_cycles(199, &[(1..=199).collect()]).unwrap(),
    ])
    .unwrap();
    let start = std::time::Instant::now();
    let t = character_table(&g, 2000).unwrap();
    println!("C199 table in {:?}", start.elapsed());
    let start = std::time::Instant::now();
    t.check_row_orthogonality().unwrap();
    t.check_column_orthogonality().unwrap();
    println!("orthogonality in {:?}", start.elapsed());
    assert_eq!(t.nonvanishing_classes().len(), 199);
}
