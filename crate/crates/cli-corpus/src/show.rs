//! Human-readable pretty printing for one group: lattice summary, chief
//! series, and the character table grid.

use character_table::character_table;
use permgroup_core::{is_solvable, GroupHandle};
use subgroup_lattice::{chief_series, enumerate_subgroups, is_supersolvable};
use verifiers::{is_wsm, Bounds};

pub fn print_group(name: &str, handle: &GroupHandle, bounds: Bounds, with_table: bool) {
    println!("group {name}");
    println!("  id       {}", handle.id());
    println!("  order    {}", handle.order());
    println!("  degree   {}", handle.degree());
    let gens: Vec<String> = handle.generators().iter().map(|g| g.to_string()).collect();
    println!("  gens     {}", if gens.is_empty() { "()".to_string() } else { gens.join(" ") });
    println!("  solvable {}", is_solvable(handle).expect("derived series computes"));

    match enumerate_subgroups(handle, bounds.lattice) {
        Ok(lattice) => {
            println!(
                "  lattice  {} subgroups in {} conjugacy classes, {} maximal",
                lattice.node_count(),
                lattice.class_count(),
                lattice.maximal_ids().len()
            );
            println!(
                "  frattini order {}, fitting order {}",
                lattice.node(lattice.frattini()).order,
                lattice.node(lattice.fitting()).order
            );
            let series = chief_series(&lattice);
            let desc: Vec<String> = series
                .factors
                .iter()
                .map(|f| {
                    format!(
                        "{}{}",
                        f.order,
                        if f.non_frattini { "" } else { " (Frattini)" }
                    )
                })
                .collect();
            println!("  chief factor orders (descending): {}", desc.join(", "));
            println!("  supersolvable {}", is_supersolvable(&series));
            println!("  wsm-group     {}", is_wsm(&lattice));
        }
        Err(e) => println!("  lattice  skipped: {e}"),
    }

    if with_table {
        match character_table(handle, bounds.character) {
            Ok(table) => {
                let k = table.classes().count();
                println!("  character table ({k} classes):");
                let reps: Vec<String> = (0..k)
                    .map(|c| table.classes().rep_perm(c).to_string())
                    .collect();
                println!("    class reps:  {}", reps.join("  "));
                let sizes: Vec<String> = table
                    .classes()
                    .sizes()
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                println!("    class sizes: {}", sizes.join("  "));
                for (i, row) in table.rows().iter().enumerate() {
                    let values: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    println!("    χ{} (deg {}): {}", i + 1, table.degrees()[i], values.join("  "));
                }
                let nv = table.nonvanishing_classes();
                println!("    non-vanishing classes: {nv:?}");
            }
            Err(e) => println!("  character table skipped: {e}"),
        }
    }
}
