//! Quandle axioms and coloring counts for the built-in knots.

use knotforge::knots::builtins;
use knotforge::quandle::{check_axioms, count_colorings, list_colorings, FiniteQuandle};

fn print_table(name: &str, q: &FiniteQuandle) {
    println!("{name} (row ◁ column)");
    for row in q.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        println!("  {}", cells.join(" "));
    }
}

fn main() {
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    let qs4 = FiniteQuandle::tetrahedral();
    print_table("R3", &r3);
    print_table("QS4", &qs4);

    // Not a quandle: right multiplication by 0 is not a bijection.
    let broken = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
    println!(
        "axioms on a broken table: {:?}",
        check_axioms(&broken).unwrap().first_failure()
    );

    for knot in builtins() {
        let d = knot.diagram().unwrap();
        for (name, q) in [("R3", &r3), ("QS4", &qs4)] {
            let c = count_colorings(&d, q);
            println!(
                "{:<8} {name:<4} total {:>3}  nontrivial {:>3}",
                knot.name, c.total, c.nontrivial
            );
        }
    }

    let fig8 = builtins()[2].diagram().unwrap();
    println!("first QS4 colorings of figure8 (one color per arc):");
    for c in list_colorings(&fig8, &qs4, 5) {
        println!("  {:?}", c.assignment);
    }
}
