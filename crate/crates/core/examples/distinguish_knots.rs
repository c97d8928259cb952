//! The unknot, trefoil and figure-8 are pairwise distinct: coloring counts
//! separate every pair. Prints the full invariant report.

use knotforge::knots::{builtins, distinguish, report, resolve_group, resolve_quandle};

fn main() {
    let quandles = vec![
        resolve_quandle("R3").unwrap(),
        resolve_quandle("QS4").unwrap(),
    ];
    let groups = vec![resolve_group("S3").unwrap(), resolve_group("A4").unwrap()];
    let knots = builtins();
    for (i, a) in knots.iter().enumerate() {
        for b in &knots[i + 1..] {
            let v = distinguish(&a.diagram().unwrap(), &b.diagram().unwrap(), &quandles);
            println!("{} vs {}: {v}", a.name, b.name);
        }
    }
    println!();
    print!("{}", report(&knots, &quandles, &groups, 2).unwrap());
}
