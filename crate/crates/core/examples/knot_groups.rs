//! Wirtinger presentations, Tietze simplification, abelianization and
//! homomorphism counts.

use knotforge::group::FiniteGroup;
use knotforge::knots::builtins;
use knotforge::presentation::{
    abelianize, hom_count, tietze_simplify, wirtinger, DEFAULT_LENGTH_CAP,
};

fn main() {
    let groups = [
        ("S3", FiniteGroup::symmetric(3).unwrap()),
        ("S4", FiniteGroup::symmetric(4).unwrap()),
        ("A4", FiniteGroup::alternating(4).unwrap()),
        ("A5", FiniteGroup::alternating(5).unwrap()),
    ];
    for knot in builtins() {
        let d = knot.diagram().unwrap();
        let w = wirtinger(&d);
        let s = tietze_simplify(&w, DEFAULT_LENGTH_CAP);
        println!("{}", knot.name);
        println!("  wirtinger  {w}");
        println!("  simplified {s}");
        println!("  abelianization {:?}", abelianize(&w));
        for (name, g) in &groups {
            println!(
                "  homs into {name}: {:>4} (simplified: {})",
                hom_count(&w, g),
                hom_count(&s, g)
            );
        }
        if let Some(&r) = w.redundant().first() {
            println!(
                "  without relator {r}: {} homs into S3",
                hom_count(&w.without_relator(r), &groups[0].1)
            );
        }
    }
}
