//! The Alexander-Briggs presentation: meridian, longitude, one pillar per
//! crossing, one relator per region plus the boundary torus commutator.

use knotforge::group::FiniteGroup;
use knotforge::knots::builtin;
use knotforge::presentation::{
    abelianize, alexander_briggs, hom_count, tietze_simplify, wirtinger, DEFAULT_LENGTH_CAP,
};

fn main() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    for name in ["trefoil", "figure8"] {
        let d = builtin(name).unwrap().diagram().unwrap();
        println!("{name}");
        for base in [1, 3] {
            let p = alexander_briggs(&d, base).unwrap();
            println!("  base edge {base}: {p}");
            println!("    redundant relators {:?}", p.redundant());
            println!("    abelianization {:?}", abelianize(&p));
            println!(
                "    homs into S3: {} (Wirtinger: {})",
                hom_count(&p, &s3),
                hom_count(&wirtinger(&d), &s3)
            );
            println!("    simplified {}", tietze_simplify(&p, DEFAULT_LENGTH_CAP));
        }
    }
}
