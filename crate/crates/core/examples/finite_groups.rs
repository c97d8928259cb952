//! Permutation groups, conjugation quandles, and the bridge between quandle
//! colorings and homomorphisms of the knot group.

use knotforge::group::FiniteGroup;
use knotforge::knots::builtins;
use knotforge::presentation::{hom_count_within, wirtinger};
use knotforge::quandle::{count_colorings, tetrahedral_cycles, FiniteQuandle};

fn main() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let s4 = FiniteGroup::symmetric(4).unwrap();
    let a4 = FiniteGroup::alternating(4).unwrap();
    println!(
        "|S3| = {}, |S4| = {}, |A4| = {}",
        s3.order(),
        s4.order(),
        a4.order()
    );

    let x = s4.find_cycles(&[&[1, 2, 3]]).unwrap();
    let y = s4.find_cycles(&[&[0, 1]]).unwrap();
    let z = s4.conjugate(x, y);
    println!(
        "(0 1)⁻¹ (1 2 3) (0 1) = {:?} in one-line notation",
        s4.permutations()[z]
    );

    let transpositions: Vec<usize> = (0..s3.order())
        .filter(|&g| s3.element_order(g) == 2)
        .collect();
    let cycles = tetrahedral_cycles(&s4);
    let q3 = FiniteQuandle::conjugation(&s3, &transpositions).unwrap();
    let q4 = FiniteQuandle::conjugation(&s4, &cycles).unwrap();
    println!(
        "transpositions of S3 form a quandle isomorphic to R3: {}",
        q3.isomorphism_to(&FiniteQuandle::dihedral(3).unwrap())
            .is_some()
    );

    for knot in builtins() {
        let d = knot.diagram().unwrap();
        let w = wirtinger(&d);
        println!(
            "{:<8} S3/transpositions: colorings {:>2} homs {:>2}   S4/3-cycles: colorings {:>2} homs {:>2}",
            knot.name,
            count_colorings(&d, &q3).total,
            hom_count_within(&w, &s3, &transpositions),
            count_colorings(&d, &q4).total,
            hom_count_within(&w, &s4, &cycles),
        );
    }
}
