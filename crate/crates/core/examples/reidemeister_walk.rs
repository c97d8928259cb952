//! A seeded random walk of Reidemeister moves, checking invariants at each step.
//!
//! cargo run --example reidemeister_walk -- 42

use knotforge::group::FiniteGroup;
use knotforge::knots::builtin;
use knotforge::presentation::{hom_count, wirtinger};
use knotforge::quandle::{count_colorings, FiniteQuandle};
use knotforge::reidemeister::{find_sites, walk_steps, MoveKind};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let d = builtin("trefoil").unwrap().diagram().unwrap();
    for kind in MoveKind::ALL {
        println!(
            "{kind:<10} {} sites on the trefoil",
            find_sites(&d, kind).len()
        );
    }
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    for (i, step) in walk_steps(&d, 15, seed, 9).iter().enumerate() {
        let e = &step.diagram;
        let site = step.site.map_or("start".to_string(), |s| s.to_string());
        println!(
            "{i:>2} {site:<38} crossings {:>2}  R3 {:>2}  S3 homs {:>2}",
            e.crossing_count(),
            count_colorings(e, &r3).total,
            hom_count(&wirtinger(e), &s3),
        );
    }
}
