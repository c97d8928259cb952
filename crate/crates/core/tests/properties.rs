use knotforge::diagram::Diagram;
use knotforge::group::FiniteGroup;
use knotforge::knots::builtins;
use knotforge::presentation::{
    abelianize, alexander_briggs, hom_count, tietze_simplify, wirtinger, DEFAULT_LENGTH_CAP,
};
use knotforge::quandle::{count_colorings, list_colorings, FiniteQuandle};
use knotforge::reidemeister::{apply, find_sites, random_walk, MoveKind};
use proptest::prelude::*;

/// A diagram reached from a built-in knot by a short seeded walk.
fn walked() -> impl Strategy<Value = Diagram> {
    (0usize..3, any::<u64>(), 0usize..20).prop_map(|(k, seed, steps)| {
        let d = builtins()[k].diagram().unwrap();
        random_walk(&d, steps, seed, 8).pop().unwrap()
    })
}

fn relabeled(d: &Diagram, shift: usize) -> Diagram {
    if d.is_unknot() {
        return d.clone();
    }
    let m = d.edge_count();
    let raw = d
        .crossings()
        .iter()
        .rev()
        .map(|x| x.slots().map(|l| (l - 1 + shift) % m + 1))
        .collect();
    Diagram::from_crossings(raw).unwrap()
}

/// Some site of `undo` kind takes `after` back to `before`, up to relabeling.
fn undoable(before: &Diagram, after: &Diagram, undo: MoveKind) -> bool {
    find_sites(after, undo)
        .iter()
        .any(|s| apply(after, s).unwrap().canonical() == before.canonical())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_ignore_labeling(d in walked(), shift in 0usize..40) {
        let e = relabeled(&d, shift);
        prop_assert_eq!(e.canonical(), d.canonical());
        for q in [FiniteQuandle::dihedral(3).unwrap(), FiniteQuandle::tetrahedral()] {
            prop_assert_eq!(count_colorings(&e, &q), count_colorings(&d, &q));
        }
    }

    #[test]
    fn listing_agrees_with_counting(d in walked()) {
        let q = FiniteQuandle::dihedral(5).unwrap();
        let listed = list_colorings(&d, &q, usize::MAX);
        prop_assert_eq!(listed.len() as u64, count_colorings(&d, &q).total);
        prop_assert!(listed.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn additions_can_be_undone(d in walked(), pick in any::<prop::sample::Index>()) {
        for (add, undo) in [(MoveKind::R1Add, MoveKind::R1Remove), (MoveKind::R2Add, MoveKind::R2Remove)] {
            let sites = find_sites(&d, add);
            if sites.is_empty() {
                continue;
            }
            let site = *pick.get(&sites);
            let e = apply(&d, &site).unwrap();
            prop_assert!(undoable(&d, &e, undo), "{} on {}", site, d);
        }
    }

    #[test]
    fn triangle_moves_are_involutive(d in walked()) {
        for site in find_sites(&d, MoveKind::R3) {
            let e = apply(&d, &site).unwrap();
            prop_assert_eq!(e.crossing_count(), d.crossing_count());
            prop_assert!(undoable(&d, &e, MoveKind::R3), "{} on {}", site, d);
        }
    }

    #[test]
    fn presentations_agree(d in walked()) {
        let w = wirtinger(&d);
        let s = tietze_simplify(&w, DEFAULT_LENGTH_CAP);
        for g in [FiniteGroup::symmetric(3).unwrap(), FiniteGroup::alternating(4).unwrap()] {
            let count = hom_count(&w, &g);
            prop_assert_eq!(hom_count(&s, &g), count);
            if !d.is_unknot() {
                let ab = alexander_briggs(&d, 1).unwrap();
                prop_assert_eq!(hom_count(&ab, &g), count);
                prop_assert_eq!(hom_count(&tietze_simplify(&ab, DEFAULT_LENGTH_CAP), &g), count);
            }
        }
        let f = abelianize(&w);
        prop_assert_eq!(f.last(), Some(&0));
        prop_assert!(f[..f.len() - 1].iter().all(|&x| x == 1));
    }
}

#[test]
fn unknot_walks_stay_monochromatic() {
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    for seed in 0..10 {
        for d in random_walk(&Diagram::unknot(), 50, seed, 8) {
            let c = count_colorings(&d, &r3);
            assert_eq!((c.total, c.nontrivial), (3, 0), "{d}");
        }
    }
}

#[test]
fn trefoil_walk_keeps_nine_colorings() {
    let d = builtins()[1].diagram().unwrap();
    let end = random_walk(&d, 20, 7, 12).pop().unwrap();
    assert_eq!(
        count_colorings(&end, &FiniteQuandle::dihedral(3).unwrap()).total,
        9
    );
}

#[test]
fn every_kind_appears_along_walks() {
    let d = builtins()[2].diagram().unwrap();
    let mut seen = std::collections::HashSet::new();
    for seed in 0..20 {
        for step in knotforge::reidemeister::walk_steps(&d, 30, seed, 10) {
            if let Some(site) = step.site {
                seen.insert(site.kind());
            }
        }
    }
    assert_eq!(seen.len(), MoveKind::ALL.len(), "{seen:?}");
}

#[test]
fn triangle_moves_keep_trefoil_colorings() {
    let r3 = FiniteQuandle::dihedral(3).unwrap();
    let d = builtins()[1].diagram().unwrap();
    let mut applied = 0;
    for seed in 0..30 {
        for e in random_walk(&d, 25, seed, 9) {
            for site in find_sites(&e, MoveKind::R3) {
                let f = apply(&e, &site).unwrap();
                assert_eq!(f.crossing_count(), e.crossing_count());
                assert_eq!(count_colorings(&f, &r3).total, 9, "{site} on {e}");
                applied += 1;
            }
        }
    }
    assert!(applied > 0);
}
