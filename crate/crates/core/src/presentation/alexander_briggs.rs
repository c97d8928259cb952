//! A presentation read off a 2-handle decomposition of the knot exterior:
//! a torus around the knot with a meridian `M`, a longitude `L`, one pillar
//! `P_c` per crossing joining the torus to itself, and one 2-handle per
//! complementary region plus one for the torus itself.

use super::{Generator, GeneratorRole, GroupPresentation, Letter, PresentationError, Word};
use crate::diagram::{Crossing, Diagram};

/// Position on a tube cross-section: the pillar feet sit at the top (where
/// the strand passes under) or the bottom (where it passes over).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Top,
    Bottom,
}

/// Side of the tube cross-section, relative to the knot's orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flank {
    Left,
    Right,
}

/// Orientation choices for the torus generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbConvention {
    /// Quadrant of the cross-section that the longitude runs through.
    pub longitude_level: Level,
    pub longitude_flank: Flank,
    /// Exponent of `M` when a boundary path crosses the longitude with the
    /// cross-section angle increasing.
    pub meridian_sign: i8,
    /// Exponent of `L` when a boundary path runs along the base edge in the
    /// knot's direction.
    pub longitude_sign: i8,
    /// Exponent of `P_c` when a boundary path climbs from the under-strand
    /// to the over-strand.
    pub pillar_sign: i8,
}

pub const CALIBRATED_CONVENTION: AbConvention = AbConvention {
    longitude_level: Level::Bottom,
    longitude_flank: Flank::Right,
    meridian_sign: 1,
    longitude_sign: 1,
    pillar_sign: 1,
};

/// Generators `P1..Pn, L, M`; relators `M L M⁻¹ L⁻¹` followed by one per
/// region in region order. The longitude letter is read where a region
/// boundary runs along `base_edge`. The commutator and one region relator
/// are marked redundant.
pub fn alexander_briggs(
    d: &Diagram,
    base_edge: usize,
) -> Result<GroupPresentation, PresentationError> {
    alexander_briggs_with(d, base_edge, CALIBRATED_CONVENTION)
}

/// Angle direction when moving from a pole to a flank: +1 if increasing.
/// Angles: right 0°, top 90°, left 180°, bottom 270°.
fn turn(level: Level, flank: Flank) -> i8 {
    match (level, flank) {
        (Level::Top, Flank::Left) | (Level::Bottom, Flank::Right) => 1,
        _ => -1,
    }
}

pub fn alexander_briggs_with(
    d: &Diagram,
    base_edge: usize,
    conv: AbConvention,
) -> Result<GroupPresentation, PresentationError> {
    if d.is_unknot() {
        return Err(PresentationError::NoCrossings);
    }
    if !(1..=d.edge_count()).contains(&base_edge) {
        return Err(PresentationError::BadBaseEdge {
            edge: base_edge,
            count: d.edge_count(),
        });
    }
    let n = d.crossing_count();
    let (l, m) = (n, n + 1);
    let pillar = |c: usize| c;
    let mut generators: Vec<Generator> = (0..n)
        .map(|c| Generator::new(format!("P{}", c + 1), GeneratorRole::Pillar(c)))
        .collect();
    generators.push(Generator::new("L", GeneratorRole::Longitude));
    generators.push(Generator::new("M", GeneratorRole::Meridian));
    let quadrant = (conv.longitude_level, conv.longitude_flank);
    let pole = |slot: usize| {
        if Crossing::is_over_slot(slot) {
            Level::Bottom
        } else {
            Level::Top
        }
    };
    let ends = d.edge_ends();
    let mut relators = vec![Word::new(vec![
        Letter::pos(m),
        Letter::pos(l),
        Letter::neg(m),
        Letter::neg(l),
    ])];
    for darts in d.trace_faces() {
        let mut letters = Vec::new();
        for dart in darts {
            let x = &d.crossings()[dart.crossing];
            let edge = x.slots()[dart.slot];
            let forward = !x.is_head_slot(dart.slot);
            let flank = if forward { Flank::Left } else { Flank::Right };
            let arrive = d.across(&ends, dart);
            let from = pole(dart.slot);
            let to = pole(arrive.slot);
            if (from, flank) == quadrant {
                letters.push(Letter::new(m, conv.meridian_sign * turn(from, flank)));
            }
            if edge == base_edge {
                let dir = if forward { 1 } else { -1 };
                letters.push(Letter::new(l, conv.longitude_sign * dir));
            }
            if (to, flank) == quadrant {
                letters.push(Letter::new(m, -conv.meridian_sign * turn(to, flank)));
            }
            // Turning the corner at the far crossing moves between strands.
            let climb = if Crossing::is_over_slot(arrive.slot) {
                -1
            } else {
                1
            };
            letters.push(Letter::new(
                pillar(arrive.crossing),
                conv.pillar_sign * climb,
            ));
        }
        relators.push(Word::new(letters));
    }
    // The region relator with the fewest torus letters is the one a
    // 3-handle cancels; ties go to the shortest, then the first.
    let region = (1..relators.len())
        .min_by_key(|&i| {
            let r = &relators[i];
            (r.occurrences(m) + r.occurrences(l), r.len(), i)
        })
        .expect("at least two regions");
    GroupPresentation::new(generators, relators)?.with_redundant(vec![0, region])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::presentation::{abelianize, hom_count, tietze_simplify, wirtinger};

    const TREFOIL: &str = "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]";

    #[test]
    fn trefoil_reproduces_the_six_relations() {
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        let p = alexander_briggs(&d, 3).unwrap();
        let expected = GroupPresentation::parse(
            "A, B, C, L, M : L⁻¹ M⁻¹ L M, L A M B M C M, C B A, A B M, B C M, L A M C",
        )
        .unwrap();
        assert_eq!(p.generators().len(), 5);
        assert_eq!(p.relators().len(), 6);
        assert!(p.relabeling_to(&expected, &[(3, 3), (4, 4)]).is_some());
    }

    #[test]
    fn simplifies_to_the_braid_relation() {
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        let s = tietze_simplify(&alexander_briggs(&d, 3).unwrap(), 64);
        let target = GroupPresentation::parse("A, M : A M A M⁻¹ A⁻¹ M⁻¹").unwrap();
        assert!(s.relabeling_to(&target, &[]).is_some(), "{s}");
        assert_eq!(s.generators()[1].role, GeneratorRole::Meridian);
    }

    #[test]
    fn agrees_with_wirtinger_on_every_base_edge() {
        let groups = [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ];
        for pd in [
            TREFOIL,
            "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]",
            "X[2,1,1,2]",
        ] {
            let d = Diagram::parse_pd(pd).unwrap();
            let w = wirtinger(&d);
            for base in 1..=d.edge_count() {
                let p = alexander_briggs(&d, base).unwrap();
                for g in &groups {
                    assert_eq!(hom_count(&p, g), hom_count(&w, g), "{pd} base {base}");
                }
                let ab = abelianize(&p);
                assert_eq!(ab.iter().filter(|&&x| x == 0).count(), 1);
                assert!(ab.iter().all(|&x| x <= 1));
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            alexander_briggs(&Diagram::unknot(), 1),
            Err(PresentationError::NoCrossings)
        );
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(
            alexander_briggs(&d, 7),
            Err(PresentationError::BadBaseEdge { edge: 7, count: 6 })
        );
    }
}
