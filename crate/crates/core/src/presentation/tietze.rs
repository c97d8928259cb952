use std::collections::HashSet;

use super::{GroupPresentation, Word};

/// Substitutions that would grow any relator beyond this length are skipped.
pub const DEFAULT_LENGTH_CAP: usize = 64;

/// Greedy Tietze simplification.
///
/// Relators marked redundant are dropped first. Then, repeatedly: relators
/// are reduced, empty ones and duplicates (up to rotation and inversion)
/// removed, and a generator occurring exactly once in some relator is
/// solved for and eliminated. The shortest relator is tried first, and
/// within it the lowest-indexed eligible generator.
pub fn tietze_simplify(p: &GroupPresentation, cap: usize) -> GroupPresentation {
    let mut generators = p.generators().to_vec();
    let mut relators: Vec<Word> = p
        .relators()
        .iter()
        .enumerate()
        .filter(|(i, _)| !p.redundant().contains(i))
        .map(|(_, r)| r.clone())
        .collect();
    loop {
        relators = normalize(relators);
        let Some((r, gen, image)) = pick_elimination(&relators, generators.len(), cap) else {
            break;
        };
        relators = relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, w)| {
                w.substitute(gen, &image)
                    .cyclically_reduced()
                    .map_generators(|g| if g > gen { g - 1 } else { g })
            })
            .collect();
        generators.remove(gen);
    }
    GroupPresentation::new(generators, relators).expect("indices stay in range")
}

fn normalize(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    relators
        .into_iter()
        .map(|r| r.cyclically_reduced())
        .filter(|r| !r.is_empty() && seen.insert(r.canonical()))
        .collect()
}

/// `(relator, generator, image)` for the first admissible elimination.
fn pick_elimination(
    relators: &[Word],
    generators: usize,
    cap: usize,
) -> Option<(usize, usize, Word)> {
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| (relators[i].len(), i));
    for r in order {
        let rel = &relators[r];
        for gen in (0..generators).filter(|&g| rel.occurrences(g) == 1) {
            let k = rel
                .letters()
                .iter()
                .position(|l| l.generator == gen)
                .expect("occurs once");
            // Rotating gives g^ε W = 1, so g = W⁻¹ or g = W.
            let rest = rel.rotated(k + 1);
            let rest = Word::new(rest.letters()[..rel.len() - 1].to_vec());
            let image = if rel.letters()[k].exponent > 0 {
                rest.inverse()
            } else {
                rest
            };
            let fits = relators
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != r)
                .all(|(_, w)| w.substitute(gen, &image).cyclically_reduced().len() <= cap);
            if fits {
                return Some((r, gen, image));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Diagram;
    use crate::group::FiniteGroup;
    use crate::presentation::{abelianize, hom_count, wirtinger};

    #[test]
    fn trefoil_wirtinger_simplifies_to_one_relator() {
        let d = Diagram::parse_pd("X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]").unwrap();
        let p = wirtinger(&d);
        let s = tietze_simplify(&p, DEFAULT_LENGTH_CAP);
        assert_eq!(s.generators().len(), 2);
        assert_eq!(s.relators().len(), 1);
        for g in [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ] {
            assert_eq!(hom_count(&s, &g), hom_count(&p, &g));
        }
        assert_eq!(abelianize(&s), vec![1, 0]);
    }

    #[test]
    fn removes_duplicates_and_trivial_relators() {
        let p = GroupPresentation::parse("a, b : a b a⁻¹ b⁻¹, b a b⁻¹ a⁻¹, a a⁻¹").unwrap();
        let s = tietze_simplify(&p, DEFAULT_LENGTH_CAP);
        assert_eq!(s.relators().len(), 1);
        assert_eq!(s.generators().len(), 2);
    }

    #[test]
    fn cap_blocks_growth() {
        let p = GroupPresentation::parse("a, b : a b b b, a a a a a a a a").unwrap();
        let blocked = tietze_simplify(&p, 4);
        assert_eq!(blocked.generators().len(), 2);
        let free = tietze_simplify(&p, 64);
        assert_eq!(free.generators().len(), 1);
        assert_eq!(abelianize(&free), abelianize(&p)[1..].to_vec());
    }
}
