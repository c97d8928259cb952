use super::{GroupPresentation, Word};
use crate::group::FiniteGroup;

/// Number of homomorphisms from the presented group to `g`.
pub fn hom_count(p: &GroupPresentation, g: &FiniteGroup) -> u64 {
    let all: Vec<usize> = (0..g.order()).collect();
    let allowed = vec![all; p.generators().len()];
    Search::new(p, g, &allowed).count()
}

/// Homomorphisms sending every generator into `subset`.
pub fn hom_count_within(p: &GroupPresentation, g: &FiniteGroup, subset: &[usize]) -> u64 {
    let allowed = vec![subset.to_vec(); p.generators().len()];
    Search::new(p, g, &allowed).count()
}

struct Search<'a> {
    g: &'a FiniteGroup,
    relators: Vec<&'a Word>,
    allowed: Vec<Vec<bool>>,
    candidates: &'a [Vec<usize>],
    /// For each generator, the relators mentioning it.
    touches: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(p: &'a GroupPresentation, g: &'a FiniteGroup, candidates: &'a [Vec<usize>]) -> Self {
        let n = p.generators().len();
        let relators: Vec<&Word> = p.relators().iter().filter(|r| !r.is_empty()).collect();
        let mut touches = vec![Vec::new(); n];
        for (i, r) in relators.iter().enumerate() {
            for (gen, t) in touches.iter_mut().enumerate() {
                if r.occurrences(gen) > 0 {
                    t.push(i);
                }
            }
        }
        let allowed = candidates
            .iter()
            .map(|c| {
                let mut mask = vec![false; g.order()];
                for &x in c {
                    mask[x] = true;
                }
                mask
            })
            .collect();
        Search {
            g,
            relators,
            allowed,
            candidates,
            touches,
        }
    }

    fn count(&self) -> u64 {
        let mut images = vec![None; self.candidates.len()];
        self.solve(&mut images)
    }

    fn eval(&self, w: &[super::Letter], images: &[Option<usize>]) -> usize {
        w.iter().fold(self.g.identity(), |acc, l| {
            let x = images[l.generator].expect("assigned");
            self.g
                .mul(acc, if l.exponent > 0 { x } else { self.g.inv(x) })
        })
    }

    /// Assigns every generator forced by a relator with a single unknown
    /// letter. Returns false on a contradiction.
    fn propagate(&self, images: &mut [Option<usize>], trail: &mut Vec<usize>) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for r in &self.relators {
                let letters = r.letters();
                let mut unknown = None;
                let mut unknown_count = 0;
                for (k, l) in letters.iter().enumerate() {
                    if images[l.generator].is_none() {
                        unknown_count += 1;
                        unknown = Some(k);
                    }
                }
                match (unknown_count, unknown) {
                    (0, _) => {
                        if self.eval(letters, images) != self.g.identity() {
                            return false;
                        }
                    }
                    (1, Some(k)) => {
                        // g^ε W = 1 after rotating the unknown letter to the front.
                        let rest: Vec<_> = letters[k + 1..]
                            .iter()
                            .chain(&letters[..k])
                            .copied()
                            .collect();
                        let w = self.eval(&rest, images);
                        let l = letters[k];
                        let value = if l.exponent > 0 { self.g.inv(w) } else { w };
                        if !self.allowed[l.generator][value] {
                            return false;
                        }
                        images[l.generator] = Some(value);
                        trail.push(l.generator);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn solve(&self, images: &mut Vec<Option<usize>>) -> u64 {
        let mut trail = Vec::new();
        let total = if !self.propagate(images, &mut trail) {
            0
        } else {
            match self.branch_generator(images) {
                None => 1,
                Some(gen) => {
                    let mut total = 0;
                    for &x in &self.candidates[gen] {
                        images[gen] = Some(x);
                        total += self.solve(images);
                    }
                    images[gen] = None;
                    total
                }
            }
        };
        for gen in trail {
            images[gen] = None;
        }
        total
    }

    /// The unassigned generator appearing in the most relators.
    fn branch_generator(&self, images: &[Option<usize>]) -> Option<usize> {
        (0..images.len())
            .filter(|&gen| images[gen].is_none())
            .max_by_key(|&gen| (self.touches[gen].len(), std::cmp::Reverse(gen)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Letter;
    use proptest::prelude::*;

    /// Enumerates every assignment of generator images.
    fn brute_force(p: &GroupPresentation, g: &FiniteGroup) -> u64 {
        let n = p.generators().len();
        let mut images = vec![0usize; n];
        let mut count = 0;
        loop {
            let ok = p.relators().iter().all(|r| {
                r.letters().iter().fold(g.identity(), |acc, l| {
                    let x = images[l.generator];
                    g.mul(acc, if l.exponent > 0 { x } else { g.inv(x) })
                }) == g.identity()
            });
            count += ok as u64;
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                images[i] += 1;
                if images[i] < g.order() {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn braid_relation_into_s3() {
        let p = GroupPresentation::parse("x, y : x y x y⁻¹ x⁻¹ y⁻¹").unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(hom_count(&p, &s3), brute_force(&p, &s3));
        assert_eq!(hom_count(&p, &s3), 12);
    }

    #[test]
    fn free_and_trivial() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let free2 = GroupPresentation::parse("a, b :").unwrap();
        assert_eq!(hom_count(&free2, &s3), 36);
        let empty = GroupPresentation::parse(":").unwrap();
        assert_eq!(hom_count(&empty, &s3), 1);
        let z5 = GroupPresentation::parse("a : a a a a a").unwrap();
        assert_eq!(hom_count(&z5, &FiniteGroup::cyclic(10).unwrap()), 5);
    }

    #[test]
    fn restricted_images() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let transpositions: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) == 2).collect();
        let p = GroupPresentation::parse("x, y : x y x y⁻¹ x⁻¹ y⁻¹").unwrap();
        // Pairs of transpositions satisfying the braid relation: all 9.
        assert_eq!(hom_count_within(&p, &s3, &transpositions), 9);
    }

    fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
        let word = prop::collection::vec((0usize..3, prop::bool::ANY), 1..7);
        prop::collection::vec(word, 0..4).prop_map(|rels| {
            let gens = ["a", "b", "c"]
                .iter()
                .map(|n| super::super::Generator::new(*n, super::super::GeneratorRole::Free))
                .collect();
            let relators = rels
                .into_iter()
                .map(|w| {
                    w.into_iter()
                        .map(|(g, inv)| Letter::new(g, if inv { -1 } else { 1 }))
                        .collect()
                })
                .collect();
            GroupPresentation::new(gens, relators).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn backtracking_matches_brute_force(p in arb_presentation()) {
            let s3 = FiniteGroup::symmetric(3).unwrap();
            let a4 = FiniteGroup::alternating(4).unwrap();
            prop_assert_eq!(hom_count(&p, &s3), brute_force(&p, &s3));
            prop_assert_eq!(hom_count(&p, &a4), brute_force(&p, &a4));
        }
    }
}
