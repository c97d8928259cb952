use super::{Generator, GeneratorRole, GroupPresentation, Letter, Word};
use crate::diagram::{Diagram, Sign};

/// One generator `x_i` per arc and one relator per crossing.
///
/// With `a` the incoming under-arc, `c` the outgoing under-arc and `b` the
/// over-arc, a positive crossing gives `c⁻¹ b⁻¹ a b` and a negative crossing
/// gives `c⁻¹ b a b⁻¹`. The last relator is marked redundant: it follows
/// from the others.
pub fn wirtinger(d: &Diagram) -> GroupPresentation {
    let arcs = d.arcs();
    let generators = arcs
        .iter()
        .map(|a| Generator::new(format!("x{}", a.index + 1), GeneratorRole::Arc(a.index)))
        .collect();
    if d.is_unknot() {
        return GroupPresentation::new(generators, Vec::new()).expect("no relators");
    }
    let relators: Vec<Word> = d
        .crossing_arcs()
        .into_iter()
        .map(|x| {
            let (a, b, c) = (x.under_in, x.over, x.under_out);
            let (pre, post) = match x.sign {
                Sign::Positive => (Letter::neg(b), Letter::pos(b)),
                Sign::Negative => (Letter::pos(b), Letter::neg(b)),
            };
            Word::new(vec![Letter::neg(c), pre, Letter::pos(a), post])
        })
        .collect();
    let last = relators.len() - 1;
    GroupPresentation::new(generators, relators)
        .and_then(|p| p.with_redundant(vec![last]))
        .expect("arc indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_is_free_on_one_generator() {
        let p = wirtinger(&Diagram::unknot());
        assert_eq!(p.generators().len(), 1);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn trefoil_shape() {
        let d = Diagram::parse_pd("X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]").unwrap();
        let p = wirtinger(&d);
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.redundant(), &[2]);
        assert!(p.relators().iter().all(|r| r.len() == 4));
        for r in p.relators() {
            assert_eq!((0..3).map(|g| r.exponent_sum(g)).sum::<i64>(), 0);
        }
    }
}
