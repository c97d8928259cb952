//! Finite quandles and arc colorings of knot diagrams.
//!
//! A coloring assigns a quandle element to every arc so that at each crossing
//! with over-arc color `b`, the outgoing under-arc is `a ◁ b` when the
//! incoming under-arc is `a` and the crossing is positive, and `a ◁⁻¹ b` when
//! it is negative.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{CrossingArcs, Diagram, Sign};
use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("table is not square")]
    NotSquare,
    #[error("entry table[{row}][{col}] = {value} is outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table violates axiom {0}")]
    AxiomViolated(AxiomViolation),
    #[error("dihedral quandle needs n ≥ 2, got {0}")]
    DihedralOrder(usize),
    #[error("subset is not closed under conjugation: {x} conjugated by {y}")]
    NotClosed { x: usize, y: usize },
    #[error("subset is empty or repeats an element")]
    BadSubset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomViolation {
    /// `a ◁ a ≠ a`.
    Idempotence { a: usize },
    /// Column `b` is not a permutation: `a` has no unique preimage.
    RightInvertibility { a: usize, b: usize },
    /// `(a ◁ b) ◁ c ≠ (a ◁ c) ◁ (b ◁ c)`.
    SelfDistributivity { a: usize, b: usize, c: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AxiomViolation::Idempotence { a } => write!(f, "I at a={a}"),
            AxiomViolation::RightInvertibility { a, b } => write!(f, "II at a={a}, b={b}"),
            AxiomViolation::SelfDistributivity { a, b, c } => {
                write!(f, "III at a={a}, b={b}, c={c}")
            }
        }
    }
}

/// Per-axiom outcome of [`check_axioms`], each with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub idempotence: Option<AxiomViolation>,
    pub right_invertibility: Option<AxiomViolation>,
    pub self_distributivity: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<AxiomViolation> {
        self.idempotence
            .or(self.right_invertibility)
            .or(self.self_distributivity)
    }
}

pub fn check_axioms(table: &[Vec<usize>]) -> Result<AxiomReport, QuandleError> {
    let n = table.len();
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(QuandleError::NotSquare);
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(QuandleError::OutOfRange {
                row,
                col,
                value,
                order: n,
            });
        }
    }

    let idempotence = (0..n)
        .find(|&a| table[a][a] != a)
        .map(|a| AxiomViolation::Idempotence { a });

    let mut right_invertibility = None;
    'cols: for b in 0..n {
        let mut hits = vec![0usize; n];
        for row in table {
            hits[row[b]] += 1;
        }
        if let Some(a) = hits.iter().position(|&h| h != 1) {
            right_invertibility = Some(AxiomViolation::RightInvertibility { a, b });
            break 'cols;
        }
    }

    let self_distributivity = (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .find(|&((a, b), c)| table[table[a][b]][c] != table[table[a][c]][table[b][c]])
        .map(|((a, b), c)| AxiomViolation::SelfDistributivity { a, b, c });

    Ok(AxiomReport {
        idempotence,
        right_invertibility,
        self_distributivity,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
    inv_table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteQuandle, QuandleError> {
        if let Some(v) = check_axioms(&table)?.first_failure() {
            return Err(QuandleError::AxiomViolated(v));
        }
        let n = table.len();
        let mut inv_table = vec![vec![0; n]; n];
        for (c, row) in table.iter().enumerate() {
            for (b, &a) in row.iter().enumerate() {
                inv_table[a][b] = c;
            }
        }
        Ok(FiniteQuandle { table, inv_table })
    }

    pub fn from_json(json: &QuandleJson) -> Result<FiniteQuandle, QuandleError> {
        if json.table.len() != json.order {
            return Err(QuandleError::NotSquare);
        }
        FiniteQuandle::from_table(json.table.clone())
    }

    pub fn to_json(&self) -> QuandleJson {
        QuandleJson {
            order: self.order(),
            table: self.table.clone(),
        }
    }

    /// `R_n`: `a ◁ b = 2b − a (mod n)`.
    pub fn dihedral(n: usize) -> Result<FiniteQuandle, QuandleError> {
        if n < 2 {
            return Err(QuandleError::DihedralOrder(n));
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
            .collect();
        FiniteQuandle::from_table(table)
    }

    /// Quandle on `subset` (group element indices) with `x ◁ y = y⁻¹xy`;
    /// element `i` of the quandle is `subset[i]`.
    pub fn conjugation(g: &FiniteGroup, subset: &[usize]) -> Result<FiniteQuandle, QuandleError> {
        if subset.is_empty()
            || subset.iter().any(|&x| x >= g.order())
            || !subset.iter().all_unique()
        {
            return Err(QuandleError::BadSubset);
        }
        let mut table = vec![vec![0; subset.len()]; subset.len()];
        for (i, &x) in subset.iter().enumerate() {
            for (j, &y) in subset.iter().enumerate() {
                let z = g.conjugate(x, y);
                table[i][j] = subset
                    .iter()
                    .position(|&s| s == z)
                    .ok_or(QuandleError::NotClosed { x, y })?;
            }
        }
        FiniteQuandle::from_table(table)
    }

    /// `QS₄`: the oriented 3-cycles of `S₄`, each labeled by its fixed point.
    pub fn tetrahedral() -> FiniteQuandle {
        let s4 = FiniteGroup::symmetric(4).expect("S4");
        FiniteQuandle::conjugation(&s4, &tetrahedral_cycles(&s4)).expect("QS4 is a quandle")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inv_table(&self) -> &[Vec<usize>] {
        &self.inv_table
    }

    /// `a ◁ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The unique `c` with `c ◁ b = a`.
    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_table[a][b]
    }

    /// Color leaving a crossing along the under-strand.
    #[inline]
    pub fn act(&self, incoming: usize, over: usize, sign: Sign) -> usize {
        match sign {
            Sign::Positive => self.op(incoming, over),
            Sign::Negative => self.inv_op(incoming, over),
        }
    }

    /// Inverse of [`FiniteQuandle::act`]: the incoming color from the outgoing one.
    #[inline]
    pub fn act_back(&self, outgoing: usize, over: usize, sign: Sign) -> usize {
        match sign {
            Sign::Positive => self.inv_op(outgoing, over),
            Sign::Negative => self.op(outgoing, over),
        }
    }

    /// An isomorphism `self → other` by exhaustive search (order ≤ 6).
    pub fn isomorphism_to(&self, other: &FiniteQuandle) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() || n > 6 {
            return None;
        }
        (0..n).permutations(n).find(|f| {
            (0..n)
                .cartesian_product(0..n)
                .all(|(a, b)| f[self.op(a, b)] == other.op(f[a], f[b]))
        })
    }
}

/// Element indices in `S₄` of the 3-cycles fixing 0, 1, 2, 3 respectively:
/// (1,2,3), (0,3,2), (0,1,3), (0,2,1).
pub fn tetrahedral_cycles(s4: &FiniteGroup) -> Vec<usize> {
    let cycles: [&[usize]; 4] = [&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[0, 2, 1]];
    cycles
        .iter()
        .map(|c| s4.find_cycles(&[c]).expect("S4 element"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    /// Color of each arc, indexed by arc index.
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCount {
    pub total: u64,
    pub nontrivial: u64,
}

struct ColoringSearch<'a> {
    q: &'a FiniteQuandle,
    crossings: Vec<CrossingArcs>,
    arcs: usize,
}

impl ColoringSearch<'_> {
    /// Fills every color forced by a crossing with two known arcs; false on
    /// a contradiction.
    fn propagate(&self, colors: &mut [Option<usize>]) -> bool {
        loop {
            let mut changed = false;
            for x in &self.crossings {
                let Some(b) = colors[x.over] else { continue };
                match (colors[x.under_in], colors[x.under_out]) {
                    (Some(a), Some(c)) => {
                        if self.q.act(a, b, x.sign) != c {
                            return false;
                        }
                    }
                    (Some(a), None) => {
                        colors[x.under_out] = Some(self.q.act(a, b, x.sign));
                        changed = true;
                    }
                    (None, Some(c)) => {
                        colors[x.under_in] = Some(self.q.act_back(c, b, x.sign));
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Depth-first search branching on the lowest uncolored arc, so
    /// solutions arrive in lexicographic order. `visit` returns false to stop.
    fn search(
        &self,
        colors: &mut [Option<usize>],
        visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) -> bool {
        if !self.propagate(colors) {
            return true;
        }
        let Some(arc) = colors.iter().position(Option::is_none) else {
            return visit(colors);
        };
        for value in 0..self.q.order() {
            let mut next = colors.to_vec();
            next[arc] = Some(value);
            if !self.search(&mut next, visit) {
                return false;
            }
        }
        true
    }
}

fn coloring_search<'a>(d: &Diagram, q: &'a FiniteQuandle) -> ColoringSearch<'a> {
    ColoringSearch {
        q,
        crossings: d.crossing_arcs(),
        arcs: d.arcs().len(),
    }
}

pub fn count_colorings(d: &Diagram, q: &FiniteQuandle) -> ColoringCount {
    let search = coloring_search(d, q);
    let mut total = 0u64;
    let mut colors = vec![None; search.arcs];
    search.search(&mut colors, &mut |_| {
        total += 1;
        true
    });
    ColoringCount {
        total,
        nontrivial: total - q.order() as u64,
    }
}

/// Up to `limit` colorings in lexicographic order of the arc assignment.
pub fn list_colorings(d: &Diagram, q: &FiniteQuandle, limit: usize) -> Vec<Coloring> {
    let search = coloring_search(d, q);
    let mut found = Vec::new();
    if limit == 0 {
        return found;
    }
    let mut colors = vec![None; search.arcs];
    search.search(&mut colors, &mut |c| {
        found.push(Coloring {
            assignment: c.iter().map(|v| v.expect("complete")).collect(),
        });
        found.len() < limit
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    const QS4_TABLE: [[usize; 4]; 4] = [[0, 3, 1, 2], [2, 1, 3, 0], [3, 0, 2, 1], [1, 2, 0, 3]];

    fn brute_force_total(d: &Diagram, q: &FiniteQuandle) -> u64 {
        let crossings = d.crossing_arcs();
        let arcs = d.arcs().len();
        (0..arcs)
            .map(|_| 0..q.order())
            .multi_cartesian_product()
            .filter(|colors| {
                crossings.iter().all(|x| {
                    let (a, b, c) = (colors[x.under_in], colors[x.over], colors[x.under_out]);
                    match x.sign {
                        Sign::Positive => q.table()[a][b] == c,
                        Sign::Negative => q.table()[c][b] == a,
                    }
                })
            })
            .count() as u64
    }

    #[test]
    fn qs4_table_passes() {
        let table: Vec<Vec<usize>> = QS4_TABLE.iter().map(|r| r.to_vec()).collect();
        assert!(check_axioms(&table).unwrap().passes());
        assert_eq!(FiniteQuandle::tetrahedral().table(), table.as_slice());
    }

    #[test]
    fn idempotence_failure_witness() {
        let mut table: Vec<Vec<usize>> = QS4_TABLE.iter().map(|r| r.to_vec()).collect();
        table[0][0] = 1;
        let report = check_axioms(&table).unwrap();
        assert_eq!(
            report.idempotence,
            Some(AxiomViolation::Idempotence { a: 0 })
        );
        assert!(!report.passes());
        assert!(matches!(
            FiniteQuandle::from_table(table),
            Err(QuandleError::AxiomViolated(AxiomViolation::Idempotence {
                a: 0
            }))
        ));
    }

    #[test]
    fn out_of_range_entry() {
        let err = check_axioms(&[vec![0, 2], vec![1, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::OutOfRange { row: 0, col: 1, .. }
        ));
    }

    #[test]
    fn non_permutation_column() {
        let report = check_axioms(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(report.idempotence.is_none());
        assert!(report.right_invertibility.is_none());
        let report = check_axioms(&[vec![0, 1], vec![0, 1]]).unwrap();
        assert!(report.idempotence.is_none());
        assert_eq!(
            report.right_invertibility,
            Some(AxiomViolation::RightInvertibility { a: 0, b: 0 })
        );
    }

    #[test]
    fn dihedral_small() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        for a in 0..3 {
            assert_eq!(r3.op(a, a), a);
        }
        assert!(check_axioms(FiniteQuandle::dihedral(5).unwrap().table())
            .unwrap()
            .passes());
        assert!(matches!(
            FiniteQuandle::dihedral(1),
            Err(QuandleError::DihedralOrder(1))
        ));
    }

    #[test]
    fn conjugation_edge_cases() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let trivial = FiniteQuandle::conjugation(&s3, &[s3.identity()]).unwrap();
        assert_eq!(trivial.order(), 1);
        let transpositions: Vec<usize> = (0..6).filter(|&x| s3.element_order(x) == 2).collect();
        let t = FiniteQuandle::conjugation(&s3, &transpositions).unwrap();
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert!(t.isomorphism_to(&r3).is_some());
        // A single transposition is not closed under conjugation by a 3-cycle.
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let err = FiniteQuandle::conjugation(&s3, &[transpositions[0], three_cycle]).unwrap_err();
        assert!(matches!(err, QuandleError::NotClosed { .. }));
    }

    #[test]
    fn inverse_table_undoes_action() {
        let q = FiniteQuandle::tetrahedral();
        for a in 0..4 {
            for b in 0..4 {
                for sign in [Sign::Positive, Sign::Negative] {
                    assert_eq!(q.act_back(q.act(a, b, sign), b, sign), a);
                }
            }
        }
    }

    #[test]
    fn trefoil_and_figure8_counts() {
        let trefoil = Diagram::parse_pd("X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]").unwrap();
        let fig8 = Diagram::parse_pd("X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]").unwrap();
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let qs4 = FiniteQuandle::tetrahedral();
        assert_eq!(brute_force_total(&trefoil, &r3), 9);
        assert_eq!(brute_force_total(&fig8, &r3), 3);
        assert_eq!(brute_force_total(&fig8, &qs4), 16);
        assert_eq!(
            count_colorings(&trefoil, &r3),
            ColoringCount {
                total: 9,
                nontrivial: 6
            }
        );
        assert_eq!(count_colorings(&fig8, &r3).total, 3);
        assert_eq!(count_colorings(&fig8, &qs4).total, 16);
        assert_eq!(count_colorings(&Diagram::unknot(), &qs4).total, 4);
    }

    #[test]
    fn listing_is_lexicographic() {
        let trefoil = Diagram::parse_pd("X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]").unwrap();
        let fig8 = Diagram::parse_pd("X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]").unwrap();
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let three = list_colorings(&trefoil, &r3, 3);
        assert_eq!(three.len(), 3);
        assert_eq!(three[0].assignment, vec![0, 0, 0]);
        let all = list_colorings(&trefoil, &r3, 10);
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let fig = list_colorings(&fig8, &r3, 10);
        assert_eq!(fig.len(), 3);
        assert!(fig.iter().all(|c| c.assignment.iter().all_equal()));
        assert!(list_colorings(&trefoil, &r3, 0).is_empty());
    }
}
