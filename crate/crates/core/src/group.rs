//! Small finite groups given by Cayley tables.
//!
//! Permutation groups compose left to right: `table[a][b]` is the
//! permutation "apply `a`, then `b`", so `i ↦ b(a(i))`. Under this rule the
//! conjugate `y⁻¹xy` of a cycle `x` is the cycle obtained by applying `y` to
//! each of its entries.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree {0} is outside the supported range {1}")]
    DegreeOutOfRange(usize, &'static str),
    #[error("table is not square or has entries outside 0..{0}")]
    BadTable(usize),
    #[error("group of order {0} exceeds the supported maximum of 120")]
    TooLarge(usize),
    #[error("group law fails: {0}")]
    NotAGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    /// One-line notation of each element, when the group is a permutation group.
    permutations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0
            || table
                .iter()
                .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(GroupError::BadTable(n));
        }
        if n > 120 {
            return Err(GroupError::TooLarge(n));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for (x, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&y| row[y] == identity && table[y][x] == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "({a}·{b})·{c} ≠ {a}·({b}·{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
            permutations: Vec::new(),
        })
    }

    pub fn from_json(json: &GroupJson) -> Result<FiniteGroup, GroupError> {
        if json.order != json.table.len() {
            return Err(GroupError::BadTable(json.order));
        }
        let g = FiniteGroup::from_table(json.table.clone())?;
        if g.identity != json.identity {
            return Err(GroupError::NotAGroup(format!(
                "declared identity {} but the table's identity is {}",
                json.identity, g.identity
            )));
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            order: self.order(),
            table: self.table.clone(),
            identity: self.identity,
        }
    }

    fn from_permutations(perms: Vec<Vec<usize>>) -> FiniteGroup {
        let index_of = |p: &[usize]| {
            perms
                .binary_search_by(|q| q.as_slice().cmp(p))
                .expect("closed under composition")
        };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab: Vec<usize> = a.iter().map(|&i| b[i]).collect();
                        index_of(&ab)
                    })
                    .collect()
            })
            .collect();
        let mut g = FiniteGroup::from_table(table).expect("permutations form a group");
        g.permutations = perms;
        g
    }

    /// `S_k` for `2 ≤ k ≤ 5`; elements in lexicographic one-line order.
    pub fn symmetric(k: usize) -> Result<FiniteGroup, GroupError> {
        if !(2..=5).contains(&k) {
            return Err(GroupError::DegreeOutOfRange(k, "2..=5"));
        }
        Ok(FiniteGroup::from_permutations(
            (0..k).permutations(k).collect(),
        ))
    }

    /// `A_k` for `3 ≤ k ≤ 5`; the even permutations in lexicographic order.
    pub fn alternating(k: usize) -> Result<FiniteGroup, GroupError> {
        if !(3..=5).contains(&k) {
            return Err(GroupError::DegreeOutOfRange(k, "3..=5"));
        }
        Ok(FiniteGroup::from_permutations(
            (0..k).permutations(k).filter(|p| is_even(p)).collect(),
        ))
    }

    /// The cyclic group `Z_n`, elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        if !(1..=120).contains(&n) {
            return Err(GroupError::DegreeOutOfRange(n, "1..=120"));
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(table)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).expect("order 1")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `y⁻¹ x y`.
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.identity {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.permutations
    }

    /// Element index of a permutation in one-line notation.
    pub fn find_permutation(&self, p: &[usize]) -> Option<usize> {
        self.permutations.iter().position(|q| q == p)
    }

    /// Element index of a product of disjoint cycles, e.g. `&[&[1, 2, 3]]`.
    pub fn find_cycles(&self, cycles: &[&[usize]]) -> Option<usize> {
        let degree = self.permutations.first()?.len();
        let mut p: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &from) in cycle.iter().enumerate() {
                let to = *cycle.get(i + 1).unwrap_or(&cycle[0]);
                if from >= degree || to >= degree {
                    return None;
                }
                p[from] = to;
            }
        }
        self.find_permutation(&p)
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(FiniteGroup::alternating(4).unwrap().order(), 12);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert!(FiniteGroup::symmetric(1).is_err());
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(FiniteGroup::alternating(2).is_err());
    }

    #[test]
    fn s2_is_xor() {
        let g = FiniteGroup::symmetric(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(g.mul(a, b), a ^ b);
            }
        }
    }

    #[test]
    fn s3_has_three_involutions() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let involutions = (0..6).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn a3_is_cyclic() {
        let g = FiniteGroup::alternating(3).unwrap();
        assert!((0..3).any(|x| g.element_order(x) == 3));
    }

    #[test]
    fn conjugation_by_identity_and_transpositions() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let e = g.identity();
        let transpositions: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
        for x in 0..6 {
            assert_eq!(g.conjugate(x, e), x);
        }
        for &x in &transpositions {
            for &y in &transpositions {
                assert!(transpositions.contains(&g.conjugate(x, y)));
            }
        }
    }

    #[test]
    fn conjugate_relabels_cycle_entries() {
        let g = FiniteGroup::symmetric(4).unwrap();
        let x = g.find_cycles(&[&[1, 2, 3]]).unwrap();
        let y = g.find_cycles(&[&[0, 3, 2]]).unwrap();
        // (y(1), y(2), y(3)) = (1, 0, 2) = (0, 2, 1)
        assert_eq!(g.conjugate(x, y), g.find_cycles(&[&[0, 2, 1]]).unwrap());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
        // Latin square with identity that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5),
            Err(GroupError::NotAGroup(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteGroup::alternating(4).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GroupJson = serde_json::from_str(&json).unwrap();
        let h = FiniteGroup::from_json(&back).unwrap();
        assert_eq!(h.table(), g.table());
    }
}
