//! Reidemeister moves on PD diagrams and seeded random walks through them.
//!
//! Sites refer to edges by label and to regions by their index in
//! [`Diagram::regions`]. A site is only meaningful for the diagram it was
//! found on; applying it elsewhere fails with [`MoveError::StaleSite`]
//! unless it happens to describe a valid move there too.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Crossing, Dart, Diagram, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
    ];

    pub fn crossing_delta(self) -> i32 {
        match self {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::R1Add => "R1_ADD",
            MoveKind::R1Remove => "R1_REMOVE",
            MoveKind::R2Add => "R2_ADD",
            MoveKind::R2Remove => "R2_REMOVE",
            MoveKind::R3 => "R3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveSite {
    /// A kink on `edge`, looping to the left of the edge.
    R1Add { edge: usize, sign: Sign },
    /// Undo the kink bounding the monogon `region`.
    R1Remove { region: usize },
    /// Push the boundary edge at corner `over` across the one at corner
    /// `under`, both corners indexing `region`'s darts.
    R2Add {
        region: usize,
        over: usize,
        under: usize,
    },
    /// Pull apart the bigon `region`.
    R2Remove { region: usize },
    /// Slide a strand across the crossing opposite the triangle `region`.
    R3 { region: usize },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Add { .. } => MoveKind::R1Add,
            MoveSite::R1Remove { .. } => MoveKind::R1Remove,
            MoveSite::R2Add { .. } => MoveKind::R2Add,
            MoveSite::R2Remove { .. } => MoveKind::R2Remove,
            MoveSite::R3 { .. } => MoveKind::R3,
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MoveSite::R1Add { edge, sign } => {
                let s = if sign == Sign::Positive { '+' } else { '-' };
                write!(f, "R1_ADD(edge {edge}, {s})")
            }
            MoveSite::R1Remove { region } => write!(f, "R1_REMOVE(region {region})"),
            MoveSite::R2Add {
                region,
                over,
                under,
            } => write!(f, "R2_ADD(region {region}, over {over}, under {under})"),
            MoveSite::R2Remove { region } => write!(f, "R2_REMOVE(region {region})"),
            MoveSite::R3 { region } => write!(f, "R3(region {region})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0} does not apply to this diagram")]
    StaleSite(MoveSite),
}

/// Every applicable site of one kind, in a deterministic order.
pub fn find_sites(d: &Diagram, kind: MoveKind) -> Vec<MoveSite> {
    let faces = faces(d);
    match kind {
        MoveKind::R1Add => (1..=d.edge_count())
            .flat_map(|edge| {
                [Sign::Positive, Sign::Negative].map(|sign| MoveSite::R1Add { edge, sign })
            })
            .collect(),
        MoveKind::R1Remove => (0..faces.len())
            .filter(|&r| faces[r].len() == 1)
            .map(|region| MoveSite::R1Remove { region })
            .collect(),
        MoveKind::R2Add => {
            let mut sites = Vec::new();
            for (region, darts) in faces.iter().enumerate() {
                for over in 0..darts.len() {
                    for under in 0..darts.len() {
                        if label(d, darts[over]) != label(d, darts[under]) {
                            sites.push(MoveSite::R2Add {
                                region,
                                over,
                                under,
                            });
                        }
                    }
                }
            }
            sites
        }
        MoveKind::R2Remove => (0..faces.len())
            .filter(|&r| is_removable_bigon(d, &faces[r]))
            .map(|region| MoveSite::R2Remove { region })
            .collect(),
        MoveKind::R3 => (0..faces.len())
            .filter(|&r| is_r3_triangle(d, &faces[r]))
            .map(|region| MoveSite::R3 { region })
            .collect(),
    }
}

pub fn find_all_sites(d: &Diagram) -> Vec<MoveSite> {
    MoveKind::ALL
        .iter()
        .flat_map(|&k| find_sites(d, k))
        .collect()
}

pub fn apply(d: &Diagram, site: &MoveSite) -> Result<Diagram, MoveError> {
    let stale = || MoveError::StaleSite(*site);
    let faces = faces(d);
    let face = |region: usize| faces.get(region).ok_or_else(stale);
    match *site {
        MoveSite::R1Add { edge, sign } => {
            if !(1..=d.edge_count()).contains(&edge) {
                return Err(stale());
            }
            Ok(r1_add(d, edge, sign))
        }
        MoveSite::R1Remove { region } => {
            let darts = face(region)?;
            if darts.len() != 1 {
                return Err(stale());
            }
            Ok(Net::of(d).contract(&[darts[0].crossing]).into_diagram())
        }
        MoveSite::R2Add {
            region,
            over,
            under,
        } => {
            let darts = face(region)?;
            let (Some(&o), Some(&u)) = (darts.get(over), darts.get(under)) else {
                return Err(stale());
            };
            if label(d, o) == label(d, u) {
                return Err(stale());
            }
            Ok(r2_add(d, o, u))
        }
        MoveSite::R2Remove { region } => {
            let darts = face(region)?;
            if !is_removable_bigon(d, darts) {
                return Err(stale());
            }
            Ok(Net::of(d)
                .contract(&[darts[0].crossing, darts[1].crossing])
                .into_diagram())
        }
        MoveSite::R3 { region } => {
            let darts = face(region)?;
            if !is_r3_triangle(d, darts) {
                return Err(stale());
            }
            Ok(r3(d, darts))
        }
    }
}

/// One step of a random walk: the move taken, if any, and the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStep {
    pub site: Option<MoveSite>,
    pub diagram: Diagram,
}

/// `steps + 1` diagrams starting with `d`. Each step picks uniformly among
/// all applicable sites, leaving out growth moves that would exceed
/// `max_crossings`. A diagram with no admissible site is repeated.
pub fn random_walk(d: &Diagram, steps: usize, seed: u64, max_crossings: usize) -> Vec<Diagram> {
    walk_steps(d, steps, seed, max_crossings)
        .into_iter()
        .map(|s| s.diagram)
        .collect()
}

/// Like [`random_walk`], recording the site used at each step. The first
/// entry is `d` itself with no site.
pub fn walk_steps(d: &Diagram, steps: usize, seed: u64, max_crossings: usize) -> Vec<WalkStep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut walk = Vec::with_capacity(steps + 1);
    let mut current = d.clone();
    walk.push(WalkStep {
        site: None,
        diagram: current.clone(),
    });
    for _ in 0..steps {
        let n = current.crossing_count() as i32;
        let sites: Vec<MoveSite> = find_all_sites(&current)
            .into_iter()
            .filter(|s| n + s.kind().crossing_delta() <= max_crossings as i32)
            .collect();
        let site = sites.choose(&mut rng).copied();
        if let Some(site) = &site {
            current = apply(&current, site).expect("site was just found");
        }
        walk.push(WalkStep {
            site,
            diagram: current.clone(),
        });
    }
    walk
}

fn faces(d: &Diagram) -> Vec<Vec<Dart>> {
    if d.is_unknot() {
        Vec::new()
    } else {
        d.regions()
            .into_iter()
            .map(|r| r.darts().to_vec())
            .collect()
    }
}

fn label(d: &Diagram, dart: Dart) -> usize {
    d.crossings()[dart.crossing].slots()[dart.slot]
}

/// True when the edge leaving through `dart` is the over-strand at both ends.
fn over_at_both_ends(d: &Diagram, ends: &[(Dart, Dart)], dart: Dart) -> bool {
    let far = d.across(ends, dart);
    Crossing::is_over_slot(dart.slot) && Crossing::is_over_slot(far.slot)
}

fn distinct_corners(d: &Diagram, darts: &[Dart]) -> bool {
    let mut crossings: Vec<usize> = darts.iter().map(|x| x.crossing).collect();
    let mut labels: Vec<usize> = darts.iter().map(|&x| label(d, x)).collect();
    crossings.sort_unstable();
    crossings.dedup();
    labels.sort_unstable();
    labels.dedup();
    crossings.len() == darts.len() && labels.len() == darts.len()
}

fn is_removable_bigon(d: &Diagram, darts: &[Dart]) -> bool {
    if darts.len() != 2 || !distinct_corners(d, darts) {
        return false;
    }
    let ends = d.edge_ends();
    let signs: Vec<Sign> = darts
        .iter()
        .map(|x| d.crossings()[x.crossing].sign())
        .collect();
    darts.iter().any(|&x| over_at_both_ends(d, &ends, x)) && signs[0] != signs[1]
}

fn is_r3_triangle(d: &Diagram, darts: &[Dart]) -> bool {
    if darts.len() != 3 || !distinct_corners(d, darts) {
        return false;
    }
    let ends = d.edge_ends();
    darts.iter().any(|&x| over_at_both_ends(d, &ends, x))
}

/// Crossings with free-form edge ids, turned back into a diagram by
/// relabeling along the orientation.
struct Net {
    slots: Vec<[usize; 4]>,
    signs: Vec<Sign>,
    next_id: usize,
}

fn over_in_slot(sign: Sign) -> usize {
    match sign {
        Sign::Positive => 3,
        Sign::Negative => 1,
    }
}

impl Net {
    fn of(d: &Diagram) -> Net {
        Net {
            slots: d.crossings().iter().map(Crossing::slots).collect(),
            signs: d.crossings().iter().map(Crossing::sign).collect(),
            next_id: d.edge_count() + 1,
        }
    }

    fn fresh(&mut self) -> usize {
        self.next_id += 1;
        self.next_id - 1
    }

    fn push(&mut self, slots: [usize; 4], sign: Sign) {
        self.slots.push(slots);
        self.signs.push(sign);
    }

    /// Deletes crossings, joining the strands that passed through them.
    fn contract(&self, remove: &[usize]) -> Net {
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
            let p = *parent.get(&x).unwrap_or(&x);
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        for &c in remove {
            let s = self.slots[c];
            let o = over_in_slot(self.signs[c]);
            for (a, b) in [(s[0], s[2]), (s[o], s[(o + 2) % 4])] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent.insert(ra, rb);
                }
            }
        }
        let mut net = Net {
            slots: Vec::new(),
            signs: Vec::new(),
            next_id: self.next_id,
        };
        for c in (0..self.slots.len()).filter(|c| !remove.contains(c)) {
            let s = self.slots[c].map(|id| find(&mut parent, id));
            net.push(s, self.signs[c]);
        }
        net
    }

    fn into_diagram(self) -> Diagram {
        if self.slots.is_empty() {
            return Diagram::unknot();
        }
        let mut heads: HashMap<usize, (usize, usize)> = HashMap::new();
        for (c, s) in self.slots.iter().enumerate() {
            for slot in [0, over_in_slot(self.signs[c])] {
                heads.insert(s[slot], (c, slot));
            }
        }
        let start = *self.slots.iter().flatten().min().expect("nonempty");
        let mut labels: HashMap<usize, usize> = HashMap::new();
        let mut id = start;
        loop {
            labels.insert(id, labels.len() + 1);
            let (c, slot) = heads[&id];
            id = self.slots[c][(slot + 2) % 4];
            if id == start {
                break;
            }
        }
        let raw: Vec<[usize; 4]> = self.slots.iter().map(|s| s.map(|id| labels[&id])).collect();
        let d = Diagram::from_crossings(raw).expect("Reidemeister moves preserve validity");
        debug_assert!(d
            .crossings()
            .iter()
            .zip(&self.signs)
            .all(|(x, &s)| x.sign() == s));
        d
    }
}

fn r1_add(d: &Diagram, edge: usize, sign: Sign) -> Diagram {
    let mut net = Net::of(d);
    let loop_id = net.fresh();
    let exit = if d.is_unknot() {
        edge
    } else {
        let head = d.edge_ends()[edge - 1].1;
        let exit = net.fresh();
        net.slots[head.crossing][head.slot] = exit;
        exit
    };
    let slots = match sign {
        Sign::Positive => [edge, exit, loop_id, loop_id],
        Sign::Negative => [loop_id, edge, exit, loop_id],
    };
    net.push(slots, sign);
    net.into_diagram()
}

fn r2_add(d: &Diagram, over: Dart, under: Dart) -> Diagram {
    let ends = d.edge_ends();
    let mut net = Net::of(d);
    let side = |dart: Dart| {
        if d.crossings()[dart.crossing].is_head_slot(dart.slot) {
            -1
        } else {
            1
        }
    };
    // Splits an edge in three; pieces are returned in the order the region
    // boundary meets them.
    let mut split = |dart: Dart, s: i32| {
        let edge = label(d, dart);
        let middle = net.fresh();
        let last = net.fresh();
        let head = ends[edge - 1].1;
        net.slots[head.crossing][head.slot] = last;
        if s > 0 {
            [edge, middle, last]
        } else {
            [last, middle, edge]
        }
    };
    let (so, su) = (side(over), side(under));
    let [oa, om, ob] = split(over, so);
    let [ul, um, ur] = split(under, su);
    let (right, left) = if su > 0 {
        ([um, om, ur, oa], [ul, om, um, ob])
    } else {
        ([ur, oa, um, om], [um, ob, ul, om])
    };
    let sign = |v: i32| {
        if v > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    };
    net.push(right, sign(so * su));
    net.push(left, sign(-so * su));
    net.into_diagram()
}

fn r3(d: &Diagram, triangle: &[Dart]) -> Diagram {
    let ends = d.edge_ends();
    let old: Vec<[usize; 4]> = d.crossings().iter().map(Crossing::slots).collect();
    let mut net = Net::of(d);
    for &dart in triangle {
        let edge = label(d, dart);
        let (tail, head) = ends[edge - 1];
        let (p, ps) = (tail.crossing, tail.slot);
        let (q, qs) = (head.crossing, head.slot);
        let strand_in = old[p][(ps + 2) % 4];
        let strand_out = old[q][(qs + 2) % 4];
        // The strand now meets the far crossing first and this one second.
        net.slots[p][(ps + 2) % 4] = edge;
        net.slots[p][ps] = strand_out;
        net.slots[q][qs] = strand_in;
        net.slots[q][(qs + 2) % 4] = edge;
    }
    net.into_diagram()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{count_colorings, FiniteQuandle};

    const TREFOIL: &str = "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]";
    const FIGURE8: &str = "X[4,2,5,1];X[8,6,1,5];X[6,3,7,4];X[2,7,3,8]";

    #[test]
    fn unknot_kinks() {
        let u = Diagram::unknot();
        let sites = find_sites(&u, MoveKind::R1Add);
        assert_eq!(sites.len(), 2);
        let pos = apply(&u, &sites[0]).unwrap();
        assert_eq!(pos.to_string(), "X[1,1,2,2]");
        assert_eq!(pos.writhe(), 1);
        let neg = apply(&u, &sites[1]).unwrap();
        assert_eq!(neg.to_string(), "X[2,1,1,2]");
        for kinked in [pos, neg] {
            let removals = find_sites(&kinked, MoveKind::R1Remove);
            assert!(!removals.is_empty());
            for s in removals {
                assert!(apply(&kinked, &s).unwrap().is_unknot());
            }
        }
    }

    #[test]
    fn trefoil_has_no_reducing_bigon_or_triangle() {
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        assert!(find_sites(&d, MoveKind::R2Remove).is_empty());
        assert!(find_sites(&d, MoveKind::R3).is_empty());
        assert!(find_sites(&d, MoveKind::R1Remove).is_empty());
    }

    #[test]
    fn stale_sites_are_rejected() {
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        let site = MoveSite::R1Remove { region: 0 };
        assert_eq!(apply(&d, &site), Err(MoveError::StaleSite(site)));
        let site = MoveSite::R1Add {
            edge: 7,
            sign: Sign::Positive,
        };
        assert!(apply(&d, &site).is_err());
        let site = MoveSite::R3 { region: 99 };
        assert!(apply(&d, &site).is_err());
    }

    #[test]
    fn every_site_yields_a_valid_diagram() {
        let r3q = FiniteQuandle::dihedral(3).unwrap();
        for pd in [TREFOIL, FIGURE8] {
            let d = Diagram::parse_pd(pd).unwrap();
            let total = count_colorings(&d, &r3q).total;
            for site in find_all_sites(&d) {
                let e = apply(&d, &site).unwrap();
                let delta = e.crossing_count() as i32 - d.crossing_count() as i32;
                assert_eq!(delta, site.kind().crossing_delta(), "{site}");
                assert_eq!(count_colorings(&e, &r3q).total, total, "{site}");
            }
        }
    }

    #[test]
    fn walks_are_reproducible_and_capped() {
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        let a = random_walk(&d, 25, 11, 7);
        let b = random_walk(&d, 25, 11, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 26);
        assert!(a.iter().all(|x| x.crossing_count() <= 7));
        assert_eq!(random_walk(&d, 0, 1, 3), vec![d]);
    }
}
