//! Oriented knot diagrams in planar-diagram (PD) notation.
//!
//! A crossing is written `X[a,b,c,d]`: `a` is the incoming under-edge and
//! `b`, `c`, `d` follow counterclockwise, so `c` is the outgoing under-edge
//! and `b`/`d` carry the over-strand. Edge labels run `1..=2n` in order
//! along the orientation of the knot. The zero-crossing unknot, which has no
//! crossing to write down, is the token `U`.
//!
//! Crossing signs follow the right-hand convention: lift the under-strand to
//! the `y` axis and the over-strand to the `x` axis above it; the crossing is
//! positive when both strands point along their axes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed token `{token}`: {reason}")]
    MalformedToken { token: String, reason: String },
    #[error("edge {label}: {detail}")]
    EdgeDegree { label: usize, detail: String },
    #[error("edges do not form a single closed cycle (edge {label} is entered twice)")]
    MultiComponent { label: usize },
    #[error("rotation system is not planar: traced {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("crossing {crossing}: declared sign {declared} but the edge labels imply {computed}")]
    SignMismatch {
        crossing: usize,
        declared: i32,
        computed: i32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// Which side of an oriented edge a region lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    slots: [usize; 4],
    sign: Sign,
}

impl Crossing {
    pub fn slots(&self) -> [usize; 4] {
        self.slots
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn under_in(&self) -> usize {
        self.slots[0]
    }

    pub fn under_out(&self) -> usize {
        self.slots[2]
    }

    /// Slot through which the over-strand enters.
    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        (self.over_in_slot() + 2) % 4
    }

    pub fn over_in(&self) -> usize {
        self.slots[self.over_in_slot()]
    }

    pub fn over_out(&self) -> usize {
        self.slots[self.over_out_slot()]
    }

    /// True when the strand through `slot` is the over-strand.
    pub fn is_over_slot(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// True when the edge at `slot` enters this crossing.
    pub fn is_head_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    /// The slot a strand leaves through after entering at `slot`.
    pub fn exit_slot(slot: usize) -> usize {
        (slot + 2) % 4
    }
}

/// A position in the rotation system: leaving `crossing` along the edge at `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub slot: usize,
}

/// A complementary region of the diagram, traced counterclockwise
/// (region on the left of the direction of travel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    boundary: Vec<(usize, Side)>,
    darts: Vec<Dart>,
}

impl Region {
    /// `(edge, side)` corners in traversal order: the region lies on `side`
    /// of `edge` with respect to the knot's orientation.
    pub fn boundary(&self) -> &[(usize, Side)] {
        &self.boundary
    }

    /// Darts in traversal order; empty for the two regions of the
    /// zero-crossing unknot.
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

/// A maximal over-strand: edges from one undercrossing exit to the next
/// undercrossing entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub index: usize,
    pub edges: Vec<usize>,
}

/// Arc incidences at one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingArcs {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[usize; 4]>,
    pub signs: Vec<i32>,
}

fn succ(label: usize, m: usize) -> usize {
    label % m + 1
}

impl Diagram {
    pub fn unknot() -> Diagram {
        Diagram {
            crossings: Vec::new(),
            edge_count: 1,
        }
    }

    pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
        let text = text.trim();
        if text == "U" {
            return Ok(Diagram::unknot());
        }
        let mut raw = Vec::new();
        for token in text.split(';') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            raw.push(parse_token(token)?);
        }
        if raw.is_empty() {
            return Err(DiagramError::MalformedToken {
                token: text.to_string(),
                reason: "no crossings; write `U` for the zero-crossing unknot".into(),
            });
        }
        Diagram::from_crossings(raw)
    }

    /// Validates raw PD slots. An empty list is the zero-crossing unknot.
    pub fn from_crossings(raw: Vec<[usize; 4]>) -> Result<Diagram, DiagramError> {
        let n = raw.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        let m = 2 * n;
        let mut uses = vec![0usize; m + 1];
        for slots in &raw {
            for &label in slots {
                if label == 0 || label > m {
                    return Err(DiagramError::EdgeDegree {
                        label,
                        detail: format!("label outside 1..={m}"),
                    });
                }
                uses[label] += 1;
            }
        }
        if let Some((label, &count)) = uses.iter().enumerate().skip(1).find(|(_, &c)| c != 2) {
            return Err(DiagramError::EdgeDegree {
                label,
                detail: format!("used {count} times, expected 2"),
            });
        }

        let mut crossings = Vec::with_capacity(n);
        for slots in raw {
            let [a, b, c, d] = slots;
            if c != succ(a, m) {
                return Err(DiagramError::EdgeDegree {
                    label: a,
                    detail: format!(
                        "incoming under-edge is followed by {c}, expected {}",
                        succ(a, m)
                    ),
                });
            }
            let sign = if n == 1 {
                // Two edges: the over-pass is the one the under-pass is not.
                if (b, d) == (c, a) {
                    Sign::Negative
                } else if (b, d) == (a, c) {
                    Sign::Positive
                } else {
                    return Err(DiagramError::EdgeDegree {
                        label: b,
                        detail: "over-strand does not close the cycle".into(),
                    });
                }
            } else if d == succ(b, m) {
                Sign::Negative
            } else if b == succ(d, m) {
                Sign::Positive
            } else {
                return Err(DiagramError::EdgeDegree {
                    label: b,
                    detail: format!("over-strand labels {b} and {d} are not consecutive"),
                });
            };
            crossings.push(Crossing { slots, sign });
        }

        let mut entered = vec![false; m + 1];
        for x in &crossings {
            for label in [x.under_in(), x.over_in()] {
                if entered[label] {
                    return Err(DiagramError::MultiComponent { label });
                }
                entered[label] = true;
            }
        }

        let diagram = Diagram {
            crossings,
            edge_count: m,
        };
        let faces = diagram.trace_faces().len();
        if faces != n + 2 {
            return Err(DiagramError::NonPlanar {
                faces,
                expected: n + 2,
            });
        }
        Ok(diagram)
    }

    pub fn from_json(json: &DiagramJson) -> Result<Diagram, DiagramError> {
        let d = Diagram::from_crossings(json.crossings.clone())?;
        if json.signs.len() != d.crossings.len() {
            return Err(DiagramError::MalformedToken {
                token: "signs".into(),
                reason: format!(
                    "{} signs for {} crossings",
                    json.signs.len(),
                    d.crossings.len()
                ),
            });
        }
        for (i, (x, &declared)) in d.crossings.iter().zip(&json.signs).enumerate() {
            if x.sign.value() != declared {
                return Err(DiagramError::SignMismatch {
                    crossing: i,
                    declared,
                    computed: x.sign.value(),
                });
            }
        }
        Ok(d)
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            crossings: self.crossings.iter().map(|x| x.slots).collect(),
            signs: self.crossings.iter().map(|x| x.sign.value()).collect(),
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    /// `(tail, head)` darts of every edge, indexed by `label - 1`.
    pub(crate) fn edge_ends(&self) -> Vec<(Dart, Dart)> {
        let mut tails = vec![None; self.edge_count];
        let mut heads = vec![None; self.edge_count];
        for (i, x) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                let dart = Dart { crossing: i, slot };
                let label = x.slots[slot];
                if x.is_head_slot(slot) {
                    heads[label - 1] = Some(dart);
                } else {
                    tails[label - 1] = Some(dart);
                }
            }
        }
        tails
            .into_iter()
            .zip(heads)
            .map(|(t, h)| (t.expect("validated tail"), h.expect("validated head")))
            .collect()
    }

    /// The far end of the edge leaving through `dart`.
    pub(crate) fn across(&self, ends: &[(Dart, Dart)], dart: Dart) -> Dart {
        let label = self.crossings[dart.crossing].slots[dart.slot];
        let (tail, head) = ends[label - 1];
        if tail == dart {
            head
        } else {
            tail
        }
    }

    /// Face tracing over the rotation system; each face keeps its region on
    /// the left. Faces start at their smallest dart and are ordered by it.
    pub(crate) fn trace_faces(&self) -> Vec<Vec<Dart>> {
        let ends = self.edge_ends();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for crossing in 0..n {
            for slot in 0..4 {
                if seen[crossing][slot] {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = Dart { crossing, slot };
                while !seen[dart.crossing][dart.slot] {
                    seen[dart.crossing][dart.slot] = true;
                    face.push(dart);
                    let arrive = self.across(&ends, dart);
                    dart = Dart {
                        crossing: arrive.crossing,
                        slot: (arrive.slot + 3) % 4,
                    };
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn regions(&self) -> Vec<Region> {
        if self.is_unknot() {
            return vec![
                Region {
                    boundary: vec![(1, Side::Left)],
                    darts: Vec::new(),
                },
                Region {
                    boundary: vec![(1, Side::Right)],
                    darts: Vec::new(),
                },
            ];
        }
        self.trace_faces()
            .into_iter()
            .map(|darts| {
                let boundary = darts
                    .iter()
                    .map(|d| {
                        let x = &self.crossings[d.crossing];
                        let side = if x.is_head_slot(d.slot) {
                            Side::Right
                        } else {
                            Side::Left
                        };
                        (x.slots[d.slot], side)
                    })
                    .collect();
                Region { boundary, darts }
            })
            .collect()
    }

    pub fn arcs(&self) -> Vec<Arc> {
        if self.is_unknot() {
            return vec![Arc {
                index: 0,
                edges: vec![1],
            }];
        }
        let ends = self.edge_ends();
        let mut starts: Vec<usize> = self.crossings.iter().map(|x| x.under_out()).collect();
        starts.sort_unstable();
        starts
            .into_iter()
            .enumerate()
            .map(|(index, start)| {
                let mut edges = vec![start];
                let mut label = start;
                loop {
                    let head = ends[label - 1].1;
                    if head.slot == 0 {
                        break;
                    }
                    label = self.crossings[head.crossing].over_out();
                    edges.push(label);
                }
                Arc { index, edges }
            })
            .collect()
    }

    /// Arc index of every edge, indexed by `label - 1`.
    pub fn arc_of_edges(&self) -> Vec<usize> {
        let mut of = vec![0; self.edge_count];
        for arc in self.arcs() {
            for e in arc.edges {
                of[e - 1] = arc.index;
            }
        }
        of
    }

    pub fn crossing_arcs(&self) -> Vec<CrossingArcs> {
        let of = self.arc_of_edges();
        self.crossings
            .iter()
            .map(|x| CrossingArcs {
                over: of[x.over_in() - 1],
                under_in: of[x.under_in() - 1],
                under_out: of[x.under_out() - 1],
                sign: x.sign,
            })
            .collect()
    }

    /// Signed over/under sequence along the orientation, starting at the
    /// head of edge 1. Crossings are numbered by list position from 1.
    pub fn to_gauss(&self) -> String {
        if self.is_unknot() {
            return String::new();
        }
        let ends = self.edge_ends();
        let mut out = String::new();
        for (_, head) in ends {
            let x = &self.crossings[head.crossing];
            let level = if Crossing::is_over_slot(head.slot) {
                'O'
            } else {
                'U'
            };
            out.push(level);
            out.push_str(&(head.crossing + 1).to_string());
            out.push(x.sign.symbol());
        }
        out
    }

    /// Least relabeling over all cyclic shifts of edge labels with crossings
    /// sorted; two diagrams are equal up to relabeling iff their canonical
    /// forms are equal.
    pub fn canonical(&self) -> Diagram {
        if self.is_unknot() {
            return self.clone();
        }
        let m = self.edge_count;
        let best = (0..m)
            .map(|shift| {
                let mut raw: Vec<[usize; 4]> = self
                    .crossings
                    .iter()
                    .map(|x| x.slots.map(|l| (l - 1 + m - shift) % m + 1))
                    .collect();
                raw.sort_unstable();
                raw
            })
            .min()
            .expect("at least one shift");
        Diagram::from_crossings(best).expect("relabeling preserves validity")
    }

    pub fn render_pd(&self) -> String {
        self.to_string()
    }

    /// Count of each region size, for quick structural comparisons.
    pub fn region_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for r in self.regions() {
            *profile.entry(r.len()).or_insert(0) += 1;
        }
        profile
    }
}

fn parse_token(token: &str) -> Result<[usize; 4], DiagramError> {
    let malformed = |reason: &str| DiagramError::MalformedToken {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let inner = token
        .strip_prefix("X[")
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| malformed("expected X[a,b,c,d]"))?;
    let labels = inner
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| malformed("labels must be non-negative integers"))?;
    labels
        .try_into()
        .map_err(|_| malformed("a crossing has exactly four labels"))
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unknot() {
            return write!(f, "U");
        }
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let [a, b, c, d] = x.slots;
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Diagram::parse_pd(s)
    }
}
