//! Finitely presented groups: words, presentations, and the extractors and
//! simplifiers that work on them.

mod abelian;
mod alexander_briggs;
mod hom;
mod tietze;
mod wirtinger;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use abelian::{abelianize, exponent_matrix, smith_normal_form};
pub use alexander_briggs::{
    alexander_briggs, alexander_briggs_with, AbConvention, Flank, Level, CALIBRATED_CONVENTION,
};
pub use hom::{hom_count, hom_count_within};
pub use tietze::{tietze_simplify, DEFAULT_LENGTH_CAP};
pub use wirtinger::wirtinger;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(
        "relator {relator} uses generator index {generator} but there are only {count} generators"
    )]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        count: usize,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("exponent {0} is not ±1")]
    BadExponent(i32),
    #[error("cannot parse presentation: {0}")]
    Parse(String),
    #[error("the Alexander-Briggs presentation needs at least one crossing")]
    NoCrossings,
    #[error("base edge {edge} is not an edge label of the diagram (1..={count})")]
    BadBaseEdge { edge: usize, count: usize },
    #[error("redundant relator index {0} is out of range")]
    BadRedundant(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    /// `+1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Letter {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter {
            generator,
            exponent,
        }
    }

    pub fn pos(generator: usize) -> Letter {
        Letter::new(generator, 1)
    }

    pub fn neg(generator: usize) -> Letter {
        Letter::new(generator, -1)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator, -self.exponent)
    }
}

/// A word in the free group on the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn free_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Freely and cyclically reduced.
    pub fn cyclically_reduced(&self) -> Word {
        let w = self.free_reduced().0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        Word([&self.0[k..], &self.0[..k]].concat())
    }

    /// Least rotation of the smaller of the word and its inverse, after
    /// cyclic reduction. Two relators agree up to cyclic rotation and
    /// inversion iff their canonical forms are equal.
    pub fn canonical(&self) -> Word {
        let w = self.cyclically_reduced();
        let inv = w.inverse();
        (0..w.len().max(1))
            .flat_map(|k| [w.rotated(k), inv.rotated(k)])
            .min()
            .unwrap_or_default()
    }

    pub fn occurrences(&self, generator: usize) -> usize {
        self.0.iter().filter(|l| l.generator == generator).count()
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.exponent as i64)
            .sum()
    }

    /// Replaces every occurrence of `generator` by `image` (and its inverse).
    pub fn substitute(&self, generator: usize, image: &Word) -> Word {
        let inv = image.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.generator == generator {
                out.extend_from_slice(if l.exponent > 0 { &image.0 } else { &inv.0 });
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(f(l.generator), l.exponent))
                .collect(),
        )
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorRole {
    Arc(usize),
    Meridian,
    Longitude,
    Pillar(usize),
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub role: GeneratorRole,
}

impl Generator {
    pub fn new(name: impl Into<String>, role: GeneratorRole) -> Generator {
        Generator {
            name: name.into(),
            role,
        }
    }
}

/// Generators and relators. Relators are stored freely and cyclically
/// reduced. `redundant` lists relators known to follow from the others
/// (a 2-handle that cancels against a 3-handle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    redundant: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(String, i32)>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub redundant: Vec<usize>,
}

impl GroupPresentation {
    pub fn new(
        generators: Vec<Generator>,
        relators: Vec<Word>,
    ) -> Result<GroupPresentation, PresentationError> {
        let count = generators.len();
        if let Some(dup) = generators.iter().map(|g| &g.name).duplicates().next() {
            return Err(PresentationError::DuplicateGenerator(dup.clone()));
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| l.generator >= count) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: i,
                    generator: l.generator,
                    count,
                });
            }
        }
        Ok(GroupPresentation {
            generators,
            relators: relators.iter().map(Word::cyclically_reduced).collect(),
            redundant: Vec::new(),
        })
    }

    pub fn with_redundant(mut self, mut redundant: Vec<usize>) -> Result<Self, PresentationError> {
        redundant.sort_unstable();
        redundant.dedup();
        if let Some(&bad) = redundant.iter().find(|&&i| i >= self.relators.len()) {
            return Err(PresentationError::BadRedundant(bad));
        }
        self.redundant = redundant;
        Ok(self)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn redundant(&self) -> &[usize] {
        &self.redundant
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The same group with relator `index` removed.
    pub fn without_relator(&self, index: usize) -> GroupPresentation {
        let mut relators = self.relators.clone();
        relators.remove(index);
        GroupPresentation {
            generators: self.generators.clone(),
            relators,
            redundant: Vec::new(),
        }
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generators.iter().map(|g| g.name.clone()).collect(),
            relators: self
                .relators
                .iter()
                .map(|r| {
                    r.letters()
                        .iter()
                        .map(|l| (self.generators[l.generator].name.clone(), l.exponent as i32))
                        .collect()
                })
                .collect(),
            redundant: self.redundant.clone(),
        }
    }

    pub fn from_json(json: &PresentationJson) -> Result<GroupPresentation, PresentationError> {
        let generators: Vec<Generator> = json
            .generators
            .iter()
            .map(|n| Generator::new(n.clone(), GeneratorRole::Free))
            .collect();
        let index: BTreeMap<&str, usize> = json
            .generators
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut relators = Vec::new();
        for r in &json.relators {
            let mut letters = Vec::new();
            for (name, e) in r {
                let g = *index
                    .get(name.as_str())
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
                if *e != 1 && *e != -1 {
                    return Err(PresentationError::BadExponent(*e));
                }
                letters.push(Letter::new(g, *e as i8));
            }
            relators.push(Word::new(letters));
        }
        GroupPresentation::new(generators, relators)?.with_redundant(json.redundant.clone())
    }

    /// Parses `⟨x, y : x y x y⁻¹ x⁻¹ y⁻¹⟩`-style text. Angle brackets are
    /// optional, `:` or `|` separates generators from relators, letters are
    /// separated by whitespace and inverses are written `x⁻¹` or `x^-1`.
    pub fn parse(text: &str) -> Result<GroupPresentation, PresentationError> {
        let body = text
            .trim()
            .trim_start_matches(['⟨', '<'])
            .trim_end_matches(['⟩', '>'])
            .trim();
        let (gens, rels) = body
            .split_once([':', '|'])
            .ok_or_else(|| PresentationError::Parse("missing `:` or `|`".into()))?;
        let generators: Vec<Generator> = gens
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Generator::new(s, GeneratorRole::Free))
            .collect();
        let names: Vec<&str> = generators.iter().map(|g| g.name.as_str()).collect();
        let mut relators = Vec::new();
        for rel in rels.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let mut letters = Vec::new();
            for tok in rel.split_whitespace() {
                let (name, exponent) = if let Some(n) = tok.strip_suffix("⁻¹") {
                    (n, -1)
                } else if let Some(n) = tok.strip_suffix("^-1") {
                    (n, -1)
                } else {
                    (tok, 1)
                };
                let g = names
                    .iter()
                    .position(|&n| n == name)
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))?;
                letters.push(Letter::new(g, exponent));
            }
            relators.push(Word::new(letters));
        }
        GroupPresentation::new(generators, relators)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|l| {
                let name = &self.generators[l.generator].name;
                if l.exponent < 0 {
                    format!("{name}⁻¹")
                } else {
                    name.clone()
                }
            })
            .join(" ")
    }

    fn canonical_relators_under(&self, map: &[usize]) -> Vec<Word> {
        let mut rels: Vec<Word> = self
            .relators
            .iter()
            .map(|r| r.map_generators(|g| map[g]).canonical())
            .collect();
        rels.sort();
        rels
    }

    /// A bijection `f` from this presentation's generators to `other`'s under
    /// which both relator lists agree as multisets, each relator taken up to
    /// cyclic rotation and inversion. `pinned` fixes pairs `(mine, theirs)`.
    pub fn relabeling_to(
        &self,
        other: &GroupPresentation,
        pinned: &[(usize, usize)],
    ) -> Option<Vec<usize>> {
        let n = self.generators.len();
        if n != other.generators.len() || self.relators.len() != other.relators.len() {
            return None;
        }
        let target = other.canonical_relators_under(&(0..n).collect::<Vec<_>>());
        (0..n).permutations(n).find(|f| {
            pinned.iter().all(|&(a, b)| f[a] == b) && self.canonical_relators_under(f) == target
        })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators.iter().map(|g| g.name.as_str()).join(", ");
        let rels = self.relators.iter().map(|r| self.render_word(r)).join(", ");
        write!(f, "⟨{gens} | {rels}⟩")
    }
}
