//! Colourings and the quantities measured on them: bad edges, adjacent
//! colour classes and colour usage profiles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which colourings count as admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleMode {
    /// At most one colour class may contain an edge.
    OneClass,
    /// Pure bad-edge minimisation.
    Unrestricted,
}

impl RuleMode {
    pub const ALL: [RuleMode; 2] = [RuleMode::OneClass, RuleMode::Unrestricted];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleMode::OneClass => "one-class",
            RuleMode::Unrestricted => "unrestricted",
        }
    }
}

impl fmt::Display for RuleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-class" => Ok(RuleMode::OneClass),
            "unrestricted" => Ok(RuleMode::Unrestricted),
            other => Err(Error::param(format!(
                "unknown rule `{other}` (expected one-class or unrestricted)"
            ))),
        }
    }
}

/// Total assignment of colours `1..=k` to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColouring")]
pub struct Colouring {
    assignment: Vec<usize>,
    k: usize,
}

#[derive(Deserialize)]
struct RawColouring {
    assignment: Vec<usize>,
    k: usize,
}

impl TryFrom<RawColouring> for Colouring {
    type Error = Error;

    fn try_from(raw: RawColouring) -> Result<Self> {
        Colouring::new(raw.assignment, raw.k)
    }
}

impl Colouring {
    pub fn new(assignment: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidColouring("k must be at least 1".into()));
        }
        if let Some((v, &c)) = assignment
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > k)
        {
            return Err(Error::InvalidColouring(format!(
                "vertex {v} has colour {c}, outside 1..={k}"
            )));
        }
        Ok(Colouring { assignment, k })
    }

    /// From 0-based colour indices.
    pub(crate) fn from_zero_based(colours: &[u8], k: usize) -> Self {
        Colouring {
            assignment: colours.iter().map(|&c| c as usize + 1).collect(),
            k,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn colour_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn distinct_colours(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.assignment.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn is_surjective(&self) -> bool {
        self.distinct_colours() == self.k
    }

    /// Applies `perm` (1-based, `perm[c - 1]` is the new colour of `c`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Colouring> {
        if perm.len() != self.k {
            return Err(Error::InvalidColouring(format!(
                "permutation has {} entries, need {}",
                perm.len(),
                self.k
            )));
        }
        Colouring::new(
            self.assignment.iter().map(|&c| perm[c - 1]).collect(),
            self.k,
        )
    }

    /// Single line of space-separated colours.
    pub fn to_line(&self) -> String {
        self.assignment
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_line(line: &str, k: usize) -> Result<Colouring> {
        let assignment = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidColouring(format!("bad colour `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Colouring::new(assignment, k)
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::InvalidColouring(format!(
                "colouring has {} entries but the graph has {} vertices",
                self.assignment.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadEdges {
    pub count: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn bad_edges(g: &Graph, c: &Colouring) -> Result<BadEdges> {
    c.check_len(g)?;
    let edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| c.assignment[u] == c.assignment[v])
        .collect();
    Ok(BadEdges {
        count: edges.len(),
        edges,
    })
}

/// Number of colour classes whose induced subgraph has at least one edge.
pub fn adjacent_class_count(g: &Graph, c: &Colouring) -> Result<usize> {
    c.check_len(g)?;
    let mut adjacent = vec![false; c.k + 1];
    for &(u, v) in g.edges() {
        if c.assignment[u] == c.assignment[v] {
            adjacent[c.assignment[u]] = true;
        }
    }
    Ok(adjacent.iter().filter(|&&a| a).count())
}

/// Whether `c` is admissible under `rule`, optionally requiring every colour
/// to be used. Only a length mismatch is an error.
pub fn is_valid(g: &Graph, c: &Colouring, rule: RuleMode, surjective: bool) -> Result<bool> {
    c.check_len(g)?;
    if surjective && !c.is_surjective() {
        return Ok(false);
    }
    Ok(match rule {
        RuleMode::OneClass => adjacent_class_count(g, c)? <= 1,
        RuleMode::Unrestricted => true,
    })
}

/// Usage count of every colour `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ThetaProfile {
    counts: Vec<usize>,
}

impl ThetaProfile {
    /// `counts[i]` is the usage of colour `i + 1`.
    pub fn from_counts(counts: Vec<usize>) -> Self {
        ThetaProfile { counts }
    }

    pub fn get(&self, colour: usize) -> usize {
        colour
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `(colour, count)` pairs, 1-based colours.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().enumerate().map(|(i, &n)| (i + 1, n))
    }
}

pub fn theta(g: &Graph, c: &Colouring) -> Result<ThetaProfile> {
    c.check_len(g)?;
    let mut counts = vec![0; c.k];
    for &col in &c.assignment {
        counts[col - 1] += 1;
    }
    Ok(ThetaProfile { counts })
}

/// Bad edges a join creates between the two sides: `Σ θ_G(c) θ_H(c)`.
pub fn cross_bad_edges(g_side: &ThetaProfile, h_side: &ThetaProfile) -> usize {
    g_side
        .counts
        .iter()
        .zip(&h_side.counts)
        .map(|(a, b)| a * b)
        .sum()
}
