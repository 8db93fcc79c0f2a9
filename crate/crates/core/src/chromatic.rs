//! Exact chromatic number by saturation-ordered backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CHROMATIC_CAP: usize = 20;

/// Exact chromatic number with the default vertex cap.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_cap(g, DEFAULT_CHROMATIC_CAP)
}

pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::SizeLimit(format!(
            "chromatic number search is capped at {cap} vertices, graph has {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let upper = dsatur_greedy(g);
    let lower = greedy_clique(g).max(2);
    for k in lower..upper {
        if Backtrack::new(g, k).run() {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Number of colours used by plain DSATUR.
fn dsatur_greedy(g: &Graph) -> usize {
    let mut state = Backtrack::new(g, g.n());
    while let Some(v) = state.pick() {
        let c = (0..g.n()).find(|&c| state.counts[v][c] == 0).unwrap();
        state.assign(v, c);
    }
    state.used
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbours(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<Option<usize>>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
    uncoloured: usize,
}

impl<'a> Backtrack<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Backtrack {
            g,
            k,
            colour: vec![None; g.n()],
            counts: vec![vec![0; k.max(1)]; g.n()],
            saturation: vec![0; g.n()],
            used: 0,
            uncoloured: g.n(),
        }
    }

    /// Uncoloured vertex of largest saturation, then largest degree, then
    /// smallest index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colour[v].is_none())
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a), std::cmp::Reverse(a)).cmp(&(
                    self.saturation[b],
                    self.g.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = Some(c);
        self.uncoloured -= 1;
        for &w in self.g.neighbours(v) {
            if self.counts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.counts[w][c] += 1;
        }
        self.used = self.used.max(c + 1);
    }

    fn unassign(&mut self, v: usize, c: usize, prev_used: usize) {
        self.colour[v] = None;
        self.uncoloured += 1;
        for &w in self.g.neighbours(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
        self.used = prev_used;
    }

    fn run(&mut self) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.saturation[v] >= self.k {
            return false;
        }
        let prev_used = self.used;
        // colours above `used` are interchangeable, so try only one new colour
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.run() {
                return true;
            }
            self.unassign(v, c, prev_used);
        }
        false
    }
}
