//! Exact computation of the minimum bad-edge count `b_k(G)`.
//!
//! [`enumerate_oracle`] walks all `k^n` labelled assignments and is the
//! reference everything else is checked against. [`solve_bk`] reaches the
//! same answer (value, count and witness) by branch and bound.
//!
//! Witnesses are always the lexicographically smallest optimal assignment
//! sequence. Counts are of labelled colourings: two colourings that differ
//! by a permutation of colour names are distinct.

mod bnb;
mod cover;
mod heuristic;
mod oracle;

use std::collections::BTreeSet;
use std::time::Duration;

use serde::Serialize;

use crate::chromatic::{chromatic_number_with_cap, DEFAULT_CHROMATIC_CAP};
use crate::coloring::{Colouring, RuleMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

use bnb::{Leaf, Limits, Problem, Sink};

pub use cover::bad_edge_vertex_cover;
pub use oracle::{enumerate_oracle, enumerate_oracle_with_cap, DEFAULT_ENUMERATION_CAP};

/// Largest colour budget the search supports (colours are stored as `u8`).
pub const MAX_K: usize = 254;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub min_bad: usize,
    /// Labelled optimal colourings; `None` when counting was not requested.
    pub optimal_count: Option<u128>,
    pub witness: Colouring,
    pub rule: RuleMode,
    pub surjective: bool,
    /// `false` only for heuristic results.
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum `k^n` the enumeration oracle accepts.
    pub enumeration_cap: u64,
    /// Maximum branch-and-bound nodes before giving up with a size-limit
    /// error.
    pub node_limit: u64,
    pub count: bool,
    pub workers: usize,
    /// Vertex cap for exact chromatic number computations.
    pub chromatic_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            node_limit: 500_000_000,
            count: false,
            workers: 1,
            chromatic_cap: DEFAULT_CHROMATIC_CAP,
        }
    }
}

impl SolverConfig {
    pub fn counting() -> Self {
        SolverConfig {
            count: true,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    fn limits(&self) -> Limits {
        Limits {
            node_limit: self.node_limit,
            workers: self.workers.max(1),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.enumeration_cap == 0 || self.node_limit == 0 || self.chromatic_cap == 0 {
            return Err(Error::param("solver caps must be positive"));
        }
        Ok(())
    }
}

pub(crate) fn check_instance(g: &Graph, k: usize, surjective: bool) -> Result<()> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if k > MAX_K {
        return Err(Error::SizeLimit(format!("k = {k} exceeds the supported maximum {MAX_K}")));
    }
    if surjective && k > g.n() {
        return Err(Error::Infeasible(format!(
            "cannot use all {k} colours on {} vertices",
            g.n()
        )));
    }
    Ok(())
}

fn optimum(g: &Graph, k: usize, rule: RuleMode, surjective: bool, cfg: &SolverConfig) -> Result<usize> {
    let seed = heuristic::greedy_local_search(g, k, rule, surjective);
    let upper = count_bad(g, &seed);
    let p = Problem::new(g, k, rule, surjective, Problem::degree_order(g));
    bnb::minimum(&p, upper, cfg.limits())
}

fn count_bad(g: &Graph, colours: &[u8]) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| colours[u] == colours[v])
        .count()
}

/// Exact `b_k(G)` by branch and bound.
pub fn solve_bk(
    g: &Graph,
    k: usize,
    rule: RuleMode,
    surjective: bool,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    cfg.validate()?;
    check_instance(g, k, surjective)?;
    let min_bad = optimum(g, k, rule, surjective, cfg)?;

    let (witness, optimal_count) = if cfg.count {
        let p = Problem::new(g, k, rule, surjective, Problem::degree_order(g));
        let sink: bnb::CountSink = bnb::collect_optima(&p, min_bad, cfg.limits())?;
        (sink.witness.expect("optimum is attained"), Some(sink.count))
    } else {
        // in index order the first canonical leaf is the lexicographic minimum
        let p = Problem::new(g, k, rule, surjective, Problem::index_order(g));
        let w = bnb::first_leaf(&p, min_bad, cfg.node_limit)?.expect("optimum is attained");
        (w, None)
    };

    Ok(SolveResult {
        min_bad,
        optimal_count,
        witness: Colouring::from_zero_based(&witness, k),
        rule,
        surjective,
        exact: true,
    })
}

/// Number of labelled admissible colourings attaining `b_k(G)`.
pub fn count_optimal(g: &Graph, k: usize, rule: RuleMode, surjective: bool) -> Result<u128> {
    let r = solve_bk(g, k, rule, surjective, &SolverConfig::counting())?;
    Ok(r.optimal_count.expect("counting requested"))
}

/// Non-exact result from greedy construction plus local search.
pub fn heuristic_solve(g: &Graph, k: usize, rule: RuleMode, surjective: bool) -> Result<SolveResult> {
    check_instance(g, k, surjective)?;
    let c = heuristic::greedy_local_search(g, k, rule, surjective);
    Ok(SolveResult {
        min_bad: count_bad(g, &c),
        optimal_count: None,
        witness: Colouring::from_zero_based(&c, k),
        rule,
        surjective,
        exact: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaStar {
    pub value: usize,
    /// 1-based colour of `witness` used `value` times.
    pub colour: usize,
    pub witness: Colouring,
}

#[derive(Default)]
struct ThetaSink {
    best: Option<(usize, Vec<u8>)>,
}

impl Sink for ThetaSink {
    fn leaf(&mut self, leaf: &Leaf<'_>) {
        let value = if leaf.used < leaf.k {
            0
        } else {
            let mut counts = vec![0usize; leaf.used];
            leaf.colours.iter().for_each(|&c| counts[c as usize] += 1);
            counts.into_iter().min().unwrap_or(0)
        };
        let form = bnb::first_occurrence_form(leaf.colours);
        let better = match &self.best {
            None => true,
            Some((v, w)) => (value, &form) < (*v, w),
        };
        if better {
            self.best = Some((value, form));
        }
    }

    fn merge(&mut self, other: Self) {
        if let Some((v, w)) = other.best {
            if self.best.as_ref().is_none_or(|(bv, bw)| (v, &w) < (*bv, bw)) {
                self.best = Some((v, w));
            }
        }
    }
}

/// Smallest colour usage over all optimal colourings of `h` and all colours.
pub fn theta_star(h: &Graph, k: usize, rule: RuleMode) -> Result<ThetaStar> {
    theta_star_with(h, k, rule, true, &SolverConfig::default())
}

/// As [`theta_star`]; with `surjective = false` unused colours count as
/// usage 0.
pub fn theta_star_with(
    h: &Graph,
    k: usize,
    rule: RuleMode,
    surjective: bool,
    cfg: &SolverConfig,
) -> Result<ThetaStar> {
    cfg.validate()?;
    check_instance(h, k, surjective)?;
    let opt = optimum(h, k, rule, surjective, cfg)?;
    let p = Problem::new(h, k, rule, surjective, Problem::degree_order(h));
    let sink: ThetaSink = bnb::collect_optima(&p, opt, cfg.limits())?;
    let (value, form) = sink.best.expect("optimum is attained");
    let witness = Colouring::from_zero_based(&form, k);
    let mut usage = vec![0usize; k];
    form.iter().for_each(|&c| usage[c as usize] += 1);
    let colour = usage.iter().position(|&u| u == value).expect("value is attained") + 1;
    Ok(ThetaStar {
        value,
        colour,
        witness,
    })
}

/// Distinct shapes of optimal colourings: sorted usage counts of the colours
/// actually used, and whether a class contains an edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct OptimumShape {
    pub usage: Vec<usize>,
    pub has_adjacent_class: bool,
}

#[derive(Default)]
struct ShapeSink {
    shapes: BTreeSet<OptimumShape>,
}

impl Sink for ShapeSink {
    fn leaf(&mut self, leaf: &Leaf<'_>) {
        let mut usage = vec![0usize; leaf.used];
        leaf.colours.iter().for_each(|&c| usage[c as usize] += 1);
        usage.sort_unstable();
        self.shapes.insert(OptimumShape {
            usage,
            has_adjacent_class: leaf.adjacent_classes > 0,
        });
    }

    fn merge(&mut self, other: Self) {
        self.shapes.extend(other.shapes);
    }
}

/// `b_k(G)` together with every distinct shape of an optimal colouring.
pub(crate) fn optimum_shapes(
    g: &Graph,
    k: usize,
    rule: RuleMode,
    surjective: bool,
    cfg: &SolverConfig,
) -> Result<(usize, BTreeSet<OptimumShape>)> {
    cfg.validate()?;
    check_instance(g, k, surjective)?;
    let opt = optimum(g, k, rule, surjective, cfg)?;
    let p = Problem::new(g, k, rule, surjective, Problem::degree_order(g));
    let sink: ShapeSink = bnb::collect_optima(&p, opt, cfg.limits())?;
    Ok((opt, sink.shapes))
}

/// Result of removing a minimum bad-edge cover from an optimal colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KChromaticSubgraph {
    pub graph: Graph,
    /// Original indices of the vertices of `graph`, in order.
    pub kept: Vec<usize>,
    pub removed: Vec<usize>,
    pub chromatic: usize,
    pub witness: Colouring,
}

/// Deletes a minimum vertex cover of the bad edges of an optimal one-class
/// colouring. The remaining induced subgraph is properly coloured by the
/// witness, so its chromatic number is at most `k`.
pub fn k_chromatic_subgraph(g: &Graph, k: usize) -> Result<KChromaticSubgraph> {
    k_chromatic_subgraph_with(g, k, &SolverConfig::default())
}

pub fn k_chromatic_subgraph_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<KChromaticSubgraph> {
    let chi = chromatic_number_with_cap(g, cfg.chromatic_cap)?;
    if k == 0 || k >= chi {
        return Err(Error::param(format!(
            "k must satisfy 1 <= k < chi(G) = {chi}, got {k}"
        )));
    }
    let solved = solve_bk(g, k, RuleMode::OneClass, true, &SolverConfig { count: false, ..cfg.clone() })?;
    let removed = bad_edge_vertex_cover(g, &solved.witness)?;
    let kept: Vec<usize> = (0..g.n()).filter(|v| removed.binary_search(v).is_err()).collect();
    let graph = g.induced_subgraph(&kept)?;
    let chromatic = chromatic_number_with_cap(&graph, cfg.chromatic_cap)?;
    Ok(KChromaticSubgraph {
        graph,
        kept,
        removed,
        chromatic,
        witness: solved.witness,
    })
}

/// Claimed values attached to a report when the instance is a named family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimedValue {
    pub min_bad: usize,
    pub colouring_count: Option<u128>,
    pub count_disputed: bool,
}

/// JSON form of a solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub rule: RuleMode,
    pub surjective: bool,
    pub min_bad: usize,
    pub optimal_count: Option<u128>,
    pub witness: Vec<usize>,
    pub exact: bool,
    pub elapsed_ms: u64,
    #[serde(rename = "paper_claim", skip_serializing_if = "Option::is_none")]
    pub claim: Option<ClaimedValue>,
}

impl SolveReport {
    pub fn new(g: &Graph, result: &SolveResult, elapsed: Duration) -> Self {
        SolveReport {
            n: g.n(),
            m: g.m(),
            k: result.witness.k(),
            rule: result.rule,
            surjective: result.surjective,
            min_bad: result.min_bad,
            optimal_count: result.optimal_count,
            witness: result.witness.assignment().to_vec(),
            exact: result.exact,
            elapsed_ms: elapsed.as_millis() as u64,
            claim: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{bad_edges, is_valid};
    use crate::graph::{complete, cycle, helm, path, wheel};

    fn one_class(g: &Graph, k: usize) -> SolveResult {
        solve_bk(g, k, RuleMode::OneClass, true, &SolverConfig::counting()).unwrap()
    }

    #[test]
    fn named_instances() {
        assert_eq!(one_class(&wheel(4).unwrap().0, 2).min_bad, 2);
        assert_eq!(one_class(&helm(5).unwrap().0, 3).min_bad, 1);
        assert_eq!(one_class(&complete(7).unwrap(), 4).min_bad, 6);
    }

    #[test]
    fn single_colour_makes_everything_bad() {
        let g = helm(4).unwrap().0;
        assert_eq!(one_class(&g, 1).min_bad, g.m());
    }

    #[test]
    fn counts() {
        assert_eq!(count_optimal(&cycle(7).unwrap(), 2, RuleMode::OneClass, true).unwrap(), 14);
        assert_eq!(count_optimal(&wheel(4).unwrap().0, 2, RuleMode::OneClass, true).unwrap(), 4);
        assert_eq!(count_optimal(&complete(5).unwrap(), 3, RuleMode::OneClass, true).unwrap(), 60);
    }

    #[test]
    fn witness_matches_with_and_without_counting() {
        let g = helm(4).unwrap().0;
        for rule in RuleMode::ALL {
            let a = solve_bk(&g, 3, rule, true, &SolverConfig::default()).unwrap();
            let b = solve_bk(&g, 3, rule, true, &SolverConfig::counting()).unwrap();
            assert_eq!(a.witness, b.witness);
            assert!(is_valid(&g, &a.witness, rule, true).unwrap());
            assert_eq!(bad_edges(&g, &a.witness).unwrap().count, a.min_bad);
        }
    }

    #[test]
    fn infeasible_when_k_exceeds_n() {
        let g = path(3).unwrap();
        let cfg = SolverConfig::default();
        assert!(matches!(
            solve_bk(&g, 4, RuleMode::OneClass, true, &cfg),
            Err(Error::Infeasible(_))
        ));
        let r = solve_bk(&g, 4, RuleMode::OneClass, false, &cfg).unwrap();
        assert_eq!(r.min_bad, 0);
        assert!(solve_bk(&g, 0, RuleMode::OneClass, true, &cfg).is_err());
    }

    #[test]
    fn theta_star_examples() {
        let t = theta_star(&complete(3).unwrap(), 2, RuleMode::OneClass).unwrap();
        assert_eq!(t.value, 1);
        assert_eq!(t.witness.assignment(), &[1, 1, 2]);
        assert_eq!(t.colour, 2);
        assert_eq!(theta_star(&cycle(5).unwrap(), 2, RuleMode::OneClass).unwrap().value, 2);
        assert_eq!(theta_star(&complete(1).unwrap(), 1, RuleMode::OneClass).unwrap().value, 1);
        let free = theta_star_with(&complete(1).unwrap(), 2, RuleMode::OneClass, false, &SolverConfig::default())
            .unwrap();
        assert_eq!((free.value, free.colour), (0, 2));
    }

    #[test]
    fn k_chromatic_subgraphs() {
        let r = k_chromatic_subgraph(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(r.removed.len(), 1);
        assert_eq!(r.graph, path(4).unwrap());
        assert_eq!(r.chromatic, 2);

        let r = k_chromatic_subgraph(&complete(5).unwrap(), 4).unwrap();
        assert_eq!((r.removed.len(), r.chromatic), (1, 4));
        let r = k_chromatic_subgraph(&complete(5).unwrap(), 3).unwrap();
        assert_eq!((r.removed.len(), r.chromatic), (2, 3));
        assert_eq!(r.graph, complete(3).unwrap());

        assert!(k_chromatic_subgraph(&cycle(5).unwrap(), 3).is_err());
    }

    #[test]
    fn heuristic_is_marked_inexact() {
        let r = heuristic_solve(&cycle(9).unwrap(), 2, RuleMode::OneClass, true).unwrap();
        assert!(!r.exact);
        assert!(r.min_bad >= 1);
    }

    #[test]
    fn report_json_fields() {
        let g = cycle(5).unwrap();
        let r = one_class(&g, 2);
        let report = SolveReport::new(&g, &r, Duration::from_millis(3));
        let v = serde_json::to_value(&report).unwrap();
        for key in ["n", "m", "k", "rule", "surjective", "min_bad", "optimal_count", "witness", "exact", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["rule"], "one-class");
        assert_eq!(v["optimal_count"], 10);
        assert!(v.get("paper_claim").is_none());
    }
}
