//! Depth-first branch and bound over colour assignments.
//!
//! Colours are interchangeable, so the search only ever opens one fresh
//! colour at a time: a vertex may take any colour already in use or the
//! lowest unused one. Every canonical leaf that uses `u` colours therefore
//! stands for `k! / (k - u)!` labelled colourings.
//!
//! The same engine serves three visitors: minimisation with a shared
//! incumbent, a first-leaf search used for the lexicographic witness, and
//! exhaustive enumeration of all optimal leaves into a [`Sink`].

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::coloring::RuleMode;
use crate::error::{Error, Result};
use crate::graph::Graph;

const UNSET: u8 = u8::MAX;
const FLUSH_EVERY: u64 = 1 << 12;

pub(crate) struct Problem<'a> {
    pub g: &'a Graph,
    pub k: usize,
    pub one_class: bool,
    pub surjective: bool,
    order: Vec<usize>,
    /// `earlier[d]`: neighbours of `order[d]` placed before depth `d`.
    earlier: Vec<Vec<usize>>,
}

impl<'a> Problem<'a> {
    pub fn new(g: &'a Graph, k: usize, rule: RuleMode, surjective: bool, order: Vec<usize>) -> Self {
        let mut pos = vec![0; g.n()];
        for (d, &v) in order.iter().enumerate() {
            pos[v] = d;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                g.neighbours(v)
                    .iter()
                    .copied()
                    .filter(|&w| pos[w] < d)
                    .collect()
            })
            .collect();
        Problem {
            g,
            k,
            one_class: rule == RuleMode::OneClass,
            surjective,
            order,
            earlier,
        }
    }

    /// Vertices by decreasing degree, ties by index.
    pub fn degree_order(g: &Graph) -> Vec<usize> {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        order
    }

    pub fn index_order(g: &Graph) -> Vec<usize> {
        (0..g.n()).collect()
    }
}

#[derive(Clone)]
struct State {
    colour: Vec<u8>,
    internal: Vec<usize>,
    adjacent: usize,
    used: usize,
    bad: usize,
}

impl State {
    fn new(p: &Problem) -> Self {
        State {
            colour: vec![UNSET; p.g.n()],
            internal: vec![0; p.k],
            adjacent: 0,
            used: 0,
            bad: 0,
        }
    }

    fn conflicts(&self, p: &Problem, depth: usize, c: u8) -> usize {
        p.earlier[depth]
            .iter()
            .filter(|&&w| self.colour[w] == c)
            .count()
    }

    fn apply(&mut self, p: &Problem, depth: usize, c: u8, conflicts: usize) -> usize {
        let prev_used = self.used;
        let ci = c as usize;
        if conflicts > 0 && self.internal[ci] == 0 {
            self.adjacent += 1;
        }
        self.internal[ci] += conflicts;
        self.bad += conflicts;
        self.used = self.used.max(ci + 1);
        self.colour[p.order[depth]] = c;
        prev_used
    }

    fn undo(&mut self, p: &Problem, depth: usize, c: u8, conflicts: usize, prev_used: usize) {
        let ci = c as usize;
        self.colour[p.order[depth]] = UNSET;
        self.used = prev_used;
        self.bad -= conflicts;
        self.internal[ci] -= conflicts;
        if conflicts > 0 && self.internal[ci] == 0 {
            self.adjacent -= 1;
        }
    }
}

/// Information handed to a sink for every optimal canonical leaf.
pub(crate) struct Leaf<'s> {
    /// 0-based colours indexed by vertex.
    pub colours: &'s [u8],
    pub used: usize,
    pub k: usize,
    pub adjacent_classes: usize,
}

pub(crate) trait Sink: Send + Default {
    fn leaf(&mut self, leaf: &Leaf<'_>);
    fn merge(&mut self, other: Self);
}

trait Visitor {
    /// Prune any branch whose bad-edge count exceeds this.
    fn bound(&self) -> usize;
    fn leaf(&mut self, st: &State, k: usize) -> ControlFlow<()>;
}

struct Minimise<'s> {
    incumbent: &'s AtomicUsize,
}

impl Visitor for Minimise<'_> {
    fn bound(&self) -> usize {
        self.incumbent.load(Ordering::Relaxed).saturating_sub(1)
    }

    fn leaf(&mut self, st: &State, _k: usize) -> ControlFlow<()> {
        self.incumbent.fetch_min(st.bad, Ordering::Relaxed);
        ControlFlow::Continue(())
    }
}

struct FirstLeaf {
    limit: usize,
    found: Option<Vec<u8>>,
}

impl Visitor for FirstLeaf {
    fn bound(&self) -> usize {
        self.limit
    }

    fn leaf(&mut self, st: &State, _k: usize) -> ControlFlow<()> {
        self.found = Some(st.colour.clone());
        ControlFlow::Break(())
    }
}

struct Collect<S> {
    limit: usize,
    sink: S,
}

impl<S: Sink> Visitor for Collect<S> {
    fn bound(&self) -> usize {
        self.limit
    }

    fn leaf(&mut self, st: &State, k: usize) -> ControlFlow<()> {
        self.sink.leaf(&Leaf {
            colours: &st.colour,
            used: st.used,
            k,
            adjacent_classes: st.adjacent,
        });
        ControlFlow::Continue(())
    }
}

struct Budget<'s> {
    shared: &'s AtomicU64,
    limit: u64,
    local: u64,
    exceeded: &'s AtomicBool,
}

impl Budget<'_> {
    fn tick(&mut self) -> ControlFlow<()> {
        self.local += 1;
        if self.local == FLUSH_EVERY {
            let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.limit {
                self.exceeded.store(true, Ordering::Relaxed);
            }
        }
        if self.exceeded.load(Ordering::Relaxed) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

fn dfs<V: Visitor>(
    p: &Problem,
    st: &mut State,
    depth: usize,
    visitor: &mut V,
    budget: &mut Budget,
) -> ControlFlow<()> {
    budget.tick()?;
    let n = p.order.len();
    if depth == n {
        if p.surjective && st.used < p.k {
            return ControlFlow::Continue(());
        }
        return visitor.leaf(st, p.k);
    }
    let remaining = n - depth - 1;
    let limit = (st.used + 1).min(p.k);
    for c in 0..limit as u8 {
        let conflicts = st.conflicts(p, depth, c);
        if st.bad + conflicts > visitor.bound() {
            continue;
        }
        let new_used = st.used.max(c as usize + 1);
        if p.surjective && p.k - new_used > remaining {
            continue;
        }
        if p.one_class
            && conflicts > 0
            && st.internal[c as usize] == 0
            && st.adjacent >= 1
        {
            continue;
        }
        let prev_used = st.apply(p, depth, c, conflicts);
        let flow = dfs(p, st, depth + 1, visitor, budget);
        st.undo(p, depth, c, conflicts, prev_used);
        flow?;
    }
    ControlFlow::Continue(())
}

/// Search limits shared by every entry point.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub node_limit: u64,
    pub workers: usize,
}

fn limit_error(limit: u64) -> Error {
    Error::SizeLimit(format!(
        "branch and bound exceeded its budget of {limit} search nodes"
    ))
}

/// Canonical prefixes (colour per search position) splitting the tree into
/// independent jobs. A single empty prefix when running on one worker.
fn split_prefixes(p: &Problem, workers: usize) -> Vec<Vec<u8>> {
    if workers <= 1 || p.order.is_empty() {
        return vec![Vec::new()];
    }
    let target = workers * 8;
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    let mut depth = 0;
    while frontier.len() < target && depth < p.order.len() {
        let mut next = Vec::new();
        for prefix in &frontier {
            let used = prefix.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
            let remaining = p.order.len() - depth - 1;
            for c in 0..(used + 1).min(p.k) as u8 {
                let new_used = used.max(c as usize + 1);
                if p.surjective && p.k - new_used > remaining {
                    continue;
                }
                let mut q = prefix.clone();
                q.push(c);
                next.push(q);
            }
        }
        frontier = next;
        depth += 1;
    }
    frontier
}

/// Replays a prefix; `None` if it violates the rule or already exceeds
/// `bound`.
fn replay(p: &Problem, prefix: &[u8], bound: usize) -> Option<State> {
    let mut st = State::new(p);
    for (depth, &c) in prefix.iter().enumerate() {
        let conflicts = st.conflicts(p, depth, c);
        if p.one_class && conflicts > 0 && st.internal[c as usize] == 0 && st.adjacent >= 1 {
            return None;
        }
        st.apply(p, depth, c, conflicts);
    }
    (st.bad <= bound).then_some(st)
}

/// Runs one visitor per job across `workers` threads and returns the
/// visitors in job order.
fn run_jobs<V, F>(p: &Problem, limits: Limits, make: F) -> Result<Vec<V>>
where
    V: Visitor + Send,
    F: Fn() -> V + Sync,
{
    let prefixes = split_prefixes(p, limits.workers);
    let next = AtomicUsize::new(0);
    let nodes = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);
    let slots: Vec<Mutex<Option<V>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();

    let work = || {
        let mut budget = Budget {
            shared: &nodes,
            limit: limits.node_limit,
            local: 0,
            exceeded: &exceeded,
        };
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            if i >= prefixes.len() {
                break;
            }
            let mut visitor = make();
            if let Some(mut st) = replay(p, &prefixes[i], visitor.bound()) {
                let _ = dfs(p, &mut st, prefixes[i].len(), &mut visitor, &mut budget);
            }
            *slots[i].lock().unwrap() = Some(visitor);
        }
        nodes.fetch_add(budget.local, Ordering::Relaxed);
        if nodes.load(Ordering::Relaxed) > limits.node_limit {
            exceeded.store(true, Ordering::Relaxed);
        }
    };

    let workers = limits.workers.clamp(1, prefixes.len());
    if workers == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(work);
            }
        });
    }
    if exceeded.load(Ordering::Relaxed) {
        return Err(limit_error(limits.node_limit));
    }
    Ok(slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every job runs"))
        .collect())
}

/// Minimum bad-edge count, given a feasible upper bound `upper`.
pub(crate) fn minimum(p: &Problem, upper: usize, limits: Limits) -> Result<usize> {
    let incumbent = AtomicUsize::new(upper + 1);
    run_jobs(p, limits, || Minimise {
        incumbent: &incumbent,
    })?;
    let best = incumbent.load(Ordering::Relaxed);
    debug_assert!(best <= upper, "upper bound must be attained");
    Ok(best)
}

/// First leaf in DFS order with at most `opt` bad edges. Colours indexed by
/// vertex, 0-based.
pub(crate) fn first_leaf(p: &Problem, opt: usize, node_limit: u64) -> Result<Option<Vec<u8>>> {
    let limits = Limits {
        node_limit,
        workers: 1,
    };
    let mut found = run_jobs(p, limits, || FirstLeaf {
        limit: opt,
        found: None,
    })?;
    Ok(found.pop().and_then(|v| v.found))
}

/// Feeds every leaf with exactly `opt` bad edges to a fresh sink per job
/// and merges the sinks in job order.
pub(crate) fn collect_optima<S: Sink>(p: &Problem, opt: usize, limits: Limits) -> Result<S> {
    let parts = run_jobs(p, limits, || Collect {
        limit: opt,
        sink: S::default(),
    })?;
    let mut acc = S::default();
    for part in parts {
        acc.merge(part.sink);
    }
    Ok(acc)
}

/// Relabels colours by first occurrence in vertex order; the result is the
/// lexicographically smallest colouring in the orbit.
pub(crate) fn first_occurrence_form(colours: &[u8]) -> Vec<u8> {
    let mut map = [UNSET; 256];
    let mut next = 0u8;
    colours
        .iter()
        .map(|&c| {
            if map[c as usize] == UNSET {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

/// `k! / (k - used)!`, the number of labelled colourings per canonical leaf.
pub(crate) fn falling(k: usize, used: usize) -> u128 {
    (0..used).map(|i| (k - i) as u128).product()
}

/// Counts labelled optima and keeps the lexicographically smallest one.
#[derive(Default)]
pub(crate) struct CountSink {
    pub count: u128,
    pub witness: Option<Vec<u8>>,
}

impl Sink for CountSink {
    fn leaf(&mut self, leaf: &Leaf<'_>) {
        self.count += falling(leaf.k, leaf.used);
        let form = first_occurrence_form(leaf.colours);
        if self.witness.as_ref().is_none_or(|w| form < *w) {
            self.witness = Some(form);
        }
    }

    fn merge(&mut self, other: Self) {
        self.count += other.count;
        if let Some(w) = other.witness {
            if self.witness.as_ref().is_none_or(|cur| w < *cur) {
                self.witness = Some(w);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    fn limits(workers: usize) -> Limits {
        Limits {
            node_limit: 10_000_000,
            workers,
        }
    }

    #[test]
    fn first_occurrence() {
        assert_eq!(first_occurrence_form(&[2, 2, 0, 1, 0]), vec![0, 0, 1, 2, 1]);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(5, 0), 1);
        assert_eq!(falling(5, 2), 20);
        assert_eq!(falling(3, 3), 6);
    }

    #[test]
    fn minimum_of_odd_cycle() {
        let g = cycle(7).unwrap();
        let p = Problem::new(&g, 2, RuleMode::OneClass, true, Problem::degree_order(&g));
        assert_eq!(minimum(&p, 7, limits(1)).unwrap(), 1);
        assert_eq!(minimum(&p, 7, limits(4)).unwrap(), 1);
    }

    #[test]
    fn counting_is_worker_independent() {
        let g = complete(6).unwrap();
        let p = Problem::new(&g, 3, RuleMode::OneClass, true, Problem::degree_order(&g));
        let opt = minimum(&p, 15, limits(1)).unwrap();
        let a: CountSink = collect_optima(&p, opt, limits(1)).unwrap();
        let b: CountSink = collect_optima(&p, opt, limits(3)).unwrap();
        assert_eq!(opt, 6);
        assert_eq!(a.count, b.count);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = complete(12).unwrap();
        let p = Problem::new(&g, 6, RuleMode::Unrestricted, true, Problem::degree_order(&g));
        let tiny = Limits {
            node_limit: 100,
            workers: 1,
        };
        assert!(matches!(minimum(&p, 66, tiny), Err(Error::SizeLimit(_))));
    }
}
