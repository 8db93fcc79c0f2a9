//! Upper bounds (union, join) and the corona formula, each reported next to
//! the exact value of the combined graph.
//!
//! The smaller-chromatic operand `G` is coloured from `t` colours, where
//! `t = min(k, χ(G) - 1)` (clamped to at least 1), and the other operand `H`
//! from `k`. In relaxed mode `t = k`. A side that has fewer vertices than
//! its colour budget may leave colours unused; the combined colouring must
//! still use all `k` colours, which is checked per pair of optimum shapes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chromatic::chromatic_number_with_cap;
use crate::coloring::RuleMode;
use crate::error::{Error, Result};
use crate::graph::{corona, disjoint_union, join, Graph};
use crate::solver::{
    enumerate_oracle_with_cap, optimum_shapes, solve_bk, theta_star_with, OptimumShape, SolverConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundOp {
    Union,
    Join,
    Corona,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundOptions {
    pub rule: RuleMode,
    /// Colour `G` from the full `k`-set (`t = k`).
    pub relaxed: bool,
    pub solver: SolverConfig,
}

impl BoundOptions {
    pub fn for_op(op: BoundOp) -> Self {
        let rule = match op {
            BoundOp::Join => RuleMode::Unrestricted,
            BoundOp::Union | BoundOp::Corona => RuleMode::OneClass,
        };
        BoundOptions {
            rule,
            relaxed: false,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OperandSummary {
    pub n: usize,
    pub m: usize,
    pub chromatic: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub operation: BoundOp,
    pub left: OperandSummary,
    pub right: OperandSummary,
    /// Operands were exchanged so that `χ(left) <= χ(right)`.
    pub swapped: bool,
    pub t: usize,
    pub k: usize,
    pub rule: RuleMode,
    pub relaxed: bool,
    /// `b_t(G)`.
    pub left_bad: usize,
    /// `b_k(H)`.
    pub right_bad: usize,
    /// Join: minimum cross term. Corona: `|V(G)| θ*_H`. Union: 0.
    pub cross: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_star: Option<usize>,
    /// `None` when no pair of optimal side colourings can cover `k` colours.
    pub bound: Option<usize>,
    pub exact: usize,
    /// `bound - exact`; for the corona this is the formula's deviation.
    pub slack: Option<i64>,
}

fn summary(g: &Graph, cfg: &SolverConfig) -> Result<OperandSummary> {
    Ok(OperandSummary {
        n: g.n(),
        m: g.m(),
        chromatic: chromatic_number_with_cap(g, cfg.chromatic_cap)?,
    })
}

fn colour_budget_t(k: usize, chi_g: usize, relaxed: bool) -> usize {
    if relaxed {
        k
    } else {
        k.min(chi_g.saturating_sub(1)).max(1)
    }
}

/// Exact `b_k` of a combined graph: oracle when within its cap, otherwise
/// branch and bound.
fn exact_bk(g: &Graph, k: usize, rule: RuleMode, cfg: &SolverConfig) -> Result<usize> {
    match enumerate_oracle_with_cap(g, k, rule, true, cfg.enumeration_cap) {
        Ok(r) => Ok(r.min_bad),
        Err(Error::SizeLimit(_)) => Ok(solve_bk(g, k, rule, true, cfg)?.min_bad),
        Err(e) => Err(e),
    }
}

fn side(g: &Graph, colours: usize, opts: &BoundOptions) -> Result<(usize, BTreeSet<OptimumShape>)> {
    let cfg = SolverConfig {
        count: false,
        ..opts.solver.clone()
    };
    optimum_shapes(g, colours, opts.rule, colours <= g.n(), &cfg)
}

/// Overlap forced when the two sides together must use exactly `k` colours.
fn forced_overlap(a: &OptimumShape, b: &OptimumShape, k: usize) -> Option<usize> {
    let (ua, ub) = (a.usage.len(), b.usage.len());
    let s = (ua + ub).checked_sub(k)?;
    (s <= ua.min(ub)).then_some(s)
}

/// Least `Σ θ_G(c) θ_H(c)` when exactly `s` colours are shared: the `s`
/// rarest colours of each side, largest paired with smallest.
pub(crate) fn min_cross(a: &[usize], b: &[usize], s: usize) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a.truncate(s);
    b.truncate(s);
    a.iter().zip(b.iter().rev()).map(|(x, y)| x * y).sum()
}

struct Prepared<'a> {
    g: &'a Graph,
    h: &'a Graph,
    left: OperandSummary,
    right: OperandSummary,
    swapped: bool,
}

fn order_operands<'a>(g: &'a Graph, h: &'a Graph, cfg: &SolverConfig) -> Result<Prepared<'a>> {
    let (sg, sh) = (summary(g, cfg)?, summary(h, cfg)?);
    Ok(if sg.chromatic <= sh.chromatic {
        Prepared { g, h, left: sg, right: sh, swapped: false }
    } else {
        Prepared { g: h, h: g, left: sh, right: sg, swapped: true }
    })
}

/// `b_k(G ∪ H) <= b_t(G) + b_k(H)`.
pub fn union_bound(g: &Graph, h: &Graph, k: usize, opts: &BoundOptions) -> Result<BoundReport> {
    let p = order_operands(g, h, &opts.solver)?;
    let t = colour_budget_t(k, p.left.chromatic, opts.relaxed);
    let (bg, shapes_g) = side(p.g, t, opts)?;
    let (bh, shapes_h) = side(p.h, k, opts)?;
    let one_class = opts.rule == RuleMode::OneClass;
    let coverable = shapes_g.iter().any(|a| {
        shapes_h.iter().any(|b| match forced_overlap(a, b, k) {
            // two adjacent classes can only be merged into one shared colour
            Some(s) => !(one_class && a.has_adjacent_class && b.has_adjacent_class && s == 0),
            None => false,
        })
    });
    let bound = coverable.then_some(bg + bh);
    let (union, _) = disjoint_union(p.g, p.h);
    let exact = exact_bk(&union, k, opts.rule, &opts.solver)?;
    Ok(BoundReport {
        operation: BoundOp::Union,
        left: p.left,
        right: p.right,
        swapped: p.swapped,
        t,
        k,
        rule: opts.rule,
        relaxed: opts.relaxed,
        left_bad: bg,
        right_bad: bh,
        cross: 0,
        theta_star: None,
        bound,
        exact,
        slack: bound.map(|b| b as i64 - exact as i64),
    })
}

/// `b_k(G + H) <= b_t(G) + b_k(H) + min Σ θ_G(c) θ_H(c)`, the minimum taken
/// over all optimal colourings of both sides. Unrestricted rule only.
pub fn join_bound(g: &Graph, h: &Graph, k: usize, opts: &BoundOptions) -> Result<BoundReport> {
    if opts.rule != RuleMode::Unrestricted {
        return Err(Error::param(
            "join bound is defined for the unrestricted rule: cross edges make every shared class adjacent",
        ));
    }
    let p = order_operands(g, h, &opts.solver)?;
    let t = colour_budget_t(k, p.left.chromatic, opts.relaxed);
    let (bg, shapes_g) = side(p.g, t, opts)?;
    let (bh, shapes_h) = side(p.h, k, opts)?;
    let cross = shapes_g
        .iter()
        .flat_map(|a| {
            shapes_h
                .iter()
                .filter_map(move |b| forced_overlap(a, b, k).map(|s| min_cross(&a.usage, &b.usage, s)))
        })
        .min();
    let bound = cross.map(|c| bg + bh + c);
    let (joined, _) = join(p.g, p.h);
    let exact = exact_bk(&joined, k, opts.rule, &opts.solver)?;
    Ok(BoundReport {
        operation: BoundOp::Join,
        left: p.left,
        right: p.right,
        swapped: p.swapped,
        t,
        k,
        rule: opts.rule,
        relaxed: opts.relaxed,
        left_bad: bg,
        right_bad: bh,
        cross: cross.unwrap_or(0),
        theta_star: None,
        bound,
        exact,
        slack: bound.map(|b| b as i64 - exact as i64),
    })
}

/// Chromatic number of `G ∘ H` from the operands' chromatic numbers.
pub fn corona_chromatic(chi_g: usize, chi_h: usize) -> usize {
    use std::cmp::Ordering::*;
    match chi_g.cmp(&chi_h) {
        Equal => chi_g + 1,
        Greater => chi_g,
        Less => chi_h + 1,
    }
}

/// Evaluates `b_t(G) + b_k(H) + |V(G)| θ*_H` and reports it against the
/// exact `b_k(G ∘ H)`. The two are compared, not assumed equal.
pub fn corona_formula(g: &Graph, h: &Graph, k: usize, opts: &BoundOptions) -> Result<BoundReport> {
    let left = summary(g, &opts.solver)?;
    let right = summary(h, &opts.solver)?;
    let chi = corona_chromatic(left.chromatic, right.chromatic);
    if k == 0 || k >= chi {
        return Err(Error::param(format!(
            "corona needs 1 <= k < chi(G o H) = {chi}, got {k}"
        )));
    }
    let t = colour_budget_t(k, left.chromatic, opts.relaxed);
    let (bg, _) = side(g, t, opts)?;
    let surj_h = k <= h.n();
    let cfg = SolverConfig {
        count: false,
        ..opts.solver.clone()
    };
    let bh = solve_bk(h, k, opts.rule, surj_h, &cfg)?.min_bad;
    let star = theta_star_with(h, k, opts.rule, surj_h, &cfg)?.value;
    let cross = g.n() * star;
    let value = bg + bh + cross;
    let (combined, _) = corona(g, h);
    let exact = exact_bk(&combined, k, opts.rule, &opts.solver)?;
    Ok(BoundReport {
        operation: BoundOp::Corona,
        left,
        right,
        swapped: false,
        t,
        k,
        rule: opts.rule,
        relaxed: opts.relaxed,
        left_bad: bg,
        right_bad: bh,
        cross,
        theta_star: Some(star),
        bound: Some(value),
        exact,
        slack: Some(value as i64 - exact as i64),
    })
}
