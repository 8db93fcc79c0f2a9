//! Verification harness: closed forms and bounds against the enumeration
//! oracle, and branch and bound against the oracle on seeded random graphs.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_forms::{
    bk_complete, bk_cycle_odd, bk_helm, bk_path, bk_wheel, corona_formula, defect_poly_complete,
    defect_poly_complete_product, defect_poly_cycle, join_bound, union_bound, BoundOp, BoundOptions,
    BoundReport, CountClaim, FamilyResult,
};
use crate::coloring::RuleMode;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::random::connected_graphs;
use crate::solver::{enumerate_oracle, solve_bk, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    OracleInfeasible,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::OracleInfeasible => "oracle-infeasible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub item: String,
    pub parameters: String,
    #[serde(rename = "paper_value")]
    pub claimed: String,
    #[serde(rename = "oracle_value")]
    pub oracle: String,
    pub status: Status,
    /// A known, documented deviation; does not fail the run.
    pub flagged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Families,
    Poly,
    Bounds,
    Random,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "families" => Suite::Families,
            "poly" => Suite::Poly,
            "bounds" => Suite::Bounds,
            "random" => Suite::Random,
            "all" => Suite::All,
            other => return Err(Error::param(format!("unknown suite `{other}`"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub workers: usize,
    pub random_graphs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 2024,
            workers: 1,
            random_graphs: 50,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub rows: Vec<Row>,
}

impl VerifyReport {
    pub fn unflagged_mismatches(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.status == Status::Mismatch && !r.flagged)
            .count()
    }

    pub fn to_table(&self) -> String {
        let headers = ["family/operation", "parameters", "paper value", "oracle value", "status"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                let status = if r.flagged && r.status == Status::Mismatch {
                    "mismatch (flagged)".to_string()
                } else {
                    r.status.as_str().to_string()
                };
                [r.item.clone(), r.parameters.clone(), r.claimed.clone(), r.oracle.clone(), status]
            })
            .collect();
        let mut widths = headers.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = format!("seed: {}\n", self.seed);
        let line = |cols: [&str; 5]| {
            cols.iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(headers));
        for row in &cells {
            let _ = writeln!(out, "{}", line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
        }
        let _ = writeln!(
            out,
            "{} rows, {} unflagged mismatches",
            self.rows.len(),
            self.unflagged_mismatches()
        );
        out
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Families {
        rows.extend(family_rows()?);
    }
    if all || suite == Suite::Poly {
        rows.extend(poly_rows()?);
    }
    if all || suite == Suite::Bounds {
        rows.extend(bound_rows()?);
    }
    if all || suite == Suite::Random {
        rows.extend(random_rows(cfg)?);
    }
    Ok(VerifyReport {
        seed: cfg.seed,
        rows,
    })
}

/// Compares a family value with the oracle under the one-class rule.
pub fn family_row(family: &FamilyResult, g: &Graph) -> Result<Row> {
    let parameters = format!("n={} k={}", family.n, family.k);
    let claimed = match family.colouring_count {
        CountClaim::Unclaimed => format!("b={}", family.min_bad),
        c => format!("b={} count={}", family.min_bad, c.value().unwrap()),
    };
    let oracle = match enumerate_oracle(g, family.k, RuleMode::OneClass, true) {
        Ok(r) => r,
        Err(Error::SizeLimit(_)) => {
            return Ok(Row {
                item: family.family.to_string(),
                parameters,
                claimed,
                oracle: "-".into(),
                status: Status::OracleInfeasible,
                flagged: false,
            })
        }
        Err(e) => return Err(e),
    };
    let count = oracle.optimal_count.unwrap();
    let value_ok = oracle.min_bad == family.min_bad;
    let count_ok = family.colouring_count.value().is_none_or(|c| c == count);
    Ok(Row {
        item: family.family.to_string(),
        parameters,
        claimed,
        oracle: format!("b={} count={}", oracle.min_bad, count),
        status: if value_ok && count_ok { Status::Match } else { Status::Mismatch },
        flagged: value_ok && !count_ok && family.colouring_count.is_disputed(),
    })
}

fn family_rows() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 2..=9 {
        rows.push(family_row(&bk_path(n)?, &graph::path(n)?)?);
    }
    for n in (3..=11).step_by(2) {
        rows.push(family_row(&bk_cycle_odd(n)?, &graph::cycle(n)?)?);
    }
    for n in 3..=7 {
        rows.push(family_row(&bk_wheel(n, 2)?, &graph::wheel(n)?.0)?);
    }
    for n in [3, 5, 7] {
        rows.push(family_row(&bk_wheel(n, 3)?, &graph::wheel(n)?.0)?);
    }
    for n in 3..=6 {
        rows.push(family_row(&bk_helm(n, 2)?, &graph::helm(n)?.0)?);
    }
    for n in [3, 5] {
        rows.push(family_row(&bk_helm(n, 3)?, &graph::helm(n)?.0)?);
    }
    for n in 2..=7 {
        let g = graph::complete(n)?;
        for k in 1..n {
            rows.push(family_row(&bk_complete(n, k)?, &g)?);
        }
    }
    Ok(rows)
}

/// Histogram of bad-edge counts over all `λ^n` assignments.
pub fn bad_edge_histogram(g: &Graph, lambda: usize) -> Vec<u128> {
    let mut hist = vec![0u128; g.m() + 1];
    let mut a = vec![0usize; g.n()];
    loop {
        let bad = g.edges().iter().filter(|&&(u, v)| a[u] == a[v]).count();
        hist[bad] += 1;
        let mut i = g.n();
        loop {
            if i == 0 {
                return hist;
            }
            i -= 1;
            a[i] += 1;
            if a[i] < lambda {
                break;
            }
            a[i] = 0;
        }
    }
}

/// `λ`-assignments of `K_n` with exactly `k` colours, one class of size
/// `n - k + 1` and every other class a singleton.
pub fn complete_structure_count(n: usize, k: usize, lambda: usize) -> u128 {
    let mut count = 0;
    let mut a = vec![0usize; n];
    let total = (lambda as u128).pow(n as u32);
    for _ in 0..total {
        let mut sizes = vec![0usize; lambda];
        a.iter().for_each(|&c| sizes[c] += 1);
        let mut used: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
        used.sort_unstable();
        if used.len() == k && used[k - 1] == n - k + 1 && used[..k - 1].iter().all(|&s| s == 1) {
            count += 1;
        }
        for i in (0..n).rev() {
            a[i] += 1;
            if a[i] < lambda {
                break;
            }
            a[i] = 0;
        }
    }
    count
}

fn poly_rows() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in 3..=8 {
        let g = graph::cycle(n)?;
        for lambda in 1..=4 {
            let formula = (0..=n)
                .map(|j| defect_poly_cycle(n, j, lambda))
                .collect::<Result<Vec<_>>>()?;
            let hist = bad_edge_histogram(&g, lambda);
            rows.push(Row {
                item: "cycle defect polynomial".into(),
                parameters: format!("n={n} lambda={lambda} j=0..{n}"),
                claimed: format!("{formula:?}"),
                oracle: format!("{hist:?}"),
                status: if formula == hist { Status::Match } else { Status::Mismatch },
                flagged: false,
            });
        }
    }
    for n in (3..=11).step_by(2) {
        let v = defect_poly_cycle(n, 1, 2)?;
        let hist = bad_edge_histogram(&graph::cycle(n)?, 2);
        rows.push(Row {
            item: "cycle defect polynomial".into(),
            parameters: format!("n={n} lambda=2 j=1"),
            claimed: format!("{v} (2n={})", 2 * n),
            oracle: hist[1].to_string(),
            status: if v == hist[1] && v == 2 * n as u128 { Status::Match } else { Status::Mismatch },
            flagged: false,
        });
    }
    for n in 3..=5 {
        for k in 2..n {
            for lambda in [k, k + 1] {
                let formula = defect_poly_complete(n, k, lambda)?;
                let product = defect_poly_complete_product(n, k, lambda)?;
                let counted = complete_structure_count(n, k, lambda);
                rows.push(Row {
                    item: "complete defect polynomial".into(),
                    parameters: format!("n={n} k={k} lambda={lambda}"),
                    claimed: format!("{formula} (product {product})"),
                    oracle: counted.to_string(),
                    status: if formula == counted && product == formula { Status::Match } else { Status::Mismatch },
                    flagged: false,
                });
            }
        }
    }
    Ok(rows)
}

fn bound_row(item: &str, params: String, r: &BoundReport) -> Row {
    let holds = r.slack.is_some_and(|s| s >= 0);
    Row {
        item: item.into(),
        parameters: params,
        claimed: match r.bound {
            Some(b) => format!("<= {b}"),
            None => "no covering pair".into(),
        },
        oracle: r.exact.to_string(),
        status: if holds { Status::Match } else { Status::Mismatch },
        flagged: false,
    }
}

fn bound_rows() -> Result<Vec<Row>> {
    let k1 = graph::complete(1)?;
    let k3 = graph::complete(3)?;
    let c5 = graph::cycle(5)?;
    let p3 = graph::path(3)?;
    let union = BoundOptions::for_op(BoundOp::Union);
    let join = BoundOptions::for_op(BoundOp::Join);
    let corona = BoundOptions::for_op(BoundOp::Corona);
    let mut rows = vec![
        bound_row("union bound", "K3, K3, k=2".into(), &union_bound(&k3, &k3, 2, &union)?),
        bound_row("union bound", "P3, K3, k=2".into(), &union_bound(&p3, &k3, 2, &union)?),
        bound_row("union bound", "C5, C5, k=2".into(), &union_bound(&c5, &c5, 2, &union)?),
        bound_row("join bound", "K1, C4, k=2".into(), &join_bound(&k1, &graph::cycle(4)?, 2, &join)?),
    ];

    let worked = join_bound(&k3, &k3, 2, &join)?;
    rows.push(Row {
        item: "join worked example".into(),
        parameters: "K3 + K3, k=2".into(),
        claimed: "6".into(),
        oracle: worked.exact.to_string(),
        status: if worked.exact == 6 && worked.bound == Some(6) { Status::Match } else { Status::Mismatch },
        flagged: false,
    });
    let relaxed = join_bound(&k3, &k3, 5, &BoundOptions { relaxed: true, ..join.clone() })?;
    rows.push(Row {
        item: "join relaxed example".into(),
        parameters: "K3 + K3, k=5".into(),
        claimed: "1".into(),
        oracle: relaxed.exact.to_string(),
        status: if relaxed.exact == 1 && relaxed.bound == Some(1) { Status::Match } else { Status::Mismatch },
        flagged: false,
    });

    for (name, g, h, k) in [
        ("K1, K3", &k1, &k3, 3),
        ("C3, K1", &graph::cycle(3)?, &k1, 2),
        ("P2, K1", &graph::path(2)?, &k1, 1),
    ] {
        let r = corona_formula(g, h, k, &corona)?;
        let value = r.bound.unwrap();
        rows.push(Row {
            item: "corona formula".into(),
            parameters: format!("{name}, k={k}"),
            claimed: value.to_string(),
            oracle: r.exact.to_string(),
            status: if value == r.exact { Status::Match } else { Status::Mismatch },
            // equality of the formula is an open question
            flagged: value != r.exact,
        });
    }
    Ok(rows)
}

fn random_rows(cfg: &VerifyConfig) -> Result<Vec<Row>> {
    let graphs = connected_graphs(cfg.seed, cfg.random_graphs, 2, 9);
    let solver = SolverConfig::counting().with_workers(cfg.workers);
    let mut rows = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for k in 1..=3.min(g.n()) {
            for rule in RuleMode::ALL {
                let a = solve_bk(g, k, rule, true, &solver)?;
                let b = enumerate_oracle(g, k, rule, true)?;
                let show = |r: &crate::solver::SolveResult| {
                    format!(
                        "b={} count={} witness={}",
                        r.min_bad,
                        r.optimal_count.unwrap(),
                        r.witness.to_line()
                    )
                };
                rows.push(Row {
                    item: "solver vs oracle".into(),
                    parameters: format!("graph#{i} n={} m={} k={k} {rule}", g.n(), g.m()),
                    claimed: show(&a),
                    oracle: show(&b),
                    status: if a == b { Status::Match } else { Status::Mismatch },
                    flagged: false,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_sums_to_all_assignments() {
        let h = bad_edge_histogram(&graph::cycle(4).unwrap(), 3);
        assert_eq!(h.iter().sum::<u128>(), 81);
    }

    #[test]
    fn structure_count_small() {
        // K_3 with two colours: pick the pair (3 ways), colour it (2 ways)
        assert_eq!(complete_structure_count(3, 2, 2), 6);
    }

    #[test]
    fn suite_names() {
        assert_eq!("poly".parse::<Suite>().unwrap(), Suite::Poly);
        assert!("nope".parse::<Suite>().is_err());
    }
}
