//! Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use badedge::closed_forms::{
    binomial, corona_formula, defect_poly_complete, defect_poly_complete_product,
    defect_poly_cycle, factorial, join_bound, BoundOp, BoundOptions,
};
use badedge::coloring::bad_edges;
use badedge::graph::{complete, cycle, helm, path, wheel};
use badedge::random::connected_graphs;
use badedge::solver::{enumerate_oracle, k_chromatic_subgraph, solve_bk};
use badedge::verify::{bad_edge_histogram, complete_structure_count};
use badedge::{chromatic_number, Colouring, Graph, RuleMode, SolverConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 2024;

fn one_class_oracle(g: &Graph, k: usize) -> (usize, u128) {
    let r = enumerate_oracle(g, k, RuleMode::OneClass, true).unwrap();
    (r.min_bad, r.optimal_count.unwrap())
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn odd_cycles() -> Outcome {
    let mut fails = Vec::new();
    for n in [3, 5, 7, 9, 11] {
        let got = one_class_oracle(&cycle(n).unwrap(), 2);
        if got != (1, 2 * n as u128) {
            fails.push(format!("C{n}: got {got:?}, want (1, {})", 2 * n));
        }
    }
    check(fails.is_empty(), if fails.is_empty() { "C3..C11 give (1, 2n)".into() } else { fails.join("; ") })
}

fn wheels_two_colours() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in [4, 5, 6, 7] {
        let g = wheel(n).unwrap().0;
        let want = if n % 2 == 0 { (n / 2, 4) } else { (n.div_ceil(2), 4 * n as u128) };
        let got = one_class_oracle(&g, 2);
        let free = enumerate_oracle(&g, 2, RuleMode::Unrestricted, true).unwrap();
        let hit = got == want;
        ok &= hit;
        lines.push(format!(
            "W{n}: want {want:?} got {got:?} (unrestricted {:?}){}",
            (free.min_bad, free.optimal_count.unwrap()),
            if hit { "" } else { " MISMATCH" }
        ));
    }
    check(ok, lines.join("; "))
}

fn wheels_three_colours() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in [5, 7] {
        let (b, count) = one_class_oracle(&wheel(n).unwrap().0, 3);
        ok &= b == 1;
        let status = if count == 3 * n as u128 { "match" } else { "mismatch (documented deviation)" };
        lines.push(format!("W{n}: min_bad {b}, count {count} vs claimed {}: {status}", 3 * n));
    }
    check(ok, lines.join("; "))
}

fn helms() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (n, want) in [(4, (2, 4)), (6, (3, 4)), (5, (3, 20))] {
        let g = helm(n).unwrap().0;
        let got = one_class_oracle(&g, 2);
        let hit = got == want;
        ok &= hit;
        let free = enumerate_oracle(&g, 2, RuleMode::Unrestricted, true).unwrap();
        lines.push(format!(
            "H{n}: want {want:?} got {got:?} (unrestricted {:?}){}",
            (free.min_bad, free.optimal_count.unwrap()),
            if hit { "" } else { " MISMATCH" }
        ));
    }
    let r = solve_bk(&helm(3).unwrap().0, 3, RuleMode::OneClass, true, &SolverConfig::counting()).unwrap();
    let count = r.optimal_count.unwrap();
    let claimed = 3 * 3 * 8;
    ok &= r.min_bad == 1;
    lines.push(format!(
        "H3 k=3: min_bad {}, count {count} vs claimed {claimed}: {}",
        r.min_bad,
        if count == claimed { "match" } else { "mismatch (documented deviation)" }
    ));
    check(ok, lines.join("; "))
}

fn complete_graphs() -> Outcome {
    let mut fails = Vec::new();
    let mut cases = 0;
    for n in 2..=7usize {
        for k in 1..n {
            let x = n - k;
            let want_b = x * (x + 1) / 2;
            let want_c = (n - x) as u128 * binomial(n as u128, x as u128 + 1) * factorial((n - x - 1) as u128);
            let got = one_class_oracle(&complete(n).unwrap(), k);
            cases += 1;
            if got != (want_b, want_c) {
                fails.push(format!("K{n} k={k}: got {got:?}, want {:?}", (want_b, want_c)));
            }
        }
    }
    check(fails.is_empty(), if fails.is_empty() { format!("{cases} cases exact") } else { fails.join("; ") })
}

fn cycle_polynomial() -> Outcome {
    let mut fails = Vec::new();
    for n in 3..=8 {
        let g = cycle(n).unwrap();
        for lambda in 1..=4 {
            let hist = bad_edge_histogram(&g, lambda);
            for (j, &count) in hist.iter().enumerate() {
                let f = defect_poly_cycle(n, j, lambda).unwrap();
                if f != count {
                    fails.push(format!("n={n} lambda={lambda} j={j}: formula {f}, count {count}"));
                }
            }
        }
    }
    for n in (3..=11).step_by(2) {
        let v = defect_poly_cycle(n, 1, 2).unwrap();
        if v != 2 * n as u128 {
            fails.push(format!("phi_1(C{n};2) = {v}"));
        }
    }
    check(fails.is_empty(), if fails.is_empty() { "n<=8, lambda<=4, all j; odd n<=11 at j=1".into() } else { fails.join("; ") })
}

fn complete_polynomial() -> Outcome {
    let mut fails = Vec::new();
    for n in 3..=5usize {
        for k in 2..n {
            for lambda in [k, k + 1] {
                let f = defect_poly_complete(n, k, lambda).unwrap();
                let p = defect_poly_complete_product(n, k, lambda).unwrap();
                let c = complete_structure_count(n, k, lambda);
                if f != c || f != p {
                    fails.push(format!("K{n} k={k} lambda={lambda}: formula {f}, product {p}, count {c}"));
                }
            }
        }
    }
    check(fails.is_empty(), if fails.is_empty() { "formula = product = enumeration".into() } else { fails.join("; ") })
}

fn solver_equivalence() -> Outcome {
    let cfg = SolverConfig::counting();
    let mut compared = 0;
    for (i, g) in connected_graphs(SEED, 50, 2, 9).iter().enumerate() {
        for k in 1..=3.min(g.n()) {
            for rule in RuleMode::ALL {
                let a = solve_bk(g, k, rule, true, &cfg).unwrap();
                let b = enumerate_oracle(g, k, rule, true).unwrap();
                if a != b {
                    return Err(format!("graph #{i} k={k} {rule}: solver {a:?}, oracle {b:?}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!("seed {SEED}: {compared} instances agree on value, count and witness"))
}

fn invariants() -> Outcome {
    let graphs = connected_graphs(SEED, 50, 2, 9);
    for (i, g) in graphs.iter().enumerate() {
        let chi = chromatic_number(g).unwrap();
        let mut previous: Option<(usize, usize)> = None;
        for k in 1..=g.n().min(chi.max(3)) {
            let one = enumerate_oracle(g, k, RuleMode::OneClass, true).unwrap().min_bad;
            let free = enumerate_oracle(g, k, RuleMode::Unrestricted, true).unwrap().min_bad;
            if k == 1 && one != g.m() {
                return Err(format!("graph #{i}: b_1 = {one}, m = {}", g.m()));
            }
            if one < free {
                return Err(format!("graph #{i} k={k}: one-class {one} < unrestricted {free}"));
            }
            if k == chi && one != 0 {
                return Err(format!("graph #{i}: b_chi = {one}"));
            }
            if let Some((p1, pf)) = previous {
                if one > p1 || free > pf {
                    return Err(format!("graph #{i} k={k}: not monotone"));
                }
            }
            previous = Some((one, free));
        }
        let k = chi.max(2);
        let assignment: Vec<usize> = (0..g.n()).map(|v| (v * 7 + i) % k + 1).collect();
        let c = Colouring::new(assignment, k).unwrap();
        let perm: Vec<usize> = (0..k).map(|c| (c + 1) % k + 1).collect();
        let before = bad_edges(g, &c).unwrap().count;
        let after = bad_edges(g, &c.permuted(&perm).unwrap()).unwrap().count;
        if before != after {
            return Err(format!("graph #{i}: permutation changed {before} to {after}"));
        }
    }
    Ok(format!("seed {SEED}: 50 graphs"))
}

fn join_checks() -> Outcome {
    let opts = BoundOptions::for_op(BoundOp::Join);
    let k3 = complete(3).unwrap();
    let worked = join_bound(&k3, &k3, 2, &opts).unwrap();
    if worked.exact != 6 || worked.bound != Some(6) {
        return Err(format!("K3+K3: exact {}, bound {:?}", worked.exact, worked.bound));
    }
    let pool = connected_graphs(SEED + 10, 40, 1, 4);
    let mut pairs = 0;
    for (i, pair) in pool.chunks(2).enumerate() {
        let (g, h) = (&pair[0], &pair[1]);
        let k = 1 + i % 3;
        if k > g.n() + h.n() {
            continue;
        }
        let r = join_bound(g, h, k, &opts).unwrap();
        if r.slack.is_some_and(|s| s < 0) {
            return Err(format!("pair #{i} k={k}: bound {:?} below exact {}", r.bound, r.exact));
        }
        pairs += 1;
    }
    let wheel_like = join_bound(&complete(1).unwrap(), &cycle(4).unwrap(), 2, &opts).unwrap();
    if wheel_like.exact != 2 {
        return Err(format!("K1+C4: exact {}", wheel_like.exact));
    }
    Ok(format!("K3+K3 = 6; {pairs} random pairs with slack >= 0; K1+C4 = 2"))
}

fn corona_checks() -> Outcome {
    let opts = BoundOptions::for_op(BoundOp::Corona);
    let cases = [
        ("K1 o K3", complete(1).unwrap(), complete(3).unwrap(), 3, Some(1)),
        ("C3 o K1", cycle(3).unwrap(), complete(1).unwrap(), 2, None),
        ("P2 o K1", path(2).unwrap(), complete(1).unwrap(), 1, Some(3)),
    ];
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, g, h, k, want) in cases {
        let r = corona_formula(&g, &h, k, &opts).unwrap();
        let (combined, _) = badedge::graph::corona(&g, &h);
        let oracle = one_class_oracle(&combined, k).0;
        ok &= r.exact == oracle && want.is_none_or(|w| w == oracle);
        lines.push(format!(
            "{name} k={k}: formula {}, exact {}, difference {}",
            r.bound.unwrap(),
            r.exact,
            r.slack.unwrap()
        ));
    }
    check(ok, lines.join("; "))
}

fn k_chromatic() -> Outcome {
    let cases = [
        ("C5", cycle(5).unwrap(), 2),
        ("C7", cycle(7).unwrap(), 2),
        ("K5", complete(5).unwrap(), 4),
        ("K5", complete(5).unwrap(), 3),
        ("W5", wheel(5).unwrap().0, 3),
    ];
    let mut lines = Vec::new();
    for (name, g, k) in cases {
        let sub = k_chromatic_subgraph(&g, k).unwrap();
        let chi = chromatic_number(&sub.graph).unwrap();
        if chi != k {
            return Err(format!("{name} k={k}: subgraph has chromatic number {chi}"));
        }
        lines.push(format!("{name} k={k}: removed {:?}", sub.removed));
    }
    Ok(lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("odd cycles", odd_cycles),
        ("wheels, two colours", wheels_two_colours),
        ("wheels, three colours", wheels_three_colours),
        ("helms", helms),
        ("complete graphs", complete_graphs),
        ("cycle defect polynomial", cycle_polynomial),
        ("complete defect polynomial", complete_polynomial),
        ("solver equivalence", solver_equivalence),
        ("invariants", invariants),
        ("join", join_checks),
        ("corona", corona_checks),
        ("k-chromatic subgraph", k_chromatic),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{name}] ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{name}] ({ms} ms): {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
