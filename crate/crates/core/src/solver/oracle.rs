//! Exhaustive enumeration of every labelled assignment. Slow on purpose: it
//! shares no code with the branch and bound and is the ground truth the
//! rest of the crate is tested against.

use super::{check_instance, SolveResult};
use crate::coloring::{Colouring, RuleMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

pub fn enumerate_oracle(g: &Graph, k: usize, rule: RuleMode, surjective: bool) -> Result<SolveResult> {
    enumerate_oracle_with_cap(g, k, rule, surjective, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_oracle_with_cap(
    g: &Graph,
    k: usize,
    rule: RuleMode,
    surjective: bool,
    cap: u64,
) -> Result<SolveResult> {
    check_instance(g, k, surjective)?;
    let total = (k as u64)
        .checked_pow(g.n() as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| {
            Error::SizeLimit(format!(
                "{k}^{} assignments exceed the enumeration cap of {cap}",
                g.n()
            ))
        })?;

    let n = g.n();
    let mut a = vec![1usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut count: u128 = 0;
    for _ in 0..total {
        if let Some(bad) = evaluate(g, &a, k, rule, surjective) {
            match &best {
                Some((b, _)) if bad > *b => {}
                Some((b, _)) if bad == *b => count += 1,
                _ => {
                    best = Some((bad, a.clone()));
                    count = 1;
                }
            }
        }
        // odometer, last vertex fastest, so assignments appear in
        // lexicographic order
        for i in (0..n).rev() {
            if a[i] < k {
                a[i] += 1;
                break;
            }
            a[i] = 1;
        }
    }

    let (min_bad, witness) =
        best.ok_or_else(|| Error::Infeasible("no admissible colouring exists".into()))?;
    Ok(SolveResult {
        min_bad,
        optimal_count: Some(count),
        witness: Colouring::new(witness, k)?,
        rule,
        surjective,
        exact: true,
    })
}

/// Bad-edge count of `a`, or `None` if it is not admissible.
fn evaluate(g: &Graph, a: &[usize], k: usize, rule: RuleMode, surjective: bool) -> Option<usize> {
    if surjective {
        let mut seen = vec![false; k + 1];
        for &c in a {
            seen[c] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return None;
        }
    }
    let mut bad = 0;
    let mut adjacent_class: Option<usize> = None;
    for &(u, v) in g.edges() {
        if a[u] == a[v] {
            bad += 1;
            if rule == RuleMode::OneClass {
                match adjacent_class {
                    None => adjacent_class = Some(a[u]),
                    Some(c) if c != a[u] => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn odd_cycle_five() {
        let r = enumerate_oracle(&cycle(5).unwrap(), 2, RuleMode::OneClass, true).unwrap();
        assert_eq!(r.min_bad, 1);
        assert_eq!(r.optimal_count, Some(10));
        assert_eq!(r.witness.assignment(), &[1, 1, 2, 1, 2]);
    }

    #[test]
    fn path_with_one_colour() {
        let r = enumerate_oracle(&path(4).unwrap(), 1, RuleMode::OneClass, true).unwrap();
        assert_eq!(r.min_bad, 3);
        assert_eq!(r.optimal_count, Some(1));
    }

    #[test]
    fn k4_two_colours() {
        let k4 = complete(4).unwrap();
        let free = enumerate_oracle(&k4, 2, RuleMode::Unrestricted, true).unwrap();
        assert_eq!(free.min_bad, 2);
        let one = enumerate_oracle(&k4, 2, RuleMode::OneClass, true).unwrap();
        assert_eq!(one.min_bad, 3);
        assert_eq!(one.optimal_count, Some(8));
    }

    #[test]
    fn infeasible_and_capped() {
        let k3 = complete(3).unwrap();
        assert!(matches!(
            enumerate_oracle(&k3, 4, RuleMode::OneClass, true),
            Err(Error::Infeasible(_))
        ));
        assert!(enumerate_oracle(&k3, 4, RuleMode::OneClass, false).is_ok());
        assert!(matches!(
            enumerate_oracle_with_cap(&k3, 3, RuleMode::OneClass, true, 26),
            Err(Error::SizeLimit(_))
        ));
    }
}
