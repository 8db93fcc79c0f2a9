//! Greedy construction followed by single-vertex recolouring. Not exact;
//! used as the initial upper bound of the branch and bound and, on request,
//! for graphs beyond the exact limits.

use crate::coloring::RuleMode;
use crate::graph::Graph;

/// Admissible colouring (0-based colours per vertex) for a feasible
/// instance. Deterministic.
pub(crate) fn greedy_local_search(g: &Graph, k: usize, rule: RuleMode, surjective: bool) -> Vec<u8> {
    let n = g.n();
    let one_class = rule == RuleMode::OneClass;
    let mut colour = vec![u8::MAX; n];
    let mut size = vec![0usize; k];
    let mut adjacent_class: Option<usize> = None;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    for (placed, &v) in order.iter().enumerate() {
        let remaining = n - placed - 1;
        let unused = size.iter().filter(|&&s| s == 0).count();
        let must_open = surjective && unused > remaining;
        let mut best: Option<(usize, usize)> = None;
        for (c, &used) in size.iter().enumerate() {
            if must_open && used > 0 {
                continue;
            }
            let conflicts = g
                .neighbours(v)
                .iter()
                .filter(|&&w| colour[w] == c as u8)
                .count();
            if one_class && conflicts > 0 && adjacent_class.is_some_and(|a| a != c) {
                continue;
            }
            if best.is_none_or(|(_, bc)| conflicts < bc) {
                best = Some((c, conflicts));
            }
        }
        let (c, conflicts) = best.expect("an unused or the adjacent colour is always allowed");
        if conflicts > 0 {
            adjacent_class = Some(c);
        }
        colour[v] = c as u8;
        size[c] += 1;
    }

    loop {
        let mut improved = false;
        for v in 0..n {
            let cur = colour[v] as usize;
            if surjective && size[cur] == 1 {
                continue;
            }
            let conf = |c: usize, colour: &[u8]| {
                g.neighbours(v)
                    .iter()
                    .filter(|&&w| colour[w] == c as u8)
                    .count()
            };
            let here = conf(cur, &colour);
            for c in 0..k {
                if c == cur || conf(c, &colour) >= here {
                    continue;
                }
                colour[v] = c as u8;
                if !one_class || adjacent_classes(g, &colour) <= 1 {
                    size[cur] -= 1;
                    size[c] += 1;
                    improved = true;
                    break;
                }
                colour[v] = cur as u8;
            }
        }
        if !improved {
            break;
        }
    }
    colour
}

fn adjacent_classes(g: &Graph, colour: &[u8]) -> usize {
    let mut seen = [false; 256];
    for &(u, v) in g.edges() {
        if colour[u] == colour[v] {
            seen[colour[u] as usize] = true;
        }
    }
    seen.iter().filter(|&&s| s).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_valid, Colouring};
    use crate::graph::{complete, cycle, helm};

    #[test]
    fn always_admissible() {
        let graphs = [complete(6).unwrap(), cycle(9).unwrap(), helm(5).unwrap().0];
        for g in &graphs {
            for k in 1..=4 {
                for rule in RuleMode::ALL {
                    let c = greedy_local_search(g, k, rule, true);
                    let c = Colouring::from_zero_based(&c, k);
                    assert!(is_valid(g, &c, rule, true).unwrap(), "{g:?} k={k} {rule}");
                }
            }
        }
    }
}
