//! Minimum vertex cover of the bad-edge subgraph.

use crate::coloring::{bad_edges, Colouring};
use crate::error::Result;
use crate::graph::Graph;

/// Smallest vertex set touching every bad edge of `c`; among covers of
/// minimum size, the lexicographically smallest sorted set.
pub fn bad_edge_vertex_cover(g: &Graph, c: &Colouring) -> Result<Vec<usize>> {
    let bad = bad_edges(g, c)?;
    if bad.count == 0 {
        return Ok(Vec::new());
    }
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in &bad.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let touched: Vec<usize> = (0..g.n()).filter(|&v| !adj[v].is_empty()).collect();

    // iterative deepening: the first budget that succeeds is the minimum,
    // and include-before-exclude in index order yields the smallest set
    for budget in 1..=touched.len() {
        let mut chosen = vec![false; g.n()];
        let mut out = Vec::new();
        if cover_within(&adj, &touched, 0, budget, &mut chosen, &mut out) {
            out.sort_unstable();
            return Ok(out);
        }
    }
    unreachable!("all touched vertices always form a cover")
}

fn cover_within(
    adj: &[Vec<usize>],
    order: &[usize],
    idx: usize,
    budget: usize,
    chosen: &mut [bool],
    out: &mut Vec<usize>,
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    let open: Vec<usize> = adj[v].iter().copied().filter(|&w| !chosen[w]).collect();
    if chosen[v] || open.is_empty() {
        return cover_within(adj, order, idx + 1, budget, chosen, out);
    }
    // every remaining uncovered edge needs one of its endpoints
    if budget == 0 {
        return false;
    }

    chosen[v] = true;
    out.push(v);
    if cover_within(adj, order, idx + 1, budget - 1, chosen, out) {
        return true;
    }
    out.pop();
    chosen[v] = false;

    // leaving v out forces all of its open neighbours in
    if open.len() <= budget {
        for &w in &open {
            chosen[w] = true;
            out.push(w);
        }
        if cover_within(adj, order, idx + 1, budget - open.len(), chosen, out) {
            return true;
        }
        for &w in &open {
            chosen[w] = false;
            out.pop();
        }
    }
    false
}
