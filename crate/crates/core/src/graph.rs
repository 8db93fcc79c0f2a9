//! Simple undirected graphs, the named families used throughout the crate and
//! the three binary operations (disjoint union, join, corona).
//!
//! Vertices are dense indices `0..n`. Generators fix a canonical indexing so
//! that colouring counts and witnesses are reproducible:
//!
//! * wheel / helm: hub = 0, rim vertex `i` = `i` for `1..=n`, pendant of rim
//!   `i` = `n + i`;
//! * union / join: left operand first, then the right operand shifted by
//!   `n_g`;
//! * corona: `G` first, then copy `i` of `H` at `n_g + i * n_h ..`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Normalised `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbour lists.
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of connected components (0 for the empty vertex set).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the order
    /// given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::param(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::param(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(keep.len(), edges)
    }
}

/// Semantic names for the vertices of a generated graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexLabelMap {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl VertexLabelMap {
    fn push(&mut self, label: String) {
        let v = self.labels.len();
        let prev = self.index.insert(label.clone(), v);
        debug_assert!(prev.is_none(), "duplicate label {label}");
        self.labels.push(label);
    }

    fn extend_prefixed(&mut self, prefix: &str, count: usize) {
        for i in 0..count {
            self.push(format!("{prefix}[{i}]"));
        }
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertices whose label starts with `prefix`, in index order.
    pub fn vertices_with_prefix(&self, prefix: &str) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.starts_with(prefix))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.labels.iter().enumerate().map(|(v, l)| (v, l.as_str()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("path needs n >= 2, got {n}")));
    }
    Ok(Graph::from_sorted_unique(n, (0..n - 1).map(|i| (i, i + 1)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Wheel `W_{1,n}`: rim `C_n` plus a hub adjacent to every rim vertex.
pub fn wheel(n: usize) -> Result<(Graph, VertexLabelMap)> {
    if n < 3 {
        return Err(Error::param(format!("wheel needs n >= 3, got {n}")));
    }
    let (edges, labels) = wheel_parts(n);
    Ok((Graph::new(n + 1, edges)?, labels))
}

fn wheel_parts(n: usize) -> (Vec<(usize, usize)>, VertexLabelMap) {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (i, i % n + 1)));
    let mut labels = VertexLabelMap::default();
    labels.push("hub".to_string());
    for i in 1..=n {
        labels.push(format!("rim[{i}]"));
    }
    (edges, labels)
}

/// Helm `H_{1,n}`: a wheel with one pendant vertex hung on each rim vertex.
pub fn helm(n: usize) -> Result<(Graph, VertexLabelMap)> {
    if n < 3 {
        return Err(Error::param(format!("helm needs n >= 3, got {n}")));
    }
    let (mut edges, mut labels) = wheel_parts(n);
    for i in 1..=n {
        edges.push((i, n + i));
        labels.push(format!("pendant[{i}]"));
    }
    Ok((Graph::new(2 * n + 1, edges)?, labels))
}

fn shifted(g: &Graph, by: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().iter().map(move |&(u, v)| (u + by, v + by))
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> (Graph, VertexLabelMap) {
    let edges: Vec<_> = g.edges().iter().copied().chain(shifted(h, g.n)).collect();
    let mut labels = VertexLabelMap::default();
    labels.extend_prefixed("G", g.n);
    labels.extend_prefixed("H", h.n);
    let graph = Graph::new(g.n + h.n, edges).expect("union of simple graphs is simple");
    (graph, labels)
}

/// Join `G + H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> (Graph, VertexLabelMap) {
    let mut edges: Vec<_> = g.edges().iter().copied().chain(shifted(h, g.n)).collect();
    for u in 0..g.n {
        for v in 0..h.n {
            edges.push((u, g.n + v));
        }
    }
    let mut labels = VertexLabelMap::default();
    labels.extend_prefixed("G", g.n);
    labels.extend_prefixed("H", h.n);
    let graph = Graph::new(g.n + h.n, edges).expect("join of simple graphs is simple");
    (graph, labels)
}

/// Corona `G ∘ H`: vertex `i` of `G` is joined to every vertex of its own
/// copy `H[i]` of `H`.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, VertexLabelMap) {
    let mut edges: Vec<_> = g.edges().to_vec();
    let mut labels = VertexLabelMap::default();
    labels.extend_prefixed("G", g.n);
    for i in 0..g.n {
        let base = g.n + i * h.n;
        edges.extend(shifted(h, base));
        for j in 0..h.n {
            edges.push((i, base + j));
            labels.push(format!("H[{i}][{j}]"));
        }
    }
    let graph = Graph::new(g.n * (1 + h.n), edges).expect("corona of simple graphs is simple");
    (graph, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn path_shapes() {
        assert_eq!(path(2).unwrap().m(), 1);
        let p5 = path(5).unwrap();
        assert_eq!(p5.degrees(), vec![1, 2, 2, 2, 1]);
        assert!(path(1).is_err());
    }

    #[test]
    fn cycle_degrees() {
        assert!(cycle(2).is_err());
        let c = cycle(7).unwrap();
        assert!(c.degrees().iter().all(|&d| d == 2));
        assert!(c.is_connected());
    }

    #[test]
    fn wheel_three_is_k4() {
        let (w, labels) = wheel(3).unwrap();
        assert_eq!(w, complete(4).unwrap());
        assert_eq!(labels.get("hub"), Some(0));
        assert_eq!(labels.get("rim[3]"), Some(3));
    }

    #[test]
    fn wheel_four() {
        let (w, _) = wheel(4).unwrap();
        assert_eq!((w.n(), w.m()), (5, 8));
        assert_eq!(w.degree(0), 4);
        assert!((1..=4).all(|v| w.degree(v) == 3));
    }

    #[test]
    fn helm_counts() {
        let (h3, _) = helm(3).unwrap();
        assert_eq!((h3.n(), h3.m()), (7, 9));
        let (h4, labels) = helm(4).unwrap();
        assert_eq!((h4.n(), h4.m()), (9, 12));
        for i in 1..=4 {
            let p = labels.get(&format!("pendant[{i}]")).unwrap();
            assert_eq!(h4.neighbours(p), &[i]);
        }
    }

    #[test]
    fn complete_sizes() {
        let k1 = complete(1).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(complete(4).unwrap().m(), 6);
        assert!(complete(0).is_err());
    }

    #[test]
    fn union_of_triangles() {
        let k3 = complete(3).unwrap();
        let (u, labels) = disjoint_union(&k3, &k3);
        assert_eq!((u.n(), u.m(), u.component_count()), (6, 6, 2));
        assert_eq!(labels.vertices_with_prefix("H["), vec![3, 4, 5]);
        let (u2, _) = disjoint_union(&path(2).unwrap(), &cycle(5).unwrap());
        assert_eq!((u2.n(), u2.m()), (7, 6));
    }

    #[test]
    fn join_of_triangles_is_k6() {
        let k3 = complete(3).unwrap();
        let (j, labels) = join(&k3, &k3);
        assert_eq!(j, complete(6).unwrap());
        assert_eq!(labels.vertices_with_prefix("G["), vec![0, 1, 2]);
    }

    #[test]
    fn corona_small_cases() {
        let (c, labels) = corona(&complete(1).unwrap(), &complete(3).unwrap());
        assert_eq!(c, complete(4).unwrap());
        assert_eq!(labels.get("H[0][2]"), Some(3));

        let (c, _) = corona(&cycle(3).unwrap(), &complete(1).unwrap());
        assert_eq!((c.n(), c.m()), (6, 6));
        assert_eq!(c.neighbours(4), &[1]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = cycle(5).unwrap();
        let p4 = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p4, path(4).unwrap());
        assert!(c5.induced_subgraph(&[0, 0]).is_err());
    }
}
