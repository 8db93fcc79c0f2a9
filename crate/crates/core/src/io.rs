//! Graph text formats.
//!
//! Canonical edge list: first non-comment line `n m`, then `m` lines `u v`
//! with 0-based endpoints; lines starting with `#` are comments. DIMACS
//! (`p edge n m`, `e u v` with 1-based endpoints, `c` comments) is accepted
//! on input and converted to 0-based indices.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::coloring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected a header"))?;

    let dimacs = header.starts_with('p') || header.starts_with('c');
    let mut lines: Box<dyn Iterator<Item = (usize, &str)>> = if dimacs {
        Box::new(std::iter::once((hline, header)).chain(lines).filter(|(_, l)| !l.starts_with('c')))
    } else {
        Box::new(std::iter::once((hline, header)).chain(lines))
    };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(hline, "missing problem line"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = if dimacs {
        match toks.as_slice() {
            ["p", "edge" | "edges" | "col", n, m] => (number(hline, n)?, number(hline, m)?),
            _ => return Err(Error::parse(hline, format!("malformed DIMACS header `{header}`"))),
        }
    } else {
        match toks.as_slice() {
            [n, m] => (number(hline, n)?, number(hline, m)?),
            _ => return Err(Error::parse(hline, format!("expected header `n m`, got `{header}`"))),
        }
    };

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let (u, v) = if dimacs {
            match toks.as_slice() {
                ["e", u, v] => {
                    let (u, v) = (number(line, u)?, number(line, v)?);
                    if u == 0 || v == 0 {
                        return Err(Error::parse(line, "DIMACS vertices are 1-based"));
                    }
                    (u - 1, v - 1)
                }
                _ => return Err(Error::parse(line, format!("expected `e u v`, got `{text}`"))),
            }
        } else {
            match toks.as_slice() {
                [u, v] => (number(line, u)?, number(line, v)?),
                _ => return Err(Error::parse(line, format!("expected `u v`, got `{text}`"))),
            }
        };
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("endpoint out of range 0..{n} in `{text}`")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
}

/// Canonical edge list, edges sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Graphviz rendering; with a colouring every vertex carries its colour as
/// a `colour` attribute.
pub fn to_dot(g: &Graph, colouring: Option<&Colouring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match colouring {
            Some(c) => {
                let _ = writeln!(out, "  {v} [colour={}];", c.colour_of(v));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
