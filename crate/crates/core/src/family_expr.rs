//! `name:param` family expressions, e.g. `cycle:7`, `join(complete:3,complete:3)`.

use std::fmt;
use std::str::FromStr;

use crate::closed_forms::{bk_complete, bk_cycle_odd, bk_helm, bk_path, bk_wheel, FamilyResult};
use crate::error::{Error, Result};
use crate::graph::{self, Graph, VertexLabelMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyExpr {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Helm(usize),
    Complete(usize),
    Union(Box<FamilyExpr>, Box<FamilyExpr>),
    Join(Box<FamilyExpr>, Box<FamilyExpr>),
    Corona(Box<FamilyExpr>, Box<FamilyExpr>),
}

impl FamilyExpr {
    pub fn build(&self) -> Result<(Graph, Option<VertexLabelMap>)> {
        use FamilyExpr::*;
        Ok(match self {
            Path(n) => (graph::path(*n)?, None),
            Cycle(n) => (graph::cycle(*n)?, None),
            Complete(n) => (graph::complete(*n)?, None),
            Wheel(n) => {
                let (g, l) = graph::wheel(*n)?;
                (g, Some(l))
            }
            Helm(n) => {
                let (g, l) = graph::helm(*n)?;
                (g, Some(l))
            }
            Union(a, b) | Join(a, b) | Corona(a, b) => {
                let (ga, gb) = (a.graph()?, b.graph()?);
                let (g, l) = match self {
                    Union(..) => graph::disjoint_union(&ga, &gb),
                    Join(..) => graph::join(&ga, &gb),
                    _ => graph::corona(&ga, &gb),
                };
                (g, Some(l))
            }
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        Ok(self.build()?.0)
    }

    /// Closed-form value for this family and colour budget, if one exists.
    pub fn closed_form(&self, k: usize) -> Option<FamilyResult> {
        match *self {
            FamilyExpr::Path(n) if k == 1 => bk_path(n).ok(),
            FamilyExpr::Cycle(n) if k == 2 => bk_cycle_odd(n).ok(),
            FamilyExpr::Wheel(n) => bk_wheel(n, k).ok(),
            FamilyExpr::Helm(n) => bk_helm(n, k).ok(),
            FamilyExpr::Complete(n) => bk_complete(n, k).ok(),
            _ => None,
        }
    }

    /// Operands of a binary expression.
    pub fn operands(&self) -> Option<(&FamilyExpr, &FamilyExpr)> {
        match self {
            FamilyExpr::Union(a, b) | FamilyExpr::Join(a, b) | FamilyExpr::Corona(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyExpr::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            Helm(n) => write!(f, "helm:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Union(a, b) => write!(f, "union({a},{b})"),
            Join(a, b) => write!(f, "join({a},{b})"),
            Corona(a, b) => write!(f, "corona({a},{b})"),
        }
    }
}

impl FromStr for FamilyExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (name, ctor) in [
            ("union", FamilyExpr::Union as fn(_, _) -> _),
            ("join", FamilyExpr::Join),
            ("corona", FamilyExpr::Corona),
        ] {
            if let Some(rest) = s.strip_prefix(name).and_then(|r| r.strip_prefix('(')) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::param(format!("missing `)` in `{s}`")))?;
                let (a, b) = split_top_level(inner)
                    .ok_or_else(|| Error::param(format!("`{name}` needs two operands in `{s}`")))?;
                return Ok(ctor(Box::new(a.parse()?), Box::new(b.parse()?)));
            }
        }
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("expected name:param, got `{s}`")))?;
        let n: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::param(format!("bad family parameter `{param}`")))?;
        match name.trim() {
            "path" => Ok(FamilyExpr::Path(n)),
            "cycle" => Ok(FamilyExpr::Cycle(n)),
            "wheel" => Ok(FamilyExpr::Wheel(n)),
            "helm" => Ok(FamilyExpr::Helm(n)),
            "complete" => Ok(FamilyExpr::Complete(n)),
            other => Err(Error::param(format!("unknown family `{other}`"))),
        }
    }
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
