//! Exact solver and verification toolkit for near proper colourings.
//!
//! A near proper colouring uses exactly `k` colours, with `k` usually below the
//! chromatic number, and minimises the number of *bad* (monochromatic) edges.
//! In the default [`RuleMode::OneClass`] mode at most one colour class may
//! contain adjacent vertices; [`RuleMode::Unrestricted`] drops that rule.
//!
//! The crate is organised as:
//!
//! * [`graph`] - simple undirected graphs, family generators and products,
//! * [`chromatic`] - exact chromatic number,
//! * [`coloring`] - colourings, bad edges, colour usage profiles,
//! * [`solver`] - enumeration oracle, branch and bound, counting, covers,
//! * [`closed_forms`] - closed-form family values, defect polynomials and
//!   union/join/corona bound reports,
//! * [`verify`] - the harness that checks closed forms against the oracle.

pub mod chromatic;
pub mod closed_forms;
pub mod coloring;
mod error;
pub mod family_expr;
pub mod graph;
pub mod io;
pub mod random;
pub mod solver;
pub mod verify;

pub use chromatic::{chromatic_number, chromatic_number_with_cap, DEFAULT_CHROMATIC_CAP};
pub use closed_forms::{BoundOp, BoundOptions, BoundReport, CountClaim, FamilyResult};
pub use coloring::{Colouring, RuleMode, ThetaProfile};
pub use error::{Error, Result};
pub use family_expr::FamilyExpr;
pub use graph::{Graph, VertexLabelMap};
pub use solver::{SolveReport, SolveResult, SolverConfig};
