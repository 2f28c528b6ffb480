//! Exact computation of weighted Ramsey numbers `wram(n, k)` for small `n`,
//! fractional and integral triangle packing/covering invariants of graphs,
//! and the Turán-type bound tables that bracket `wram(n, k)` for large `n`.
//!
//! All arithmetic is exact: every weight, LP optimum and bound is a
//! [`Rational`].

pub mod bounds;
pub mod error;
pub mod exactnum;
pub mod graphs;
pub mod packing;
pub mod weighted_ramsey;

pub use error::{Error, Result};
pub use exactnum::{format_rational, parse_rational, LpProblem, LpSolution, LpStatus, Rational};
pub use graphs::{CanonicalKey, Color, Graph, TwoColoring};
pub use packing::{SubgraphDescriptor, SubgraphWeights};
pub use weighted_ramsey::{WeightAssignment, WramResult};
