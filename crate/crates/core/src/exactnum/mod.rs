//! Exact rational arithmetic and the simplex LP solver every other module
//! builds on.

mod lp;
mod rational;

pub use lp::{check_certificates, solve_lp, Constraint, LpProblem, LpSolution, LpStatus, Relation, Sense};
pub use rational::{
    format_rational, int, is_integer, parse_rational, rat, serde_rational, serde_rational_vec, to_decimal,
    to_f64, Rational,
};
