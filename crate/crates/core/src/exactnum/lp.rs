//! Dense two-phase simplex over exact rationals.
//!
//! Every variable is bounded below by zero. Pivoting follows Bland's rule, so
//! degenerate problems cannot cycle. Dual values are read off the reduced
//! costs of each row's initial identity column, which gives a primal/dual
//! certificate pair without a second solve.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }
}

/// One row `sum coeffs[j].1 * x[coeffs[j].0]  (relation)  rhs`. Repeated
/// indices are summed.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub sense: Sense,
    pub constraints: Vec<Constraint>,
}

impl LpProblem {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        LpProblem {
            num_vars: objective.len(),
            objective,
            sense,
            constraints: Vec::new(),
        }
    }

    pub fn maximize(objective: Vec<Rational>) -> Self {
        Self::new(Sense::Maximize, objective)
    }

    pub fn minimize(objective: Vec<Rational>) -> Self {
        Self::new(Sense::Minimize, objective)
    }

    pub fn add_constraint(
        &mut self,
        coeffs: Vec<(usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.objective.len() != self.num_vars {
            return Err(Error::input(format!(
                "objective has {} coefficients for {} variables",
                self.objective.len(),
                self.num_vars
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if let Some(&(j, _)) = c.coeffs.iter().find(|(j, _)| *j >= self.num_vars) {
                return Err(Error::input(format!(
                    "constraint {i} references variable {j} but there are only {}",
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// Dense left-hand side of row `i`.
    fn dense_row(&self, i: usize) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.num_vars];
        for (j, a) in &self.constraints[i].coeffs {
            row[*j] += a;
        }
        row
    }

    fn row_activity(&self, i: usize, x: &[Rational]) -> Rational {
        self.constraints[i]
            .coeffs
            .iter()
            .fold(Rational::zero(), |acc, (j, a)| acc + a * &x[*j])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of [`solve_lp`].
///
/// Dual sign conventions follow the textbook pairing. For a maximization,
/// `y_i >= 0` on `<=` rows, `y_i <= 0` on `>=` rows, and `A^T y >= c`. For a
/// minimization, `y_i >= 0` on `>=` rows, `y_i <= 0` on `<=` rows, and
/// `A^T y <= c`. Equality rows are free. In both cases `b^T y` equals the
/// optimum.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub optimum: Option<Rational>,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

impl LpSolution {
    fn without_optimum(status: LpStatus) -> Self {
        LpSolution {
            status,
            optimum: None,
            primal: Vec::new(),
            dual: Vec::new(),
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    reduced: Vec<Rational>,
    value: Rational,
}

struct Unbounded;

impl Tableau {
    fn ncols(&self) -> usize {
        self.reduced.len()
    }

    fn set_costs(&mut self, cost: &[Rational]) {
        let mut reduced: Vec<Rational> = cost.iter().map(|c| -c).collect();
        let mut value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (d, a) in reduced.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *d += cb * a;
                }
            }
            value += cb * &self.rhs[i];
        }
        self.reduced = reduced;
        self.value = value;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut().filter(|x| !x.is_zero()) {
                *x /= &p;
            }
            self.rhs[r] /= &p;
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        let support: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();

        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot_row[j];
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.reduced[c].is_zero() {
            let f = self.reduced[c].clone();
            for &j in &support {
                self.reduced[j] -= &f * &pivot_row[j];
            }
            self.value -= &f * &pivot_rhs;
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column enters; among tied ratios
    /// the lowest-index basic variable leaves.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Result<(), Unbounded> {
        loop {
            let Some(enter) = (0..self.ncols()).find(|&j| allowed(j) && self.reduced[j].is_negative())
            else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = &row[enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Err(Unbounded),
            }
        }
    }
}

/// Solves `problem` exactly. Identical input always yields identical output.
pub fn solve_lp(problem: &LpProblem) -> Result<LpSolution> {
    problem.validate()?;
    let n = problem.num_vars;
    let m = problem.constraints.len();

    // Normalize to nonnegative right-hand sides.
    let mut signs = Vec::with_capacity(m);
    let mut dense = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut rels = Vec::with_capacity(m);
    for i in 0..m {
        let c = &problem.constraints[i];
        let mut row = problem.dense_row(i);
        if c.rhs.is_negative() {
            row.iter_mut().for_each(|a| *a = -&*a);
            signs.push(-1i8);
            rhs.push(-&c.rhs);
            rels.push(c.relation.flipped());
        } else {
            signs.push(1);
            rhs.push(c.rhs.clone());
            rels.push(c.relation);
        }
        dense.push(row);
    }

    // Column layout: structural, then one slack/surplus per inequality, then
    // one artificial per >= or = row.
    let num_slack = rels.iter().filter(|r| **r != Relation::Eq).count();
    let num_art = rels.iter().filter(|r| **r != Relation::Le).count();
    let ncols = n + num_slack + num_art;
    let art_start = n + num_slack;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut identity_col = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (n, art_start);
    for (i, mut row) in dense.into_iter().enumerate() {
        row.resize(ncols, Rational::zero());
        match rels[i] {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                identity_col.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                identity_col.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                identity_col.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        reduced: vec![Rational::zero(); ncols],
        value: Rational::zero(),
    };
    let is_art = |j: usize| j >= art_start;

    if num_art > 0 {
        let cost: Vec<Rational> = (0..ncols)
            .map(|j| if is_art(j) { -Rational::one() } else { Rational::zero() })
            .collect();
        tab.set_costs(&cost);
        if tab.run(|_| true).is_err() {
            // Phase one is bounded by zero; reaching here is a solver bug.
            return Err(Error::contract("phase one reported unbounded"));
        }
        if tab.value.is_negative() {
            return Ok(LpSolution::without_optimum(LpStatus::Infeasible));
        }
        // Drive zero-level artificials out of the basis where possible. Rows
        // where that fails are redundant and keep their artificial at zero.
        for r in 0..m {
            if is_art(tab.basis[r]) {
                if let Some(j) = (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                    tab.pivot(r, j);
                }
            }
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for (j, c) in problem.objective.iter().enumerate() {
        cost[j] = match problem.sense {
            Sense::Maximize => c.clone(),
            Sense::Minimize => -c,
        };
    }
    tab.set_costs(&cost);
    if tab.run(|j| !is_art(j)).is_err() {
        return Ok(LpSolution::without_optimum(LpStatus::Unbounded));
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            primal[b] = tab.rhs[i].clone();
        }
    }
    let flip = problem.sense == Sense::Minimize;
    let dual = (0..m)
        .map(|i| {
            let y = &tab.reduced[identity_col[i]];
            let y = if signs[i] < 0 { -y } else { y.clone() };
            if flip {
                -y
            } else {
                y
            }
        })
        .collect();
    let optimum = if flip { -&tab.value } else { tab.value.clone() };

    Ok(LpSolution {
        status: LpStatus::Optimal,
        optimum: Some(optimum),
        primal,
        dual,
    })
}

/// Exact verification of an optimal solution: primal feasibility, dual
/// feasibility (signs and reduced costs), and equal objective values.
pub fn check_certificates(problem: &LpProblem, solution: &LpSolution) -> bool {
    if problem.validate().is_err() || solution.status != LpStatus::Optimal {
        return false;
    }
    let Some(optimum) = &solution.optimum else {
        return false;
    };
    let x = &solution.primal;
    let y = &solution.dual;
    if x.len() != problem.num_vars || y.len() != problem.constraints.len() {
        return false;
    }
    if x.iter().any(|v| v.is_negative()) {
        return false;
    }
    for (i, c) in problem.constraints.iter().enumerate() {
        let lhs = problem.row_activity(i, x);
        let ok = match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Ge => lhs >= c.rhs,
            Relation::Eq => lhs == c.rhs,
        };
        if !ok {
            return false;
        }
    }

    let max = problem.sense == Sense::Maximize;
    for (c, yi) in problem.constraints.iter().zip(y) {
        let sign_ok = match (c.relation, max) {
            (Relation::Eq, _) => true,
            (Relation::Le, true) | (Relation::Ge, false) => !yi.is_negative(),
            (Relation::Ge, true) | (Relation::Le, false) => !yi.is_positive(),
        };
        if !sign_ok {
            return false;
        }
    }
    let mut aty = vec![Rational::zero(); problem.num_vars];
    for (c, yi) in problem.constraints.iter().zip(y) {
        if yi.is_zero() {
            continue;
        }
        for (j, a) in &c.coeffs {
            aty[*j] += a * yi;
        }
    }
    let reduced_ok = aty
        .iter()
        .zip(&problem.objective)
        .all(|(lhs, cj)| if max { lhs >= cj } else { lhs <= cj });
    if !reduced_ok {
        return false;
    }

    let primal_obj = x
        .iter()
        .zip(&problem.objective)
        .fold(Rational::zero(), |acc, (xj, cj)| acc + xj * cj);
    let dual_obj = problem
        .constraints
        .iter()
        .zip(y)
        .fold(Rational::zero(), |acc, (c, yi)| acc + &c.rhs * yi);
    primal_obj == *optimum && dual_obj == *optimum
}
