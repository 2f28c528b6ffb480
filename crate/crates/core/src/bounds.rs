//! Closed-form bounds on `W(k) = lim wram(n, k)`: the lower bound
//! `L(k) = 1 / c(k)` built from Ramsey and Turán numbers, the upper bound
//! `U(k)`, and the two explicit weightings behind `U(k)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, serde_rational, Rational};
use crate::graphs::{balanced_blowup, mono_triangle_free_k5, num_pairs, turan_number, Color, Graph, TwoColoring};
use crate::weighted_ramsey::{sample_mono_loads, scan_mono_loads, LoadScan, WeightAssignment};

/// Upper bounds on `R(i) - 1` for `i = 3..=8`.
const UR: [u64; 6] = [5, 17, 48, 164, 539, 1869];

/// Constructions are scanned exhaustively up to this many `k`-subsets and
/// sampled beyond it.
pub const EXHAUSTIVE_SCAN_LIMIT: u128 = 1_000_000;
/// Random `k`-subsets drawn when a scan is not exhaustive.
pub const SAMPLED_SETS: u64 = 100_000;
const SCAN_SEED: u64 = 0x5eed;

pub fn ur(i: u64) -> Result<u64> {
    if !(3..=8).contains(&i) {
        return Err(Error::input(format!("UR(i) is tabled for 3 <= i <= 8, got {i}")));
    }
    Ok(UR[(i - 3) as usize])
}

fn t(k: u64, i: u64) -> Result<Rational> {
    Ok(Rational::from_integer(turan_number(k, i)?.into()))
}

/// `t(k,2)/t(k,i-1) - t(k,2)/t(k,i)`.
pub fn alpha(k: u64, i: u64) -> Result<Rational> {
    if i < 3 || i > k {
        return Err(Error::input(format!("alpha needs 3 <= i <= k, got k={k}, i={i}")));
    }
    let t2 = t(k, 2)?;
    Ok(&t2 / t(k, i - 1)? - &t2 / t(k, i)?)
}

fn quarter_square(k: u64) -> Rational {
    Rational::from_integer((k * k / 4).into())
}

/// `(2/k^2) floor(k^2/4) (1/((i-1)(i-2)) - (i/(i-1)) / (4k-5))`, a lower
/// bound on `alpha(k, i)` for `k >= 9`.
pub fn alpha_lower(k: u64, i: u64) -> Result<Rational> {
    if k < 9 {
        return Err(Error::input(format!("alpha_lower needs k >= 9, got {k}")));
    }
    if !(3..=8).contains(&i) {
        return Err(Error::input(format!("alpha_lower needs 3 <= i <= 8, got {i}")));
    }
    let (k, i) = (k as i64, i as i64);
    let lead = rat(2, k * k) * quarter_square(k as u64);
    Ok(lead * (rat(1, (i - 1) * (i - 2)) - rat(i, (i - 1) * (4 * k - 5))))
}

/// The `alpha` value entering `c(k)`: exact up to `k = 8`, the lower bound
/// from `k = 9` on.
fn alpha_used(k: u64, i: u64) -> Result<Rational> {
    if k <= 8 {
        alpha(k, i)
    } else {
        alpha_lower(k, i)
    }
}

/// `(1/t(k,2)) (1 - sum_{i=3}^{min(k,8)} alpha(k,i)/UR(i))`.
pub fn c_of_k(k: u64) -> Result<Rational> {
    if k < 4 {
        return Err(Error::input(format!("c(k) needs k >= 4, got {k}")));
    }
    let mut s = Rational::one();
    for i in 3..=k.min(8) {
        s -= alpha_used(k, i)? / Rational::from_integer(ur(i)?.into());
    }
    Ok(s / t(k, 2)?)
}

pub fn lower_bound_l(k: u64) -> Result<Rational> {
    Ok(c_of_k(k)?.recip())
}

/// `24/5` for `k = 4`, `5 floor(k^2/4) / 4` for `k >= 5`.
pub fn upper_bound_u(k: u64) -> Result<Rational> {
    match k {
        0..=3 => Err(Error::input(format!("U(k) needs k >= 4, got {k}"))),
        4 => Ok(rat(24, 5)),
        _ => Ok(rat(5, 4) * quarter_square(k)),
    }
}

fn decimal(s: &str) -> Rational {
    crate::exactnum::parse_rational(s).expect("static decimal")
}

/// `0.94405 + 0.05596/k^2 + 0.20729/(4k-5)`, an upper bound on
/// `c(k) t(k,2)` for `k >= 9`.
pub fn ck_large_expression(k: u64) -> Result<Rational> {
    if k < 9 {
        return Err(Error::input(format!("expression needs k >= 9, got {k}")));
    }
    let k = k as i64;
    Ok(decimal("0.94405") + decimal("0.05596") / int(k * k) + decimal("0.20729") / int(4 * k - 5))
}

/// Smallest `k >= 9` with `ck_large_expression(k) < bound`. The expression
/// decreases in `k` towards `0.94405`, so a binary search applies.
pub fn ck_large_threshold(bound: &Rational) -> Result<u64> {
    if *bound <= decimal("0.94405") {
        return Err(Error::input("the expression never drops below 0.94405"));
    }
    let (mut lo, mut hi) = (9u64, 9u64);
    while ck_large_expression(hi)? >= *bound {
        lo = hi;
        hi *= 2;
    }
    if ck_large_expression(lo)? < *bound {
        return Ok(lo);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ck_large_expression(mid)? < *bound {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// One row of the `c(k)` computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub i: u64,
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    pub ur: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub k: u64,
    #[serde(with = "serde_rational")]
    pub c_k: Rational,
    #[serde(with = "serde_rational")]
    pub lower_bound: Rational,
    #[serde(with = "serde_rational")]
    pub upper_bound: Rational,
    pub table_rows: Vec<AlphaRow>,
}

pub fn bounds_report(k: u64) -> Result<BoundsReport> {
    let c_k = c_of_k(k)?;
    let table_rows = (3..=k.min(8))
        .map(|i| Ok(AlphaRow { i, alpha: alpha_used(k, i)?, ur: ur(i)? }))
        .collect::<Result<_>>()?;
    Ok(BoundsReport { k, lower_bound: c_k.recip(), c_k, upper_bound: upper_bound_u(k)?, table_rows })
}

/// An explicit coloring and weighting, with the largest single-color load
/// found on any `k`-subset.
#[derive(Clone, Debug, PartialEq)]
pub struct Construction {
    pub coloring: TwoColoring,
    pub weights: WeightAssignment,
    pub total: Rational,
    pub scan: LoadScan,
}

impl Construction {
    /// `C(n,2) / total`, an upper bound on `wram(n, k)` once the loads are
    /// at most 1.
    pub fn implied_bound(&self) -> Rational {
        int(num_pairs(self.coloring.n()) as i64) / &self.total
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k as u128).fold(1u128, |acc, j| acc * (n as u128 - j) / (j + 1))
}

fn verified(coloring: TwoColoring, weights: WeightAssignment, k: usize) -> Result<Construction> {
    let scan = if binomial(coloring.n() as u64, k as u64) <= EXHAUSTIVE_SCAN_LIMIT {
        scan_mono_loads(&coloring, &weights, k)?
    } else {
        sample_mono_loads(&coloring, &weights, k, SAMPLED_SETS, SCAN_SEED)?
    };
    if scan.max_load > Rational::one() {
        return Err(Error::contract(format!("a monochromatic {k}-subgraph carries {}", scan.max_load)));
    }
    let total = weights.total();
    Ok(Construction { coloring, weights, total, scan })
}

/// Red complete bipartite graph with balanced sides; red edges weigh 1/4,
/// blue edges 1/6. Total `(5/24) C(n,2) + (1/24) floor(n/2)`.
pub fn construction_k4(n: usize) -> Result<Construction> {
    if n < 4 {
        return Err(Error::input(format!("construction needs n >= 4, got {n}")));
    }
    let half = n / 2;
    let mut red = Graph::empty(n)?;
    for u in 0..half {
        for v in half..n {
            red.add_edge(u, v);
        }
    }
    let coloring = TwoColoring::from_red(red);
    let weights = WeightAssignment::from_fn(n, |u, v| match coloring.color(u, v) {
        Color::Red => rat(1, 4),
        Color::Blue => rat(1, 6),
    })?;
    let out = verified(coloring, weights, 4)?;
    let expected = rat(5, 24) * int(num_pairs(n) as i64) + rat(half as i64, 24);
    if out.total != expected {
        return Err(Error::contract(format!("total {} differs from {expected}", out.total)));
    }
    Ok(out)
}

/// Balanced blow-up of the triangle-free 2-coloring of `K_5`; edges between
/// parts weigh `1/floor(k^2/4)`, edges inside parts weigh 0. Each color
/// among cross edges is triangle-free, so a `k`-subset holds at most
/// `floor(k^2/4)` of them. Total `t(n,5) / floor(k^2/4)`.
pub fn construction_blowup(n: usize, k: usize) -> Result<Construction> {
    if k < 5 {
        return Err(Error::input(format!("blow-up construction needs k >= 5, got {k}")));
    }
    let min_n = 5 * k.div_ceil(2);
    if n < min_n {
        return Err(Error::input(format!("blow-up construction needs n >= {min_n}, got {n}")));
    }
    construction_blowup_unrestricted(n, k)
}

/// The same weighting for any `n >= 5` and `k >= 5` with `k <= n`. Below
/// `n = 5 ceil(k/2)` the loads stay at most 1 but no `k`-subset need reach 1.
pub fn construction_blowup_unrestricted(n: usize, k: usize) -> Result<Construction> {
    if k < 5 || n < k {
        return Err(Error::input(format!("blow-up weighting needs 5 <= k <= n, got n={n}, k={k}")));
    }
    let coloring = balanced_blowup(&mono_triangle_free_k5(), n)?;
    let part = crate::graphs::balanced_parts(n, 5)?;
    let w = Rational::from_integer((k * k / 4).into()).recip();
    let weights = WeightAssignment::from_fn(n, |u, v| if part[u] == part[v] { Rational::zero() } else { w.clone() })?;
    let out = verified(coloring, weights, k)?;
    let expected = t(n as u64, 5)? * &w;
    if out.total != expected {
        return Err(Error::contract(format!("total {} differs from {expected}", out.total)));
    }
    Ok(out)
}

/// `floor(k^2/4)`, also `t(k, 2)`.
pub fn quarter_square_floor(k: u64) -> u64 {
    k * k / 4
}
