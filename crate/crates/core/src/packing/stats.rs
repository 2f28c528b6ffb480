use num_traits::{One, Zero};
use rayon::prelude::*;

use super::tau_star;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::graphs::{enumerate_colorings, pair_index, Graph, TwoColoring};

/// Largest order accepted by [`tau_integral`] and [`coloring_packing_stats`].
pub const TAU_INTEGRAL_MAX_N: usize = 10;
/// Largest order accepted by [`tau_min_over_colorings`].
pub const TAU_MIN_MAX_N: usize = 7;

fn triangle_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    g.triangles()
        .into_iter()
        .map(|[a, b, c]| 1 << pair_index(n, a, b) | 1 << pair_index(n, a, c) | 1 << pair_index(n, b, c))
        .collect()
}

/// Branch on the lowest edge still usable: either some triangle through it
/// is taken, or the edge is discarded.
fn search(tris: &[u64], blocked: u64, count: usize, best: &mut usize) {
    *best = (*best).max(count);
    let avail: Vec<u64> = tris.iter().copied().filter(|t| t & blocked == 0).collect();
    let cover = avail.iter().fold(0u64, |m, t| m | t);
    if count + cover.count_ones() as usize / 3 <= *best {
        return;
    }
    let e = cover & cover.wrapping_neg();
    for &t in avail.iter().filter(|&&t| t & e != 0) {
        search(&avail, blocked | t, count + 1, best);
    }
    search(&avail, blocked | e, count, best);
}

/// Largest number of pairwise edge-disjoint triangles, by branch and bound.
pub fn tau_integral(g: &Graph) -> Result<usize> {
    if g.n() > TAU_INTEGRAL_MAX_N {
        return Err(Error::capability(format!(
            "integral packing is limited to n <= {TAU_INTEGRAL_MAX_N}, got {}",
            g.n()
        )));
    }
    let mut best = 0;
    search(&triangle_masks(g), 0, 0, &mut best);
    Ok(best)
}

/// Edge-disjoint monochromatic triangles counted over both colors at once.
/// Red and blue triangles never share an edge, so this always equals the
/// per-color sum; it exists to check that.
pub fn tau_joint(c: &TwoColoring) -> Result<usize> {
    if c.n() > TAU_INTEGRAL_MAX_N {
        return Err(Error::capability(format!("n = {} exceeds {TAU_INTEGRAL_MAX_N}", c.n())));
    }
    let mut tris = triangle_masks(c.red());
    tris.extend(triangle_masks(&c.blue()));
    let mut best = 0;
    search(&tris, 0, 0, &mut best);
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringPackingStats {
    pub tau_c: usize,
    pub tau_star_sum: Rational,
}

pub fn coloring_packing_stats(c: &TwoColoring) -> Result<ColoringPackingStats> {
    let n = c.n();
    if n > TAU_INTEGRAL_MAX_N {
        return Err(Error::capability(format!("coloring packing stats need n <= {TAU_INTEGRAL_MAX_N}, got {n}")));
    }
    if n < 3 {
        return Err(Error::input(format!("need at least 3 vertices, got {n}")));
    }
    let (red, blue) = (*c.red(), c.blue());
    Ok(ColoringPackingStats {
        tau_c: tau_integral(&red)? + tau_integral(&blue)?,
        tau_star_sum: tau_star(&red)?.0 + tau_star(&blue)?.0,
    })
}

/// Minimum of `tau(c, 3)` (or its fractional version) over all 2-colorings
/// of `K_n`, with the first minimizing class representative.
pub fn tau_min_over_colorings(n: usize, fractional: bool) -> Result<(Rational, TwoColoring)> {
    if !(3..=TAU_MIN_MAX_N).contains(&n) {
        return Err(Error::capability(format!("minimum over colorings supports 3 <= n <= {TAU_MIN_MAX_N}, got {n}")));
    }
    let reps = enumerate_colorings(n)?;
    let values = reps
        .par_iter()
        .map(|c| {
            let s = coloring_packing_stats(c)?;
            Ok(if fractional { s.tau_star_sum } else { Rational::from_integer(s.tau_c.into()) })
        })
        .collect::<Result<Vec<Rational>>>()?;
    let (idx, v) = values
        .into_iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("at least one class");
    Ok((v, reps[idx]))
}

/// `4 C(n,2) / (n^2 - 2 tau + n)`.
pub fn fo_triangle_bound(n: u64, tau: &Rational) -> Result<Rational> {
    let n = Rational::from_integer(n.into());
    let denom = &n * &n - Rational::from_integer(2.into()) * tau + &n;
    if denom <= Rational::zero() {
        return Err(Error::input(format!("denominator {denom} is not positive")));
    }
    let pairs = &n * (&n - Rational::one()) / Rational::from_integer(2.into());
    Ok(Rational::from_integer(4.into()) * pairs / denom)
}

/// Limit of [`fo_triangle_bound`] when `tau = gamma n^2`: `2 / (1 - 2 gamma)`.
pub fn fo_triangle_limit(gamma: &Rational) -> Result<Rational> {
    let denom = Rational::one() - Rational::from_integer(2.into()) * gamma;
    if denom <= Rational::zero() {
        return Err(Error::input(format!("1 - 2 gamma = {denom} is not positive")));
    }
    Ok(Rational::from_integer(2.into()) / denom)
}
