//! The edge-weighting LP of a 2-colored `K_n` and the exhaustive search for
//! `wram(n, k) = C(n,2) / r(n,k)`.
//!
//! For a coloring `c`, `r(c; n, k)` is the largest total edge weight such that
//! inside every `k`-subset, the weight on the edges of each single color is at
//! most 1. `r(n, k)` maximizes that over colorings.

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{seq::index::sample, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{check_certificates, int, serde_rational, solve_lp, LpProblem, LpStatus, Rational, Relation};
use crate::graphs::{
    canonical_key, enumerate_colorings, num_pairs, pair_at, pair_index, Color, TwoColoring, CANONICAL_KEY_MAX_N,
    ENUMERATION_MAX_N,
};

/// Nonnegative weight on every edge of `K_n`, indexed by lexicographic pair
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    n: usize,
    weights: Vec<Rational>,
}

impl WeightAssignment {
    pub fn zero(n: usize) -> Self {
        WeightAssignment { n, weights: vec![Rational::zero(); num_pairs(n)] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let weights: Vec<Rational> = (0..num_pairs(n))
            .map(|i| {
                let (u, v) = pair_at(n, i);
                f(u, v)
            })
            .collect();
        if weights.iter().any(|w| *w < Rational::zero()) {
            return Err(Error::input("edge weights must be nonnegative"));
        }
        Ok(WeightAssignment { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.weights[pair_index(self.n, u, v)]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    pub fn scaled(&self, factor: &Rational) -> WeightAssignment {
        WeightAssignment { n: self.n, weights: self.weights.iter().map(|w| w * factor).collect() }
    }

    /// `(u, v, weight)` in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.weights.iter().enumerate().map(|(i, w)| {
            let (u, v) = pair_at(self.n, i);
            (u, v, w)
        })
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRecord(usize, usize, #[serde(with = "serde_rational")] Rational);

#[derive(Serialize, Deserialize)]
struct WeightAssignmentRepr {
    n: usize,
    weights: Vec<WeightRecord>,
}

impl Serialize for WeightAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightAssignmentRepr {
            n: self.n,
            weights: self.iter().map(|(u, v, w)| WeightRecord(u, v, w.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = WeightAssignmentRepr::deserialize(d)?;
        let mut out = WeightAssignment::zero(repr.n);
        let mut seen = vec![false; num_pairs(repr.n)];
        for WeightRecord(u, v, w) in repr.weights {
            if u >= repr.n || v >= repr.n || u == v {
                return Err(D::Error::custom(format!("bad edge {u} {v}")));
            }
            if w < Rational::zero() {
                return Err(D::Error::custom("negative weight"));
            }
            let i = pair_index(repr.n, u, v);
            seen[i] = true;
            out.weights[i] = w;
        }
        if seen.iter().any(|s| !s) {
            return Err(D::Error::custom("weight assignment must cover every edge"));
        }
        Ok(out)
    }
}

/// The maximal monochromatic subgraph of one color on one `k`-subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoConstraint {
    pub vertices: Vec<usize>,
    pub color: Color,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoConstraintSet {
    pub k: usize,
    pub constraints: Vec<MonoConstraint>,
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 3 || k > n {
        return Err(Error::input(format!("need 3 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// One constraint per (`k`-subset, color) whose color class is nonempty on
/// that subset, in lexicographic subset order with red before blue.
pub fn build_constraints(c: &TwoColoring, k: usize) -> Result<MonoConstraintSet> {
    let n = c.n();
    check_k(n, k)?;
    let mut constraints = Vec::new();
    for set in (0..n).combinations(k) {
        for color in Color::BOTH {
            let edges: Vec<(usize, usize)> = set
                .iter()
                .tuple_combinations()
                .filter(|&(&u, &v)| c.color(u, v) == color)
                .map(|(&u, &v)| (u, v))
                .collect();
            if !edges.is_empty() {
                constraints.push(MonoConstraint { vertices: set.clone(), color, edges });
            }
        }
    }
    Ok(MonoConstraintSet { k, constraints })
}

/// The LP of `r(c; n, k)` with one variable per edge. Rows whose edge set is
/// contained in another row's are dropped; with nonnegative weights they can
/// never bind alone.
pub fn coloring_lp(c: &TwoColoring, k: usize) -> Result<LpProblem> {
    let n = c.n();
    let set = build_constraints(c, k)?;
    let mut masks: Vec<u128> = set
        .constraints
        .iter()
        .map(|m| m.edges.iter().fold(0u128, |acc, &(u, v)| acc | 1 << pair_index(n, u, v)))
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let maximal: Vec<u128> = masks
        .iter()
        .copied()
        .filter(|&s| !masks.iter().any(|&t| t != s && s & !t == 0))
        .collect();

    let mut lp = LpProblem::maximize(vec![Rational::one(); num_pairs(n)]);
    for mask in maximal {
        let row = (0..num_pairs(n)).filter(|i| mask >> i & 1 == 1).map(|i| (i, Rational::one())).collect();
        lp.add_constraint(row, Relation::Le, Rational::one());
    }
    Ok(lp)
}

/// `r(c; n, k)` with an optimal weighting. The LP solution's duality
/// certificate is verified before returning.
pub fn r_of_coloring(c: &TwoColoring, k: usize) -> Result<(Rational, WeightAssignment)> {
    let lp = coloring_lp(c, k)?;
    let sol = solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::contract(format!("coloring LP not optimal: {:?}", sol.status)));
    }
    if !check_certificates(&lp, &sol) {
        return Err(Error::contract("coloring LP certificate failed"));
    }
    let value = sol.optimum.clone().expect("optimal");
    Ok((value, WeightAssignment { n: c.n(), weights: sol.primal }))
}

/// Outcome of a search for `wram(n, k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WramResult {
    pub n: usize,
    pub k: usize,
    /// `C(n,2) / r_value`.
    #[serde(with = "serde_rational")]
    pub value: Rational,
    #[serde(with = "serde_rational")]
    pub r_value: Rational,
    pub witness_coloring: TwoColoring,
    /// Optimal LP weighting of the witness (total `r_value`, every
    /// monochromatic `k`-subgraph at most 1).
    pub witness_weights: WeightAssignment,
    /// True when only a supplied list of colorings was searched; `value` is
    /// then an upper bound on `wram(n, k)`.
    pub partial: bool,
    pub colorings_searched: usize,
}

impl WramResult {
    /// The witness rescaled to total weight `C(n,2)`, so that every
    /// monochromatic `k`-subgraph carries at most `value`.
    pub fn definition_weighting(&self) -> WeightAssignment {
        self.witness_weights.scaled(&self.value)
    }
}

fn best_of(n: usize, k: usize, colorings: &[TwoColoring], partial: bool) -> Result<WramResult> {
    let evaluated: Vec<Result<(Rational, WeightAssignment)>> =
        colorings.par_iter().map(|c| r_of_coloring(c, k)).collect();
    let keys: Option<Vec<_>> = if n <= CANONICAL_KEY_MAX_N {
        Some(colorings.iter().map(canonical_key).collect::<Result<_>>()?)
    } else {
        None
    };
    let mut best: Option<(usize, Rational, WeightAssignment)> = None;
    for (i, r) in evaluated.into_iter().enumerate() {
        let (value, weights) = r?;
        let replace = match &best {
            None => true,
            Some((bi, bv, _)) => {
                value > *bv || (value == *bv && keys.as_ref().is_some_and(|ks| ks[i] < ks[*bi]))
            }
        };
        if replace {
            best = Some((i, value, weights));
        }
    }
    let (i, r_value, witness_weights) = best.expect("nonempty coloring list");
    let pairs = int(num_pairs(n) as i64);
    Ok(WramResult {
        n,
        k,
        value: pairs / &r_value,
        r_value,
        witness_coloring: colorings[i],
        witness_weights,
        partial,
        colorings_searched: colorings.len(),
    })
}

/// Exact `wram(n, k)` by maximizing `r(c; n, k)` over one coloring per
/// class up to relabeling and color swap.
pub fn wram(n: usize, k: usize) -> Result<WramResult> {
    check_k(n, k)?;
    if n > ENUMERATION_MAX_N {
        return Err(Error::capability(format!(
            "exhaustive wram is limited to n <= {ENUMERATION_MAX_N}; use wram_for_colorings"
        )));
    }
    let colorings = enumerate_colorings(n)?;
    best_of(n, k, &colorings, false)
}

/// Same as [`wram`] but maximizing only over `colorings`.
pub fn wram_for_colorings(colorings: &[TwoColoring], k: usize) -> Result<WramResult> {
    let first = colorings.first().ok_or_else(|| Error::input("no colorings supplied"))?;
    let n = first.n();
    if colorings.iter().any(|c| c.n() != n) {
        return Err(Error::input("all colorings must have the same vertex count"));
    }
    check_k(n, k)?;
    best_of(n, k, colorings, true)
}

/// `wram(l, k)` for `l = k..=n_max`.
pub fn wram_chain(k: usize, n_max: usize) -> Result<Vec<(usize, Rational)>> {
    check_k(n_max, k)?;
    (k..=n_max).map(|l| Ok((l, wram(l, k)?.value))).collect()
}

/// Whether `wram(l, k) <= wram(l + 1, k)` for `k <= l < n_max` and
/// `wram(n_max, k) <= C(k, 2)`.
pub fn check_monotonicity(k: usize, n_max: usize) -> Result<bool> {
    let chain = wram_chain(k, n_max)?;
    let nondecreasing = chain.windows(2).all(|w| w[0].1 <= w[1].1);
    let ceiling = int(num_pairs(k) as i64);
    Ok(nondecreasing && chain.last().is_some_and(|(_, v)| *v <= ceiling))
}

/// Largest weight carried by one color on one `k`-subset.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadScan {
    pub max_load: Rational,
    pub sets_checked: u64,
    pub exhaustive: bool,
}

fn mono_loads(c: &TwoColoring, w: &WeightAssignment, set: &[usize]) -> [Rational; 2] {
    let mut red = Rational::zero();
    let mut blue = Rational::zero();
    for (&u, &v) in set.iter().tuple_combinations() {
        match c.color(u, v) {
            Color::Red => red += w.get(u, v),
            Color::Blue => blue += w.get(u, v),
        }
    }
    [red, blue]
}

fn check_weighting(c: &TwoColoring, w: &WeightAssignment, k: usize) -> Result<()> {
    if w.n() != c.n() {
        return Err(Error::input("weighting and coloring differ in vertex count"));
    }
    check_k(c.n(), k)
}

/// Maximum single-color load over every `k`-subset.
pub fn scan_mono_loads(c: &TwoColoring, w: &WeightAssignment, k: usize) -> Result<LoadScan> {
    check_weighting(c, w, k)?;
    let mut max_load = Rational::zero();
    let mut sets_checked = 0u64;
    for set in (0..c.n()).combinations(k) {
        for load in mono_loads(c, w, &set) {
            if load > max_load {
                max_load = load;
            }
        }
        sets_checked += 1;
    }
    Ok(LoadScan { max_load, sets_checked, exhaustive: true })
}

/// Maximum single-color load over `samples` uniformly random `k`-subsets
/// drawn from a seeded generator.
pub fn sample_mono_loads(c: &TwoColoring, w: &WeightAssignment, k: usize, samples: u64, seed: u64) -> Result<LoadScan> {
    check_weighting(c, w, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_load = Rational::zero();
    for _ in 0..samples {
        let mut set = sample(&mut rng, c.n(), k).into_vec();
        set.sort_unstable();
        for load in mono_loads(c, w, &set) {
            if load > max_load {
                max_load = load;
            }
        }
    }
    Ok(LoadScan { max_load, sets_checked: samples, exhaustive: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::graphs::{mono_triangle_free_k5, Graph};

    #[test]
    fn constraint_counts() {
        let c = mono_triangle_free_k5();
        assert_eq!(build_constraints(&c, 5).unwrap().constraints.len(), 2);
        let red = TwoColoring::monochromatic(5, Color::Red).unwrap();
        let set = build_constraints(&red, 3).unwrap();
        assert_eq!(set.constraints.len(), 10);
        assert!(set.constraints.iter().all(|m| m.color == Color::Red && m.edges.len() == 3));
        // every triangle of the pentagon coloring is bichromatic
        assert_eq!(build_constraints(&c, 3).unwrap().constraints.len(), 20);
        assert!(matches!(build_constraints(&c, 6), Err(Error::Input(_))));
        assert!(matches!(build_constraints(&c, 2), Err(Error::Input(_))));
    }

    #[test]
    fn r_examples() {
        let red = TwoColoring::monochromatic(5, Color::Red).unwrap();
        let (r, w) = r_of_coloring(&red, 3).unwrap();
        assert_eq!(r, rat(10, 3));
        assert_eq!(w.total(), r);
        let (r, _) = r_of_coloring(&mono_triangle_free_k5(), 3).unwrap();
        assert_eq!(r, int(5));
        for n in 3..=6 {
            let g = Graph::from_edges(n, &[(0, 1)]).unwrap();
            let (r, _) = r_of_coloring(&TwoColoring::from_red(g), n).unwrap();
            assert_eq!(r, int(2));
        }
        // monochromatic with k = n leaves a single constraint
        let (r, _) = r_of_coloring(&TwoColoring::monochromatic(4, Color::Blue).unwrap(), 4).unwrap();
        assert_eq!(r, int(1));
    }

    #[test]
    fn optimal_weighting_respects_every_constraint() {
        let c = mono_triangle_free_k5();
        let (r, w) = r_of_coloring(&c, 3).unwrap();
        let scan = scan_mono_loads(&c, &w, 3).unwrap();
        assert!(scan.max_load <= int(1));
        assert_eq!(scan.sets_checked, 10);
        // Rescaling gives total C(n,2) with every load at most C(n,2)/r.
        let factor = int(10) / &r;
        let scaled = w.scaled(&factor);
        assert_eq!(scaled.total(), int(10));
        assert!(scan_mono_loads(&c, &scaled, 3).unwrap().max_load <= factor);
    }

    #[test]
    fn small_wram_values() {
        assert_eq!(wram(3, 3).unwrap().value, rat(3, 2));
        let w5 = wram(5, 3).unwrap();
        assert_eq!(w5.value, int(2));
        assert_eq!(w5.colorings_searched, 18);
        assert_eq!(&w5.value * &w5.r_value, int(10));
        for k in 3..=6 {
            assert_eq!(wram(k, k).unwrap().value, rat((k * (k - 1) / 2) as i64, 2));
        }
    }

    #[test]
    fn witness_is_deterministic() {
        assert_eq!(wram(5, 3).unwrap(), wram(5, 3).unwrap());
    }

    #[test]
    fn explicit_colorings() {
        let res = wram_for_colorings(&[mono_triangle_free_k5()], 3).unwrap();
        assert_eq!((res.r_value.clone(), res.value.clone(), res.partial), (int(5), int(2), true));
        let red = TwoColoring::monochromatic(5, Color::Red).unwrap();
        let res = wram_for_colorings(&[red], 3).unwrap();
        assert_eq!(res.value, int(3));
        let both = wram_for_colorings(&[red, mono_triangle_free_k5()], 3).unwrap();
        assert_eq!(both.witness_coloring, mono_triangle_free_k5());
        assert!(matches!(wram_for_colorings(&[], 3), Err(Error::Input(_))));
        let mixed = [red, TwoColoring::monochromatic(4, Color::Red).unwrap()];
        assert!(matches!(wram_for_colorings(&mixed, 3), Err(Error::Input(_))));
    }

    #[test]
    fn capability_limit() {
        assert!(matches!(wram(9, 3), Err(Error::Capability(_))));
    }

    #[test]
    fn monotone_for_small_cases() {
        assert!(check_monotonicity(3, 5).unwrap());
        assert!(check_monotonicity(4, 5).unwrap());
        assert!(check_monotonicity(5, 5).unwrap());
    }

    #[test]
    fn weighting_serde_roundtrip() {
        let (_, w) = r_of_coloring(&mono_triangle_free_k5(), 3).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.contains("\"1/2\""));
        let back: WeightAssignment = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<WeightAssignment>(r#"{"n":3,"weights":[[0,1,"1/1"]]}"#).is_err());
    }

    #[test]
    fn sampled_scan_agrees_with_exhaustive_bound() {
        let c = mono_triangle_free_k5();
        let (_, w) = r_of_coloring(&c, 4).unwrap();
        let full = scan_mono_loads(&c, &w, 4).unwrap();
        let sampled = sample_mono_loads(&c, &w, 4, 200, 1).unwrap();
        assert!(sampled.max_load <= full.max_load);
        assert!(!sampled.exhaustive);
    }
}
