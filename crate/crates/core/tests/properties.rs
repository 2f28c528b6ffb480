mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wramsey_core::exactnum::{int, rat};
use wramsey_core::graphs::{enumerate_colorings, num_pairs, pair_at};
use wramsey_core::packing::{
    cover_bracket, cover_to_packing, fo_triangle_bound, lift_tilde_to_induced, minimize_cover, packing_to_cover,
    r_induced, r_tilde, redistribute_excess, tau_integral, tau_min_over_colorings, tau_star,
};
use wramsey_core::weighted_ramsey::{r_of_coloring, wram};
use wramsey_core::{Graph, Rational, SubgraphDescriptor, SubgraphWeights, TwoColoring};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (3usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), num_pairs(n)).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            for (i, b) in bits.into_iter().enumerate() {
                if b {
                    let (u, v) = pair_at(n, i);
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

/// A random exact-load cover: small weights on random multi-edge subgraphs,
/// then every edge topped up to load 1 with a one-edge subgraph.
fn random_exact_cover(g: &Graph, rng: &mut ChaCha8Rng) -> SubgraphWeights {
    let n = g.n();
    let mut t = SubgraphWeights::new(*g);
    for _ in 0..2 * n {
        let mut tri = [0; 3];
        let picked = rand::seq::index::sample(rng, n, 3).into_vec();
        tri.copy_from_slice(&picked);
        let induced = SubgraphDescriptor::induced(g, tri).unwrap().mask();
        let mask = induced & rng.gen_range(1..8u8);
        if mask.count_ones() < 2 {
            continue;
        }
        let d = SubgraphDescriptor::new({
            let mut s = tri;
            s.sort_unstable();
            s
        }, mask)
        .unwrap();
        let w = rat(rng.gen_range(1..4), 4 * n as i64);
        let fits = d.edges().iter().all(|&(x, y)| t.load(x, y) + &w <= Rational::one());
        if fits {
            t.add(d, &w).unwrap();
        }
    }
    for (x, y) in g.edges().collect::<Vec<_>>() {
        let gap = Rational::one() - t.load(x, y);
        let z = (0..n).find(|&z| z != x && z != y).unwrap();
        t.add(SubgraphDescriptor::from_edges([x, y, z], &[(x, y)]).unwrap(), &gap).unwrap();
    }
    t
}

#[test]
fn lift_preserves_totals_on_random_exact_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let corpus = common::random_corpus(100, 5);
    for g in corpus.iter().filter(|g| g.n() <= 7) {
        let t = random_exact_cover(g, &mut rng);
        let lifted = lift_tilde_to_induced(&t).unwrap();
        assert_eq!(lifted.total(), t.total());
        for (x, y) in g.edges() {
            assert!(lifted.load(x, y) >= Rational::one());
        }
        let (r, _) = r_induced(g).unwrap();
        assert!(lifted.total() >= r);
    }
}

#[test]
fn full_pipeline_gives_exact_loads() {
    for g in common::random_corpus(100, 11).iter().filter(|g| g.n() <= 7) {
        let (r, t) = r_induced(g).unwrap();
        let out = redistribute_excess(&minimize_cover(&t).unwrap()).unwrap();
        assert_eq!(out.total(), r);
        for (x, y) in g.edges() {
            assert_eq!(out.load(x, y), int(1));
        }
    }
}

#[test]
fn cover_to_packing_certifies_lower_bracket() {
    for g in common::random_corpus(60, 3) {
        let (r, t) = r_tilde(&g).unwrap();
        let (ts, _) = tau_star(&g).unwrap();
        let packing = cover_to_packing(&t, &g).unwrap();
        assert!(packing.total() <= ts);
        assert!(packing.loads().iter().all(|l| *l <= Rational::one()));
        assert!(int(g.edge_count() as i64) <= ts + int(2) * r);
    }
}

#[test]
fn triangle_bound_below_exhaustive_values() {
    for n in 5..=7 {
        let (tau, _) = tau_min_over_colorings(n, false).unwrap();
        let bound = fo_triangle_bound(n as u64, &tau).unwrap();
        let w = wram(n, 3).unwrap().value;
        assert!(w >= bound, "n={n}: wram {w} < bound {bound}");
    }
}

#[test]
fn duality_bridge_on_swap_classes() {
    for n in 3..=6 {
        for c in enumerate_colorings(n).unwrap() {
            let (lhs, _) = r_of_coloring(&c, 3).unwrap();
            let rhs = r_induced(c.red()).unwrap().0 + r_induced(&c.blue()).unwrap().0;
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn coloring_lp_lower_bounds() {
    for n in 3..=6 {
        for c in enumerate_colorings(n).unwrap() {
            let (r, _) = r_of_coloring(&c, n.min(4)).unwrap();
            let both_colors = c.red().edge_count() > 0 && c.blue().edge_count() > 0;
            let floor = if both_colors { int(2) } else { int(1) };
            assert!(r >= floor);
        }
    }
    let mono = TwoColoring::from_red(Graph::complete(4).unwrap());
    assert_eq!(r_of_coloring(&mono, 4).unwrap().0, int(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_and_equality(g in graph_strategy()) {
        let (ts, packing) = tau_star(&g).unwrap();
        let (r, _) = r_induced(&g).unwrap();
        let (rt, _) = r_tilde(&g).unwrap();
        prop_assert_eq!(&r, &rt);
        let (lower, upper) = cover_bracket(&g, &ts);
        prop_assert!(lower <= r && r <= upper);
        let cover = packing_to_cover(&packing, &g).unwrap();
        prop_assert!(cover.total() <= upper);
        prop_assert!(cover.total() >= r);
    }

    #[test]
    fn packing_numbers_ordered(g in graph_strategy()) {
        let (ts, _) = tau_star(&g).unwrap();
        let tau = tau_integral(&g).unwrap();
        prop_assert!(int(tau as i64) <= ts);
        prop_assert!(&ts * int(3) <= int(g.edge_count() as i64));
        prop_assert!(ts >= Rational::zero());
    }

    #[test]
    fn invariants_survive_relabeling(g in graph_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&order);
        prop_assert_eq!(tau_star(&g).unwrap().0, tau_star(&h).unwrap().0);
        prop_assert_eq!(r_induced(&g).unwrap().0, r_induced(&h).unwrap().0);
        prop_assert_eq!(tau_integral(&g).unwrap(), tau_integral(&h).unwrap());
    }
}
