#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wramsey_core::Graph;

pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

/// Seeded random graphs cycling through `n = 3..=8` and the three edge
/// probabilities, so every (n, p) pair appears.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 3 + (i / 3) % 6;
            let p = EDGE_PROBABILITIES[i % 3];
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
        .collect()
}
