//! Fixed inputs shared by the benchmarks in `benches/`.

use wramsey_core::graphs::{balanced_blowup, mono_triangle_free_k5, turan_graph};
use wramsey_core::{Graph, TwoColoring};

/// Complete graph minus a perfect-ish matching: many triangles, no symmetry
/// shortcuts for the LP.
pub fn dense_graph(n: usize) -> Graph {
    let mut g = Graph::complete(n).expect("n within cap");
    for v in (0..n - 1).step_by(2) {
        g.remove_edge(v, v + 1);
    }
    g
}

pub fn tripartite(n: usize) -> Graph {
    turan_graph(n, 3).expect("n >= 3")
}

pub fn pentagon_blowup(n: usize) -> TwoColoring {
    balanced_blowup(&mono_triangle_free_k5(), n).expect("n >= 5")
}
