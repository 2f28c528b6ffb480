//! Small graphs, 2-colorings of complete graphs, canonical forms, Turán
//! graphs and balanced blow-ups.

mod canon;
mod coloring;
mod graph;
mod io;
mod turan;

pub use canon::{
    canonical_form, canonical_key, enumerate_colorings, enumerate_graphs, CanonicalKey, CANONICAL_KEY_MAX_N,
    ENUMERATION_MAX_N,
};
pub use coloring::{balanced_blowup, mono_triangle_free_k5, Color, TwoColoring};
pub use graph::{num_pairs, pair_at, pair_index, Graph, MAX_VERTICES};
pub use io::{format_coloring, format_graph, parse_coloring, parse_colorings, parse_graph};
pub use turan::{balanced_parts, turan_graph, turan_number};
