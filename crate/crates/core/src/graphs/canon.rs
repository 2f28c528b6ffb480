//! Canonical forms for small graphs and 2-colorings, and orderly enumeration
//! of colorings of `K_n` up to relabeling and Red/Blue swap.
//!
//! The canonical form of a graph is the smallest upper-triangle bit string
//! over all vertex orders reachable by individualization-refinement: vertices
//! are first split by color refinement, then the first non-singleton cell is
//! individualized vertex by vertex until every cell is a singleton. Cell
//! splitting depends only on the graph structure, so the set of leaves is
//! carried along by any relabeling and the minimum is an isomorphism
//! invariant.

use std::sync::OnceLock;

use rayon::prelude::*;

use super::coloring::TwoColoring;
use super::graph::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`canonical_key`].
pub const CANONICAL_KEY_MAX_N: usize = 9;
/// Largest `n` accepted by [`enumerate_colorings`].
pub const ENUMERATION_MAX_N: usize = 8;

/// Byte string identifying a 2-coloring up to vertex relabeling and global
/// color swap: the vertex count followed by the canonical red-graph bits of
/// whichever orientation is smaller, big-endian.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    fn new(n: usize, bits: u128) -> Self {
        let mut bytes = Vec::with_capacity(17);
        bytes.push(n as u8);
        bytes.extend_from_slice(&bits.to_be_bytes());
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn refine(g: &Graph, mut cells: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, u8)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v as usize);
                    (masks.iter().map(|m| (nb & m).count_ones() as u8).collect(), v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for idx in 1..=keyed.len() {
                if idx == keyed.len() || keyed[idx].0 != keyed[start].0 {
                    next.push(keyed[start..idx].iter().map(|(_, v)| *v).collect());
                    start = idx;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<u8>>, best: &mut Option<u128>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0] as usize).collect();
            let bits = g.permuted(&order).pair_bits();
            if best.is_none_or(|b| bits < b) {
                *best = Some(bits);
            }
        }
        Some(idx) => {
            for &v in &cells[idx] {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..idx]);
                next.push(vec![v]);
                next.push(cells[idx].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[idx + 1..]);
                search(g, next, best);
            }
        }
    }
}

pub(crate) fn canonical_bits(g: &Graph) -> u128 {
    if g.n() == 0 {
        return 0;
    }
    let mut best = None;
    search(g, vec![(0..g.n() as u8).collect()], &mut best);
    best.expect("at least one leaf")
}

/// Isomorphism-class representative of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    Graph::from_pair_bits(g.n(), canonical_bits(g))
}

pub fn canonical_key(c: &TwoColoring) -> Result<CanonicalKey> {
    let n = c.n();
    if n > CANONICAL_KEY_MAX_N {
        return Err(Error::capability(format!(
            "canonical keys are limited to n <= {CANONICAL_KEY_MAX_N}, got {n}"
        )));
    }
    let red = canonical_bits(c.red());
    let blue = canonical_bits(&c.blue());
    Ok(CanonicalKey::new(n, red.min(blue)))
}

fn with_extra_vertex(g: &Graph, neighborhood: u16) -> Graph {
    let n = g.n() + 1;
    let mut h = Graph::empty(n).expect("n within cap");
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for u in 0..n - 1 {
        if neighborhood >> u & 1 == 1 {
            h.add_edge(u, n - 1);
        }
    }
    h
}

static GRAPHS: [OnceLock<Vec<Graph>>; ENUMERATION_MAX_N + 1] = [const { OnceLock::new() }; ENUMERATION_MAX_N + 1];

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical bits. Built by adding a vertex in every
/// possible way to each class on `n - 1` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATION_MAX_N).contains(&n) {
        return Err(Error::capability(format!(
            "graph enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    debug_assert!(n <= MAX_VERTICES);
    Ok(GRAPHS[n]
        .get_or_init(|| {
            if n == 1 {
                return vec![Graph::empty(1).expect("n = 1")];
            }
            let smaller = enumerate_graphs(n - 1).expect("n - 1 in range");
            let mut bits: Vec<u128> = smaller
                .par_iter()
                .flat_map_iter(|g| (0..1u16 << (n - 1)).map(move |s| canonical_bits(&with_extra_vertex(g, s))))
                .collect();
            bits.sort_unstable();
            bits.dedup();
            bits.into_iter().map(|b| Graph::from_pair_bits(n, b)).collect()
        })
        .clone())
}

/// One representative per class of 2-colorings of `K_n` under relabeling and
/// color swap, ordered by [`CanonicalKey`]. The representative's red graph is
/// the canonical graph achieving the key.
pub fn enumerate_colorings(n: usize) -> Result<Vec<TwoColoring>> {
    if !(3..=ENUMERATION_MAX_N).contains(&n) {
        return Err(Error::capability(format!(
            "coloring enumeration supports 3 <= n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let graphs = enumerate_graphs(n)?;
    Ok(graphs
        .par_iter()
        .filter(|g| g.pair_bits() <= canonical_bits(&g.complement()))
        .map(|g| TwoColoring::from_red(*g))
        .collect())
}
