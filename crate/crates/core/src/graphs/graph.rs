use crate::error::{Error, Result};

/// Largest supported vertex count; one `u16` adjacency row per vertex.
pub const MAX_VERTICES: usize = 16;

/// Number of unordered pairs on `n` vertices.
pub const fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{u, v}` in the lexicographic list of pairs of
/// `0..n`.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(v < n && u != v);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
    }
    panic!("pair index out of range for n = {n}");
}

/// Simple undirected graph on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capability(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::input(format!("invalid edge {u} {v} for n = {n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from the upper-triangle bit string used by canonical forms:
    /// pair `i` in lexicographic order is bit `num_pairs(n) - 1 - i`.
    pub(crate) fn from_pair_bits(n: usize, bits: u128) -> Self {
        let p = num_pairs(n);
        let mut g = Graph { n, adj: [0; MAX_VERTICES] };
        for idx in 0..p {
            if bits >> (p - 1 - idx) & 1 == 1 {
                let (u, v) = pair_at(n, idx);
                g.add_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn pair_bits(&self) -> u128 {
        let p = num_pairs(self.n);
        let mut bits = 0u128;
        for (u, v) in self.edges() {
            bits |= 1 << (p - 1 - pair_index(self.n, u, v));
        }
        bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u} {v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Neighborhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let full: u16 = if self.n == 16 { u16::MAX } else { (1u16 << self.n) - 1 };
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Vertex triples `[a, b, c]` (ascending) spanning a triangle.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let common = self.adj[a] & self.adj[b];
            for c in b + 1..self.n {
                if common >> c & 1 == 1 {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Relabels so that new vertex `p` is old vertex `order[p]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for p in 0..self.n {
            for q in p + 1..self.n {
                if self.has_edge(order[p], order[q]) {
                    g.add_edge(p, q);
                }
            }
        }
        g
    }

    /// Whether some `size` vertices are pairwise adjacent.
    pub fn has_clique(&self, size: usize) -> bool {
        fn grow(g: &Graph, candidates: u16, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if (candidates.count_ones() as usize) < need {
                return false;
            }
            let mut rest = candidates;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if grow(g, rest & g.adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        let all: u16 = if self.n == 16 { u16::MAX } else { (1u16 << self.n) - 1 };
        grow(self, all, size)
    }
}
