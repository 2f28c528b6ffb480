//! Triangle packing and 3-vertex-subgraph covering invariants of a graph.
//!
//! * `tau_star(G)`: maximum total weight on triangles with every edge loaded
//!   at most 1; `tau_integral(G)` is its integral counterpart.
//! * `r_induced(G)`: minimum total weight on induced 3-vertex subgraphs so that
//!   every edge is covered at least once.
//! * `r_tilde(G)`: minimum total weight on arbitrary 3-vertex subgraphs so that
//!   every edge is loaded exactly once.
//!
//! The conversion algorithms between these programs live in [`convert`].

pub mod convert;
mod stats;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{check_certificates, format_rational, parse_rational, solve_lp, LpProblem, LpStatus, Rational, Relation};
use crate::graphs::{num_pairs, pair_index, Graph};

pub use convert::{cover_to_packing, lift_tilde_to_induced, minimize_cover, packing_to_cover, redistribute_excess};
pub use stats::{
    coloring_packing_stats, fo_triangle_bound, fo_triangle_limit, tau_integral, tau_joint, tau_min_over_colorings,
    ColoringPackingStats, TAU_INTEGRAL_MAX_N, TAU_MIN_MAX_N,
};

/// A subgraph on three vertices: an ascending vertex triple plus a subset of
/// the three pairs. Mask bit 0 is the pair (v0, v1), bit 1 is (v0, v2) and
/// bit 2 is (v1, v2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphDescriptor {
    vertices: [u8; 3],
    mask: u8,
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl SubgraphDescriptor {
    pub fn new(vertices: [usize; 3], mask: u8) -> Result<Self> {
        let mut v = vertices;
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] || v[2] >= crate::graphs::MAX_VERTICES {
            return Err(Error::input(format!("bad vertex triple {vertices:?}")));
        }
        if mask > 0b111 {
            return Err(Error::input(format!("edge mask {mask} out of range")));
        }
        // Re-express the mask if the caller's order was not ascending.
        let mut sorted_mask = 0;
        for (bit, &(a, b)) in PAIRS.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let (x, y) = (vertices[a], vertices[b]);
                sorted_mask |= 1 << Self::bit_of(&v, x, y);
            }
        }
        Ok(SubgraphDescriptor { vertices: [v[0] as u8, v[1] as u8, v[2] as u8], mask: sorted_mask })
    }

    fn bit_of(v: &[usize; 3], x: usize, y: usize) -> usize {
        let pos = |z: usize| v.iter().position(|&w| w == z).expect("vertex in triple");
        let (p, q) = (pos(x).min(pos(y)), pos(x).max(pos(y)));
        PAIRS.iter().position(|&pq| pq == (p, q)).expect("pair")
    }

    /// The subgraph of `g` induced on `triple`.
    pub fn induced(g: &Graph, triple: [usize; 3]) -> Result<Self> {
        let mut v = triple;
        v.sort_unstable();
        let mut mask = 0;
        for (bit, &(a, b)) in PAIRS.iter().enumerate() {
            if g.has_edge(v[a], v[b]) {
                mask |= 1 << bit;
            }
        }
        Self::new(v, mask)
    }

    /// The subgraph on the triple spanned by `edges`, whose pairs must all lie
    /// inside `triple`.
    pub fn from_edges(triple: [usize; 3], edges: &[(usize, usize)]) -> Result<Self> {
        let mut v = triple;
        v.sort_unstable();
        let mut mask = 0;
        for &(x, y) in edges {
            if !v.contains(&x) || !v.contains(&y) || x == y {
                return Err(Error::input(format!("edge {x} {y} not inside {triple:?}")));
            }
            mask |= 1 << Self::bit_of(&v, x, y);
        }
        Self::new(v, mask)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.vertices.map(usize::from)
    }

    pub fn mask(&self) -> u8 {
        self.mask
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let v = self.vertices();
        PAIRS
            .iter()
            .enumerate()
            .filter(|(bit, _)| self.mask >> bit & 1 == 1)
            .map(|(_, &(a, b))| (v[a], v[b]))
            .collect()
    }

    pub fn contains_edge(&self, x: usize, y: usize) -> bool {
        let v = self.vertices();
        v.contains(&x) && v.contains(&y) && x != y && self.mask >> Self::bit_of(&v, x, y) & 1 == 1
    }

    /// Same triple with the pair `{x, y}` removed.
    pub fn without_edge(&self, x: usize, y: usize) -> Self {
        let v = self.vertices();
        SubgraphDescriptor { vertices: self.vertices, mask: self.mask & !(1 << Self::bit_of(&v, x, y)) }
    }

    pub fn is_triangle(&self) -> bool {
        self.mask == 0b111
    }
}

/// Nonnegative weights on 3-vertex subgraphs of a fixed base graph. Absent
/// descriptors have weight zero; zero weights are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphWeights {
    graph: Graph,
    weights: BTreeMap<SubgraphDescriptor, Rational>,
}

impl SubgraphWeights {
    pub fn new(graph: Graph) -> Self {
        SubgraphWeights { graph, weights: BTreeMap::new() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn get(&self, d: &SubgraphDescriptor) -> Rational {
        self.weights.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `w` (which may be negative) to `d`. Fails if `d` is not a
    /// subgraph of the base graph or the result would be negative.
    pub fn add(&mut self, d: SubgraphDescriptor, w: &Rational) -> Result<()> {
        if w.is_zero() {
            return Ok(());
        }
        if d.edges().iter().any(|&(x, y)| x >= self.graph.n() || y >= self.graph.n() || !self.graph.has_edge(x, y)) {
            return Err(Error::contract(format!("{d:?} is not a subgraph of the base graph")));
        }
        let next = self.get(&d) + w;
        if next < Rational::zero() {
            return Err(Error::contract(format!("weight of {d:?} would become negative")));
        }
        if next.is_zero() {
            self.weights.remove(&d);
        } else {
            self.weights.insert(d, next);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SubgraphDescriptor, &Rational)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.weights.values().sum()
    }

    /// Total weight on subgraphs containing each pair, indexed by
    /// [`pair_index`].
    pub fn loads(&self) -> Vec<Rational> {
        let n = self.graph.n();
        let mut loads = vec![Rational::zero(); num_pairs(n)];
        for (d, w) in &self.weights {
            for (x, y) in d.edges() {
                loads[pair_index(n, x, y)] += w;
            }
        }
        loads
    }

    pub fn load(&self, x: usize, y: usize) -> Rational {
        self.loads()[pair_index(self.graph.n(), x, y)].clone()
    }

    /// Text form: one `v1 v2 v3 | mask | p/q` line per stored weight.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (d, w) in &self.weights {
            let [a, b, c] = d.vertices();
            writeln!(s, "{a} {b} {c} | {} | {}", d.mask(), format_rational(w)).expect("write to string");
        }
        s
    }

    pub fn parse(text: &str, graph: Graph) -> Result<Self> {
        let mut out = SubgraphWeights::new(graph);
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [verts, mask, weight] = fields[..] else {
                return Err(Error::parse(line_no, format!("expected `v1 v2 v3 | mask | p/q`, got {line:?}")));
            };
            let verts: Vec<usize> = verts
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| Error::parse(line_no, format!("bad vertex {s:?}"))))
                .collect::<Result<_>>()?;
            let [a, b, c] = verts[..] else {
                return Err(Error::parse(line_no, "expected three vertices"));
            };
            if a >= graph.n() || b >= graph.n() || c >= graph.n() {
                return Err(Error::parse(line_no, "vertex out of range"));
            }
            let mask: u8 = mask.parse().map_err(|_| Error::parse(line_no, format!("bad mask {mask:?}")))?;
            let mut v = [a, b, c];
            v.sort_unstable();
            if v != [a, b, c] {
                return Err(Error::parse(line_no, "vertices must be ascending"));
            }
            let d = SubgraphDescriptor::new(v, mask).map_err(|e| Error::parse(line_no, e.to_string()))?;
            let w = parse_rational(weight).map_err(|e| Error::parse(line_no, e.to_string()))?;
            if w < Rational::zero() {
                return Err(Error::parse(line_no, "negative weight"));
            }
            out.add(d, &w).map_err(|e| Error::parse(line_no, e.to_string()))?;
        }
        Ok(out)
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::input(format!("need at least 3 vertices, got {}", g.n())));
    }
    Ok(())
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

/// Solves a packing/covering LP with one column per descriptor and one row
/// per edge of `g`, verifying the certificate.
fn solve_on(
    g: &Graph,
    columns: Vec<SubgraphDescriptor>,
    sense_max: bool,
    relation: Relation,
) -> Result<(Rational, SubgraphWeights)> {
    let n = g.n();
    let ones = vec![Rational::one(); columns.len()];
    let mut lp = if sense_max { LpProblem::maximize(ones) } else { LpProblem::minimize(ones) };
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); num_pairs(n)];
    for (j, d) in columns.iter().enumerate() {
        for (x, y) in d.edges() {
            rows[pair_index(n, x, y)].push((j, Rational::one()));
        }
    }
    for (x, y) in g.edges() {
        let row = std::mem::take(&mut rows[pair_index(n, x, y)]);
        if sense_max && row.is_empty() {
            continue;
        }
        lp.add_constraint(row, relation, Rational::one());
    }
    let sol = solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal || !check_certificates(&lp, &sol) {
        return Err(Error::contract(format!("LP on {g:?} did not certify optimal: {:?}", sol.status)));
    }
    let mut weights = SubgraphWeights::new(*g);
    for (d, x) in columns.iter().zip(&sol.primal) {
        weights.add(*d, x)?;
    }
    Ok((sol.optimum.expect("optimal"), weights))
}

/// Fractional triangle packing number with an optimal packing.
pub fn tau_star(g: &Graph) -> Result<(Rational, SubgraphWeights)> {
    check_order(g)?;
    let cols = g
        .triangles()
        .into_iter()
        .map(|t| SubgraphDescriptor::new(t, 0b111))
        .collect::<Result<Vec<_>>>()?;
    solve_on(g, cols, true, Relation::Le)
}

/// Minimum fractional cover of the edges by induced 3-vertex subgraphs.
pub fn r_induced(g: &Graph) -> Result<(Rational, SubgraphWeights)> {
    check_order(g)?;
    let mut cols = Vec::new();
    for t in triples(g.n()) {
        let d = SubgraphDescriptor::induced(g, t)?;
        if d.edge_count() > 0 {
            cols.push(d);
        }
    }
    solve_on(g, cols, false, Relation::Ge)
}

/// Minimum total weight on 3-vertex subgraphs loading every edge exactly
/// once. Edgeless subgraphs are omitted; they never lower the minimum.
pub fn r_tilde(g: &Graph) -> Result<(Rational, SubgraphWeights)> {
    check_order(g)?;
    let mut cols = Vec::new();
    for t in triples(g.n()) {
        let induced = SubgraphDescriptor::induced(g, t)?.mask();
        for mask in 1..=0b111u8 {
            if mask & !induced == 0 {
                cols.push(SubgraphDescriptor::new(t, mask)?);
            }
        }
    }
    solve_on(g, cols, false, Relation::Eq)
}

/// `(e/2 - tau*/2, e/2 - tau*/2 + floor(n/2))`, the bracket around
/// `r_induced(G)`.
pub fn cover_bracket(g: &Graph, tau_star_value: &Rational) -> (Rational, Rational) {
    let half = Rational::new(1.into(), 2.into());
    let lower = (Rational::from_integer(g.edge_count().into()) - tau_star_value) * &half;
    let upper = &lower + Rational::from_integer((g.n() / 2).into());
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn descriptor_normalizes_vertex_order() {
        let d = SubgraphDescriptor::from_edges([2, 0, 1], &[(2, 1)]).unwrap();
        assert_eq!(d.vertices(), [0, 1, 2]);
        assert_eq!(d.mask(), 0b100);
        assert_eq!(d.edges(), vec![(1, 2)]);
        assert!(d.contains_edge(2, 1));
        assert!(!d.contains_edge(0, 1));
        let e = SubgraphDescriptor::new([5, 3, 4], 0b001).unwrap(); // pair (5,3)
        assert_eq!(e.edges(), vec![(3, 5)]);
        assert!(SubgraphDescriptor::new([1, 1, 2], 1).is_err());
        assert!(SubgraphDescriptor::from_edges([0, 1, 2], &[(0, 3)]).is_err());
    }

    #[test]
    fn tau_star_examples() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(tau_star(&path).unwrap().0, int(0));
        assert_eq!(tau_star(&k(3)).unwrap().0, int(1));
        assert_eq!(tau_star(&k(4)).unwrap().0, int(2));
        assert_eq!(tau_star(&k(5)).unwrap().0, rat(10, 3));
        let (_, w) = tau_star(&k(5)).unwrap();
        assert!(w.iter().all(|(d, _)| d.is_triangle()));
        assert!(w.loads().iter().all(|l| *l <= int(1)));
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_induced(&k(3)).unwrap().0, int(1));
        assert_eq!(r_induced(&k(4)).unwrap().0, int(2));
        let one_edge = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(r_induced(&one_edge).unwrap().0, int(1));
        assert_eq!(r_induced(&Graph::empty(4).unwrap()).unwrap().0, int(0));

        assert_eq!(r_tilde(&k(3)).unwrap().0, int(1));
        assert_eq!(r_tilde(&k(4)).unwrap().0, int(2));
        let (v, w) = r_tilde(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(v, int(0));
        assert!(w.is_empty());
    }

    #[test]
    fn r_tilde_loads_exactly_one() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let (v, w) = r_tilde(&g).unwrap();
        assert_eq!(v, r_induced(&g).unwrap().0);
        for (x, y) in g.edges() {
            assert_eq!(w.load(x, y), int(1));
        }
    }

    #[test]
    fn small_order_rejected() {
        let g = Graph::complete(2).unwrap();
        assert!(matches!(tau_star(&g), Err(Error::Input(_))));
        assert!(matches!(r_induced(&g), Err(Error::Input(_))));
        assert!(matches!(r_tilde(&g), Err(Error::Input(_))));
    }

    #[test]
    fn weights_text_roundtrip() {
        let (_, w) = r_tilde(&k(4)).unwrap();
        let text = w.to_text();
        assert!(text.lines().all(|l| l.split('|').count() == 3));
        assert_eq!(SubgraphWeights::parse(&text, k(4)).unwrap(), w);
        assert!(SubgraphWeights::parse("0 1 2 | 7 | -1/2\n", k(4)).is_err());
        assert!(SubgraphWeights::parse("0 1 | 7 | 1/2\n", k(4)).is_err());
        assert!(SubgraphWeights::parse("0 1 2 | 7 | 1/2\n", Graph::empty(3).unwrap()).is_err());
        assert!(SubgraphWeights::parse("2 1 0 | 7 | 1/2\n", k(4)).is_err());
    }

    #[test]
    fn add_rejects_foreign_edges_and_negative_totals() {
        let mut w = SubgraphWeights::new(Graph::from_edges(3, &[(0, 1)]).unwrap());
        let d = SubgraphDescriptor::new([0, 1, 2], 0b001).unwrap();
        w.add(d, &rat(1, 2)).unwrap();
        assert!(w.add(d, &rat(-1, 1)).is_err());
        assert!(w.add(SubgraphDescriptor::new([0, 1, 2], 0b111).unwrap(), &int(1)).is_err());
        w.add(d, &rat(-1, 2)).unwrap();
        assert!(w.is_empty());
    }
}
