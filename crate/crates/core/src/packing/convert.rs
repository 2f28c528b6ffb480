//! Conversions between optimal solutions of the packing and covering LPs.
//!
//! * [`lift_tilde_to_induced`]: exact-load cover on arbitrary 3-vertex
//!   subgraphs to a cover on induced ones, same total.
//! * [`minimize_cover`] then [`redistribute_excess`]: the reverse direction.
//! * [`packing_to_cover`] / [`cover_to_packing`]: between a fractional
//!   triangle packing and an exact-load cover.

use num_traits::{One, Zero};
use petgraph::graph::UnGraph;

use super::{SubgraphDescriptor, SubgraphWeights};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::graphs::{pair_index, Graph};

fn edge_loads(t: &SubgraphWeights) -> Vec<Rational> {
    t.loads()
}

fn require_exact_loads(t: &SubgraphWeights, what: &str) -> Result<()> {
    let g = t.graph();
    let loads = edge_loads(t);
    for (x, y) in g.edges() {
        let l = &loads[pair_index(g.n(), x, y)];
        if !l.is_one() {
            return Err(Error::contract(format!("{what}: edge {x} {y} has load {l}, expected 1")));
        }
    }
    Ok(())
}

fn require_induced_cover(t: &SubgraphWeights) -> Result<Vec<Rational>> {
    let g = t.graph();
    for (d, _) in t.iter() {
        if *d != SubgraphDescriptor::induced(g, d.vertices())? {
            return Err(Error::contract(format!("{d:?} is not an induced subgraph")));
        }
    }
    let loads = edge_loads(t);
    for (x, y) in g.edges() {
        if loads[pair_index(g.n(), x, y)] < Rational::one() {
            return Err(Error::contract(format!("edge {x} {y} is covered less than once")));
        }
    }
    Ok(loads)
}

/// Moves the weight of every subgraph onto the induced subgraph on the same
/// vertex triple.
pub fn lift_tilde_to_induced(t_tilde: &SubgraphWeights) -> Result<SubgraphWeights> {
    require_exact_loads(t_tilde, "input is not an exact-load cover")?;
    let g = t_tilde.graph();
    let mut out = SubgraphWeights::new(*g);
    for (d, w) in t_tilde.iter() {
        out.add(SubgraphDescriptor::induced(g, d.vertices())?, w)?;
    }
    Ok(out)
}

/// Greedy pass in descriptor order lowering each weight as far as coverage
/// allows. Loads only decrease, so one pass leaves every positive subgraph
/// with an edge covered exactly once.
pub fn minimize_cover(t: &SubgraphWeights) -> Result<SubgraphWeights> {
    let mut loads = require_induced_cover(t)?;
    let g = t.graph();
    let n = g.n();
    let mut out = t.clone();
    for (d, w) in t.iter() {
        let slack = d
            .edges()
            .iter()
            .map(|&(x, y)| &loads[pair_index(n, x, y)] - Rational::one())
            .min()
            .expect("descriptor has an edge");
        let cut = slack.min(w.clone());
        if cut.is_zero() {
            continue;
        }
        for (x, y) in d.edges() {
            loads[pair_index(n, x, y)] -= &cut;
        }
        out.add(*d, &-cut)?;
    }
    Ok(out)
}

/// Turns a minimal induced cover into one loading every edge exactly once
/// by pushing excess weight onto smaller subgraphs of the same triple.
///
/// While some positive subgraph `T` contains an overweight edge, with weight
/// `w = t(T)`:
/// * one overweight edge `e` of excess `a`: move `min(w, a)` from `T` to `T - e`;
/// * two, `e` and `e'` with excesses `a >= b`: if `w >= a` move `a - b` to
///   `T - e` and `b` to `T - e - e'`; otherwise empty `T`, giving
///   `min(w, b)` to `T - e - e'` and the rest to `T - e`.
///
/// Weight only ever flows into subgraphs whose edges are no longer
/// overweight, so each step removes an overweight edge or empties a
/// subgraph containing one.
pub fn redistribute_excess(t: &SubgraphWeights) -> Result<SubgraphWeights> {
    let mut loads = require_induced_cover(t)?;
    let g = *t.graph();
    let n = g.n();
    let excess = |loads: &[Rational], x: usize, y: usize| &loads[pair_index(n, x, y)] - Rational::one();
    for (d, _) in t.iter() {
        let over = d.edges().iter().filter(|&&(x, y)| excess(&loads, x, y) > Rational::zero()).count();
        if over == 3 {
            return Err(Error::contract(format!("{d:?} has three overweight edges; the cover is not minimal")));
        }
        if over == d.edge_count() {
            return Err(Error::contract(format!("weight on {d:?} can be lowered; the cover is not minimal")));
        }
    }
    let total_before = t.total();
    let mut out = t.clone();
    loop {
        let step = out.iter().find_map(|(d, w)| {
            let mut over: Vec<(Rational, (usize, usize))> = d
                .edges()
                .into_iter()
                .map(|(x, y)| (excess(&loads, x, y), (x, y)))
                .filter(|(a, _)| *a > Rational::zero())
                .collect();
            if over.is_empty() {
                return None;
            }
            // Larger excess first; ties go to the lexicographically smaller edge.
            over.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
            Some((*d, w.clone(), over))
        });
        let Some((d, w, over)) = step else { break };
        let mut moves: Vec<(SubgraphDescriptor, Rational)> = Vec::new();
        match over.as_slice() {
            [(a, e)] => {
                let m = w.clone().min(a.clone());
                moves.push((d, -m.clone()));
                moves.push((d.without_edge(e.0, e.1), m.clone()));
                loads[pair_index(n, e.0, e.1)] -= m;
            }
            [(a, e), (b, f)] => {
                let rest = d.without_edge(e.0, e.1);
                let both = rest.without_edge(f.0, f.1);
                if w >= *a {
                    moves.push((d, -a.clone()));
                    moves.push((rest, a - b));
                    moves.push((both, b.clone()));
                    loads[pair_index(n, e.0, e.1)] -= a;
                    loads[pair_index(n, f.0, f.1)] -= b;
                } else {
                    let s = w.clone().min(b.clone());
                    moves.push((d, -w.clone()));
                    moves.push((rest, &w - &s));
                    moves.push((both, s.clone()));
                    loads[pair_index(n, e.0, e.1)] -= &w;
                    loads[pair_index(n, f.0, f.1)] -= s;
                }
            }
            _ => return Err(Error::contract(format!("{d:?} has three overweight edges"))),
        }
        for (target, amount) in moves {
            if target.edge_count() == 0 && !amount.is_zero() {
                return Err(Error::contract(format!("weight would move onto an edgeless subgraph of {d:?}")));
            }
            out.add(target, &amount)?;
        }
    }
    require_exact_loads(&out, "redistribution")?;
    if out.total() != total_before {
        return Err(Error::contract("redistribution changed the total weight"));
    }
    Ok(out)
}

/// Builds an exact-load cover from an optimal fractional triangle packing.
///
/// Starting from the packing, each edge lacks `def(e) = 1 - load(e)`.
/// Underweight edges sharing a vertex are paired by a maximum matching of
/// their line graph; for a pair with `def(e) <= def(e')` the 2-edge subgraph
/// `{e, e'}` receives `def(e)`. This repeats until the underweight edges form
/// a matching, and each remaining edge `uv` is then covered by the 1-edge
/// subgraph on `u, v` and the smallest other vertex.
pub fn packing_to_cover(g_star: &SubgraphWeights, graph: &Graph) -> Result<SubgraphWeights> {
    if g_star.graph() != graph {
        return Err(Error::input("packing is over a different graph"));
    }
    let n = graph.n();
    if n < 3 {
        return Err(Error::input(format!("need at least 3 vertices, got {n}")));
    }
    let mut def = vec![Rational::zero(); crate::graphs::num_pairs(n)];
    let loads = g_star.loads();
    for (d, _) in g_star.iter() {
        if !d.is_triangle() {
            return Err(Error::contract(format!("{d:?} is not a triangle")));
        }
    }
    for (x, y) in graph.edges() {
        let idx = pair_index(n, x, y);
        if loads[idx] > Rational::one() {
            return Err(Error::contract(format!("edge {x} {y} is overloaded in the packing")));
        }
        def[idx] = Rational::one() - &loads[idx];
    }
    let under = |def: &[Rational], x: usize, y: usize| def[pair_index(n, x, y)] > Rational::zero();
    for [a, b, c] in graph.triangles() {
        if under(&def, a, b) && under(&def, a, c) && under(&def, b, c) {
            return Err(Error::contract(format!(
                "edge {a} {b} lies in the triangle {a} {b} {c} of underweight edges; the packing is not optimal"
            )));
        }
    }

    let mut out = g_star.clone();
    loop {
        let u: Vec<(usize, usize)> = graph.edges().filter(|&(x, y)| under(&def, x, y)).collect();
        let mut line = UnGraph::<(), ()>::with_capacity(u.len(), 0);
        let nodes: Vec<_> = u.iter().map(|_| line.add_node(())).collect();
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                let (p, q) = (u[i], u[j]);
                if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                    line.add_edge(nodes[i], nodes[j], ());
                }
            }
        }
        if line.edge_count() == 0 {
            break;
        }
        let matching = petgraph::algo::maximum_matching(&line);
        let mut pairs: Vec<(usize, usize)> = matching.edges().map(|(a, b)| (a.index().min(b.index()), a.index().max(b.index()))).collect();
        pairs.sort_unstable();
        for (i, j) in pairs {
            let (mut e, mut f) = (u[i], u[j]);
            let (de, df) = (&def[pair_index(n, e.0, e.1)], &def[pair_index(n, f.0, f.1)]);
            if df < de {
                std::mem::swap(&mut e, &mut f);
            }
            let amount = def[pair_index(n, e.0, e.1)].clone();
            let mut triple = [e.0, e.1, if f.0 == e.0 || f.0 == e.1 { f.1 } else { f.0 }];
            triple.sort_unstable();
            out.add(SubgraphDescriptor::from_edges(triple, &[e, f])?, &amount)?;
            def[pair_index(n, e.0, e.1)] = Rational::zero();
            def[pair_index(n, f.0, f.1)] -= amount;
        }
    }
    let rest: Vec<(usize, usize)> = graph.edges().filter(|&(x, y)| under(&def, x, y)).collect();
    for (x, y) in rest {
        let z = (0..n).find(|&z| z != x && z != y).expect("n >= 3");
        let amount = std::mem::take(&mut def[pair_index(n, x, y)]);
        out.add(SubgraphDescriptor::from_edges([x, y, z], &[(x, y)])?, &amount)?;
    }
    require_exact_loads(&out, "packing_to_cover")?;
    Ok(out)
}

/// Keeps the triangle part of an exact-load cover, which is a feasible
/// fractional triangle packing.
pub fn cover_to_packing(t_tilde_star: &SubgraphWeights, graph: &Graph) -> Result<SubgraphWeights> {
    if t_tilde_star.graph() != graph {
        return Err(Error::input("cover is over a different graph"));
    }
    require_exact_loads(t_tilde_star, "input is not an exact-load cover")?;
    let mut out = SubgraphWeights::new(*graph);
    for (d, w) in t_tilde_star.iter().filter(|(d, _)| d.is_triangle()) {
        out.add(*d, w)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::packing::{cover_bracket, r_induced, r_tilde, tau_star};

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn induced_all(g: &Graph, w: Rational) -> SubgraphWeights {
        let mut t = SubgraphWeights::new(*g);
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                for c in b + 1..g.n() {
                    let d = SubgraphDescriptor::induced(g, [a, b, c]).unwrap();
                    if d.edge_count() > 0 {
                        t.add(d, &w).unwrap();
                    }
                }
            }
        }
        t
    }

    #[test]
    fn lift_examples() {
        let (_, t) = r_tilde(&k(3)).unwrap();
        let lifted = lift_tilde_to_induced(&t).unwrap();
        assert_eq!(lifted.total(), int(1));
        assert!(lifted.iter().all(|(d, _)| d.is_triangle()));

        // Half on a path inside {0,1,2} of K4 lands on the triangle {0,1,2}.
        let g = k(4);
        let mut t = SubgraphWeights::new(g);
        let half = rat(1, 2);
        t.add(SubgraphDescriptor::from_edges([0, 1, 2], &[(0, 1), (1, 2)]).unwrap(), &half).unwrap();
        t.add(SubgraphDescriptor::from_edges([0, 1, 3], &[(0, 1)]).unwrap(), &half).unwrap();
        t.add(SubgraphDescriptor::from_edges([1, 2, 3], &[(1, 2)]).unwrap(), &half).unwrap();
        for (x, y) in [(0, 2), (0, 3), (1, 3), (2, 3)] {
            let z = (0..4).find(|&z| z != x && z != y).unwrap();
            t.add(SubgraphDescriptor::from_edges([x, y, z], &[(x, y)]).unwrap(), &int(1)).unwrap();
        }
        let lifted = lift_tilde_to_induced(&t).unwrap();
        assert_eq!(lifted.get(&SubgraphDescriptor::new([0, 1, 2], 0b111).unwrap()), half + int(1));
        assert_eq!(lifted.total(), t.total());

        assert!(matches!(lift_tilde_to_induced(&induced_all(&g, int(1))), Err(Error::Contract(_))));
    }

    #[test]
    fn redistribute_examples() {
        let (_, t) = r_induced(&k(3)).unwrap();
        assert_eq!(redistribute_excess(&t).unwrap(), t);

        let fat = induced_all(&k(4), int(1));
        assert!(matches!(redistribute_excess(&fat), Err(Error::Contract(_))));

        let half = induced_all(&k(4), rat(1, 2));
        assert_eq!(redistribute_excess(&half).unwrap(), half);
    }

    #[test]
    fn redistribute_handles_two_overweight_edges() {
        // Triangle 012 plus pendant paths 0-1-3 and 0-2-4: edges 0-1 and 0-2
        // carry load 2 while 1-2, 1-3 and 2-4 keep the cover minimal.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let mut t = SubgraphWeights::new(g);
        for triple in [[0, 1, 2], [0, 1, 3], [0, 2, 4]] {
            t.add(SubgraphDescriptor::induced(&g, triple).unwrap(), &int(1)).unwrap();
        }
        let out = redistribute_excess(&t).unwrap();
        assert_eq!(out.total(), int(3));
        for (x, y) in g.edges() {
            assert_eq!(out.load(x, y), int(1));
        }
    }

    #[test]
    fn minimize_then_redistribute() {
        let fat = induced_all(&k(4), int(1));
        let slim = minimize_cover(&fat).unwrap();
        assert!(slim.total() < fat.total());
        let out = redistribute_excess(&slim).unwrap();
        assert_eq!(out.total(), slim.total());
        for (x, y) in k(4).edges() {
            assert_eq!(out.load(x, y), int(1));
        }
    }

    #[test]
    fn packing_to_cover_examples() {
        let (_, g_star) = tau_star(&k(3)).unwrap();
        assert_eq!(packing_to_cover(&g_star, &k(3)).unwrap(), g_star);

        let edge = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let (_, empty) = tau_star(&edge).unwrap();
        let cover = packing_to_cover(&empty, &edge).unwrap();
        assert_eq!(cover.total(), int(1));
        assert_eq!(cover.get(&SubgraphDescriptor::from_edges([0, 1, 2], &[(0, 1)]).unwrap()), int(1));

        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (_, empty) = tau_star(&path).unwrap();
        let cover = packing_to_cover(&empty, &path).unwrap();
        assert_eq!(cover.total(), int(1));
        assert_eq!(cover.load(0, 1), int(1));
        assert_eq!(cover.load(1, 2), int(1));
    }

    #[test]
    fn packing_to_cover_rejects_non_optimal_packing() {
        let g = k(4);
        let err = packing_to_cover(&SubgraphWeights::new(g), &g).unwrap_err();
        assert!(matches!(err, Error::Contract(ref m) if m.contains("edge 0 1")));
    }

    #[test]
    fn packing_to_cover_meets_the_upper_bracket() {
        for n in 3..=7 {
            let g = k(n);
            let (ts, g_star) = tau_star(&g).unwrap();
            let cover = packing_to_cover(&g_star, &g).unwrap();
            let (_, upper) = cover_bracket(&g, &ts);
            assert!(cover.total() <= upper, "n={n}");
        }
    }

    #[test]
    fn cover_to_packing_examples() {
        let (_, t) = r_tilde(&k(3)).unwrap();
        assert_eq!(cover_to_packing(&t, &k(3)).unwrap().total(), int(1));

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (_, t) = r_tilde(&c4).unwrap();
        assert!(cover_to_packing(&t, &c4).unwrap().is_empty());

        let (r, t) = r_tilde(&k(4)).unwrap();
        let g = cover_to_packing(&t, &k(4)).unwrap();
        assert!(g.total() >= int(6) - int(2) * r);
        assert!(g.loads().iter().all(|l| *l <= int(1)));
    }
}
