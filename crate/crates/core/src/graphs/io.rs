//! Plain-text graph and coloring formats.
//!
//! Graph: a header line `n <count>` followed by one `u v` line per edge.
//! Coloring: a header line `n <count>` followed by `u v R` or `u v B` for
//! every edge of `K_n`. Vertices are 0-based; blank lines and lines starting
//! with `#` are ignored.

use std::fmt::Write as _;

use super::coloring::TwoColoring;
use super::graph::{num_pairs, pair_index, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line_no: usize, line: &str) -> Result<usize> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some("n"), Some(count), None) => {
            let n: usize = count
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex count {count:?}")))?;
            if !(3..=MAX_VERTICES).contains(&n) {
                return Err(Error::parse(line_no, format!("vertex count must be in 3..={MAX_VERTICES}, got {n}")));
            }
            Ok(n)
        }
        _ => Err(Error::parse(line_no, format!("expected header `n <count>`, got {line:?}"))),
    }
}

fn parse_pair(line_no: usize, u: &str, v: &str, n: usize) -> Result<(usize, usize)> {
    let vertex = |s: &str| -> Result<usize> {
        let x: usize = s.parse().map_err(|_| Error::parse(line_no, format!("bad vertex {s:?}")))?;
        if x >= n {
            return Err(Error::parse(line_no, format!("vertex {x} out of range for n = {n}")));
        }
        Ok(x)
    };
    let (u, v) = (vertex(u)?, vertex(v)?);
    if u == v {
        return Err(Error::parse(line_no, format!("loop at vertex {u}")));
    }
    Ok((u.min(v), u.max(v)))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    let n = parse_header(hl, header)?;
    let mut g = Graph::empty(n)?;
    for (line_no, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(Error::parse(line_no, format!("expected `u v`, got {line:?}")));
        };
        let (u, v) = parse_pair(line_no, u, v, n)?;
        if g.has_edge(u, v) {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn format_graph(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("write to string");
    }
    s
}

pub fn parse_coloring(text: &str) -> Result<TwoColoring> {
    let mut all = parse_colorings(text)?;
    if all.len() != 1 {
        return Err(Error::parse(1, format!("expected one coloring, found {}", all.len())));
    }
    Ok(all.remove(0))
}

/// Parses one or more colorings, each introduced by its own header line.
pub fn parse_colorings(text: &str) -> Result<Vec<TwoColoring>> {
    let mut out = Vec::new();
    let mut current: Option<(usize, usize, Graph, Vec<bool>)> = None;
    let finish = |cur: (usize, usize, Graph, Vec<bool>)| -> Result<TwoColoring> {
        let (header_line, n, red, seen) = cur;
        if let Some(idx) = seen.iter().position(|s| !s) {
            let (u, v) = super::graph::pair_at(n, idx);
            return Err(Error::parse(header_line, format!("coloring is missing edge {u} {v}")));
        }
        Ok(TwoColoring::from_red(red))
    };
    for (line_no, line) in content_lines(text) {
        if line.starts_with("n ") || line == "n" {
            if let Some(cur) = current.take() {
                out.push(finish(cur)?);
            }
            let n = parse_header(line_no, line)?;
            current = Some((line_no, n, Graph::empty(n)?, vec![false; num_pairs(n)]));
            continue;
        }
        let Some((_, n, red, seen)) = current.as_mut() else {
            return Err(Error::parse(line_no, "edge line before `n <count>` header"));
        };
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v, c] = parts[..] else {
            return Err(Error::parse(line_no, format!("expected `u v R|B`, got {line:?}")));
        };
        let (u, v) = parse_pair(line_no, u, v, *n)?;
        let idx = pair_index(*n, u, v);
        if seen[idx] {
            return Err(Error::parse(line_no, format!("edge {u} {v} colored twice")));
        }
        seen[idx] = true;
        match c {
            "R" => red.add_edge(u, v),
            "B" => {}
            other => return Err(Error::parse(line_no, format!("color must be R or B, got {other:?}"))),
        }
    }
    match current {
        Some(cur) => out.push(finish(cur)?),
        None => return Err(Error::parse(1, "no coloring found")),
    }
    Ok(out)
}

impl serde::Serialize for TwoColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_coloring(self))
    }
}

impl<'de> serde::Deserialize<'de> for TwoColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_coloring(&text).map_err(serde::de::Error::custom)
    }
}

pub fn format_coloring(c: &TwoColoring) -> String {
    let n = c.n();
    let mut s = format!("n {n}\n");
    for u in 0..n {
        for v in u + 1..n {
            writeln!(s, "{u} {v} {}", c.color(u, v).letter()).expect("write to string");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::coloring::mono_triangle_free_k5;

    #[test]
    fn graph_roundtrip() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4), (1, 3)]).unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "n 5\n0 1\n1 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(parse_graph("# K3\nn 3\n\n0 1\n2 1\n0 2\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(parse_graph("n 3\n0 3\n").unwrap_err(), Error::Parse { line: 2, msg: "vertex 3 out of range for n = 3".into() });
        assert!(matches!(parse_graph("n 3\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("m 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("n 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("n 3\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn coloring_roundtrip() {
        let c = mono_triangle_free_k5();
        let text = format_coloring(&c);
        assert!(text.starts_with("n 5\n0 1 R\n0 2 B\n"));
        assert_eq!(parse_coloring(&text).unwrap(), c);
        let two = format!("{text}\n{}", format_coloring(&c.swapped()));
        assert_eq!(parse_colorings(&two).unwrap(), vec![c, c.swapped()]);
    }

    #[test]
    fn coloring_must_cover_every_edge() {
        let err = parse_coloring("n 3\n0 1 R\n0 2 B\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(err.to_string().contains("missing edge 1 2"));
        assert!(parse_coloring("n 3\n0 1 R\n0 2 B\n1 2 G\n").is_err());
        assert!(parse_coloring("n 3\n0 1 R\n1 0 B\n0 2 B\n1 2 B\n").is_err());
        assert!(parse_coloring("0 1 R\n").is_err());
    }
}
