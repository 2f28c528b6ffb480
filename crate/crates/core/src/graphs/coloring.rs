use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::turan::balanced_parts;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// Red/Blue coloring of the edges of `K_n`, stored as its red graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    red: Graph,
}

impl TwoColoring {
    pub fn from_red(red: Graph) -> Self {
        TwoColoring { red }
    }

    pub fn monochromatic(n: usize, color: Color) -> Result<Self> {
        let red = match color {
            Color::Red => Graph::complete(n)?,
            Color::Blue => Graph::empty(n)?,
        };
        Ok(TwoColoring { red })
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    pub fn class(&self, color: Color) -> Graph {
        match color {
            Color::Red => self.red,
            Color::Blue => self.blue(),
        }
    }

    pub fn color(&self, u: usize, v: usize) -> Color {
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn swapped(&self) -> Self {
        TwoColoring { red: self.blue() }
    }

    pub fn permuted(&self, order: &[usize]) -> Self {
        TwoColoring { red: self.red.permuted(order) }
    }

    /// Number of vertex triples whose three edges share a color.
    pub fn mono_triangle_count(&self) -> usize {
        self.red.triangles().len() + self.blue().triangles().len()
    }
}

/// The 2-coloring of `K_5` with a red 5-cycle and blue pentagram; neither
/// color class contains a triangle.
pub fn mono_triangle_free_k5() -> TwoColoring {
    let red = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).expect("static graph");
    TwoColoring::from_red(red)
}

/// Balanced blow-up of `base` to `n` vertices. Vertex `v` goes to part
/// `balanced_parts(n, m)[v]`; edges between parts `a != b` take the base color
/// of `{a, b}` and edges inside a part are red.
pub fn balanced_blowup(base: &TwoColoring, n: usize) -> Result<TwoColoring> {
    let m = base.n();
    if n < m {
        return Err(Error::input(format!("blow-up needs n >= {m}, got {n}")));
    }
    let part = balanced_parts(n, m)?;
    let mut red = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part[u] == part[v] || base.color(part[u], part[v]) == Color::Red {
                red.add_edge(u, v);
            }
        }
    }
    Ok(TwoColoring::from_red(red))
}
