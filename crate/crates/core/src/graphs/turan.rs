use super::graph::Graph;
use crate::error::{Error, Result};

/// Edge count of the Turán graph `T(k, i)`, by the closed formula
///
/// `t(k,i) = k^2 (i-1) / (2i) - (i/2) (ceil(k/i) - k/i) (k/i - floor(k/i))`.
///
/// Writing `k = q i + r` the correction term is `r (i - r) / (2i)`, so the
/// whole expression is the integer `(k^2 (i-1) - r (i-r)) / (2i)`.
pub fn turan_number(k: u64, i: u64) -> Result<u64> {
    if i < 2 || i > k {
        return Err(Error::input(format!("turan_number needs 2 <= i <= k, got k={k}, i={i}")));
    }
    let (k, i) = (k as u128, i as u128);
    let r = k % i;
    let num = k * k * (i - 1) - r * (i - r);
    debug_assert_eq!(num % (2 * i), 0);
    Ok((num / (2 * i)) as u64)
}

/// Part index of each vertex when `0..n` is split into `i` contiguous blocks
/// whose sizes differ by at most one (larger blocks first).
pub fn balanced_parts(n: usize, i: usize) -> Result<Vec<usize>> {
    if i < 1 || i > n {
        return Err(Error::input(format!("need 1 <= i <= n, got n={n}, i={i}")));
    }
    let (q, r) = (n / i, n % i);
    let mut out = Vec::with_capacity(n);
    for p in 0..i {
        let size = if p < r { q + 1 } else { q };
        out.extend(std::iter::repeat_n(p, size));
    }
    Ok(out)
}

/// Complete `i`-partite graph on `n` vertices with balanced parts.
pub fn turan_graph(n: usize, i: usize) -> Result<Graph> {
    let part = balanced_parts(n, i)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
