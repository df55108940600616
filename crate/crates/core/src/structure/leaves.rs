use super::suspended::{chains, longest_suspended_path, Chain};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An end-edge `(leaf, support)`: `leaf` has degree 1 and `support` is its
/// unique neighbour.
pub type EndEdge = (usize, usize);

/// Maximum set of pairwise vertex-disjoint end-edges.
///
/// Two end-edges meet only in a shared support, so the maximum takes one edge
/// per distinct support, using that support's smallest leaf. A `K_2`
/// component contributes its single edge once. Sorted by support.
pub fn max_end_edge_matching(g: &Graph) -> Vec<EndEdge> {
    let mut best: Vec<Option<usize>> = vec![None; g.order()];
    for leaf in g.leaves() {
        let support = g.neighbors(leaf).first().unwrap();
        if g.degree(support) == 1 && support < leaf {
            continue;
        }
        if best[support].is_none() {
            best[support] = Some(leaf);
        }
    }
    best.iter()
        .enumerate()
        .filter_map(|(s, l)| l.map(|l| (l, s)))
        .collect()
}

/// Outcome of the degree-1 counting check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeOneCheck {
    pub leaves: usize,
    /// `ceil(n / (2q) - 3 l / 2)` with `l = e(G) - n`.
    pub bound: i64,
    pub pass: bool,
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// Counts degree-1 vertices against `ceil(n/(2q) - 3l/2)`.
///
/// Preconditions (checked): no isolated vertex, no suspended path with more
/// than `q` vertices, and no component that is a bare cycle. A cycle `C_m`
/// with `m <= q` has no long suspended path and no leaves, yet the bound is
/// `ceil(m/(2q)) = 1`; such components are rejected as unbounded suspended
/// chains.
pub fn degree1_bound_check(g: &Graph, q: usize) -> Result<DegreeOneCheck> {
    if q == 0 {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let longest = longest_suspended_path(g);
    if longest.len() > q {
        return Err(Error::Precondition(format!(
            "suspended path of order {} exceeds q = {q}",
            longest.len()
        )));
    }
    if let Some(Chain::Cycle(c)) = chains(g).into_iter().find(|c| matches!(c, Chain::Cycle(_))) {
        return Err(Error::Precondition(format!(
            "component through vertex {} is a cycle of order {}",
            c[0],
            c.len()
        )));
    }
    let n = g.order() as i64;
    let l = g.excess();
    let q = q as i64;
    let bound = ceil_div(n - 3 * l * q, 2 * q);
    let leaves = g.leaves().len();
    Ok(DegreeOneCheck {
        leaves,
        bound,
        pass: leaves as i64 >= bound,
    })
}
