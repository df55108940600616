//! Seeded generators for random labeled trees and sparse connected graphs.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::prufer_tree;

/// The crate-wide RNG: ChaCha8, so streams are stable across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree on `n >= 1` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_tree(&seq).expect("symbols drawn in range")
        }
    }
}

/// Connected graph with `n` vertices and exactly `n + excess` edges: a random
/// tree plus `excess + 1` distinct random non-edges.
pub fn random_sparse_connected(n: usize, excess: i64, seed: u64) -> Result<Graph> {
    random_sparse_connected_with(n, excess, &mut rng(seed))
}

pub fn random_sparse_connected_with<R: Rng>(n: usize, excess: i64, rng: &mut R) -> Result<Graph> {
    let max_edges = (n * n.saturating_sub(1) / 2) as i64;
    if n == 0 || excess < -1 || n as i64 + excess > max_edges {
        return Err(Error::InvalidParameter(format!(
            "no connected graph with {n} vertices and {} edges",
            n as i64 + excess
        )));
    }
    let mut g = random_tree(n, rng);
    let extra = (excess + 1) as usize;
    if extra > 0 {
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        for i in sample(rng, non_edges.len(), extra).into_iter() {
            let (u, v) = non_edges[i];
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_and_unicyclic() {
        let t = random_sparse_connected(5, -1, 7).unwrap();
        assert!(t.is_connected());
        assert_eq!(t.size(), 4);
        let u = random_sparse_connected(5, 0, 7).unwrap();
        assert!(u.is_connected());
        assert_eq!(u.size(), 5);
    }

    #[test]
    fn theorem_scale_edge_bound() {
        // n = 200 and excess floor(200/206) = 0.
        let g = random_sparse_connected(200, 200 / 206, 3).unwrap();
        assert!(g.is_connected());
        assert!(g.size() as u64 * 206 <= 200 * 207);
    }

    #[test]
    fn deterministic_and_infeasible() {
        assert_eq!(
            random_sparse_connected(30, 4, 11).unwrap(),
            random_sparse_connected(30, 4, 11).unwrap()
        );
        assert!(random_sparse_connected(5, -2, 0).is_err());
        assert!(random_sparse_connected(4, 3, 0).is_err());
        assert_eq!(random_sparse_connected(4, 2, 0).unwrap(), Graph::complete(4));
    }
}
