use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use crate::bitset::VertexSet;
use crate::coloring::EdgeColoring;
use crate::error::{Budget, Result};

/// A book placed in a colouring: spine edge and page vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookPlacement {
    pub spine: (usize, usize),
    pub pages: Vec<usize>,
}

impl BookPlacement {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        [self.spine.0, self.spine.1].into_iter().chain(self.pages.iter().copied())
    }
}

/// Blue common neighbourhood of `u` and `v` outside `forbidden`.
pub(crate) fn blue_common(c: &EdgeColoring, u: usize, v: usize, forbidden: &VertexSet) -> VertexSet {
    let mut s = c.blue_neighbors(u).intersection(c.blue_neighbors(v));
    s.difference_with(forbidden);
    s
}

/// First blue `B_k` avoiding `forbidden`: scans blue edges `u < v` in
/// row-major order and takes the `k` smallest common blue neighbours.
pub fn find_blue_book(c: &EdgeColoring, k: usize, forbidden: &VertexSet) -> Option<BookPlacement> {
    let n = c.order();
    for u in (0..n).filter(|&u| !forbidden.contains(u)) {
        for v in c.blue_neighbors(u).iter().filter(|&v| v > u && !forbidden.contains(v)) {
            let common = blue_common(c, u, v, forbidden);
            if common.len() >= k {
                return Some(BookPlacement {
                    spine: (u, v),
                    pages: common.iter().take(k).collect(),
                });
            }
        }
    }
    None
}

/// Maximum bipartite matching by augmenting paths. `left[i]` lists the right
/// vertices adjacent to left vertex `i`; returns the partner of each left vertex.
pub(crate) fn bipartite_matching(left: &[Vec<usize>], right_n: usize) -> Vec<Option<usize>> {
    fn augment(
        i: usize,
        left: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
        partner: &mut [Option<usize>],
    ) -> bool {
        for &r in &left[i] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none() || augment(owner[r].unwrap(), left, seen, owner, partner) {
                owner[r] = Some(i);
                partner[i] = Some(r);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right_n];
    let mut partner = vec![None; left.len()];
    for i in 0..left.len() {
        let mut seen = vec![false; right_n];
        augment(i, left, &mut seen, &mut owner, &mut partner);
    }
    partner
}

/// Assigns `k` distinct pages to each spine, pages avoiding all spine vertices
/// and `forbidden`; `None` if impossible.
fn assign_pages(
    c: &EdgeColoring,
    k: usize,
    spines: &[(usize, usize)],
    forbidden: &VertexSet,
) -> Option<Vec<BookPlacement>> {
    let mut blocked = forbidden.clone();
    for &(u, v) in spines {
        blocked.insert(u);
        blocked.insert(v);
    }
    let mut slots = Vec::with_capacity(spines.len() * k);
    for &(u, v) in spines {
        let pages = blue_common(c, u, v, &blocked).to_vec();
        for _ in 0..k {
            slots.push(pages.clone());
        }
    }
    let partner = bipartite_matching(&slots, c.order());
    if partner.iter().any(|p| p.is_none()) {
        return None;
    }
    Some(
        spines
            .iter()
            .enumerate()
            .map(|(i, &spine)| BookPlacement {
                spine,
                pages: (0..k).map(|j| partner[i * k + j].unwrap()).collect(),
            })
            .collect(),
    )
}

/// Exact search for `t` vertex-disjoint blue `B_k` avoiding `forbidden`.
///
/// Spines are chosen by backtracking in increasing order; after every choice
/// a bipartite matching decides whether the chosen spines can still receive
/// distinct pages, which prunes every infeasible partial packing.
pub fn find_disjoint_blue_books(
    c: &EdgeColoring,
    k: usize,
    t: usize,
    forbidden: &VertexSet,
    budget: &mut Budget,
) -> Result<Option<Vec<BookPlacement>>> {
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    if t == 1 {
        budget.tick()?;
        return Ok(find_blue_book(c, k, forbidden).map(|b| vec![b]));
    }
    let n = c.order();
    let mut candidates = Vec::new();
    for u in (0..n).filter(|&u| !forbidden.contains(u)) {
        for v in c.blue_neighbors(u).iter().filter(|&v| v > u && !forbidden.contains(v)) {
            if blue_common(c, u, v, forbidden).len() >= k {
                candidates.push((u, v));
            }
        }
    }
    let mut chosen = Vec::with_capacity(t);
    let mut used = VertexSet::new(n);
    pack(c, k, t, forbidden, &candidates, 0, &mut chosen, &mut used, budget)
}

#[allow(clippy::too_many_arguments)]
fn pack(
    c: &EdgeColoring,
    k: usize,
    t: usize,
    forbidden: &VertexSet,
    candidates: &[(usize, usize)],
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    used: &mut VertexSet,
    budget: &mut Budget,
) -> Result<Option<Vec<BookPlacement>>> {
    budget.tick()?;
    let placement = assign_pages(c, k, chosen, forbidden);
    if placement.is_none() {
        return Ok(None);
    }
    if chosen.len() == t {
        return Ok(placement);
    }
    // Each remaining book needs k + 2 vertices.
    let free = c.order() - forbidden.len() - used.len();
    if free < (t - chosen.len()) * (k + 2) + chosen.len() * k {
        return Ok(None);
    }
    for (i, &(u, v)) in candidates.iter().enumerate().skip(from) {
        if used.contains(u) || used.contains(v) {
            continue;
        }
        chosen.push((u, v));
        used.insert(u);
        used.insert(v);
        if let Some(found) = pack(c, k, t, forbidden, candidates, i + 1, chosen, used, budget)? {
            return Ok(Some(found));
        }
        used.remove(u);
        used.remove(v);
        chosen.pop();
    }
    Ok(None)
}

/// Blue matching inside a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TMatching {
    /// `t` disjoint blue edges.
    Found(Vec<(usize, usize)>),
    /// A maximum blue matching, smaller than `t`.
    Maximum(Vec<(usize, usize)>),
}

/// Blue `tK_2` inside `region`, or a maximum blue matching certifying that
/// none exists. Uses a general maximum matching on the blue graph of the region.
pub fn blue_t_matching(c: &EdgeColoring, region: &VertexSet, t: usize) -> TMatching {
    let verts = region.to_vec();
    let mut g: UnGraph<usize, ()> = UnGraph::with_capacity(verts.len(), 0);
    let nodes: Vec<_> = verts.iter().map(|&v| g.add_node(v)).collect();
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if c.blue_neighbors(u).contains(v) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let m = maximum_matching(&g);
    let mut edges: Vec<(usize, usize)> = m
        .edges()
        .map(|(a, b)| {
            let (x, y) = (g[a], g[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort();
    if edges.len() >= t {
        edges.truncate(t);
        TMatching::Found(edges)
    } else {
        TMatching::Maximum(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{burr_coloring, Color};

    fn none(n: usize) -> VertexSet {
        VertexSet::new(n)
    }

    #[test]
    fn single_books() {
        let c = EdgeColoring::monochromatic(4, Color::Blue);
        let b = find_blue_book(&c, 1, &none(4)).unwrap();
        assert_eq!(b, BookPlacement { spine: (0, 1), pages: vec![2] });
        let (burr, _) = burr_coloring(3, 1, 1).unwrap();
        assert!(find_blue_book(&burr, 1, &none(4)).is_none());
        for k in 1..6 {
            let c = EdgeColoring::monochromatic(k + 2, Color::Blue);
            assert!(find_blue_book(&c, k, &none(k + 2)).is_some());
            assert!(find_blue_book(&c, k + 1, &none(k + 2)).is_none());
        }
    }

    #[test]
    fn packings() {
        let mut b = Budget::default();
        for (t, k) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let n = t * (k + 2);
            let c = EdgeColoring::monochromatic(n, Color::Blue);
            let books = find_disjoint_blue_books(&c, k, t, &none(n), &mut b).unwrap().unwrap();
            assert_eq!(books.len(), t);
            let c = EdgeColoring::monochromatic(n - 1, Color::Blue);
            assert!(find_disjoint_blue_books(&c, k, t, &none(n - 1), &mut b).unwrap().is_none());
        }
        for n in 3..=8 {
            for k in 1..=2 {
                let (c, _) = burr_coloring(n, 2, k).unwrap();
                assert!(find_disjoint_blue_books(&c, k, 2, &none(c.order()), &mut b).unwrap().is_none());
            }
        }
        // Blue 2K_3 on {0,1,2} and {3,4,5}, everything else red.
        let mut c = EdgeColoring::monochromatic(9, Color::Red);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
            c.set(u, v, Color::Blue);
        }
        assert!(find_disjoint_blue_books(&c, 1, 2, &none(9), &mut b).unwrap().is_some());
    }

    #[test]
    fn matchings() {
        let n = 10;
        let all = VertexSet::full(n);
        match blue_t_matching(&EdgeColoring::monochromatic(n, Color::Blue), &all, 5) {
            TMatching::Found(e) => assert_eq!(e.len(), 5),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            blue_t_matching(&EdgeColoring::monochromatic(n, Color::Red), &all, 1),
            TMatching::Maximum(vec![])
        );
        let mut star = EdgeColoring::monochromatic(n, Color::Red);
        for v in 1..n {
            star.set(0, v, Color::Blue);
        }
        match blue_t_matching(&star, &all, 2) {
            TMatching::Maximum(e) => assert_eq!(e.len(), 1),
            other => panic!("{other:?}"),
        }
    }
}
