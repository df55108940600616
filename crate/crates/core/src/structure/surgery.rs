use serde::{Deserialize, Serialize};

use super::suspended::{chains, is_suspended_path, Chain};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A suspended path that lost some interior vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shortening {
    /// The full path in original labels, end to end.
    pub path: Vec<usize>,
    /// Interior vertices of `path` that were deleted.
    pub removed: Vec<usize>,
}

impl Shortening {
    /// The path as it survives in the shortened graph (original labels).
    pub fn kept_path(&self) -> Vec<usize> {
        self.path.iter().copied().filter(|v| !self.removed.contains(v)).collect()
    }

    /// Pairs every vertex of the full path with the host vertex at the same
    /// position of `host_path`, which must be exactly as long as the full path.
    pub fn assign(&self, host_path: &[usize]) -> Result<Vec<(usize, usize)>> {
        if host_path.len() != self.path.len() {
            return Err(Error::Precondition(format!(
                "host path has {} vertices, the original path {}",
                host_path.len(),
                self.path.len()
            )));
        }
        Ok(self.path.iter().copied().zip(host_path.iter().copied()).collect())
    }
}

/// How to undo a surgery when lifting an embedding back to the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recipe {
    /// Deleted `(leaf, parent)` pairs in deletion order; reattach in reverse.
    Leaves(Vec<(usize, usize)>),
    PathShortening(Vec<Shortening>),
}

/// Result of a surgery: the smaller graph, the map from its vertices to the
/// original labels, and the recipe to undo it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    pub graph: Graph,
    pub original_order: usize,
    /// `kept[i]` is the original label of vertex `i` of `graph`.
    pub kept: Vec<usize>,
    pub recipe: Recipe,
}

impl Surgery {
    /// Label of original vertex `v` in the surgered graph, if it survived.
    pub fn new_label(&self, v: usize) -> Option<usize> {
        self.kept.binary_search(&v).ok()
    }

    /// Original labels that were deleted.
    pub fn removed(&self) -> Vec<usize> {
        (0..self.original_order).filter(|v| self.kept.binary_search(v).is_err()).collect()
    }

    /// Extends an embedding of the surgered graph (`small_map[i]` is the host
    /// image of vertex `i`) to the original graph, taking images of deleted
    /// vertices from `extra` (original label, host vertex). Kept vertices may
    /// also be re-placed by `extra`, which wins.
    pub fn lift(&self, small_map: &[usize], extra: &[(usize, usize)]) -> Result<Vec<usize>> {
        if small_map.len() != self.kept.len() {
            return Err(Error::Precondition(format!(
                "map covers {} vertices, the surgered graph has {}",
                small_map.len(),
                self.kept.len()
            )));
        }
        let mut full = vec![usize::MAX; self.original_order];
        for (i, &orig) in self.kept.iter().enumerate() {
            full[orig] = small_map[i];
        }
        for &(orig, h) in extra {
            if orig >= self.original_order {
                return Err(Error::Precondition(format!("vertex {orig} is out of range")));
            }
            full[orig] = h;
        }
        if let Some(v) = full.iter().position(|&h| h == usize::MAX) {
            return Err(Error::Precondition(format!("no image for deleted vertex {v}")));
        }
        Ok(full)
    }
}

fn delete(g: &Graph, removed: &VertexSet, recipe: Recipe) -> Surgery {
    let (graph, kept) = g.remove_vertices(removed);
    Surgery {
        graph,
        original_order: g.order(),
        kept,
        recipe,
    }
}

/// Deletes the lowest-index degree-1 vertex until none is left. Trees end at `K_1`.
pub fn strip_leaves_recursive(g: &Graph) -> Surgery {
    let mut work = g.clone();
    let mut alive = g.vertex_set();
    let mut log = Vec::new();
    while let Some(leaf) = alive.iter().find(|&v| work.degree(v) == 1) {
        let parent = work.neighbors(leaf).first().unwrap();
        work.remove_edge(leaf, parent);
        alive.remove(leaf);
        log.push((leaf, parent));
    }
    let removed = g.vertex_set().difference(&alive);
    delete(g, &removed, Recipe::Leaves(log))
}

/// Deletes every degree-1 vertex at once. In a `K_2` component only the
/// larger endpoint goes, so the result keeps one vertex per component.
pub fn remove_all_leaves(g: &Graph) -> Surgery {
    let mut removed = VertexSet::new(g.order());
    let mut log = Vec::new();
    for leaf in g.leaves() {
        let parent = g.neighbors(leaf).first().unwrap();
        if g.degree(parent) == 1 && parent > leaf {
            continue;
        }
        removed.insert(leaf);
        log.push((leaf, parent));
    }
    delete(g, &removed, Recipe::Leaves(log))
}

/// Deletes all degree-1 neighbours of `v`.
pub fn remove_leaves_at(g: &Graph, v: usize) -> Result<Surgery> {
    if v >= g.order() {
        return Err(Error::InvalidParameter(format!("vertex {v} is out of range")));
    }
    let mut removed = VertexSet::new(g.order());
    let mut log = Vec::new();
    for w in g.neighbors(v).iter() {
        if g.degree(w) == 1 && !(g.degree(v) == 1 && w > v) {
            removed.insert(w);
            log.push((w, v));
        }
    }
    Ok(delete(g, &removed, Recipe::Leaves(log)))
}

/// Applies several shortenings: deletes their removed vertices and joins each
/// surviving path consecutively.
fn apply_shortenings(g: &Graph, shortenings: Vec<Shortening>) -> Result<Surgery> {
    let mut removed = VertexSet::new(g.order());
    for s in &shortenings {
        for &v in &s.removed {
            removed.insert(v);
        }
    }
    let (mut graph, kept) = g.remove_vertices(&removed);
    let label = |v: usize| kept.binary_search(&v).expect("kept vertex");
    for s in &shortenings {
        if s.removed.is_empty() {
            continue;
        }
        let mut prev: Option<usize> = None;
        for (i, &v) in s.path.iter().enumerate() {
            if s.removed.contains(&v) {
                continue;
            }
            let bridged = prev.is_some_and(|p| i - p > 1);
            let last = prev.map(|p| s.path[p]);
            prev = Some(i);
            if let (true, Some(u)) = (bridged, last) {
                let (a, b) = (label(u), label(v));
                if a == b || graph.has_edge(a, b) {
                    return Err(Error::Precondition(format!(
                        "shortening would create a parallel edge between {} and {}",
                        u, v
                    )));
                }
                graph.add_edge(a, b);
            }
        }
    }
    Ok(Surgery {
        graph,
        original_order: g.order(),
        kept,
        recipe: Recipe::PathShortening(shortenings),
    })
}

/// Shortens a suspended path by `amount` vertices, deleting the interior
/// vertices nearest its last vertex and joining the remainder.
pub fn shorten_path_by(g: &Graph, path: &[usize], amount: usize) -> Result<Surgery> {
    if !is_suspended_path(g, path) || path.len() < 2 {
        return Err(Error::InvalidParameter("target is not a suspended path".into()));
    }
    let interior = path.len() - 2;
    if amount > interior {
        return Err(Error::InvalidParameter(format!(
            "cannot remove {amount} vertices from a path with {interior} interior vertices"
        )));
    }
    let removed = path[path.len() - 1 - amount..path.len() - 1].to_vec();
    apply_shortenings(
        g,
        vec![Shortening {
            path: path.to_vec(),
            removed,
        }],
    )
}

/// Shortens every maximal suspended chain whose longest path has more than
/// `limit` vertices to exactly `limit` vertices. A component that is a cycle
/// shrinks to `C_limit`.
pub fn shorten_suspended_paths_to(g: &Graph, limit: usize) -> Result<Surgery> {
    if limit < 3 {
        return Err(Error::InvalidParameter(format!("limit {limit} must be at least 3")));
    }
    let mut plan = Vec::new();
    for chain in chains(g) {
        let excess = chain.path_order().saturating_sub(limit);
        if excess == 0 {
            continue;
        }
        let path = match &chain {
            Chain::Open { interior, ends } => {
                let mut p = vec![ends.0];
                p.extend(interior);
                p.push(ends.1);
                p
            }
            Chain::Loop { interior, anchor } => {
                let mut p = vec![*anchor];
                p.extend(interior);
                p.push(*anchor);
                p
            }
            Chain::Cycle(c) => {
                let mut p = c.clone();
                p.push(c[0]);
                p
            }
        };
        // Remove from the end of the interior, leaving the first vertices.
        let removed = path[path.len() - 1 - excess..path.len() - 1].to_vec();
        plan.push(Shortening { path, removed });
    }
    apply_shortenings(g, plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternSpec;
    use crate::structure::longest_suspended_path;

    fn build(s: &str) -> Graph {
        PatternSpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn trees_strip_to_a_vertex() {
        for seed in 0..20 {
            let t = crate::generate::random_tree(15, &mut crate::generate::rng(seed));
            let s = strip_leaves_recursive(&t);
            assert_eq!(s.graph.order(), 1);
            let Recipe::Leaves(log) = &s.recipe else { panic!() };
            assert_eq!(log.len(), 14);
        }
    }

    #[test]
    fn star_loses_its_leaves() {
        let s = remove_leaves_at(&build("star:10"), 0).unwrap();
        assert_eq!(s.graph.order(), 1);
        assert_eq!(s.kept, vec![0]);
        assert_eq!(remove_all_leaves(&build("star:10")).graph.order(), 1);
        assert_eq!(remove_all_leaves(&build("path:2")).graph.order(), 1);
    }

    #[test]
    fn long_cycle_shrinks() {
        let s = shorten_suspended_paths_to(&build("cycle:20"), 6).unwrap();
        assert_eq!(s.graph.order(), 6);
        assert!(s.graph.is_connected());
        assert!((0..6).all(|v| s.graph.degree(v) == 2));
    }

    #[test]
    fn open_chain_shrinks_and_lifts() {
        // Triangle 0-1-2 with a pendant path 2-3-4-5-6-7.
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        let path = longest_suspended_path(&g);
        assert_eq!(path, vec![2, 3, 4, 5, 6, 7]);
        let s = shorten_path_by(&g, &path, 2).unwrap();
        assert_eq!(s.graph.order(), 6);
        assert_eq!(s.graph.size(), 6);
        assert!(s.graph.has_edge(4, 5));
        assert_eq!(s.removed(), vec![5, 6]);
        let id: Vec<usize> = (0..6).collect();
        let full = s.lift(&id, &[(5, 10), (6, 11)]).unwrap();
        assert_eq!(full, vec![0, 1, 2, 3, 4, 10, 11, 5]);
        assert!(s.lift(&id, &[]).is_err());
        assert!(shorten_path_by(&g, &[0, 1, 2, 3], 1).is_err());
    }

    #[test]
    fn joining_onto_an_existing_edge_is_refused() {
        // Triangle: removing the middle of 0-1-2 would duplicate edge 0-2.
        assert!(shorten_path_by(&build("complete:3"), &[0, 1, 2], 1).is_err());
    }
}
