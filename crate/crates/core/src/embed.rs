//! Exact subgraph embedding (not necessarily induced) by backtracking.
//!
//! Candidates for the next pattern vertex are the common host neighbourhood of
//! the images of its already-placed neighbours. Two unused host vertices with
//! the same neighbourhood (open or closed) are interchangeable by an
//! automorphism fixing every used vertex, so only one of them is tried per
//! level; on block-structured hosts such as the extremal colorings this turns
//! exponential refutations into linear ones.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Budget, Result};
use crate::graph::Graph;

/// Injective map `pattern vertex -> host vertex`.
pub type Embedding = Vec<usize>;

pub fn find_embedding(host: &Graph, pattern: &Graph, budget: &mut Budget) -> Result<Option<Embedding>> {
    find_embedding_within(host, pattern, &host.vertex_set(), budget)
}

/// Like [`find_embedding`] but only host vertices in `allowed` may be used.
pub fn find_embedding_within(
    host: &Graph,
    pattern: &Graph,
    allowed: &VertexSet,
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    find_embedding_pinned(host, pattern, allowed, &[], budget)
}

/// Like [`find_embedding_within`] with some pattern vertices fixed in advance:
/// each `(u, h)` in `pins` forces pattern vertex `u` onto host vertex `h`.
pub fn find_embedding_pinned(
    host: &Graph,
    pattern: &Graph,
    allowed: &VertexSet,
    pins: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Option<Embedding>> {
    let p = pattern.order();
    for (i, &(u, h)) in pins.iter().enumerate() {
        if u >= p || !allowed.contains(h) || pins[..i].iter().any(|&(u2, h2)| u2 == u || h2 == h) {
            return Ok(None);
        }
    }
    if p == 0 {
        return Ok(Some(Vec::new()));
    }
    if p > allowed.len() {
        return Ok(None);
    }
    // A connected pattern fits only inside one host component of `allowed`.
    let pruned;
    let allowed = if p >= 2 && pattern.is_connected() {
        pruned = large_components(host, allowed, p);
        if pruned.len() < p || pins.iter().any(|&(_, h)| !pruned.contains(h)) {
            return Ok(None);
        }
        &pruned
    } else {
        allowed
    };
    let host_deg: Vec<usize> = (0..host.order())
        .map(|v| host.neighbors(v).intersection_len(allowed))
        .collect();
    let max_host_deg = allowed.iter().map(|v| host_deg[v]).max().unwrap_or(0);
    if (0..p).any(|u| pattern.degree(u) > max_host_deg) {
        return Ok(None);
    }
    let pinned: Vec<usize> = pins.iter().map(|&(u, _)| u).collect();
    let order = search_order(pattern, &pinned);
    let mut placed_nbrs = Vec::with_capacity(p);
    let mut position = vec![usize::MAX; p];
    for (i, &u) in order.iter().enumerate() {
        position[u] = i;
    }
    for &u in &order {
        let nbrs: Vec<usize> = pattern
            .neighbors(u)
            .iter()
            .filter(|&w| position[w] < position[u])
            .collect();
        placed_nbrs.push(nbrs);
    }
    let mut search = Search {
        host,
        pattern,
        allowed,
        host_deg,
        twin_class: twin_classes(host, allowed),
        fixed: pins.iter().map(|&(_, h)| h).collect(),
        order,
        placed_nbrs,
        map: vec![usize::MAX; p],
        used: VertexSet::new(host.order()),
        budget,
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// Checks that `map` is an injective homomorphism of `pattern` into `host`.
pub fn is_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() || map.iter().any(|&h| h >= host.order()) {
        return false;
    }
    let mut seen = VertexSet::new(host.order());
    for &h in map {
        if seen.contains(h) {
            return false;
        }
        seen.insert(h);
    }
    pattern.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has as many placed neighbours as possible; ties go to higher
/// degree, then lower index. `first` is placed before everything else.
fn search_order(pattern: &Graph, first: &[usize]) -> Vec<usize> {
    let p = pattern.order();
    let mut placed = vec![false; p];
    let mut links = vec![0usize; p];
    let mut order = Vec::with_capacity(p);
    for &u in first {
        placed[u] = true;
        order.push(u);
        for w in pattern.neighbors(u).iter() {
            links[w] += 1;
        }
    }
    for _ in first.len()..p {
        let next = (0..p)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| (links[u], pattern.degree(u), std::cmp::Reverse(u)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in pattern.neighbors(next).iter() {
            links[w] += 1;
        }
    }
    order
}

/// Vertices of `allowed` lying in components of `host[allowed]` with at least
/// `min_size` vertices.
fn large_components(host: &Graph, allowed: &VertexSet, min_size: usize) -> VertexSet {
    let mut keep = VertexSet::new(host.order());
    let mut seen = VertexSet::new(host.order());
    for s in allowed.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut i = 0;
        while i < comp.len() {
            let mut next = host.neighbors(comp[i]).intersection(allowed);
            next.difference_with(&seen);
            for w in next.iter() {
                seen.insert(w);
                comp.push(w);
            }
            i += 1;
        }
        if comp.len() >= min_size {
            for v in comp {
                keep.insert(v);
            }
        }
    }
    keep
}

/// Twin class per allowed host vertex (`usize::MAX` for singleton classes).
fn twin_classes(host: &Graph, allowed: &VertexSet) -> Vec<usize> {
    let mut class = vec![usize::MAX; host.order()];
    let mut next_id = 0;
    for closed in [false, true] {
        let mut groups: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for v in allowed.iter() {
            let mut key = host.neighbors(v).intersection(allowed);
            if closed {
                key.insert(v);
            }
            groups.entry(key).or_default().push(v);
        }
        let mut groups: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
        groups.sort();
        for group in groups {
            for v in group {
                class[v] = next_id;
            }
            next_id += 1;
        }
    }
    class
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    allowed: &'a VertexSet,
    host_deg: Vec<usize>,
    twin_class: Vec<usize>,
    /// Forced host images for the first `fixed.len()` search levels.
    fixed: Vec<usize>,
    order: Vec<usize>,
    placed_nbrs: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: VertexSet,
    budget: &'a mut Budget,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.budget.tick()?;
        let u = self.order[depth];
        let mut cand = self.allowed.difference(&self.used);
        if let Some(&h) = self.fixed.get(depth) {
            let keep = cand.contains(h);
            cand.clear();
            if keep {
                cand.insert(h);
            }
        }
        for &w in &self.placed_nbrs[depth] {
            cand.intersect_with(self.host.neighbors(self.map[w]));
        }
        let need = self.pattern.degree(u);
        let mut tried: Vec<usize> = Vec::new();
        for h in cand.iter() {
            if self.host_deg[h] < need {
                continue;
            }
            let class = self.twin_class[h];
            if class != usize::MAX {
                if tried.contains(&class) {
                    continue;
                }
                tried.push(class);
            }
            self.map[u] = h;
            self.used.insert(h);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used.remove(h);
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}
