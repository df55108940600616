use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A maximal run of degree-2 vertices together with its attachment points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chain {
    /// `ends.0 - interior.. - ends.1`, with `ends.0 != ends.1` and both ends of
    /// degree other than 2.
    Open { interior: Vec<usize>, ends: (usize, usize) },
    /// `anchor - interior.. - anchor`: a cycle hanging at a single vertex.
    Loop { interior: Vec<usize>, anchor: usize },
    /// A whole component that is a cycle, listed from its smallest vertex.
    Cycle(Vec<usize>),
}

impl Chain {
    /// Order of the longest suspended path running along this chain.
    pub fn path_order(&self) -> usize {
        match self {
            Chain::Open { interior, .. } => interior.len() + 2,
            Chain::Loop { interior, .. } => interior.len() + 1,
            Chain::Cycle(c) => c.len(),
        }
    }

    /// Lexicographically smallest longest suspended path along this chain.
    pub fn best_path(&self) -> Vec<usize> {
        let orient = |p: Vec<usize>| {
            let mut r = p.clone();
            r.reverse();
            p.min(r)
        };
        match self {
            Chain::Open { interior, ends } => {
                let mut p = vec![ends.0];
                p.extend(interior);
                p.push(ends.1);
                orient(p)
            }
            Chain::Loop { interior, anchor } => {
                let mut a = vec![*anchor];
                a.extend(interior);
                let mut b = interior.clone();
                b.push(*anchor);
                orient(a).min(orient(b))
            }
            Chain::Cycle(c) => {
                // c starts at its minimum; walk towards the smaller neighbour.
                let fwd = c.clone();
                let mut back = vec![c[0]];
                back.extend(c[1..].iter().rev());
                fwd.min(back)
            }
        }
    }
}

/// All maximal degree-2 chains of `g`.
pub fn chains(g: &Graph) -> Vec<Chain> {
    let n = g.order();
    let deg2 = VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| g.degree(v) == 2));
    let run_nbrs = |v: usize| g.neighbors(v).intersection(&deg2);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in deg2.iter() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for w in run_nbrs(comp[i]).iter() {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let end = comp.iter().copied().filter(|&v| run_nbrs(v).len() < 2).min();
        let Some(start) = end else {
            out.push(Chain::Cycle(cycle_from(g, *comp.iter().min().unwrap())));
            continue;
        };
        let mut run = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(w) = run_nbrs(cur).iter().find(|&w| w != prev) {
            run.push(w);
            prev = cur;
            cur = w;
        }
        let first = run[0];
        let last = *run.last().unwrap();
        let a = g.neighbors(first).iter().find(|&w| !deg2.contains(w)).expect("run end has an outside neighbour");
        let b = if run.len() == 1 {
            g.neighbors(last).iter().find(|&w| w != a).unwrap_or(a)
        } else {
            g.neighbors(last).iter().find(|&w| !deg2.contains(w)).expect("run end has an outside neighbour")
        };
        if a == b {
            out.push(Chain::Loop { interior: run, anchor: a });
        } else {
            out.push(Chain::Open { interior: run, ends: (a, b) });
        }
    }
    out
}

/// Walks a 2-regular component from `s` towards its smaller neighbour.
fn cycle_from(g: &Graph, s: usize) -> Vec<usize> {
    let mut cyc = vec![s];
    let mut prev = s;
    let mut cur = g.neighbors(s).first().unwrap();
    while cur != s {
        cyc.push(cur);
        let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    cyc
}

/// A longest suspended path: interior vertices all have degree 2 in `g`.
/// Among equally long ones the lexicographically smallest vertex sequence is
/// returned. The graph with no edges yields a single vertex (or nothing).
pub fn longest_suspended_path(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = if g.order() > 0 { vec![0] } else { Vec::new() };
    let mut consider = |p: Vec<usize>| {
        if p.len() > best.len() || (p.len() == best.len() && p < best) {
            best = p;
        }
    };
    for chain in chains(g) {
        consider(chain.best_path());
    }
    for (u, v) in g.edges() {
        if g.degree(u) != 2 && g.degree(v) != 2 {
            consider(vec![u, v]);
        }
    }
    best
}

/// True iff `path` is a simple path of `g` whose interior vertices have degree 2.
pub fn is_suspended_path(g: &Graph, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mut seen = VertexSet::new(g.order());
    for &v in path {
        if seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    if path.len() == 1 {
        return true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1])) && path[1..path.len() - 1].iter().all(|&v| g.degree(v) == 2)
}
