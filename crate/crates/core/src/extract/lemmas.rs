use std::collections::VecDeque;

use super::books::bipartite_matching;
use crate::bitset::VertexSet;
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Budget, Error, Result};
use crate::graph::Graph;

/// A red path `x_1 .. x_a` plus outside vertices `y_1 .. y_b`, with targets:
/// a blue `K_c`, or `d` path vertices blue to every `y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathExtensionInstance {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub c: usize,
    pub d: usize,
}

impl PathExtensionInstance {
    pub fn a(&self) -> usize {
        self.x.len()
    }

    pub fn b(&self) -> usize {
        self.y.len()
    }

    /// `a >= b(c - 1) + d`.
    pub fn guarantee_holds(&self) -> bool {
        self.a() >= self.b() * self.c.saturating_sub(1) + self.d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathExtensionOutcome {
    /// Red path with `a + 1` vertices from `x_1` to `x_a`.
    LongerPath(Vec<usize>),
    /// `c` vertices spanning a blue clique.
    BlueClique(Vec<usize>),
    /// `d` path vertices joined in blue to every `y_j`.
    BlueCone(Vec<usize>),
    InvariantViolation(String),
}

fn check_instance(col: &EdgeColoring, inst: &PathExtensionInstance) -> Result<()> {
    let n = col.order();
    if inst.x.is_empty() {
        return Err(Error::Precondition("the red path is empty".into()));
    }
    let mut seen = VertexSet::new(n);
    for &v in inst.x.iter().chain(&inst.y) {
        if v >= n || seen.contains(v) {
            return Err(Error::Precondition(format!("vertex {v} repeated or out of range")));
        }
        seen.insert(v);
    }
    if inst.x.windows(2).any(|w| col.color(w[0], w[1]) != Color::Red) {
        return Err(Error::Precondition("x_1 .. x_a is not a red path".into()));
    }
    if !inst.guarantee_holds() {
        return Err(Error::Precondition(format!(
            "a = {} < b(c - 1) + d = {}",
            inst.a(),
            inst.b() * inst.c.saturating_sub(1) + inst.d
        )));
    }
    Ok(())
}

/// Finds one of the three outcomes of the path-extension lemma, cheapest
/// first: blue cone, blue clique, longer red path.
pub fn path_extension(
    col: &EdgeColoring,
    inst: &PathExtensionInstance,
    budget: &mut Budget,
) -> Result<PathExtensionOutcome> {
    check_instance(col, inst)?;
    let cone: Vec<usize> = inst
        .x
        .iter()
        .copied()
        .filter(|&x| inst.y.iter().all(|&y| col.color(x, y) == Color::Blue))
        .collect();
    if cone.len() >= inst.d {
        return Ok(PathExtensionOutcome::BlueCone(cone[..inst.d].to_vec()));
    }
    let pool = VertexSet::from_iter_with_capacity(col.order(), inst.x.iter().chain(&inst.y).copied());
    if let Some(clique) = blue_clique(col, &pool, inst.c, budget)? {
        return Ok(PathExtensionOutcome::BlueClique(clique));
    }
    if let Some(path) = insert_one(col, inst) {
        return Ok(PathExtensionOutcome::LongerPath(path));
    }
    if let Some(path) = red_path_exact(col, &pool, inst.x[0], *inst.x.last().unwrap(), inst.a() + 1, budget)? {
        return Ok(PathExtensionOutcome::LongerPath(path));
    }
    Ok(PathExtensionOutcome::InvariantViolation(format!(
        "no outcome for x = {:?}, y = {:?}, c = {}, d = {}",
        inst.x, inst.y, inst.c, inst.d
    )))
}

/// Blue clique of the given size inside `pool`, smallest vertices first.
pub(crate) fn blue_clique(
    col: &EdgeColoring,
    pool: &VertexSet,
    size: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    fn grow(
        col: &EdgeColoring,
        cand: VertexSet,
        size: usize,
        acc: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if acc.len() == size {
            return Ok(true);
        }
        if acc.len() + cand.len() < size {
            return Ok(false);
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            rest.remove(v);
            if acc.len() + 1 + rest.len() < size {
                break;
            }
            acc.push(v);
            if grow(col, rest.intersection(col.blue_neighbors(v)), size, acc, budget)? {
                return Ok(true);
            }
            acc.pop();
        }
        Ok(false)
    }
    let mut acc = Vec::with_capacity(size);
    Ok(grow(col, pool.clone(), size, &mut acc, budget)?.then_some(acc))
}

/// Inserts a single `y` between consecutive path vertices.
fn insert_one(col: &EdgeColoring, inst: &PathExtensionInstance) -> Option<Vec<usize>> {
    for i in 0..inst.x.len().saturating_sub(1) {
        for &y in &inst.y {
            if col.color(inst.x[i], y) == Color::Red && col.color(y, inst.x[i + 1]) == Color::Red {
                let mut p = inst.x[..=i].to_vec();
                p.push(y);
                p.extend_from_slice(&inst.x[i + 1..]);
                return Some(p);
            }
        }
    }
    None
}

/// Red path from `from` to `to` with exactly `order` vertices inside `pool`.
fn red_path_exact(
    col: &EdgeColoring,
    pool: &VertexSet,
    from: usize,
    to: usize,
    order: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    fn go(
        col: &EdgeColoring,
        pool: &VertexSet,
        to: usize,
        order: usize,
        path: &mut Vec<usize>,
        used: &mut VertexSet,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        let cur = *path.last().unwrap();
        if path.len() == order {
            return Ok(cur == to);
        }
        let mut next = col.red_neighbors(cur).intersection(pool);
        next.difference_with(used);
        for w in next.iter() {
            // `to` may only be entered as the final vertex.
            if (w == to) != (path.len() + 1 == order) {
                continue;
            }
            path.push(w);
            used.insert(w);
            if go(col, pool, to, order, path, used, budget)? {
                return Ok(true);
            }
            used.remove(w);
            path.pop();
        }
        Ok(false)
    }
    if from == to {
        return Ok(None);
    }
    let mut path = vec![from];
    let mut used = VertexSet::from_iter_with_capacity(col.order(), [from]);
    Ok(go(col, pool, to, order, &mut path, &mut used, budget)?.then_some(path))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    /// Red matching saturating `X`, as `(x, y)` pairs in the order of `X`.
    RedMatching(Vec<(usize, usize)>),
    /// Blue `K_{c+1, |Y| - c}` with its `c + 1` vertices in `X`.
    BlueBiclique {
        c: usize,
        x_side: Vec<usize>,
        y_side: Vec<usize>,
    },
    InvariantViolation(String),
}

/// Red matching saturating `x_set`, or a Hall violator turned into a blue
/// complete bipartite graph.
pub fn hall_matching(col: &EdgeColoring, x_set: &[usize], y_set: &[usize]) -> Result<HallOutcome> {
    let n = col.order();
    let xs = VertexSet::from_iter_with_capacity(n, x_set.iter().copied());
    let ys = VertexSet::from_iter_with_capacity(n, y_set.iter().copied());
    if xs.len() != x_set.len() || ys.len() != y_set.len() || x_set.iter().chain(y_set).any(|&v| v >= n) {
        return Err(Error::Precondition("X and Y must be sets of vertices".into()));
    }
    if xs.intersection_len(&ys) > 0 || x_set.len() > y_set.len() {
        return Err(Error::Precondition("X and Y must be disjoint with |X| <= |Y|".into()));
    }
    let left: Vec<Vec<usize>> = x_set
        .iter()
        .map(|&x| (0..y_set.len()).filter(|&j| col.color(x, y_set[j]) == Color::Red).collect())
        .collect();
    let partner = bipartite_matching(&left, y_set.len());
    if partner.iter().all(|p| p.is_some()) {
        let pairs = x_set.iter().zip(&partner).map(|(&x, p)| (x, y_set[p.unwrap()])).collect();
        return Ok(HallOutcome::RedMatching(pairs));
    }
    let mut owner = vec![None; y_set.len()];
    for (i, p) in partner.iter().enumerate() {
        if let Some(j) = p {
            owner[*j] = Some(i);
        }
    }
    // Alternating search from the unmatched side of X.
    let mut in_w = vec![false; x_set.len()];
    let mut in_ny = vec![false; y_set.len()];
    let mut queue: VecDeque<usize> = (0..x_set.len()).filter(|&i| partner[i].is_none()).collect();
    for &i in &queue {
        in_w[i] = true;
    }
    while let Some(i) = queue.pop_front() {
        for &j in &left[i] {
            if !in_ny[j] {
                in_ny[j] = true;
                if let Some(i2) = owner[j] {
                    if !in_w[i2] {
                        in_w[i2] = true;
                        queue.push_back(i2);
                    }
                }
            }
        }
    }
    let c = in_ny.iter().filter(|&&b| b).count();
    let w: Vec<usize> = (0..x_set.len()).filter(|&i| in_w[i]).map(|i| x_set[i]).collect();
    let x_side: Vec<usize> = w.into_iter().take(c + 1).collect();
    let y_side: Vec<usize> = (0..y_set.len()).filter(|&j| !in_ny[j]).map(|j| y_set[j]).collect();
    let blue = x_side.len() == c + 1
        && x_side
            .iter()
            .all(|&x| y_side.iter().all(|&y| col.color(x, y) == Color::Blue));
    if !blue {
        return Ok(HallOutcome::InvariantViolation(format!(
            "Hall violator of size {} with {c} red neighbours is not blue-complete",
            x_side.len()
        )));
    }
    Ok(HallOutcome::BlueBiclique { c, x_side, y_side })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AesResult {
    Bipartition(Vec<usize>, Vec<usize>),
    /// An odd cycle, listed in cyclic order.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AesOutcome {
    pub triangle_free: bool,
    /// `delta(F) > 2|F|/5`.
    pub dense: bool,
    pub result: AesResult,
}

impl AesOutcome {
    /// Triangle-free, dense and not bipartite: impossible by the
    /// minimum-degree criterion for bipartiteness.
    pub fn is_violation(&self) -> bool {
        self.triangle_free && self.dense && matches!(self.result, AesResult::OddCycle(_))
    }
}

/// Breadth-first 2-colouring of `f`, or an odd cycle.
pub fn aes_bipartition(f: &Graph) -> AesOutcome {
    let n = f.order();
    let triangle_free = f
        .edges()
        .all(|(u, v)| f.neighbors(u).intersection_len(f.neighbors(v)) == 0);
    let dense = n > 0 && 5 * f.min_degree() > 2 * n;
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in f.neighbors(u).iter() {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return AesOutcome {
                        triangle_free,
                        dense,
                        result: AesResult::OddCycle(odd_cycle(u, w, &parent, &depth)),
                    };
                }
            }
        }
    }
    let s1 = (0..n).filter(|&v| side[v] == 0).collect();
    let s2 = (0..n).filter(|&v| side[v] == 1).collect();
    AesOutcome {
        triangle_free,
        dense,
        result: AesResult::Bipartition(s1, s2),
    }
}

/// Closes the tree paths from `u` and `w` (same side, adjacent) into a cycle.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternSpec;

    fn build(s: &str) -> Graph {
        PatternSpec::parse(s).unwrap().build().unwrap()
    }

    fn is_cycle(g: &Graph, c: &[usize]) -> bool {
        c.len() >= 3 && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }

    #[test]
    fn path_extension_examples() {
        let mut b = Budget::default();
        let red = EdgeColoring::monochromatic(5, Color::Red);
        let inst = PathExtensionInstance {
            x: vec![0, 1, 2],
            y: vec![3, 4],
            c: 2,
            d: 1,
        };
        assert!(inst.guarantee_holds());
        match path_extension(&red, &inst, &mut b).unwrap() {
            PathExtensionOutcome::LongerPath(p) => {
                assert_eq!(p.len(), 4);
                assert_eq!((p[0], p[3]), (0, 2));
            }
            other => panic!("{other:?}"),
        }
        // Path red, everything else blue.
        let mut col = EdgeColoring::monochromatic(7, Color::Blue);
        for i in 0..4 {
            col.set(i, i + 1, Color::Red);
        }
        let inst = PathExtensionInstance {
            x: vec![0, 1, 2, 3, 4],
            y: vec![5, 6],
            c: 3,
            d: 1,
        };
        match path_extension(&col, &inst, &mut b).unwrap() {
            PathExtensionOutcome::BlueCone(v) => assert!(v.iter().all(|&x| col.color(x, 5) == Color::Blue)),
            other => panic!("{other:?}"),
        }
        let short = PathExtensionInstance { x: vec![0, 1], ..inst };
        assert!(path_extension(&col, &short, &mut b).is_err());
    }

    #[test]
    fn hall_examples() {
        let red = EdgeColoring::monochromatic(7, Color::Red);
        match hall_matching(&red, &[0, 1, 2], &[3, 4, 5, 6]).unwrap() {
            HallOutcome::RedMatching(m) => assert_eq!(m.len(), 3),
            other => panic!("{other:?}"),
        }
        let blue = EdgeColoring::monochromatic(7, Color::Blue);
        assert_eq!(
            hall_matching(&blue, &[0, 1, 2], &[3, 4, 5, 6]).unwrap(),
            HallOutcome::BlueBiclique {
                c: 0,
                x_side: vec![0],
                y_side: vec![3, 4, 5, 6]
            }
        );
        let mut one = EdgeColoring::monochromatic(7, Color::Red);
        for y in 3..7 {
            one.set(1, y, Color::Blue);
        }
        assert_eq!(
            hall_matching(&one, &[0, 1, 2], &[3, 4, 5, 6]).unwrap(),
            HallOutcome::BlueBiclique {
                c: 0,
                x_side: vec![1],
                y_side: vec![3, 4, 5, 6]
            }
        );
        assert!(hall_matching(&one, &[0, 1, 2], &[2, 3, 4]).is_err());
    }

    #[test]
    fn bipartition_examples() {
        let r = aes_bipartition(&build("cycle:6"));
        assert_eq!(r.result, AesResult::Bipartition(vec![0, 2, 4], vec![1, 3, 5]));
        let c5 = build("cycle:5");
        let r = aes_bipartition(&c5);
        assert!(!r.dense && r.triangle_free && !r.is_violation());
        let AesResult::OddCycle(cyc) = r.result else { panic!() };
        assert!(is_cycle(&c5, &cyc) && cyc.len() % 2 == 1);
        let petersen = crate::formats::read_graph6("IheA@GUAo").unwrap();
        let r = aes_bipartition(&petersen);
        assert!(r.triangle_free && !r.dense && !r.is_violation());
        let AesResult::OddCycle(cyc) = r.result else { panic!() };
        assert!(is_cycle(&petersen, &cyc) && cyc.len() % 2 == 1);
    }
}
