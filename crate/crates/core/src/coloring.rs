//! Red/blue colorings of complete graphs, the extremal construction for the
//! lower bound, random generators and the two coloring file formats.
//!
//! Text format: line 1 is `N`, line 2 lists the `C(N,2)` pair colours as `R`/`B`
//! in row-major upper-triangular order `(0,1),(0,2),..,(0,N-1),(1,2),..`.
//! Structured format: `{"n": N, "edges": [[u, v, "R"|"B"], ..]}` with every
//! pair present exactly once.

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::embed::{find_embedding, Embedding};
use crate::error::{Budget, Error, Result};
use crate::generate::rng;
use crate::graph::Graph;
use crate::pattern::PatternSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_symbol(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

/// A total red/blue colouring of the edges of `K_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    red: Vec<VertexSet>,
    blue: Vec<VertexSet>,
}

/// Number of unordered pairs of an `n`-set.
pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl EdgeColoring {
    pub fn monochromatic(n: usize, color: Color) -> Self {
        let mut c = Self {
            red: (0..n).map(|_| VertexSet::new(n)).collect(),
            blue: (0..n).map(|_| VertexSet::new(n)).collect(),
        };
        for u in 0..n {
            for v in u + 1..n {
                c.set(u, v, color);
            }
        }
        c
    }

    /// Colouring whose red graph is `red`.
    pub fn from_red_graph(red: &Graph) -> Self {
        let n = red.order();
        let mut c = Self::monochromatic(n, Color::Blue);
        for (u, v) in red.edges() {
            c.set(u, v, Color::Red);
        }
        c
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.red.len()
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert_ne!(u, v);
        if self.red[u].contains(v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        assert_ne!(u, v, "pairs need distinct endpoints");
        let (add, del) = match color {
            Color::Red => (&mut self.red, &mut self.blue),
            Color::Blue => (&mut self.blue, &mut self.red),
        };
        add[u].insert(v);
        add[v].insert(u);
        del[u].remove(v);
        del[v].remove(u);
    }

    pub fn flip(&mut self, u: usize, v: usize) {
        let c = self.color(u, v).flip();
        self.set(u, v, c);
    }

    #[inline]
    pub fn neighbors(&self, v: usize, color: Color) -> &VertexSet {
        match color {
            Color::Red => &self.red[v],
            Color::Blue => &self.blue[v],
        }
    }

    pub fn red_neighbors(&self, v: usize) -> &VertexSet {
        &self.red[v]
    }

    pub fn blue_neighbors(&self, v: usize) -> &VertexSet {
        &self.blue[v]
    }

    pub fn graph(&self, color: Color) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in self.neighbors(u, color).iter().filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn red_graph(&self) -> Graph {
        self.graph(Color::Red)
    }

    pub fn blue_graph(&self) -> Graph {
        self.graph(Color::Blue)
    }

    /// Row-major pair index of `u < v`.
    pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < n);
        u * n - u * (u + 1) / 2 + (v - u - 1)
    }

    /// Pairs in row-major order.
    pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
    }

    pub fn to_text(&self) -> String {
        let n = self.order();
        let mut s = String::with_capacity(pairs(n) + 16);
        s.push_str(&format!("{n}\n"));
        for (u, v) in Self::pair_list(n) {
            s.push(self.color(u, v).symbol());
        }
        s.push('\n');
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::Parse("first line must be the order N".into()))?;
        let body = lines.next().unwrap_or("").trim();
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after the colour string".into()));
        }
        if body.chars().count() != pairs(n) {
            return Err(Error::Parse(format!(
                "expected {} colour symbols, found {}",
                pairs(n),
                body.chars().count()
            )));
        }
        let mut c = Self::monochromatic(n, Color::Blue);
        for ((u, v), ch) in Self::pair_list(n).into_iter().zip(body.chars()) {
            let color = Color::from_symbol(ch).ok_or_else(|| Error::Parse(format!("bad colour symbol `{ch}`")))?;
            c.set(u, v, color);
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        let n = self.order();
        let doc = ColoringDoc {
            n,
            edges: Self::pair_list(n)
                .into_iter()
                .map(|(u, v)| (u, v, self.color(u, v).symbol().to_string()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = doc.n;
        let mut seen = vec![false; pairs(n)];
        let mut c = Self::monochromatic(n, Color::Blue);
        for (u, v, sym) in doc.edges {
            let (u, v) = (u.min(v), u.max(v));
            if u == v || v >= n {
                return Err(Error::Parse(format!("invalid pair ({u},{v})")));
            }
            let idx = Self::pair_index(n, u, v);
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::Parse(format!("pair ({u},{v}) listed twice")));
            }
            let color = match sym.as_str() {
                "R" => Color::Red,
                "B" => Color::Blue,
                other => return Err(Error::Parse(format!("bad colour `{other}`"))),
            };
            c.set(u, v, color);
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Parse("structured colouring must list every pair".into()));
        }
        Ok(c)
    }

    /// Reads either format, choosing by the first non-space character.
    pub fn read_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeColoring({})", self.to_text().replace('\n', " ").trim_end())
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    n: usize,
    edges: Vec<(usize, usize, String)>,
}

/// Part assignment of the extremal colouring: sizes `(n-1, n-1, t-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurrPartition {
    pub sizes: [usize; 3],
    pub part_of: Vec<usize>,
}

impl BurrPartition {
    pub fn part(&self, i: usize) -> Vec<usize> {
        (0..self.part_of.len()).filter(|&v| self.part_of[v] == i).collect()
    }
}

/// Extremal colouring on `2n + t - 3` vertices: red cliques of sizes
/// `n-1, n-1, t-1` (vertices labeled part by part), every cross pair blue.
/// Red components have fewer than `n` vertices and every blue triangle meets
/// all three parts, so at most `t-1` disjoint blue books fit.
pub fn burr_coloring(n: usize, t: usize, k: usize) -> Result<(EdgeColoring, BurrPartition)> {
    if n < 2 || t < 1 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "extremal colouring needs n >= 2, t >= 1, k >= 1 (got n={n}, t={t}, k={k})"
        )));
    }
    let sizes = [n - 1, n - 1, t - 1];
    let part_of: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    let total = part_of.len();
    let mut c = EdgeColoring::monochromatic(total, Color::Blue);
    for u in 0..total {
        for v in u + 1..total {
            if part_of[u] == part_of[v] {
                c.set(u, v, Color::Red);
            }
        }
    }
    Ok((c, BurrPartition { sizes, part_of }))
}

/// The extremal colouring grown to `2n + t - 2` vertices by one extra vertex
/// (the last label) joined in red to everything. Blue is unchanged, so any red
/// copy must use the new vertex; perturbations of this colouring are the
/// adversarial family for the witness extractors.
pub fn burr_with_apex(n: usize, t: usize, k: usize) -> Result<EdgeColoring> {
    let (base, _) = burr_coloring(n, t, k)?;
    let m = base.order();
    let mut c = EdgeColoring::monochromatic(m + 1, Color::Red);
    for u in 0..m {
        for v in u + 1..m {
            c.set(u, v, base.color(u, v));
        }
    }
    Ok(c)
}

pub fn random_coloring(n: usize, red_probability: f64, seed: u64) -> Result<EdgeColoring> {
    random_coloring_with(n, red_probability, &mut rng(seed))
}

pub fn random_coloring_with<R: Rng>(n: usize, red_probability: f64, rng: &mut R) -> Result<EdgeColoring> {
    if !(0.0..=1.0).contains(&red_probability) {
        return Err(Error::InvalidParameter(format!(
            "red probability {red_probability} outside [0, 1]"
        )));
    }
    let mut c = EdgeColoring::monochromatic(n, Color::Blue);
    for (u, v) in EdgeColoring::pair_list(n) {
        if rng.gen_bool(red_probability) {
            c.set(u, v, Color::Red);
        }
    }
    Ok(c)
}

/// Flips exactly `flip_count` distinct pairs chosen by seeded sampling
/// without replacement.
pub fn perturb(c: &EdgeColoring, flip_count: usize, seed: u64) -> Result<EdgeColoring> {
    perturb_with(c, flip_count, &mut rng(seed))
}

pub fn perturb_with<R: Rng>(c: &EdgeColoring, flip_count: usize, rng: &mut R) -> Result<EdgeColoring> {
    let n = c.order();
    let all = EdgeColoring::pair_list(n);
    if flip_count > all.len() {
        return Err(Error::InvalidParameter(format!(
            "cannot flip {flip_count} of {} pairs",
            all.len()
        )));
    }
    let mut out = c.clone();
    for i in sample(rng, all.len(), flip_count).into_iter() {
        let (u, v) = all[i];
        out.flip(u, v);
    }
    Ok(out)
}

/// Result of checking that a colouring avoids a red and a blue pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalCheck {
    /// Neither pattern occurs.
    Avoids,
    /// A red copy of the red pattern.
    RedCopy(Embedding),
    /// A blue copy of the blue pattern.
    BlueCopy(Embedding),
}

impl ExtremalCheck {
    pub fn is_extremal(&self) -> bool {
        matches!(self, ExtremalCheck::Avoids)
    }
}

/// Checks that `c` has no red `red_pattern` and no blue `blue_pattern`.
pub fn verify_avoids(
    c: &EdgeColoring,
    red_pattern: &Graph,
    blue_pattern: &Graph,
    budget: &mut Budget,
) -> Result<ExtremalCheck> {
    if let Some(m) = find_embedding(&c.red_graph(), red_pattern, budget)? {
        return Ok(ExtremalCheck::RedCopy(m));
    }
    if let Some(m) = find_embedding(&c.blue_graph(), blue_pattern, budget)? {
        return Ok(ExtremalCheck::BlueCopy(m));
    }
    Ok(ExtremalCheck::Avoids)
}

/// No red `g` and no blue `t B_k`.
pub fn verify_extremal(c: &EdgeColoring, g: &Graph, k: usize, t: usize, budget: &mut Budget) -> Result<ExtremalCheck> {
    if g.order() > c.order() {
        return Err(Error::Precondition(format!(
            "pattern order {} exceeds colouring order {}",
            g.order(),
            c.order()
        )));
    }
    let books = PatternSpec::books(t, k).build()?;
    verify_avoids(c, g, &books, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> Graph {
        PatternSpec::Star(n).build().unwrap()
    }

    #[test]
    fn burr_small_cases() {
        let (c, p) = burr_coloring(3, 1, 1).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(p.sizes, [2, 2, 0]);
        assert_eq!(c.red_graph().size(), 2);
        let k22 = c.blue_graph();
        assert_eq!(k22.size(), 4);
        assert!(k22.degrees().iter().all(|&d| d == 2));
        assert!(verify_extremal(&c, &star(3), 1, 1, &mut Budget::default()).unwrap().is_extremal());

        let (c, p) = burr_coloring(3, 2, 1).unwrap();
        assert_eq!((c.order(), p.sizes), (5, [2, 2, 1]));
        assert!(verify_extremal(&c, &star(3), 1, 2, &mut Budget::default()).unwrap().is_extremal());

        let (c, p) = burr_coloring(2, 1, 1).unwrap();
        assert_eq!((c.order(), p.sizes), (2, [1, 1, 0]));
        assert_eq!(c.color(0, 1), Color::Blue);
        assert!(burr_coloring(1, 1, 1).is_err());
    }

    #[test]
    fn monochromatic_violations() {
        let red = EdgeColoring::monochromatic(5, Color::Red);
        match verify_extremal(&red, &star(3), 1, 1, &mut Budget::default()).unwrap() {
            ExtremalCheck::RedCopy(m) => assert!(crate::embed::is_embedding(&red.red_graph(), &star(3), &m)),
            other => panic!("expected a red star, got {other:?}"),
        }
        let blue = EdgeColoring::monochromatic(5, Color::Blue);
        assert!(matches!(
            verify_extremal(&blue, &star(3), 1, 1, &mut Budget::default()).unwrap(),
            ExtremalCheck::BlueCopy(_)
        ));
    }

    #[test]
    fn generators() {
        assert_eq!(random_coloring(5, 1.0, 9).unwrap(), EdgeColoring::monochromatic(5, Color::Red));
        assert!(random_coloring(5, 1.5, 9).is_err());
        let (b, _) = burr_coloring(3, 1, 1).unwrap();
        assert_eq!(perturb(&b, 0, 4).unwrap(), b);
        let p = perturb(&b, 1, 4).unwrap();
        let diff = EdgeColoring::pair_list(4).into_iter().filter(|&(u, v)| p.color(u, v) != b.color(u, v)).count();
        assert_eq!(diff, 1);
        assert!(perturb(&b, 7, 4).is_err());
    }

    #[test]
    fn apex_extension() {
        let c = burr_with_apex(4, 1, 1).unwrap();
        assert_eq!(c.order(), 7);
        assert!(c.red_neighbors(6).len() == 6);
        assert_eq!(c.blue_graph().size(), 9);
    }

    #[test]
    fn text_format_is_row_major() {
        let (c, _) = burr_coloring(3, 1, 1).unwrap();
        assert_eq!(c.to_text(), "4\nRBBBBR\n");
        assert_eq!(EdgeColoring::from_text("4\nRBBBBR\n").unwrap(), c);
        assert!(EdgeColoring::from_text("4\nRBBBB\n").is_err());
        assert!(EdgeColoring::from_text("3\nRBX\n").is_err());
    }

    #[test]
    fn json_requires_every_pair() {
        let (c, _) = burr_coloring(3, 1, 1).unwrap();
        let json = c.to_json();
        assert!(json.starts_with(r#"{"n":4,"edges":[[0,1,"R"]"#));
        assert_eq!(EdgeColoring::read_any(&json).unwrap(), c);
        assert!(EdgeColoring::from_json(r#"{"n":3,"edges":[[0,1,"R"],[0,2,"B"]]}"#).is_err());
        assert!(EdgeColoring::from_json(r#"{"n":2,"edges":[[0,1,"R"],[1,0,"B"]]}"#).is_err());
    }

    #[test]
    fn pair_index_matches_pair_list() {
        for n in 1..9 {
            for (i, (u, v)) in EdgeColoring::pair_list(n).into_iter().enumerate() {
                assert_eq!(EdgeColoring::pair_index(n, u, v), i);
            }
        }
    }
}
