//! Pattern families and their canonical labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `path:n` | `0 - 1 - ... - (n-1)` |
//! | `cycle:n` | path plus the edge `(n-1, 0)` |
//! | `star:n` | center `0`, leaves `1..n` (so `star:n` is `K_{1,n-1}`) |
//! | `complete:n` | `K_n` |
//! | `book:p,k` | spine `0..p` (a clique), pages `p..p+k` |
//! | `copies:t,(inner)` | block `i` occupies `i*|inner| .. (i+1)*|inner|` |
//! | `join:(a),(b)` | `a` first, then `b` shifted by `|a|` |
//! | `prufer:s1,s2,..` | vertex labels are the sequence alphabet `0..len+2` |
//!
//! The same strings are accepted by [`PatternSpec::parse`], together with
//! `g6:<graph6>` and `file:<path>` (graph6 or edge-list file).

use std::fmt;

use crate::error::{Error, Result};
use crate::formats;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Book { p: usize, k: usize },
    Copies { t: usize, inner: Box<PatternSpec> },
    Join(Box<PatternSpec>, Box<PatternSpec>),
    Prufer(Vec<usize>),
    EdgeList { n: usize, edges: Vec<(usize, usize)> },
}

impl PatternSpec {
    /// `B_k = K_2 + \bar K_k`.
    pub fn book(k: usize) -> Self {
        PatternSpec::Book { p: 2, k }
    }

    /// `t` vertex-disjoint copies of `B_k`.
    pub fn books(t: usize, k: usize) -> Self {
        PatternSpec::Copies {
            t,
            inner: Box::new(Self::book(k)),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            PatternSpec::Path(n) => {
                if *n == 0 {
                    return bad("path needs at least one vertex".into());
                }
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            PatternSpec::Cycle(n) => {
                if *n < 3 {
                    return bad(format!("cycle needs at least 3 vertices, got {n}"));
                }
                let mut edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::from_edges(*n, &edges)
            }
            PatternSpec::Star(n) => {
                if *n == 0 {
                    return bad("star needs at least one vertex".into());
                }
                let edges: Vec<_> = (1..*n).map(|i| (0, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            PatternSpec::Complete(n) => {
                if *n == 0 {
                    return bad("complete graph needs at least one vertex".into());
                }
                Ok(Graph::complete(*n))
            }
            PatternSpec::Book { p, k } => {
                if *p == 0 || *k == 0 {
                    return bad(format!("book needs p >= 1 and k >= 1, got p={p}, k={k}"));
                }
                Ok(Graph::complete(*p).join(&Graph::empty(*k)))
            }
            PatternSpec::Copies { t, inner } => {
                if *t == 0 {
                    return bad("copies needs t >= 1".into());
                }
                let one = inner.build()?;
                let mut g = one.clone();
                for _ in 1..*t {
                    g = g.disjoint_union(&one);
                }
                Ok(g)
            }
            PatternSpec::Join(a, b) => Ok(a.build()?.join(&b.build()?)),
            PatternSpec::Prufer(seq) => prufer_tree(seq),
            PatternSpec::EdgeList { n, edges } => Graph::from_edges(*n, edges),
        }
    }

    /// Parses the pattern mini-language (see the module docs).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (family, args) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pattern `{text}` lacks `family:` prefix")))?;
        let num = |s: &str| -> Result<usize> {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad number `{s}` in `{text}`")))
        };
        match family {
            "path" => Ok(PatternSpec::Path(num(args)?)),
            "cycle" => Ok(PatternSpec::Cycle(num(args)?)),
            "star" => Ok(PatternSpec::Star(num(args)?)),
            "complete" => Ok(PatternSpec::Complete(num(args)?)),
            "book" => {
                let (p, k) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("book expects `p,k`, got `{args}`")))?;
                Ok(PatternSpec::Book { p: num(p)?, k: num(k)? })
            }
            "copies" => {
                let (t, inner) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("copies expects `t,(inner)`, got `{args}`")))?;
                Ok(PatternSpec::Copies {
                    t: num(t)?,
                    inner: Box::new(Self::parse(strip_parens(inner.trim())?)?),
                })
            }
            "join" => {
                let parts = split_parenthesized(args)?;
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("join expects `(a),(b)`, got `{args}`")));
                }
                Ok(PatternSpec::Join(
                    Box::new(Self::parse(parts[0])?),
                    Box::new(Self::parse(parts[1])?),
                ))
            }
            "prufer" => {
                let seq = if args.trim().is_empty() {
                    Vec::new()
                } else {
                    args.split(',').map(num).collect::<Result<Vec<_>>>()?
                };
                Ok(PatternSpec::Prufer(seq))
            }
            "g6" => Ok(Self::from_graph(&formats::read_graph6(args.trim())?)),
            "file" => {
                let body = std::fs::read_to_string(args.trim())
                    .map_err(|e| Error::Parse(format!("cannot read `{args}`: {e}")))?;
                Ok(Self::from_graph(&formats::read_graph_auto(&body)?))
            }
            other => Err(Error::Parse(format!("unknown pattern family `{other}`"))),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        PatternSpec::EdgeList {
            n: g.order(),
            edges: g.edge_list(),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Path(n) => write!(f, "path:{n}"),
            PatternSpec::Cycle(n) => write!(f, "cycle:{n}"),
            PatternSpec::Star(n) => write!(f, "star:{n}"),
            PatternSpec::Complete(n) => write!(f, "complete:{n}"),
            PatternSpec::Book { p, k } => write!(f, "book:{p},{k}"),
            PatternSpec::Copies { t, inner } => write!(f, "copies:{t},({inner})"),
            PatternSpec::Join(a, b) => write!(f, "join:({a}),({b})"),
            PatternSpec::Prufer(seq) => {
                let s: Vec<String> = seq.iter().map(|x| x.to_string()).collect();
                write!(f, "prufer:{}", s.join(","))
            }
            PatternSpec::EdgeList { n, edges } => match Graph::from_edges(*n, edges) {
                Ok(g) => write!(f, "g6:{}", formats::write_graph6(&g)),
                Err(_) => write!(f, "edges:{n}:{edges:?}"),
            },
        }
    }
}

fn strip_parens(s: &str) -> Result<&str> {
    s.strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected `(...)`, got `{s}`")))
}

fn split_parenthesized(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    start = Some(i + 1);
                }
                depth += 1;
            }
            ')' => {
                if depth == 0 {
                    return Err(Error::Parse(format!("unbalanced `)` in `{s}`")));
                }
                depth -= 1;
                if depth == 0 {
                    out.push(&s[start.take().unwrap_or(i)..i]);
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `(` in `{s}`")));
    }
    Ok(out)
}

/// Decodes a Prüfer sequence over `0..len+2` into its labeled tree.
pub fn prufer_tree(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer symbol {bad} out of range 0..{n}"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        g.add_edge(leaf, x);
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn book_one_is_triangle() {
        let g = PatternSpec::book(1).build().unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
    }

    #[test]
    fn book_order_and_size() {
        for k in 1..8 {
            let g = PatternSpec::book(k).build().unwrap();
            assert_eq!((g.order(), g.size()), (k + 2, 2 * k + 1));
            assert!(g.has_edge(0, 1));
        }
        let g = PatternSpec::Book { p: 3, k: 2 }.build().unwrap();
        assert_eq!((g.order(), g.size()), (5, 3 + 6));
    }

    #[test]
    fn two_books_on_two_pages() {
        let g = PatternSpec::books(2, 2).build().unwrap();
        assert_eq!((g.order(), g.size()), (8, 10));
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn malformed_parameters() {
        assert!(PatternSpec::Copies { t: 0, inner: Box::new(PatternSpec::book(1)) }.build().is_err());
        assert!(PatternSpec::Book { p: 2, k: 0 }.build().is_err());
        assert!(PatternSpec::Prufer(vec![0, 7]).build().is_err());
        assert!(PatternSpec::Cycle(2).build().is_err());
    }

    #[test]
    fn prufer_known_tree() {
        // 3,3,3,4 over 0..6: leaves 0,1,2 hang on 3; 3-4; 4-5.
        let g = prufer_tree(&[3, 3, 3, 4]).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "star:3",
            "path:4",
            "cycle:5",
            "book:2,1",
            "copies:2,(book:2,3)",
            "join:(complete:2),(path:3)",
            "prufer:1,1,2",
        ] {
            let spec = PatternSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        let spec = PatternSpec::parse("g6:Bw").unwrap();
        assert_eq!(spec.build().unwrap().size(), 3);
        assert!(PatternSpec::parse("wheel:5").is_err());
    }
}
