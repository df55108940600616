//! Witness extraction from edge-colourings.
//!
//! Each pipeline walks the constructive steps of an upper-bound argument and
//! returns a red copy of the first pattern or a blue copy of the second. When
//! a step cannot be carried out, a certified direct search takes over. If
//! that also fails while every hypothesis of the corresponding theorem holds,
//! the outcome is [`ExtractionOutcome::InvariantViolation`]: a counterexample
//! candidate, never a silent miss.

mod books;
mod lemmas;
mod sparse;
mod star;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::pattern::PatternSpec;

pub use books::{blue_t_matching, find_blue_book, find_disjoint_blue_books, BookPlacement, TMatching};
pub use lemmas::{
    aes_bipartition, hall_matching, path_extension, AesOutcome, AesResult, HallOutcome, PathExtensionInstance,
    PathExtensionOutcome,
};
pub use sparse::{sparse_or_books, sparse_or_books_avoiding, sparse_parameters, SparseParameters};
pub use star::{star_or_books, star_or_books_avoiding, StarBooksState};

/// An injective map from a pattern into the vertex set of a colouring whose
/// pattern edges all land on pairs of one colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub color: Color,
    /// Pattern in mini-language form, e.g. `star:7` or `copies:2,(book:2,1)`.
    pub description: String,
    pub pattern: Graph,
    /// `map[i]` is the host vertex of pattern vertex `i`.
    pub map: Vec<usize>,
}

impl Witness {
    pub fn red(pattern: &Graph, map: Vec<usize>) -> Self {
        Witness {
            color: Color::Red,
            description: PatternSpec::from_graph(pattern).to_string(),
            pattern: pattern.clone(),
            map,
        }
    }

    /// Red star `K_{1,leaves}` with the given centre.
    pub fn red_star(center: usize, leaves: &[usize]) -> Self {
        let spec = PatternSpec::Star(leaves.len() + 1);
        let mut map = vec![center];
        map.extend_from_slice(leaves);
        Witness {
            color: Color::Red,
            description: spec.to_string(),
            pattern: spec.build().expect("star of positive order"),
            map,
        }
    }

    /// Blue disjoint books; all placements must have the same page count.
    pub fn blue_books(books: &[BookPlacement]) -> Self {
        let k = books.first().map_or(1, |b| b.pages.len());
        let spec = if books.len() == 1 {
            PatternSpec::book(k)
        } else {
            PatternSpec::books(books.len(), k)
        };
        let map = books
            .iter()
            .flat_map(|b| [b.spine.0, b.spine.1].into_iter().chain(b.pages.iter().copied()))
            .collect();
        Witness {
            color: Color::Blue,
            description: spec.to_string(),
            pattern: spec.build().expect("books with positive parameters"),
            map,
        }
    }

    /// `pattern vertex -> host vertex` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "color={}", self.color.symbol());
        let _ = writeln!(out, "pattern={}", self.description);
        for (i, h) in self.map.iter().enumerate() {
            let _ = writeln!(out, "{i} -> {h}");
        }
        out
    }
}

/// Independent check of a witness against a colouring: the map has one entry
/// per pattern vertex, images are distinct vertices of the colouring, and
/// every pattern edge is coloured `w.color`.
pub fn verify_witness(c: &EdgeColoring, w: &Witness) -> bool {
    let n = c.order();
    let p = w.pattern.order();
    if w.map.len() != p {
        return false;
    }
    let mut hit = vec![false; n];
    for &h in &w.map {
        if h >= n || hit[h] {
            return false;
        }
        hit[h] = true;
    }
    for u in 0..p {
        for v in u + 1..p {
            if w.pattern.has_edge(u, v) && c.color(w.map[u], w.map[v]) != w.color {
                return false;
            }
        }
    }
    true
}

/// A named hypothesis and whether it holds for the instance at hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtractionOutcome {
    Witness {
        witness: Witness,
        trace: Vec<String>,
    },
    NoWitness {
        trace: Vec<String>,
    },
    /// A guaranteed step failed although every listed hypothesis holds.
    InvariantViolation {
        hypotheses: Vec<HypothesisCheck>,
        trace: Vec<String>,
        state: String,
    },
}

impl ExtractionOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            ExtractionOutcome::Witness { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn trace(&self) -> &[String] {
        match self {
            ExtractionOutcome::Witness { trace, .. }
            | ExtractionOutcome::NoWitness { trace }
            | ExtractionOutcome::InvariantViolation { trace, .. } => trace,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, ExtractionOutcome::InvariantViolation { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExtractionOutcome::Witness { .. } => "witness",
            ExtractionOutcome::NoWitness { .. } => "no_witness",
            ExtractionOutcome::InvariantViolation { .. } => "invariant_violation",
        }
    }

    /// Line-oriented report: outcome kind, witness map, trace.
    pub fn to_text(&self) -> String {
        let mut out = format!("outcome={}\n", self.kind());
        match self {
            ExtractionOutcome::Witness { witness, .. } => out.push_str(&witness.to_text()),
            ExtractionOutcome::NoWitness { .. } => {}
            ExtractionOutcome::InvariantViolation { hypotheses, state, .. } => {
                for h in hypotheses {
                    let _ = writeln!(out, "hypothesis.{}={}", h.name, h.holds);
                }
                let _ = writeln!(out, "state={state}");
            }
        }
        for line in self.trace() {
            let _ = writeln!(out, "trace: {line}");
        }
        out
    }

    /// Emits a violation only if every hypothesis holds; otherwise the miss is
    /// an honest `NoWitness`.
    pub(crate) fn miss(hypotheses: Vec<HypothesisCheck>, mut trace: Vec<String>, state: String) -> Self {
        if !hypotheses.is_empty() && hypotheses.iter().all(|h| h.holds) {
            trace.push("all hypotheses hold but no witness was found".into());
            ExtractionOutcome::InvariantViolation {
                hypotheses,
                trace,
                state,
            }
        } else {
            ExtractionOutcome::NoWitness { trace }
        }
    }
}

pub(crate) fn hyp(name: &str, holds: bool) -> HypothesisCheck {
    HypothesisCheck {
        name: name.to_string(),
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verifier_catches_bad_maps() {
        let c = EdgeColoring::monochromatic(5, Color::Red);
        let w = Witness::red_star(0, &[1, 2]);
        assert!(verify_witness(&c, &w));
        let mut bad = w.clone();
        bad.map = vec![0, 1, 1];
        assert!(!verify_witness(&c, &bad));
        let mut blue = EdgeColoring::monochromatic(5, Color::Blue);
        let book = Witness::blue_books(&[BookPlacement {
            spine: (0, 1),
            pages: vec![2],
        }]);
        assert!(verify_witness(&blue, &book));
        blue.set(0, 1, Color::Red);
        assert!(!verify_witness(&blue, &book));
        assert_eq!(book.description, "book:2,1");
    }
}
