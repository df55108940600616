//! Ramsey numbers of sparse graphs versus disjoint books, made executable.
//!
//! The crate covers four layers:
//!
//! * [`graph`], [`pattern`], [`embed`], [`chromatic`], [`generate`], [`formats`]:
//!   simple graphs, the pattern families (paths, stars, books `B_k`, disjoint
//!   copies `tB_k`, Prüfer trees), exact subgraph embedding and chromatic data.
//! * [`coloring`]: red/blue colourings of `K_N`, the extremal construction
//!   behind the lower bound `r(G, tB_k) >= 2n + t - 2`, and its verifier.
//! * [`structure`] and [`bounds`]: structural analysis of sparse connected
//!   graphs (suspended paths, end-edge matchings, the trichotomy) and every
//!   closed-form bound with hypothesis flags.
//! * [`extract`] and [`arrowing`]: witness extraction from colourings along
//!   the constructive proofs, and exact arrowing / Ramsey-number search with a
//!   DIMACS export.
//!
//! [`suite`] runs the acceptance table used by the `verify-suite` command.

pub mod bitset;
pub mod bounds;
pub mod chromatic;
pub mod coloring;
pub mod embed;
pub mod error;
pub mod arrowing;
pub mod extract;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod pattern;
pub mod structure;
pub mod suite;

pub use bitset::VertexSet;
pub use coloring::{Color, EdgeColoring};
pub use error::{Budget, Error, Result};
pub use graph::Graph;
pub use pattern::PatternSpec;
