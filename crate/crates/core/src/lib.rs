//! Edge-ideal invariants of finite simple graphs.
//!
//! For a graph `G` on `n` vertices and its edge ideal `I(G)` in
//! `R = k[x_1, ..., x_n]`, this crate computes the Hilbert series and
//! h-polynomial of `R/I(G)` (from the f-vector of the independence complex),
//! the graded Betti numbers (from Hochster's formula and reduced homology of
//! induced independence complexes), and the Castelnuovo–Mumford regularity.
//! It also builds the graph families that realize every pair
//! `(reg, deg h)` and scans all graphs on `n` vertices up to isomorphism.

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use homology::Field;
pub use invariants::{BettiTable, InvariantReport, Settings};
pub use poly::{IntPolynomial, RationalSeries};
