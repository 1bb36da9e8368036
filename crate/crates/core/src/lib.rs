//! Quasi-tree model of reduced Khovanov homology for knot diagrams.
//!
//! A diagram in PD notation (or its all-A ribbon graph given directly as
//! permutations) is turned into a ribbon graph and a signed Tait graph.
//! One-face spanning subgraphs (quasi-trees) are enumerated, each read as an
//! ordered chord diagram to obtain its bigrading `(u, v)`, and matched with
//! spanning trees of the Tait graph. Independent oracles (Kauffman bracket,
//! Matrix-Tree theorem, Euler-formula genus, Tutte activities) check every
//! step.

pub mod analysis;
pub mod edgeset;
pub mod error;
pub mod linkdiag;
pub mod perm;
pub mod poly;
pub mod quasitree;
pub mod ribbon;
pub mod svg;
pub mod treemodel;
pub mod verify;

pub use analysis::{Analysis, Source};
pub use edgeset::{EdgeSet, MAX_EDGES};
pub use error::{Error, Result};
pub use linkdiag::{parse_pd, LinkDiagram, Shading, Sign, State, TaitGraph};
pub use perm::Permutation;
pub use poly::{BigradedTable, Calibration, LaurentPoly};
pub use quasitree::{Bigrading, ChordDiagram, QuasiTree};
pub use ribbon::{PermutationInput, RibbonGraph};
pub use treemodel::SpanningTree;

/// Integer Laurent polynomial with half-integer exponents.
pub type Poly = LaurentPoly<i64>;

/// Arbitrary-precision variant.
pub type BigPoly = LaurentPoly<num_bigint::BigInt>;
