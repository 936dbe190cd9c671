//! Exact domination chromatic number (χ_dd) toolkit.
//!
//! A *domination coloring* of a graph is a proper coloring in which every
//! vertex dominates (is adjacent to or equal to every member of) at least one
//! color class, and every color class is dominated by at least one vertex.
//! χ_dd is the fewest classes such a coloring can use.
//!
//! The crate provides:
//!
//! * [`graph`], [`graph6`], [`structure`], [`generate`]: bitset graphs, the
//!   graph6 format, cut vertices/bridges/cycles, labeled connected corpora.
//! * [`coloring`]: colorings and the domination conditions with diagnostics.
//! * [`solver`]: exact χ_dd by branch and bound, plus a partition-enumeration
//!   oracle.
//! * [`ops`]: vertex/edge removal, contraction, k-subdivision and cycle
//!   extension.
//! * [`witness`]: the recolorings that carry a domination coloring across
//!   each operation, checked against the definition.
//! * [`harness`]: exhaustive verification of the χ_dd bounds for each
//!   operation over graph corpora.
//! * [`cli`]: the `domchrom` command-line front end.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod ops;
pub mod solver;
pub mod structure;
pub mod witness;

pub use coloring::{Coloring, DominationDiagnostic};
pub use error::{Error, Result};
pub use graph::Graph;
pub use solver::{Budget, SolveResult};
pub use structure::CycleSpec;
