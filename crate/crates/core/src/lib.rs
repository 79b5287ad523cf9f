//! Graphs of non-degenerate linear codes over finite fields.
//!
//! The vertices of Γ(n,k)_q are the `k`-dimensional subspaces of GF(q)^n
//! that lie in no coordinate hyperplane; two are adjacent when they meet in
//! dimension `k - 1`. The crate enumerates these graphs, classifies their
//! maximal cliques into star and top restrictions, checks the counting and
//! size laws exhaustively, and compares the full automorphism group with
//! the group induced by monomial semilinear maps.

pub mod cli;
pub mod codegraph;
pub mod codespace;
pub mod equiv;
pub mod gf;
pub mod linalg;
pub mod report;

pub use codegraph::{build_graph, CodeGraph, GraphError};
pub use codespace::{CodeError, Subspace};
pub use equiv::{EquivError, MonomialMap, Mode};
pub use gf::{Field, GfError};
pub use linalg::Matrix;
pub use report::Report;
