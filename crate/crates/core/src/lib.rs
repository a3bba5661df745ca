//! Spanning weakly even trees in multigraphs.
//!
//! Given a connected loop-free multigraph `G`, a vertex `w` and a type
//! `λ ∈ {0, 1}`, [`solver::solve`] builds a spanning tree whose bipartition
//! gives `w` type `λ` and in which every leaf of maximum degree in `G` has
//! type 0, or proves that `G` is regular bipartite (where no such tree
//! exists).

pub mod cli;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod solver;
pub mod two_factor;
pub mod verify;
pub mod weak_two_factor;

pub use graph::{EdgeId, GraphError, Multigraph, VertexId};
pub use solver::{solve, BipartiteTree, SolveError, SolveOutcome};
