//! Cobweb posets as graded DAGs.
//!
//! A cobweb chain is a sequence of levels with a 0/1 biadjacency block
//! between each pair of consecutive levels. This crate builds such chains,
//! derives their adjacency, block-diagonal biadjacency and zeta matrices,
//! analyzes the Ferrers dimension of 0/1 matrices, and counts complete
//! cobwebs and level-typed relations exactly, with brute-force enumerators
//! as independent checks.

pub mod chain;
pub mod cli;
pub mod counting;
pub mod error;
pub mod ferrers;
pub mod matrix;
pub mod oracle;
mod text;
pub mod verify;

pub use chain::{complete_chain, dibiclique, CobwebChain, LevelSequence, VertexId};
pub use counting::{BigCount, CompositionType};
pub use error::{Error, Result};
pub use ferrers::FerrersReport;
pub use matrix::{BoolMatrix, RealMatrix};
