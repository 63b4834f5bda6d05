//! Integer partitions ordered by dominance, seen as the configurations of a
//! sand-pile-like system where a grain falls off a cliff or slips down a step.
//!
//! * [`partition`]: partitions, column shapes and the two transition rules.
//! * [`lattice`]: labeled cover diagrams of `L_B(n)`, built by reachability
//!   or level by level, with meet, join and exporters.
//! * [`infinite`]: the lattice `L_B(∞)` of configurations below one infinite
//!   column, its embeddings, and the filters `L_B(≤n)`.
//! * [`tree`]: the binary tree whose level `n` is `L_B(n)`, and the path
//!   counts `c(l, k)` it yields.
//! * [`oracle`]: brute-force references used to check all of the above.
//! * [`scaling`]: per-step timing of the incremental construction.

pub mod error;
pub mod infinite;
pub mod lattice;
pub mod oracle;
pub mod partition;
pub mod scaling;
pub mod tree;

pub use error::{LatticeError, OracleError, PartitionError, ScalingError, TreeError};
pub use infinite::InfPartition;
pub use lattice::{LatticeDiagram, NodeId};
pub use partition::{ColumnShape, Partition, Transition};
pub use tree::CountTable;
