//! Diagrams of `L_B(n)`: storage, construction, order operations, checks
//! and file formats.

mod build;
mod diagram;
pub mod format;
mod order;
mod verify;

pub use build::{
    build_incremental, build_incremental_to, build_naive, find_frontier_sets, FrontierSets,
    StepStats,
};
pub use diagram::{DiagramKind, Edge, LatticeDiagram, NodeId};
pub use order::{join, meet};
pub use verify::{verify_lattice, verify_up_to, Check, VerifyReport, LENGTH_CONVENTION};
