use thiserror::Error;

/// Errors raised by partition construction and the order operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not nonincreasing: part {index} ({value}) is larger than the part before it")]
    NotNonincreasing { index: usize, value: u32 },
    #[error("column {column} out of range (valid: {min}..={max})")]
    ColumnOutOfRange { column: usize, min: usize, max: usize },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("the empty partition has no {0}")]
    Empty(&'static str),
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Errors raised while building, loading or checking diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("edge {upper} -> {lower} seen with labels {first} and {second}")]
    ConflictingLabel {
        upper: String,
        lower: String,
        first: u32,
        second: u32,
    },
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Errors raised by the tree and counting operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{0} is not the root of an X_{1} subtree")]
    NotXkRoot(String, usize),
    #[error("X_{k} decomposition under {root} fails at depth {depth}: {detail}")]
    Counterexample {
        root: String,
        k: usize,
        depth: u32,
        detail: String,
    },
    #[error("c(l, k) needs k >= 1 when l > 0 (got l = {l}, k = 0)")]
    ZeroWidth { l: u64 },
    #[error("length {k} out of range for n = {n}")]
    LengthOutOfRange { n: u64, k: u64 },
}

/// Structural failures detected by the brute-force reference.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{kind} of {left} and {right} is not unique: candidates {candidates:?}")]
    NoUniqueExtremum {
        kind: &'static str,
        left: String,
        right: String,
        candidates: Vec<String>,
    },
    #[error("dominance relation on weight {n} is not a partial order: {detail}")]
    NotPartialOrder { n: u32, detail: String },
}

/// Errors raised by the timing harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalingError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("empty range {from}..{to}")]
    EmptyRange { from: u32, to: u32 },
    #[error("no step in {from}..{to} inserts an edge, so none can be timed")]
    NothingMeasured { from: u32, to: u32 },
}
