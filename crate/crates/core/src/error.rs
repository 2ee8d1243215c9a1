use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("partition parts must be positive, found {0}")]
    NonPositivePart(i128),
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("{name} must be at least 1")]
    ZeroArgument { name: &'static str },
    #[error("weight mismatch: source sums to {source_weight}, target sums to {target_weight}")]
    WeightMismatch { source_weight: u64, target_weight: u64 },
    #[error("invalid generation plan: {0}")]
    InvalidPlan(String),
    #[error("suffix start {m} is outside 2..={len}")]
    SuffixOutOfRange { m: usize, len: usize },
    #[error("partition does not generate all {k}-partitions of {n}")]
    NotAFeasibleGenerator { n: u64, k: u64 },
    #[error("search budget of {max_nodes} nodes exhausted")]
    BudgetExhausted { max_nodes: u64 },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid copy assignment: {0}")]
    InvalidAssignment(String),
    #[error("line {line}: {message}")]
    Tsplib { line: usize, message: String },
    #[error("cannot parse `{0}` as a partition part")]
    ParsePart(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
