//! Error types shared across the crate.

use thiserror::Error;

use crate::result::GHResult;
use crate::space::MetricViolation;

pub type Result<T> = std::result::Result<T, GhError>;

#[derive(Debug, Error)]
pub enum GhError {
    #[error("distance matrix is not square: {rows} rows but row {row} has {cols} entries")]
    NonSquare { rows: usize, row: usize, cols: usize },

    #[error("label count {labels} does not match matrix size {size}")]
    LabelCount { labels: usize, size: usize },

    #[error("a metric space needs at least one point")]
    EmptySpace,

    #[error("metric axioms violated: {}", format_violations(.0))]
    InvalidMetric(Vec<MetricViolation>),

    #[error("a regular polygon needs at least 2 vertices, got {0}")]
    PolygonOrder(usize),

    #[error("set distance requires nonempty point sets")]
    EmptyPointSet,

    #[error("point index {index} is out of range for a space with {points} points")]
    PointOutOfRange { index: usize, points: usize },

    #[error("partition labels {points} points but the space has {expected}")]
    PartitionSize { points: usize, expected: usize },

    #[error("block count {m} is out of range for {n} points")]
    PartitionBlocks { m: usize, n: usize },

    #[error("partition block {block} is empty")]
    EmptyBlock { block: usize },

    #[error("a correspondence must contain at least one pair")]
    EmptyCorrespondence,

    #[error("correspondence pair ({x}, {y}) is out of range for sizes {n}x{m}")]
    PairOutOfRange { x: usize, y: usize, n: usize, m: usize },

    #[error("point {label:?} (index {index} of {side}) is not covered by the correspondence")]
    Uncovered { side: char, index: usize, label: String },

    #[error("simplex cardinality m={m} must satisfy 2 <= m <= {points} (number of target points)")]
    SimplexCardinality { m: usize, points: usize },

    #[error("simplex distance lambda must be positive and finite, got {0}")]
    SimplexLambda(f64),

    #[error("simplex distance target must have more than one point")]
    SingletonTarget,

    #[error("argument {name}={value} is outside the valid range {range}")]
    ArgRange { name: &'static str, value: i64, range: String },

    #[error(
        "search budget of {budget} nodes exhausted; best upper bound {}, proven lower bound {}",
        upper.value, lower.value
    )]
    BudgetExhausted { budget: u64, upper: Box<GHResult>, lower: Box<GHResult> },

    #[error("unknown point label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate point label {0:?} makes label lookup ambiguous")]
    DuplicateLabel(String),

    #[error("could not parse input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn format_violations(violations: &[MetricViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
