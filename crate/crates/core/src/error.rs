use thiserror::Error;

use crate::geometry::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZoneError {
    #[error("line {source_id} has a = b = 0")]
    DegenerateLine { source_id: usize },
    #[error("lines {first} and {second} coincide")]
    CoincidentLines { first: usize, second: usize },
    #[error("line {source_id} is horizontal and has no x-intercept")]
    NoIntercept { source_id: usize },
    #[error("input line {source_id} coincides with the query line")]
    QueryInArrangement { source_id: usize },
    #[error("cell {index} ({side}) is empty")]
    EmptyCell { index: usize, side: Side },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
