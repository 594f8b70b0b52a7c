//! Alternating paths, Vizing fans and Vizing chains (full and truncated).

mod path;
mod vizing;

pub use path::{flip_path, trace_alt_path, AltPath};
pub use vizing::{
    build_fan, execute_full, execute_truncated, plan_vizing, trace_plan, truncated_vizing, vizing_extend,
    vizing_fan, ChainPlan, ChainReport, Fan, FanKind, FanOutcome, PathPlan, Truncation,
};

use thiserror::Error;

use crate::coloring::{Color, ColoringError};
use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {vertex} has edges of both colors {colors:?}")]
    AmbiguousStart { vertex: Vertex, colors: (Color, Color) },
    #[error("a truncated path cannot be flipped")]
    TruncatedFlip,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
