//! Randomized `(Δ+1)`-edge coloring.
//!
//! The fast path samples a set of star centers, colors the rest of the graph
//! with plain Vizing chains, then extends the coloring to the star edges with
//! random star steps and randomly truncated multi-step Vizing chains. The
//! sequential Vizing baseline is always available and is the fallback.

pub mod bench;
pub mod chains;
pub mod coloring;
pub mod extend;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod rng;
pub mod stars;

pub use coloring::{verify, verify_coloring, Color, PartialColoring, VerifyReport};
pub use extend::{baseline_color, extend_coloring, ExtendConfig, Mode};
pub use graph::{generate, EdgeId, Graph, GraphError, Model, Vertex};
pub use oracle::{brute_force_chromatic_index, exhaustive_coloring};
pub use pipeline::{color, color_with, Algo, BaseColorer, ColorStats, PipelineConfig};
