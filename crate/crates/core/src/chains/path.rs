use super::ChainError;
use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Vertex};

/// An `{x, y}`-alternating path, oriented from `vertices[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltPath {
    pub colors: (Color, Color),
    /// `vertices.len() == edges.len() + 1`.
    pub vertices: Vec<Vertex>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub edges: Vec<EdgeId>,
    /// Tracing stopped at the length cap while the path still continued.
    pub truncated: bool,
}

impl AltPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// The other color of the pair.
    pub fn swap(&self, c: Color) -> Color {
        if c == self.colors.0 {
            self.colors.1
        } else {
            self.colors.0
        }
    }
}

/// Follows the unique `tau`-alternating path leaving `start`, stopping after
/// `cap` edges if given. `start` must have at most one incident `tau` edge.
pub fn trace_alt_path(
    chi: &PartialColoring<'_>,
    start: Vertex,
    tau: (Color, Color),
    cap: Option<usize>,
) -> Result<AltPath, ChainError> {
    let (x, y) = tau;
    if x == y {
        return Err(ChainError::Precondition(format!("degenerate color pair {{{x}, {x}}}")));
    }
    let mut path = AltPath { colors: tau, vertices: vec![start], edges: Vec::new(), truncated: false };
    let mut next = match (chi.edge_at(start, x), chi.edge_at(start, y)) {
        (Some(_), Some(_)) => return Err(ChainError::AmbiguousStart { vertex: start, colors: tau }),
        (Some(_), None) => x,
        (None, Some(_)) => y,
        (None, None) => return Ok(path),
    };
    let g = chi.graph();
    let mut w = start;
    while let Some(e) = chi.edge_at(w, next) {
        if cap.is_some_and(|c| path.edges.len() >= c) {
            path.truncated = true;
            break;
        }
        w = g.other(e, w);
        path.edges.push(e);
        path.vertices.push(w);
        next = if next == x { y } else { x };
    }
    Ok(path)
}

/// Swaps the two colors along a maximal path.
pub fn flip_path(chi: &mut PartialColoring<'_>, p: &AltPath) -> Result<(), ChainError> {
    if p.truncated {
        return Err(ChainError::TruncatedFlip);
    }
    let batch: Vec<_> = p
        .edges
        .iter()
        .map(|&e| (e, chi.color(e).map(|c| p.swap(c))))
        .collect();
    chi.apply(&batch)?;
    Ok(())
}
