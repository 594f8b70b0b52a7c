//! Partial (Δ+1)-edge colorings and the verifier.
//!
//! [`PartialColoring`] keeps three views of the same assignment in sync:
//! the color of each edge, the edge holding color `c` at vertex `u`, and the
//! set of colors missing at `u`. Every mutation goes through [`PartialColoring::set_color`],
//! [`PartialColoring::uncolor`] or [`PartialColoring::apply`], each of which refuses to
//! leave the coloring improper, so the three views never disagree.

mod io;
mod palette;

pub use io::{read_coloring, write_coloring, ColoringFileError};

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use palette::MissingSets;

/// Colors are `1..=palette`. "Uncolored" is `None`, never `0`.
pub type Color = u32;

const NONE: u32 = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} outside palette 1..={palette}")]
    OutOfPalette { color: Color, palette: Color },
    #[error("color {color} already used at vertex {vertex} by edge {edge}")]
    Conflict { vertex: Vertex, color: Color, edge: EdgeId },
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("edge {0} is not colored")]
    NotColored(EdgeId),
}

#[derive(Debug, Clone)]
pub struct PartialColoring<'g> {
    graph: &'g Graph,
    palette: Color,
    color_of: Vec<u32>,
    /// `(palette + 1)` slots per vertex; slot `c` holds `edge + 1` or 0.
    color_at: Vec<u32>,
    miss: MissingSets,
    uncolored: usize,
    changes: u64,
}

impl<'g> PartialColoring<'g> {
    /// All edges uncolored, palette `Δ+1`.
    pub fn new(graph: &'g Graph) -> Self {
        let palette = graph.max_degree() as Color + 1;
        let n = graph.n();
        PartialColoring {
            graph,
            palette,
            color_of: vec![NONE; graph.m()],
            color_at: vec![0; n * (palette as usize + 1)],
            miss: MissingSets::full(n, palette),
            uncolored: graph.m(),
            changes: 0,
        }
    }

    /// Builds a coloring from an explicit assignment, failing on the first
    /// conflict or out-of-palette color.
    pub fn from_assignment(graph: &'g Graph, colors: &[Option<Color>]) -> Result<Self, ColoringError> {
        assert_eq!(colors.len(), graph.m(), "assignment length must equal m");
        let mut chi = Self::new(graph);
        for (e, c) in colors.iter().enumerate() {
            if let Some(c) = *c {
                chi.set_color(e, c)?;
            }
        }
        chi.changes = 0;
        Ok(chi)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Option<Color> {
        match self.color_of[e] {
            NONE => None,
            c => Some(c),
        }
    }

    /// Snapshot of every edge's color, indexed by edge id.
    pub fn colors(&self) -> Vec<Option<Color>> {
        (0..self.color_of.len()).map(|e| self.color(e)).collect()
    }

    #[inline]
    fn slot(&self, u: Vertex, c: Color) -> usize {
        u * (self.palette as usize + 1) + c as usize
    }

    /// The edge at `u` colored `c`, if any.
    #[inline]
    pub fn edge_at(&self, u: Vertex, c: Color) -> Option<EdgeId> {
        match self.color_at[self.slot(u, c)] {
            0 => None,
            e => Some(e as usize - 1),
        }
    }

    #[inline]
    pub fn neighbor_at(&self, u: Vertex, c: Color) -> Option<Vertex> {
        self.edge_at(u, c).map(|e| self.graph.other(e, u))
    }

    #[inline]
    pub fn is_missing(&self, u: Vertex, c: Color) -> bool {
        self.miss.contains(u, c)
    }

    pub fn missing_count(&self, u: Vertex) -> usize {
        self.miss.len(u)
    }

    /// Lowest missing color at `u` outside `blocked`.
    pub fn first_missing(&self, u: Vertex, blocked: &[Color]) -> Option<Color> {
        self.miss.first_excluding(u, blocked)
    }

    /// The `k`-th smallest missing color at `u`.
    pub fn nth_missing(&self, u: Vertex, k: usize) -> Option<Color> {
        self.miss.nth(u, k)
    }

    pub fn missing(&self, u: Vertex) -> impl Iterator<Item = Color> + '_ {
        self.miss.iter(u)
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored
    }

    /// Number of uncolored edges at `u`.
    pub fn uncolored_degree(&self, u: Vertex) -> usize {
        let used = self.palette as usize - self.miss.len(u);
        self.graph.degree(u) - used
    }

    /// Total number of edge color changes made so far.
    pub fn recolor_count(&self) -> u64 {
        self.changes
    }

    fn check_free(&self, e: EdgeId, c: Color) -> Result<(), ColoringError> {
        if c == NONE || c > self.palette {
            return Err(ColoringError::OutOfPalette { color: c, palette: self.palette });
        }
        let (u, v) = self.graph.endpoints(e);
        for w in [u, v] {
            if let Some(f) = self.edge_at(w, c) {
                return Err(ColoringError::Conflict { vertex: w, color: c, edge: f });
            }
        }
        Ok(())
    }

    fn attach(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.graph.endpoints(e);
        for w in [u, v] {
            let s = self.slot(w, c);
            self.color_at[s] = e as u32 + 1;
            self.miss.remove(w, c);
        }
        self.color_of[e] = c;
        self.uncolored -= 1;
    }

    fn detach(&mut self, e: EdgeId) -> Color {
        let c = self.color_of[e];
        debug_assert_ne!(c, NONE);
        let (u, v) = self.graph.endpoints(e);
        for w in [u, v] {
            let s = self.slot(w, c);
            self.color_at[s] = 0;
            self.miss.insert(w, c);
        }
        self.color_of[e] = NONE;
        self.uncolored += 1;
        c
    }

    /// Colors an uncolored edge with a color missing at both endpoints.
    pub fn set_color(&mut self, e: EdgeId, c: Color) -> Result<(), ColoringError> {
        if self.color_of[e] != NONE {
            return Err(ColoringError::AlreadyColored(e));
        }
        self.check_free(e, c)?;
        self.attach(e, c);
        self.changes += 1;
        Ok(())
    }

    pub fn uncolor(&mut self, e: EdgeId) -> Result<Color, ColoringError> {
        if self.color_of[e] == NONE {
            return Err(ColoringError::NotColored(e));
        }
        self.changes += 1;
        Ok(self.detach(e))
    }

    /// Atomically moves a set of edges to new colors (`None` = uncolor).
    ///
    /// Later entries for the same edge override earlier ones. Only the final
    /// state has to be proper; on error the coloring is left untouched.
    /// Returns the number of edges whose color actually changed.
    pub fn apply(&mut self, batch: &[(EdgeId, Option<Color>)]) -> Result<usize, ColoringError> {
        let mut order: Vec<(EdgeId, Option<Color>)> = Vec::with_capacity(batch.len());
        let mut index: HashMap<EdgeId, usize> = HashMap::with_capacity(batch.len());
        for &(e, c) in batch {
            match index.get(&e) {
                Some(&i) => order[i].1 = c,
                None => {
                    index.insert(e, order.len());
                    order.push((e, c));
                }
            }
        }
        let old: Vec<Option<Color>> = order.iter().map(|&(e, _)| self.color(e)).collect();
        for (&(e, _), o) in order.iter().zip(&old) {
            if o.is_some() {
                self.detach(e);
            }
        }
        for i in 0..order.len() {
            let (e, c) = order[i];
            let Some(c) = c else { continue };
            if let Err(err) = self.check_free(e, c) {
                for &(f, cf) in &order[..i] {
                    if cf.is_some() {
                        self.detach(f);
                    }
                }
                for (&(f, _), o) in order.iter().zip(&old) {
                    if let Some(c) = *o {
                        self.attach(f, c);
                    }
                }
                return Err(err);
            }
            self.attach(e, c);
        }
        let changed = order.iter().zip(&old).filter(|(&(_, c), o)| c != **o).count();
        self.changes += changed as u64;
        Ok(changed)
    }

    /// Recomputes the derived indexes from `color_of` and compares them with
    /// the maintained ones. Test hook.
    pub fn check_consistency(&self) -> Result<(), String> {
        let fresh = Self::from_assignment(self.graph, &self.colors()).map_err(|e| e.to_string())?;
        if fresh.color_at != self.color_at {
            return Err("color_at index out of sync".into());
        }
        if fresh.miss != self.miss {
            return Err("missing-color sets out of sync".into());
        }
        if fresh.uncolored != self.uncolored {
            return Err("uncolored count out of sync".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two edges at `vertex` share `color`.
    Conflict { vertex: Vertex, color: Color, edges: (EdgeId, EdgeId) },
    OutOfPalette { edge: EdgeId, color: Color },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// No two adjacent edges share a color.
    pub proper: bool,
    /// Every color lies in `1..=Δ+1`.
    pub within_palette: bool,
    pub colors_used: usize,
    pub uncolored: usize,
    pub palette: Color,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    /// Proper, complete and inside the `Δ+1` palette.
    pub fn is_valid_complete(&self) -> bool {
        self.proper && self.within_palette && self.uncolored == 0
    }
}

/// Checks a raw edge → color assignment from scratch. Never fails; problems
/// are listed in the report.
pub fn verify(g: &Graph, colors: &[Option<Color>]) -> VerifyReport {
    assert_eq!(colors.len(), g.m(), "assignment length must equal m");
    let palette = g.max_degree() as Color + 1;
    let mut violations = Vec::new();
    let mut used = std::collections::BTreeSet::new();
    for (e, c) in colors.iter().enumerate() {
        if let Some(c) = *c {
            used.insert(c);
            if c == 0 || c > palette {
                violations.push(Violation::OutOfPalette { edge: e, color: c });
            }
        }
    }
    let within_palette = violations.is_empty();
    let mut proper = true;
    let mut seen: HashMap<Color, EdgeId> = HashMap::new();
    for u in 0..g.n() {
        seen.clear();
        for &(_, e) in g.neighbors(u) {
            if let Some(c) = colors[e] {
                if let Some(&f) = seen.get(&c) {
                    proper = false;
                    violations.push(Violation::Conflict { vertex: u, color: c, edges: (f, e) });
                } else {
                    seen.insert(c, e);
                }
            }
        }
    }
    VerifyReport {
        proper,
        within_palette,
        colors_used: used.len(),
        uncolored: colors.iter().filter(|c| c.is_none()).count(),
        palette,
        violations,
    }
}

/// [`verify`] applied to the current state of `chi`.
pub fn verify_coloring(chi: &PartialColoring<'_>) -> VerifyReport {
    verify(chi.graph(), &chi.colors())
}
