use std::collections::HashMap;

use super::path::{trace_alt_path, AltPath};
use super::ChainError;
use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FanKind {
    /// `c_k` is missing at the center; rotating the fan colors `(u, v)`.
    Extends,
    /// `c_k` repeats an earlier color and equals `c_v`.
    CvPrimed,
    /// `c_k` repeats an earlier color other than `c_v`.
    OtherPrimed,
}

/// Vizing fan around `center`: `(v_0, c_0), ..., (v_k, c_k)` with `v_0 = v`
/// and `χ(center, v_{i+1}) = c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub center: Vertex,
    pub vertices: Vec<Vertex>,
    /// `edges[i]` is the edge `(center, v_i)`; `edges[0]` is uncolored.
    pub edges: Vec<EdgeId>,
    pub colors: Vec<Color>,
    pub kind: FanKind,
}

impl Fan {
    pub fn k(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn primed_color(&self) -> Color {
        *self.colors.last().unwrap()
    }

    fn first_index_of(&self, c: Color) -> usize {
        self.colors.iter().position(|&x| x == c).unwrap()
    }
}

#[derive(Debug, Clone)]
pub enum FanOutcome {
    Extended { recolors: usize },
    Fan(Fan),
}

/// Where the Vizing chain's alternating path starts and which branch it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathPlan {
    pub start: Vertex,
    pub colors: (Color, Color),
    /// Path colors are `{c_u, c_v}` and it starts at a fan vertex.
    pub overlapping: bool,
    /// First fan index holding `c_k` (non-overlapping) or `c_v` (overlapping).
    pub pivot: usize,
}

#[derive(Debug, Clone)]
pub struct ChainPlan {
    pub fan: Fan,
    pub c_u: Color,
    pub c_v: Color,
    /// `None` when the fan alone extends the coloring.
    pub path: Option<PathPlan>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChainReport {
    pub recolors: usize,
    pub fan_len: usize,
    pub path_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Truncation {
    Done(ChainReport),
    /// The uncolored edge moved to `(u, v)` with fresh blocking colors.
    Shifted { u: Vertex, v: Vertex, c_u: Color, c_v: Color, report: ChainReport },
}

fn check_pre(
    chi: &PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
) -> Result<EdgeId, ChainError> {
    let e = chi
        .graph()
        .find_edge(u, v)
        .ok_or_else(|| ChainError::Precondition(format!("{u}-{v} is not an edge")))?;
    if chi.color(e).is_some() {
        return Err(ChainError::Precondition(format!("edge {u}-{v} is already colored")));
    }
    for (w, c) in [(u, c_u), (v, c_v)] {
        if c == 0 || c > chi.palette() || !chi.is_missing(w, c) {
            return Err(ChainError::Precondition(format!("color {c} is not missing at {w}")));
        }
    }
    Ok(e)
}

/// Builds the fan without touching the coloring.
pub fn build_fan(
    chi: &PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
) -> Result<Fan, ChainError> {
    let e0 = check_pre(chi, u, v, c_u, c_v)?;
    let g = chi.graph();
    let c0 = if chi.is_missing(v, c_u) {
        c_u
    } else {
        chi.first_missing(v, &[c_v])
            .ok_or_else(|| ChainError::Internal(format!("vertex {v} misses only c_v")))?
    };
    let mut fan = Fan { center: u, vertices: vec![v], edges: vec![e0], colors: vec![c0], kind: FanKind::Extends };
    let mut seen = vec![false; chi.palette() as usize + 1];
    seen[c0 as usize] = true;
    let cap = g.max_degree() + 1;
    loop {
        let ci = fan.primed_color();
        if chi.is_missing(u, ci) {
            return Ok(fan);
        }
        assert!(fan.vertices.len() <= cap, "fan around {u} exceeded {cap} vertices");
        let e = chi.edge_at(u, ci).expect("color not missing at u has an edge");
        let w = g.other(e, u);
        let c = if chi.is_missing(w, c_u) {
            c_u
        } else {
            chi.first_missing(w, &[]).expect("every vertex misses a color")
        };
        fan.vertices.push(w);
        fan.edges.push(e);
        fan.colors.push(c);
        if chi.is_missing(u, c) {
            return Ok(fan);
        }
        if seen[c as usize] {
            fan.kind = if c == c_v { FanKind::CvPrimed } else { FanKind::OtherPrimed };
            return Ok(fan);
        }
        seen[c as usize] = true;
    }
}

fn rotate_fan(chi: &mut PartialColoring<'_>, fan: &Fan) -> Result<usize, ChainError> {
    let batch: Vec<_> = fan.edges.iter().zip(&fan.colors).map(|(&e, &c)| (e, Some(c))).collect();
    Ok(chi.apply(&batch)?)
}

/// Either colors `(u, v)` by rotating the fan, or returns a primed fan.
pub fn vizing_fan(
    chi: &mut PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
) -> Result<FanOutcome, ChainError> {
    let fan = build_fan(chi, u, v, c_u, c_v)?;
    if fan.kind == FanKind::Extends {
        let recolors = rotate_fan(chi, &fan)?;
        return Ok(FanOutcome::Extended { recolors });
    }
    Ok(FanOutcome::Fan(fan))
}

/// Fan plus the start and colors of the alternating path Vizing would flip.
pub fn plan_vizing(
    chi: &PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
) -> Result<ChainPlan, ChainError> {
    let fan = build_fan(chi, u, v, c_u, c_v)?;
    let path = match fan.kind {
        FanKind::Extends => None,
        FanKind::OtherPrimed => {
            let ck = fan.primed_color();
            // Keeping c_v out of the path colors keeps the path disjoint from
            // the blocking pair whenever u has a third missing color.
            let c = chi
                .first_missing(u, &[c_u, c_v])
                .or_else(|| chi.first_missing(u, &[c_u]))
                .ok_or_else(|| ChainError::Internal(format!("vertex {u} misses only c_u")))?;
            Some(PathPlan { start: u, colors: (c, ck), overlapping: false, pivot: fan.first_index_of(ck) })
        }
        FanKind::CvPrimed => {
            let i = fan.first_index_of(c_v);
            Some(PathPlan { start: fan.vertices[i], colors: (c_u, c_v), overlapping: true, pivot: i })
        }
    };
    Ok(ChainPlan { fan, c_u, c_v, path })
}

/// Traces the planned path, stopping after `cap` edges if given.
pub fn trace_plan(
    chi: &PartialColoring<'_>,
    plan: &ChainPlan,
    cap: Option<usize>,
) -> Result<Option<AltPath>, ChainError> {
    plan.path.map(|p| trace_alt_path(chi, p.start, p.colors, cap)).transpose()
}

/// Completes a plan with its full (maximal) path.
pub fn execute_full(
    chi: &mut PartialColoring<'_>,
    plan: &ChainPlan,
    path: Option<&AltPath>,
) -> Result<ChainReport, ChainError> {
    let fan = &plan.fan;
    let (Some(pp), Some(path)) = (plan.path, path) else {
        let recolors = rotate_fan(chi, fan)?;
        return Ok(ChainReport { recolors, fan_len: fan.k() + 1, path_len: 0 });
    };
    if path.truncated {
        return Err(ChainError::TruncatedFlip);
    }
    let flipped: HashMap<EdgeId, Color> = path
        .edges
        .iter()
        .map(|&e| (e, path.swap(chi.color(e).expect("path edges are colored"))))
        .collect();
    let post = |e: EdgeId| flipped.get(&e).copied().or_else(|| chi.color(e));
    let mut batch: Vec<(EdgeId, Option<Color>)> = flipped.iter().map(|(&e, &c)| (e, Some(c))).collect();
    batch.sort_unstable();
    let k = fan.k();
    let (anchor, last_color) = if pp.overlapping {
        (plan.fan.center, plan.c_v)
    } else {
        (fan.vertices[pp.pivot], fan.primed_color())
    };
    if path.end() == anchor {
        // Flip first, then rotate the whole fan onto the post-flip colors.
        for i in 0..k {
            batch.push((fan.edges[i], post(fan.edges[i + 1])));
        }
        batch.push((fan.edges[k], Some(last_color)));
    } else if pp.overlapping {
        for j in 0..pp.pivot {
            batch.push((fan.edges[j], Some(fan.colors[j])));
        }
        batch.push((fan.edges[pp.pivot], Some(plan.c_u)));
    } else {
        for j in 0..=pp.pivot {
            batch.push((fan.edges[j], Some(fan.colors[j])));
        }
    }
    let recolors = chi.apply(&batch)?;
    if chi.color(fan.edges[0]).is_none() {
        return Err(ChainError::Internal("Vizing chain left (u, v) uncolored".into()));
    }
    Ok(ChainReport { recolors, fan_len: k + 1, path_len: path.len() })
}

/// Shifts the fan prefix, flips the first `t - 1` path edges and uncolors
/// the `t`-th. The path must be known to have more than `t` edges.
pub fn execute_truncated(
    chi: &mut PartialColoring<'_>,
    plan: &ChainPlan,
    path: &AltPath,
    t: usize,
) -> Result<Truncation, ChainError> {
    let pp = plan.path.ok_or_else(|| ChainError::Internal("fan-only chain cannot be truncated".into()))?;
    if t == 0 || path.len() < t || (path.len() == t && !path.truncated) {
        return Err(ChainError::Internal(format!("path of length {} cannot be cut at {t}", path.len())));
    }
    let fan = &plan.fan;
    let mut batch: Vec<(EdgeId, Option<Color>)> = Vec::with_capacity(fan.k() + t + 1);
    if pp.overlapping {
        for j in 0..pp.pivot {
            batch.push((fan.edges[j], Some(fan.colors[j])));
        }
        batch.push((fan.edges[pp.pivot], Some(plan.c_u)));
    } else {
        for j in 0..=pp.pivot {
            batch.push((fan.edges[j], Some(fan.colors[j])));
        }
    }
    for &e in &path.edges[..t - 1] {
        batch.push((e, Some(path.swap(chi.color(e).expect("path edges are colored")))));
    }
    batch.push((path.edges[t - 1], None));
    let recolors = chi.apply(&batch)?;
    let (u2, v2) = (path.vertices[t - 1], path.vertices[t]);
    let pick = |w: Vertex| {
        let (x, y) = path.colors;
        [x.min(y), x.max(y)]
            .into_iter()
            .find(|&c| chi.is_missing(w, c))
            .ok_or_else(|| ChainError::Internal(format!("no path color missing at {w} after truncation")))
    };
    let (c_u, c_v) = (pick(u2)?, pick(v2)?);
    Ok(Truncation::Shifted {
        u: u2,
        v: v2,
        c_u,
        c_v,
        report: ChainReport { recolors, fan_len: fan.k() + 1, path_len: t },
    })
}

/// Extends `χ` to the uncolored edge `(u, v)`.
pub fn vizing_extend(
    chi: &mut PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
) -> Result<ChainReport, ChainError> {
    let plan = plan_vizing(chi, u, v, c_u, c_v)?;
    let path = trace_plan(chi, &plan, None)?;
    execute_full(chi, &plan, path.as_ref())
}

/// Like [`vizing_extend`], except that a path longer than `t` is cut after
/// its `t`-th edge, which is left uncolored.
pub fn truncated_vizing(
    chi: &mut PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    c_u: Color,
    c_v: Color,
    t: usize,
) -> Result<Truncation, ChainError> {
    if t == 0 {
        return Err(ChainError::Precondition("t must be at least 1".into()));
    }
    let plan = plan_vizing(chi, u, v, c_u, c_v)?;
    let path = trace_plan(chi, &plan, Some(t))?;
    match path {
        Some(p) if p.truncated => execute_truncated(chi, &plan, &p, t),
        p => execute_full(chi, &plan, p.as_ref()).map(Truncation::Done),
    }
}
