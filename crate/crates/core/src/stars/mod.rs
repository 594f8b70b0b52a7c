//! Star coloring: extend a partial coloring to many uncolored edges around a
//! vertex set whose members all have plenty of missing colors.

mod state;
mod step;

pub use state::{Census, EdgeClass, PseudoForest, StarState};
pub use step::StepOutcome;

use rand::Rng;
use serde::Serialize;

use crate::chains::ChainError;
use crate::coloring::PartialColoring;
use crate::extend::log2_ceil;
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarExit {
    /// `|S|` dropped below `3λ/4`.
    Natural,
    SafetyCap,
    /// Nothing to color.
    NoEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LightStarsReport {
    pub lambda: usize,
    pub d: usize,
    pub l_star: usize,
    /// Net decrease in the number of uncolored edges.
    pub colored: usize,
    pub iterations: u64,
    pub exit: StarExit,
    pub removed_from_w: usize,
    pub successes: [u64; 4],
    pub failures: [u64; 4],
    pub pairings: u64,
}

fn class_index(c: EdgeClass) -> usize {
    match c {
        EdgeClass::Ready => 0,
        EdgeClass::Social => 1,
        EdgeClass::Independent => 2,
        EdgeClass::Lonely => 3,
    }
}

/// Iteration cap: `64 λ ⌈log₂ n⌉`.
pub fn light_stars_cap(lambda: usize, n: usize) -> u64 {
    64 * lambda as u64 * log2_ceil(n)
}

/// Runs random star extensions around `ustar` until `|S| < 3λ/4` or the
/// iteration cap. Every vertex of `ustar` must miss at least `d` colors.
pub fn color_light_stars<R: Rng>(
    chi: &mut PartialColoring<'_>,
    ustar: &[Vertex],
    d: usize,
    rng: &mut R,
) -> Result<LightStarsReport, ChainError> {
    if d == 0 {
        return Err(ChainError::Precondition("d must be positive".into()));
    }
    if let Some(&u) = ustar.iter().find(|&&u| chi.missing_count(u) < d) {
        return Err(ChainError::Precondition(format!(
            "vertex {u} misses {} colors, fewer than d = {d}",
            chi.missing_count(u)
        )));
    }
    let mut st = StarState::new(chi, ustar, d);
    let lambda = st.lambda();
    let before = chi.uncolored_count();
    let mut report = LightStarsReport {
        lambda,
        d,
        l_star: st.l_star(),
        colored: 0,
        iterations: 0,
        exit: StarExit::NoEdges,
        removed_from_w: 0,
        successes: [0; 4],
        failures: [0; 4],
        pairings: 0,
    };
    if lambda == 0 {
        return Ok(report);
    }
    let cap = light_stars_cap(lambda, chi.graph().n());
    let in_w_before = ustar.len();
    report.exit = StarExit::Natural;
    while 4 * st.s_len() >= 3 * lambda && st.s_len() > 0 {
        if report.iterations >= cap {
            report.exit = StarExit::SafetyCap;
            break;
        }
        report.iterations += 1;
        match st.iteration(chi, rng)? {
            StepOutcome::Colored { class, .. } => report.successes[class_index(class)] += 1,
            StepOutcome::Failed { class } => report.failures[class_index(class)] += 1,
            StepOutcome::Paired { .. } => report.pairings += 1,
        }
    }
    report.removed_from_w = in_w_before - ustar.iter().filter(|&&u| st.in_w(u)).count();
    report.colored = before.saturating_sub(chi.uncolored_count());
    Ok(report)
}

/// Bucket `p` holds vertices with uncolored degree in `[2^p, 2^(p+1))`.
/// Picks the bucket with the largest sum of squared degrees, the smaller `p`
/// on ties. `None` if every degree is zero.
pub fn select_bucket(degrees: &[usize]) -> Option<u32> {
    let mut score: Vec<u128> = Vec::new();
    for &deg in degrees.iter().filter(|&&d| d > 0) {
        let p = deg.ilog2() as usize;
        if score.len() <= p {
            score.resize(p + 1, 0);
        }
        score[p] += (deg as u128) * (deg as u128);
    }
    let best = score.iter().copied().max().filter(|&s| s > 0)?;
    score.iter().position(|&s| s == best).map(|p| p as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeavyStarsReport {
    pub lambda: usize,
    pub colored: usize,
    pub rounds: u64,
    pub reached_half: bool,
    pub light: Vec<LightStarsReport>,
}

/// Repeats light-star coloring on the heaviest degree bucket of `ustar` until
/// half of the initial uncolored edges at `ustar` are colored.
pub fn color_heavy_stars<R: Rng>(
    chi: &mut PartialColoring<'_>,
    ustar: &[Vertex],
    rng: &mut R,
) -> Result<HeavyStarsReport, ChainError> {
    let g = chi.graph();
    let lambda = uncolored_incident(chi, ustar);
    let before = chi.uncolored_count();
    let mut report = HeavyStarsReport { lambda, colored: 0, rounds: 0, reached_half: lambda == 0, light: Vec::new() };
    let cap = 64 * log2_ceil(g.n());
    while 2 * report.colored < lambda && report.rounds < cap {
        let degrees: Vec<usize> = ustar.iter().map(|&u| chi.uncolored_degree(u)).collect();
        let Some(p) = select_bucket(&degrees) else { break };
        let bucket: Vec<Vertex> = ustar
            .iter()
            .zip(&degrees)
            .filter(|&(_, &deg)| deg > 0 && deg.ilog2() == p)
            .map(|(&u, _)| u)
            .collect();
        report.rounds += 1;
        let light = color_light_stars(chi, &bucket, 1usize << p, rng)?;
        let stalled = light.colored == 0;
        report.light.push(light);
        report.colored = before.saturating_sub(chi.uncolored_count());
        if stalled && report.rounds >= 4 && report.light.iter().rev().take(4).all(|l| l.colored == 0) {
            break;
        }
    }
    report.reached_half = 2 * report.colored >= lambda;
    Ok(report)
}

/// Uncolored edges with at least one endpoint in `set`.
pub fn uncolored_incident(chi: &PartialColoring<'_>, set: &[Vertex]) -> usize {
    let g = chi.graph();
    let mut mark = vec![false; g.n()];
    for &u in set {
        mark[u] = true;
    }
    (0..g.m())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            chi.color(e).is_none() && (mark[a] || mark[b])
        })
        .count()
}
