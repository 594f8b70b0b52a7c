//! Multi-step Vizing extension with random truncation, and the sequential
//! Vizing baseline.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::chains::{
    execute_full, execute_truncated, plan_vizing, trace_plan, vizing_extend, ChainError, Truncation,
};
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The large asymptotic constants. At desk scale `L` exceeds `n`, so
    /// chains are never truncated.
    Paper,
    /// Small constants that actually exercise truncation.
    Practical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Practical => "practical",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Mode::Paper),
            "practical" => Ok(Mode::Practical),
            other => Err(format!("unknown mode `{other}` (expected paper or practical)")),
        }
    }
}

/// `⌈log₂ n⌉`, at least 1.
pub fn log2_ceil(n: usize) -> u64 {
    (n.max(2) as f64).log2().ceil() as u64
}

/// `log₂ n` as a float, at least 1.
pub(crate) fn log2_f(n: usize) -> f64 {
    (n.max(2) as f64).log2()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtendConfig {
    pub ell: u64,
    /// Truncation range `L`: cut points are drawn from `1..=L`.
    pub cap_l: u64,
    /// Random-walk iterations before the untruncated fallback.
    pub kappa_iters: u64,
}

impl ExtendConfig {
    pub fn for_graph(mode: Mode, n: usize, delta: usize) -> Self {
        let d = delta as u64;
        let sqrt_dn = ((delta as f64) * (n as f64)).sqrt().ceil() as u64;
        let spread = d.saturating_mul(d).saturating_add(sqrt_dn);
        let cfg = match mode {
            Mode::Paper => {
                let lg = log2_f(n);
                let ell = (100.0 * lg).ceil() as u64;
                ExtendConfig {
                    ell,
                    cap_l: 1000u64.saturating_mul(ell.saturating_mul(ell)).saturating_mul(spread),
                    kappa_iters: (ell + 1).saturating_mul((1600.0 * lg * lg).ceil() as u64),
                }
            }
            Mode::Practical => {
                let ell = log2_ceil(n);
                ExtendConfig {
                    ell,
                    cap_l: spread.saturating_mul(4).min(2 * n as u64),
                    kappa_iters: 50 * ell,
                }
            }
        };
        cfg.clamped()
    }

    /// Replaces any of the three parameters that are given.
    pub fn with_overrides(self, ell: Option<u64>, cap_l: Option<u64>, kappa_iters: Option<u64>) -> Self {
        ExtendConfig {
            ell: ell.unwrap_or(self.ell),
            cap_l: cap_l.unwrap_or(self.cap_l),
            kappa_iters: kappa_iters.unwrap_or(self.kappa_iters),
        }
        .clamped()
    }

    fn clamped(self) -> Self {
        ExtendConfig { ell: self.ell.max(1), cap_l: self.cap_l.max(1), kappa_iters: self.kappa_iters.max(1) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExtendStats {
    pub iterations: u64,
    pub truncations: u64,
    pub fallback_used: bool,
    /// Traced path length per iteration (capped at `2L + 3`).
    pub chain_lengths: Vec<usize>,
    pub recolors: u64,
}

/// Colors the uncolored edge `(u, v)`, possibly after relocating it along
/// randomly truncated Vizing chains.
pub fn extend_coloring<R: Rng>(
    chi: &mut PartialColoring<'_>,
    u: Vertex,
    v: Vertex,
    cfg: &ExtendConfig,
    rng: &mut R,
) -> Result<ExtendStats, ChainError> {
    let mut stats = ExtendStats::default();
    let short = usize::try_from(cfg.cap_l.saturating_mul(2).saturating_add(2)).unwrap_or(usize::MAX);
    let (mut u, mut v) = (u, v);
    let mut c_u = chi.first_missing(u, &[]).expect("every vertex misses a color");
    let mut c_v = chi.first_missing(v, &[]).expect("every vertex misses a color");
    for iter in 1..=cfg.kappa_iters {
        stats.iterations = iter;
        let plan = plan_vizing(chi, u, v, c_u, c_v)?;
        let path = trace_plan(chi, &plan, Some(short.saturating_add(1)))?;
        stats.chain_lengths.push(path.as_ref().map_or(0, |p| p.len()));
        match path {
            Some(p) if p.truncated || p.len() > short => {
                let i = rng.gen_range(1..=cfg.cap_l);
                let t = usize::try_from(i + 1).unwrap_or(usize::MAX);
                match execute_truncated(chi, &plan, &p, t)? {
                    Truncation::Shifted { u: a, v: b, c_u: ca, c_v: cb, report } => {
                        (u, v, c_u, c_v) = (a, b, ca, cb);
                        stats.truncations += 1;
                        stats.recolors += report.recolors as u64;
                    }
                    Truncation::Done(report) => {
                        stats.recolors += report.recolors as u64;
                        return Ok(stats);
                    }
                }
            }
            p => {
                let report = execute_full(chi, &plan, p.as_ref())?;
                stats.recolors += report.recolors as u64;
                return Ok(stats);
            }
        }
    }
    stats.iterations = cfg.kappa_iters + 1;
    stats.fallback_used = true;
    let c_u = chi.first_missing(u, &[]).expect("every vertex misses a color");
    let c_v = chi.first_missing(v, &[]).expect("every vertex misses a color");
    let report = vizing_extend(chi, u, v, c_u, c_v)?;
    stats.chain_lengths.push(report.path_len);
    stats.recolors += report.recolors as u64;
    Ok(stats)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BaselineStats {
    pub edges: usize,
    pub recolors: u64,
    pub max_path_len: usize,
}

/// Colors the given uncolored edges one by one with plain Vizing chains, in
/// a shuffled order.
pub fn color_edges_sequential<R: Rng>(
    chi: &mut PartialColoring<'_>,
    edges: &[EdgeId],
    rng: &mut R,
) -> Result<BaselineStats, ChainError> {
    let mut order = edges.to_vec();
    order.shuffle(rng);
    let g = chi.graph();
    let mut stats = BaselineStats { edges: order.len(), ..Default::default() };
    for e in order {
        let (u, v) = g.endpoints(e);
        let c_u = chi.first_missing(u, &[]).expect("every vertex misses a color");
        let c_v = chi.first_missing(v, &[]).expect("every vertex misses a color");
        let report = vizing_extend(chi, u, v, c_u, c_v)?;
        stats.recolors += report.recolors as u64;
        stats.max_path_len = stats.max_path_len.max(report.path_len);
    }
    Ok(stats)
}

/// Complete `(Δ+1)`-edge coloring by repeated Vizing chains.
pub fn baseline_color<'g, R: Rng>(
    g: &'g Graph,
    rng: &mut R,
) -> Result<(PartialColoring<'g>, BaselineStats), ChainError> {
    let mut chi = PartialColoring::new(g);
    let all: Vec<EdgeId> = (0..g.m()).collect();
    let stats = color_edges_sequential(&mut chi, &all, rng)?;
    Ok((chi, stats))
}
