//! Benchmark sweeps over generated graphs, one CSV row per
//! (graph, seed, algorithm).

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::verify_coloring;
use crate::extend::Mode;
use crate::graph::{generate, GraphError, Model};
use crate::pipeline::{color, Algo, ExtendTotals, PipelineConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grid {
    Small,
    Medium,
    /// `G(n = 4000, p ≈ 0.05)`.
    Dense,
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grid::Small => "small",
            Grid::Medium => "medium",
            Grid::Dense => "dense",
        })
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Grid::Small),
            "medium" => Ok(Grid::Medium),
            "dense" => Ok(Grid::Dense),
            other => Err(format!("unknown grid `{other}` (expected small, medium or dense)")),
        }
    }
}

impl Grid {
    pub fn models(&self) -> Vec<Model> {
        let gnm = |n: usize, p: f64| Model::Gnm { n, m: (p * (n * (n - 1) / 2) as f64).round() as usize };
        match self {
            Grid::Small => vec![gnm(200, 0.05), gnm(200, 0.3), Model::Complete { n: 40 }],
            Grid::Medium => vec![gnm(1000, 0.01), gnm(1000, 0.1), gnm(2000, 0.05), Model::Regular { n: 1000, d: 64 }],
            Grid::Dense => vec![gnm(4000, 0.05)],
        }
    }

    pub fn seeds(&self) -> Vec<u64> {
        match self {
            Grid::Small => (0..3).collect(),
            Grid::Medium => (0..2).collect(),
            Grid::Dense => vec![0],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub graph: String,
    pub seed: u64,
    pub algo: Algo,
    pub mode: Mode,
    pub branch: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub colors_used: usize,
    pub valid: bool,
    pub recolors: u64,
    /// Color changes per edge.
    pub work_per_edge: f64,
    pub base: usize,
    pub light: usize,
    pub heavy: usize,
    pub per_edge: usize,
    pub fallback: usize,
    pub phase_sum: usize,
    pub extend_calls: u64,
    pub extend_median_iterations: u64,
    pub extend_max_iterations: u64,
    pub truncations: u64,
    pub max_chain_len: usize,
    pub star_iterations: u64,
    pub millis: f64,
}

fn median_iterations(x: &ExtendTotals) -> (u64, u64) {
    let half = x.calls.div_ceil(2);
    let mut seen = 0;
    let mut median = 0;
    for (&k, &count) in &x.iterations {
        seen += count;
        if seen >= half && median == 0 {
            median = k;
        }
    }
    (median, x.iterations.keys().next_back().copied().unwrap_or(0))
}

pub fn run_instance(model: Model, seed: u64, algo: Algo, mode: Mode) -> Result<BenchRow, GraphError> {
    let g = generate(model, seed)?;
    let cfg = PipelineConfig::new(algo, mode, seed);
    let (chi, stats) = color(&g, &cfg);
    let report = verify_coloring(&chi);
    let fast = stats.fast.clone().unwrap_or_default();
    let (median, max_it) = median_iterations(&fast.extend);
    let p = stats.phases;
    Ok(BenchRow {
        graph: model.to_string(),
        seed,
        algo,
        mode,
        branch: serde_json::to_value(stats.branch).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        colors_used: report.colors_used,
        valid: report.is_valid_complete(),
        recolors: stats.recolors,
        work_per_edge: if g.m() == 0 { 0.0 } else { stats.recolors as f64 / g.m() as f64 },
        base: p.base,
        light: p.light,
        heavy: p.heavy,
        per_edge: p.per_edge,
        fallback: p.fallback,
        phase_sum: p.total(),
        extend_calls: fast.extend.calls,
        extend_median_iterations: median,
        extend_max_iterations: max_it,
        truncations: fast.extend.truncations,
        max_chain_len: fast.extend.max_chain_len,
        star_iterations: fast.light.iterations + fast.heavy.iterations,
        millis: stats.timings.map_or(0.0, |t| t.total_ms),
    })
}

/// Runs every (model, seed) pair of the grid with both algorithms.
pub fn run_grid(grid: Grid, mode: Mode) -> Result<Vec<BenchRow>, GraphError> {
    let mut rows = Vec::new();
    for model in grid.models() {
        for seed in grid.seeds() {
            for algo in [Algo::Baseline, Algo::Fast] {
                rows.push(run_instance(model, seed, algo, mode)?);
            }
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
