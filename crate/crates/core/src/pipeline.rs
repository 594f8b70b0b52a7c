//! End-to-end coloring: sample a star set `U`, color `G[V \ U]` with a base
//! colorer, then color the star edges with light stars, heavy stars and
//! per-edge extension.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::chains::ChainError;
use crate::coloring::{verify_coloring, PartialColoring};
use crate::extend::{
    color_edges_sequential, extend_coloring, log2_ceil, ExtendConfig, Mode,
};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rng::{stream, Rng};
use crate::stars::{color_heavy_stars, color_light_stars, uncolored_incident, LightStarsReport, StarExit};

pub const STATS_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algo {
    Baseline,
    Fast,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Baseline => "baseline",
            Algo::Fast => "fast",
        })
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "baseline" => Ok(Algo::Baseline),
            "fast" => Ok(Algo::Fast),
            other => Err(format!("unknown algorithm `{other}` (expected baseline or fast)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineConfig {
    pub algo: Algo,
    pub mode: Mode,
    pub seed: u64,
    pub ell: Option<u64>,
    pub cap_l: Option<u64>,
    pub kappa_iters: Option<u64>,
    /// Minimum `Δ` for the fast branch; the mode default when unset.
    pub threshold: Option<f64>,
    /// Sampling constant `κ`; the mode default when unset.
    pub kappa_const: Option<f64>,
    pub slack: Option<usize>,
    pub retries: Option<usize>,
}

impl PipelineConfig {
    pub fn new(algo: Algo, mode: Mode, seed: u64) -> Self {
        PipelineConfig {
            algo,
            mode,
            seed,
            ell: None,
            cap_l: None,
            kappa_iters: None,
            threshold: None,
            kappa_const: None,
            slack: None,
            retries: None,
        }
    }

    pub fn constants(&self, n: usize) -> Constants {
        let lg = log2_ceil(n) as usize;
        let (kappa, slack) = match self.mode {
            Mode::Paper => (1e4, 300 * lg),
            Mode::Practical => (4.0, lg),
        };
        Constants {
            kappa: self.kappa_const.unwrap_or(kappa).max(1.0),
            slack: self.slack.unwrap_or(slack).max(1),
            retries: self.retries.unwrap_or(10 * lg).max(1),
        }
    }

    pub fn extend_config(&self, g: &Graph) -> ExtendConfig {
        ExtendConfig::for_graph(self.mode, g.n(), g.max_degree()).with_overrides(self.ell, self.cap_l, self.kappa_iters)
    }

    /// `Δ` at or above which the fast branch runs.
    pub fn threshold_for(&self, n: usize) -> f64 {
        self.threshold.unwrap_or_else(|| {
            let quarter = (n as f64).powf(0.25);
            match self.mode {
                Mode::Paper => 1e4 * quarter * log2_ceil(n) as f64,
                Mode::Practical => 4.0 * quarter,
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub kappa: f64,
    pub slack: usize,
    pub retries: usize,
}

/// Colors a given set of uncolored edges completely and properly within the
/// palette of `chi`.
pub trait BaseColorer {
    fn name(&self) -> &str;

    fn color_edges(
        &self,
        chi: &mut PartialColoring<'_>,
        edges: &[EdgeId],
        rng: &mut Rng,
    ) -> Result<(), ChainError>;
}

/// One plain Vizing chain per edge.
#[derive(Debug, Clone, Copy, Default)]
pub struct SequentialVizing;

impl BaseColorer for SequentialVizing {
    fn name(&self) -> &str {
        "sequential-vizing"
    }

    fn color_edges(
        &self,
        chi: &mut PartialColoring<'_>,
        edges: &[EdgeId],
        rng: &mut Rng,
    ) -> Result<(), ChainError> {
        color_edges_sequential(chi, edges, rng).map(|_| ())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodSetCondition {
    /// `Δ(G[V \ U]) ≤ Δ - s`.
    RestDegree,
    /// Few high-degree vertices in `U`.
    HighCount,
    /// Total degree of `U`.
    Volume,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoodSetCheck {
    pub rest_degree: usize,
    pub rest_edges: usize,
    pub rest_bound: i64,
    pub u_hi: usize,
    pub hi_bound: f64,
    pub volume: usize,
    pub volume_bound: f64,
}

impl GoodSetCheck {
    pub fn failed(&self) -> Vec<GoodSetCondition> {
        let mut out = Vec::new();
        // An edgeless remainder has no degree to reduce.
        if self.rest_edges > 0 && self.rest_degree as i64 > self.rest_bound {
            out.push(GoodSetCondition::RestDegree);
        }
        if self.u_hi as f64 > self.hi_bound {
            out.push(GoodSetCondition::HighCount);
        }
        if self.volume as f64 > self.volume_bound {
            out.push(GoodSetCondition::Volume);
        }
        out
    }

    pub fn is_good(&self) -> bool {
        self.failed().is_empty()
    }
}

/// `deg(u) > Δ/2`.
pub fn is_high(g: &Graph, u: Vertex) -> bool {
    2 * g.degree(u) > g.max_degree()
}

pub fn check_good_set(g: &Graph, in_u: &[bool], c: &Constants) -> GoodSetCheck {
    let delta = g.max_degree();
    let lg = log2_ceil(g.n()) as f64;
    let keep: Vec<bool> = in_u.iter().map(|&x| !x).collect();
    let rest = g.induced_edges(&keep);
    let v_hi = (0..g.n()).filter(|&u| is_high(g, u)).count();
    let scale = if delta == 0 { 0.0 } else { 1.0 / delta as f64 };
    GoodSetCheck {
        rest_degree: g.induced_max_degree(&keep),
        rest_edges: rest.len(),
        rest_bound: delta as i64 - c.slack as i64,
        u_hi: (0..g.n()).filter(|&u| in_u[u] && is_high(g, u)).count(),
        hi_bound: v_hi as f64 * scale * 1.5 * c.kappa * lg,
        volume: (0..g.n()).filter(|&u| in_u[u]).map(|u| g.degree(u)).sum(),
        volume_bound: g.m() as f64 * scale * 10.0 * c.kappa * lg,
    }
}

/// One sampling round: each vertex joins with probability `min(1, κ log n/Δ)`;
/// when there are fewer than `Δ/4` high vertices only low vertices are kept.
pub fn sample_star_set<R: rand::Rng>(g: &Graph, c: &Constants, rng: &mut R) -> Vec<bool> {
    let delta = g.max_degree().max(1);
    let p = (c.kappa * log2_ceil(g.n()) as f64 / delta as f64).min(1.0);
    let v_hi = (0..g.n()).filter(|&u| is_high(g, u)).count();
    let low_only = 4 * v_hi < delta;
    (0..g.n())
        .map(|u| {
            let pick = p >= 1.0 || rng.gen_bool(p);
            pick && !(low_only && is_high(g, u))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extraction {
    pub attempts: usize,
    pub in_u: Option<Vec<bool>>,
    pub last_failed: Vec<GoodSetCondition>,
}

/// Samples until a set passes [`check_good_set`] or the retries run out.
pub fn extract_stars<R: rand::Rng>(g: &Graph, c: &Constants, rng: &mut R) -> Extraction {
    let mut last_failed = Vec::new();
    for attempt in 1..=c.retries {
        let in_u = sample_star_set(g, c, rng);
        let failed = check_good_set(g, &in_u, c).failed();
        if failed.is_empty() {
            return Extraction { attempts: attempt, in_u: Some(in_u), last_failed: failed };
        }
        last_failed = failed;
    }
    Extraction { attempts: c.retries, in_u: None, last_failed }
}

/// Edges colored in each phase. They always sum to `m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PhaseCounts {
    pub base: usize,
    pub light: usize,
    pub heavy: usize,
    pub per_edge: usize,
    pub fallback: usize,
}

impl PhaseCounts {
    pub fn total(&self) -> usize {
        self.base + self.light + self.heavy + self.per_edge + self.fallback
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StarTotals {
    pub calls: u64,
    pub iterations: u64,
    pub successes: [u64; 4],
    pub failures: [u64; 4],
    pub pairings: u64,
    pub safety_caps: u64,
}

impl StarTotals {
    fn add(&mut self, r: &LightStarsReport) {
        self.calls += 1;
        self.iterations += r.iterations;
        for i in 0..4 {
            self.successes[i] += r.successes[i];
            self.failures[i] += r.failures[i];
        }
        self.pairings += r.pairings;
        self.safety_caps += (r.exit == StarExit::SafetyCap) as u64;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExtendTotals {
    pub calls: u64,
    /// Iterations per call, keyed by iteration count.
    pub iterations: BTreeMap<u64, u64>,
    pub truncations: u64,
    pub fallbacks: u64,
    pub max_chain_len: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FastStats {
    pub u_size: usize,
    pub u_lo: usize,
    pub u_hi: usize,
    pub tau: f64,
    pub light: StarTotals,
    pub heavy_calls: u64,
    pub heavy: StarTotals,
    pub extend: ExtendTotals,
    /// Errors that sent the residue to the sequential fallback.
    pub escalations: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Timings {
    pub extract_ms: f64,
    pub base_ms: f64,
    pub light_ms: f64,
    pub heavy_ms: f64,
    pub per_edge_ms: f64,
    pub fallback_ms: f64,
    pub total_ms: f64,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Baseline,
    BelowThreshold,
    ExtractionFailed,
    Fast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColorStats {
    pub schema: u32,
    pub algo: Algo,
    pub mode: Mode,
    pub seed: u64,
    pub base_colorer: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub palette: u32,
    pub colors_used: usize,
    pub threshold: f64,
    pub branch: Branch,
    pub constants: Constants,
    pub extend_config: ExtendConfig,
    pub extract_attempts: usize,
    pub extract_failed: Vec<GoodSetCondition>,
    pub phases: PhaseCounts,
    pub recolors: u64,
    pub fast: Option<FastStats>,
    /// Wall-clock times. Not reproducible, so kept apart from the rest.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

// Stream indices; fixed so that one phase's draws never shift another's.
const EXTRACT: u64 = 0;
const BASE: u64 = 1;
const LIGHT: u64 = 2;
const HEAVY: u64 = 3;
const FALLBACK: u64 = 4;
/// Extension call `i` draws from stream `PER_EDGE + i`.
const PER_EDGE: u64 = 1 << 32;

/// Runs the star phases on a coloring of `G[V \ U]`.
pub fn fast_coloring<'g>(
    g: &'g Graph,
    in_u: &[bool],
    cfg: &PipelineConfig,
    base: &dyn BaseColorer,
    timings: &mut Timings,
) -> (PartialColoring<'g>, PhaseCounts, FastStats) {
    let mut chi = PartialColoring::new(g);
    let mut phases = PhaseCounts::default();
    let mut stats = FastStats::default();
    let u_lo: Vec<Vertex> = (0..g.n()).filter(|&u| in_u[u] && !is_high(g, u)).collect();
    let u_hi: Vec<Vertex> = (0..g.n()).filter(|&u| in_u[u] && is_high(g, u)).collect();
    stats.u_size = u_lo.len() + u_hi.len();
    stats.u_lo = u_lo.len();
    stats.u_hi = u_hi.len();

    let t = Instant::now();
    let keep: Vec<bool> = in_u.iter().map(|&x| !x).collect();
    let rest = g.induced_edges(&keep);
    if let Err(e) = base.color_edges(&mut chi, &rest, &mut stream(cfg.seed, BASE)) {
        stats.escalations.push(format!("base: {e}"));
    }
    phases.base = g.m() - chi.uncolored_count();
    timings.base_ms = ms(t);

    let t = Instant::now();
    if stats.escalations.is_empty() {
        let before = chi.uncolored_count();
        if let Err(e) = light_phase(&mut chi, &u_lo, &mut stats, &mut stream(cfg.seed, LIGHT)) {
            stats.escalations.push(format!("light stars: {e}"));
        }
        phases.light = before - chi.uncolored_count();
    }
    timings.light_ms = ms(t);

    let t = Instant::now();
    let n_hi = (0..g.n()).filter(|&u| is_high(g, u)).count();
    let (n, delta) = (g.n() as f64, g.max_degree() as f64);
    let denom = (delta * delta + (delta * n).sqrt()).min(n).max(1.0);
    stats.tau = (g.m() as f64 * n_hi as f64 / denom).sqrt();
    if stats.escalations.is_empty() {
        let before = chi.uncolored_count();
        if let Err(e) = heavy_phase(&mut chi, &u_hi, &mut stats, &mut stream(cfg.seed, HEAVY)) {
            stats.escalations.push(format!("heavy stars: {e}"));
        }
        phases.heavy = before - chi.uncolored_count();
    }
    timings.heavy_ms = ms(t);

    let t = Instant::now();
    if stats.escalations.is_empty() {
        let before = chi.uncolored_count();
        let ext = cfg.extend_config(g);
        for e in 0..g.m() {
            if chi.color(e).is_some() {
                continue;
            }
            let (u, v) = g.endpoints(e);
            let mut rng = stream(cfg.seed, PER_EDGE + stats.extend.calls);
            match extend_coloring(&mut chi, u, v, &ext, &mut rng) {
                Ok(s) => {
                    let x = &mut stats.extend;
                    x.calls += 1;
                    *x.iterations.entry(s.iterations).or_default() += 1;
                    x.truncations += s.truncations;
                    x.fallbacks += s.fallback_used as u64;
                    x.max_chain_len = x.max_chain_len.max(s.chain_lengths.iter().copied().max().unwrap_or(0));
                }
                Err(err) => {
                    stats.escalations.push(format!("extend: {err}"));
                    break;
                }
            }
        }
        phases.per_edge = before - chi.uncolored_count();
    }
    timings.per_edge_ms = ms(t);

    let t = Instant::now();
    let residue: Vec<EdgeId> = (0..g.m()).filter(|&e| chi.color(e).is_none()).collect();
    if !residue.is_empty() {
        color_edges_sequential(&mut chi, &residue, &mut stream(cfg.seed, FALLBACK))
            .expect("sequential Vizing colors any proper partial coloring");
        phases.fallback = residue.len();
    }
    timings.fallback_ms = ms(t);
    (chi, phases, stats)
}

/// Light stars on the low-degree part of `U` until its edges are colored or
/// progress stalls.
fn light_phase(
    chi: &mut PartialColoring<'_>,
    u_lo: &[Vertex],
    stats: &mut FastStats,
    rng: &mut Rng,
) -> Result<(), ChainError> {
    let cap = 64 * log2_ceil(chi.graph().n());
    let mut stalled = 0;
    for _ in 0..cap {
        let active: Vec<Vertex> = u_lo.iter().copied().filter(|&u| chi.uncolored_degree(u) > 0).collect();
        let Some(d) = active.iter().map(|&u| chi.missing_count(u)).min() else { break };
        let r = color_light_stars(chi, &active, d, rng)?;
        stats.light.add(&r);
        stalled = if r.colored == 0 { stalled + 1 } else { 0 };
        if stalled >= 4 {
            break;
        }
    }
    Ok(())
}

fn heavy_phase(
    chi: &mut PartialColoring<'_>,
    u_hi: &[Vertex],
    stats: &mut FastStats,
    rng: &mut Rng,
) -> Result<(), ChainError> {
    let cap = 64 * log2_ceil(chi.graph().n());
    for _ in 0..cap {
        if uncolored_incident(chi, u_hi) as f64 <= stats.tau {
            break;
        }
        let r = color_heavy_stars(chi, u_hi, rng)?;
        stats.heavy_calls += 1;
        for l in &r.light {
            stats.heavy.add(l);
        }
        if r.colored == 0 {
            break;
        }
    }
    Ok(())
}

/// Complete proper `(Δ+1)`-edge coloring of `g` with the default base colorer.
pub fn color<'g>(g: &'g Graph, cfg: &PipelineConfig) -> (PartialColoring<'g>, ColorStats) {
    color_with(g, cfg, &SequentialVizing)
}

pub fn color_with<'g>(
    g: &'g Graph,
    cfg: &PipelineConfig,
    base: &dyn BaseColorer,
) -> (PartialColoring<'g>, ColorStats) {
    let start = Instant::now();
    let mut timings = Timings::default();
    let constants = cfg.constants(g.n());
    let threshold = cfg.threshold_for(g.n());
    let mut stats = ColorStats {
        schema: STATS_SCHEMA,
        algo: cfg.algo,
        mode: cfg.mode,
        seed: cfg.seed,
        base_colorer: base.name().to_string(),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        palette: 0,
        colors_used: 0,
        threshold,
        branch: Branch::Baseline,
        constants,
        extend_config: cfg.extend_config(g),
        extract_attempts: 0,
        extract_failed: Vec::new(),
        phases: PhaseCounts::default(),
        recolors: 0,
        fast: None,
        timings: None,
    };
    let mut in_u = None;
    if cfg.algo == Algo::Fast {
        if (g.max_degree() as f64) < threshold || g.m() == 0 {
            stats.branch = Branch::BelowThreshold;
        } else {
            let t = Instant::now();
            let ex = extract_stars(g, &constants, &mut stream(cfg.seed, EXTRACT));
            timings.extract_ms = ms(t);
            stats.extract_attempts = ex.attempts;
            stats.extract_failed = ex.last_failed;
            stats.branch = if ex.in_u.is_some() { Branch::Fast } else { Branch::ExtractionFailed };
            in_u = ex.in_u;
        }
    }
    let chi = match in_u {
        Some(in_u) => {
            let (chi, phases, fast) = fast_coloring(g, &in_u, cfg, base, &mut timings);
            stats.phases = phases;
            stats.fast = Some(fast);
            chi
        }
        None => {
            let t = Instant::now();
            let mut chi = PartialColoring::new(g);
            let all: Vec<EdgeId> = (0..g.m()).collect();
            color_edges_sequential(&mut chi, &all, &mut stream(cfg.seed, FALLBACK))
                .expect("sequential Vizing colors any proper partial coloring");
            stats.phases.fallback = g.m();
            timings.fallback_ms = ms(t);
            chi
        }
    };
    let report = verify_coloring(&chi);
    stats.palette = chi.palette();
    stats.colors_used = report.colors_used;
    stats.recolors = chi.recolor_count();
    timings.total_ms = ms(start);
    stats.timings = Some(timings);
    (chi, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};

    fn fast(seed: u64) -> PipelineConfig {
        PipelineConfig::new(Algo::Fast, Mode::Practical, seed)
    }

    #[test]
    fn empty_set_fails_rest_degree() {
        let g = generate(Model::Gnm { n: 200, m: 3000 }, 1).unwrap();
        let c = fast(0).constants(g.n());
        let chk = check_good_set(&g, &vec![false; g.n()], &c);
        assert_eq!(chk.failed(), vec![GoodSetCondition::RestDegree]);
    }

    #[test]
    fn full_set_leaves_nothing_to_reduce() {
        let g = generate(Model::Complete { n: 40 }, 0).unwrap();
        let c = fast(0).constants(g.n());
        let chk = check_good_set(&g, &vec![true; g.n()], &c);
        assert_eq!(chk.rest_edges, 0);
        assert!(!chk.failed().contains(&GoodSetCondition::RestDegree));
        let paper = PipelineConfig::new(Algo::Fast, Mode::Paper, 0).constants(g.n());
        assert!(check_good_set(&g, &vec![true; g.n()], &paper).is_good());
    }

    #[test]
    fn extraction_is_deterministic() {
        let g = generate(Model::Gnm { n: 500, m: 12_000 }, 3).unwrap();
        let c = fast(0).constants(g.n());
        let a = extract_stars(&g, &c, &mut stream(5, 0));
        let b = extract_stars(&g, &c, &mut stream(5, 0));
        assert_eq!(a, b);
        assert!(a.in_u.is_some(), "{:?}", a.last_failed);
    }

    #[test]
    fn clamped_probability_takes_all_low_vertices() {
        // Δ = 4 is far below κ log n: every vertex is sampled. The cycle has
        // no high vertices, so the low-only filter keeps everything.
        let g = generate(Model::Cycle { n: 9 }, 0).unwrap();
        let c = fast(0).constants(g.n());
        assert!(sample_star_set(&g, &c, &mut stream(0, 0)).iter().all(|&x| x));
    }

    #[test]
    fn tiny_graphs_take_the_baseline_branch() {
        let g = generate(Model::Cycle { n: 5 }, 0).unwrap();
        let (chi, s) = color(&g, &fast(0));
        assert_eq!(s.branch, Branch::BelowThreshold);
        assert!(verify_coloring(&chi).is_valid_complete());
        assert_eq!(s.colors_used, 3);
        let e = Graph::empty(4);
        let (chi, s) = color(&e, &fast(0));
        assert_eq!((chi.uncolored_count(), s.phases.total()), (0, 0));
    }

    #[test]
    fn complete_graph_runs_fast_branch() {
        let g = generate(Model::Complete { n: 64 }, 0).unwrap();
        let mut cfg = fast(2);
        cfg.threshold = Some(1.0);
        let (chi, s) = color(&g, &cfg);
        assert_eq!(s.branch, Branch::Fast);
        assert!(verify_coloring(&chi).is_valid_complete());
        assert_eq!(s.phases.total(), g.m());
        assert_eq!(s.phases.fallback, 0);
    }

    #[test]
    fn star_graph_is_colored_with_delta_colors() {
        let g = generate(Model::Star { leaves: 12 }, 0).unwrap();
        let mut cfg = fast(0);
        cfg.threshold = Some(1.0);
        let (chi, s) = color(&g, &cfg);
        assert!(verify_coloring(&chi).is_valid_complete());
        assert_eq!(s.colors_used, 12);
    }

    #[test]
    fn phases_add_up_on_random_graphs() {
        for seed in 0..3 {
            let g = generate(Model::Gnm { n: 1000, m: 30_000 }, seed).unwrap();
            let (chi, s) = color(&g, &fast(seed));
            assert_eq!(s.branch, Branch::Fast);
            assert!(verify_coloring(&chi).is_valid_complete());
            assert_eq!(s.phases.total(), g.m());
            assert!(s.phases.light + s.phases.heavy > 0);
            let f = s.fast.unwrap();
            assert!(f.escalations.is_empty(), "{:?}", f.escalations);
        }
    }

    #[test]
    fn stats_without_timings_are_reproducible() {
        let g = generate(Model::Gnm { n: 300, m: 5000 }, 4).unwrap();
        let run = || {
            let (chi, mut s) = color(&g, &fast(11));
            s.timings = None;
            (chi.colors(), serde_json::to_string(&s).unwrap())
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn custom_base_colorer_is_used() {
        struct Greedy;
        impl BaseColorer for Greedy {
            fn name(&self) -> &str {
                "greedy"
            }
            fn color_edges(&self, chi: &mut PartialColoring<'_>, edges: &[EdgeId], _: &mut Rng) -> Result<(), ChainError> {
                let g = chi.graph();
                for &e in edges {
                    let (u, v) = g.endpoints(e);
                    if let Some(c) = (1..=chi.palette()).find(|&c| chi.is_missing(u, c) && chi.is_missing(v, c)) {
                        chi.set_color(e, c)?;
                    }
                }
                Ok(())
            }
        }
        let g = generate(Model::Gnm { n: 400, m: 8000 }, 1).unwrap();
        let (chi, s) = color_with(&g, &fast(1), &Greedy);
        assert_eq!(s.base_colorer, "greedy");
        assert!(verify_coloring(&chi).is_valid_complete());
        assert_eq!(s.phases.total(), g.m());
    }
}
