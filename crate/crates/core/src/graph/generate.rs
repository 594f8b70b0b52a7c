use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng;

use super::{Graph, GraphError, Vertex};
use crate::rng::stream;

/// Graph families the generator knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Uniform graph with `n` vertices and exactly `m` edges.
    Gnm { n: usize, m: usize },
    /// Uniform-ish random `d`-regular graph (pairing model with restarts).
    Regular { n: usize, d: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    /// `K_{1,leaves}`, center is vertex 0.
    Star { leaves: usize },
    Petersen,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Model::Gnm { n, m } => write!(f, "gnm-{n}-{m}"),
            Model::Regular { n, d } => write!(f, "regular-{n}-{d}"),
            Model::Complete { n } => write!(f, "complete-{n}"),
            Model::CompleteBipartite { a, b } => write!(f, "bipartite-{a}-{b}"),
            Model::Cycle { n } => write!(f, "cycle-{n}"),
            Model::Star { leaves } => write!(f, "star-{leaves}"),
            Model::Petersen => write!(f, "petersen"),
        }
    }
}

impl Model {
    /// Parses a model name plus its numeric parameters, e.g. `("gnm", [100, 300])`.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Model, GraphError> {
        let need = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::Infeasible(format!("`{name}` takes {k} parameter(s)")))
            }
        };
        Ok(match name {
            "gnm" => {
                need(2)?;
                Model::Gnm { n: params[0], m: params[1] }
            }
            "regular" | "d-regular" => {
                need(2)?;
                Model::Regular { n: params[0], d: params[1] }
            }
            "complete" => {
                need(1)?;
                Model::Complete { n: params[0] }
            }
            "bipartite" | "complete-bipartite" => {
                need(2)?;
                Model::CompleteBipartite { a: params[0], b: params[1] }
            }
            "cycle" => {
                need(1)?;
                Model::Cycle { n: params[0] }
            }
            "star" => {
                need(1)?;
                Model::Star { leaves: params[0] }
            }
            "petersen" => {
                need(0)?;
                Model::Petersen
            }
            other => return Err(GraphError::Infeasible(format!("unknown model `{other}`"))),
        })
    }
}

impl FromStr for Model {
    type Err = GraphError;

    /// Accepts the `Display` form, e.g. `gnm-100-300`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('-').collect::<Vec<_>>();
        let mut name = parts.remove(0).to_string();
        if name == "d" || (name == "complete" && parts.first() == Some(&"bipartite")) {
            name = format!("{name}-{}", parts.remove(0));
        }
        let params = parts
            .iter()
            .map(|p| p.parse().map_err(|_| GraphError::Infeasible(format!("bad model `{s}`"))))
            .collect::<Result<Vec<usize>, _>>()?;
        Model::from_parts(&name, &params)
    }
}

/// Deterministic for a fixed `(model, seed)`.
pub fn generate(model: Model, seed: u64) -> Result<Graph, GraphError> {
    match model {
        Model::Gnm { n, m } => gnm(n, m, seed),
        Model::Regular { n, d } => regular(n, d, seed),
        Model::Complete { n } => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Ok(Graph::from_checked(n, edges))
        }
        Model::CompleteBipartite { a, b } => {
            let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
            Ok(Graph::from_checked(a + b, edges))
        }
        Model::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::Infeasible(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(Graph::from_checked(n, (0..n).map(|u| (u, (u + 1) % n)).collect()))
        }
        Model::Star { leaves } => Ok(Graph::from_checked(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())),
        Model::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Ok(Graph::from_checked(10, edges))
        }
    }
}

/// Pair `k` in the enumeration `(1,0), (2,0), (2,1), (3,0), ...`.
fn decode_pair(k: usize) -> (Vertex, Vertex) {
    let mut i = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as usize;
    while i * (i - 1) / 2 > k {
        i -= 1;
    }
    while (i + 1) * i / 2 <= k {
        i += 1;
    }
    (k - i * (i - 1) / 2, i)
}

fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(GraphError::Infeasible(format!("gnm: m={m} exceeds n(n-1)/2={total}")));
    }
    let mut rng = stream(seed, 0);
    let mut picks = index::sample(&mut rng, total, m).into_vec();
    picks.sort_unstable();
    Ok(Graph::from_checked(n, picks.into_iter().map(decode_pair).collect()))
}

fn regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if (n > 0 && d >= n) || (n == 0 && d > 0) || (n * d) % 2 == 1 {
        return Err(GraphError::Infeasible(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = stream(seed, 0);
    for _ in 0..1000 {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Ok(Graph::from_checked(n, edges));
        }
    }
    Err(GraphError::Infeasible(format!("pairing model did not converge for n={n}, d={d}")))
}

/// One pairing attempt: repeatedly join two random free points, refusing
/// loops and parallel edges. Gives up when stuck.
fn try_pairing<R: Rng>(n: usize, d: usize, rng: &mut R) -> Option<Vec<(Vertex, Vertex)>> {
    let mut points: Vec<Vertex> = (0..n).flat_map(|u| std::iter::repeat_n(u, d)).collect();
    points.shuffle(rng);
    let mut seen = HashSet::with_capacity(n * d / 2);
    let mut edges = Vec::with_capacity(n * d / 2);
    while !points.is_empty() {
        let mut placed = false;
        for _ in 0..(50 + points.len()) {
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..points.len());
            let (u, v) = (points[i], points[j]);
            if i == j || u == v || seen.contains(&(u.min(v), u.max(v))) {
                continue;
            }
            seen.insert((u.min(v), u.max(v)));
            edges.push((u.min(v), u.max(v)));
            let (hi, lo) = (i.max(j), i.min(j));
            points.swap_remove(hi);
            points.swap_remove(lo);
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    edges.sort_unstable();
    Some(edges)
}
