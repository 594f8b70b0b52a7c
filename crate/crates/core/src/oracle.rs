//! Exact edge coloring by backtracking, for graphs with at most
//! [`MAX_ORACLE_EDGES`] edges.

use thiserror::Error;

use crate::coloring::Color;
use crate::graph::{EdgeId, Graph};

pub const MAX_ORACLE_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {m} edges; the oracle handles at most {max}")]
    TooLarge { m: usize, max: usize },
}

fn check_size(g: &Graph) -> Result<(), OracleError> {
    if g.m() > MAX_ORACLE_EDGES {
        return Err(OracleError::TooLarge { m: g.m(), max: MAX_ORACLE_EDGES });
    }
    Ok(())
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<EdgeId>,
    k: Color,
    /// Bitmask of used colors per vertex.
    used: Vec<u64>,
    colors: Vec<Option<Color>>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, max_used: Color) -> bool {
        let Some(&e) = self.order.get(i) else { return true };
        let (u, v) = self.g.endpoints(e);
        // A color above max_used + 1 is a relabeling of max_used + 1.
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            let bit = 1u64 << c;
            if (self.used[u] | self.used[v]) & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[e] = Some(c);
            if self.run(i + 1, max_used.max(c)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        self.colors[e] = None;
        false
    }
}

/// A proper `k`-edge coloring of `g`, if one exists.
pub fn exhaustive_coloring(g: &Graph, k: Color) -> Result<Option<Vec<Option<Color>>>, OracleError> {
    check_size(g)?;
    if g.m() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 || (g.max_degree() as u64) > k as u64 {
        return Ok(None);
    }
    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        std::cmp::Reverse(g.degree(u) + g.degree(v))
    });
    let mut s = Search { g, order, k, used: vec![0; g.n()], colors: vec![None; g.m()] };
    Ok(s.run(0, 0).then_some(s.colors))
}

/// Smallest `k ≤ max_colors` with a proper `k`-edge coloring.
pub fn brute_force_chromatic_index(g: &Graph, max_colors: Color) -> Result<Option<Color>, OracleError> {
    check_size(g)?;
    let start = g.max_degree() as Color;
    for k in start..=max_colors {
        if exhaustive_coloring(g, k)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
