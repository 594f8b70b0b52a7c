use std::collections::{HashMap, HashSet};

use rand::Rng;
use serde::Serialize;

use super::state::{EdgeClass, PseudoForest, StarState};
use crate::chains::{trace_alt_path, AltPath, ChainError};
use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StepOutcome {
    Colored { edge: EdgeId, class: EdgeClass },
    /// Two lonely edges were swapped for two edges sharing a tentative color.
    Paired { removed: [EdgeId; 2], added: [EdgeId; 2] },
    Failed { class: EdgeClass },
}

type Batch = Vec<(EdgeId, Option<Color>)>;

fn touched(chi: &PartialColoring<'_>, batch: &Batch) -> Vec<Vertex> {
    let g = chi.graph();
    batch
        .iter()
        .flat_map(|&(e, _)| {
            let (a, b) = g.endpoints(e);
            [a, b]
        })
        .collect()
}

fn flips(chi: &PartialColoring<'_>, p: &AltPath) -> Batch {
    p.edges
        .iter()
        .map(|&e| (e, Some(p.swap(chi.color(e).expect("path edges are colored")))))
        .collect()
}

impl StarState {
    /// One random extension attempt.
    pub fn iteration<R: Rng>(
        &mut self,
        chi: &mut PartialColoring<'_>,
        rng: &mut R,
    ) -> Result<StepOutcome, ChainError> {
        if self.s_len() == 0 {
            return Err(ChainError::Precondition("S is empty".into()));
        }
        let e = self.edge_at_sample(rng.gen_range(0..self.s_len()));
        let u = self.head(e);
        let x = chi
            .nth_missing(u, rng.gen_range(0..chi.missing_count(u)))
            .expect("W vertices miss at least one color");
        let class = self.classify(chi, e);
        let v = chi.graph().other(e, u);
        let y = self.clr(e);
        let outcome = match class {
            EdgeClass::Ready => {
                let batch = vec![(e, Some(y))];
                self.finish(chi, batch, e, v, class)?
            }
            EdgeClass::Social => {
                let p = trace_alt_path(chi, v, (x, y), Some(self.l_star))?;
                if p.truncated || (!p.is_empty() && p.end() == u) {
                    StepOutcome::Failed { class }
                } else {
                    let mut batch = flips(chi, &p);
                    batch.push((e, Some(x)));
                    self.finish(chi, batch, e, v, class)?
                }
            }
            EdgeClass::Independent => match self.recap_vizing(chi, e, x)? {
                Some(batch) => self.finish(chi, batch, e, v, class)?,
                None => StepOutcome::Failed { class },
            },
            EdgeClass::Lonely => self.pair_lonely(chi, e)?,
        };
        Ok(outcome)
    }

    fn finish(
        &mut self,
        chi: &mut PartialColoring<'_>,
        batch: Batch,
        e: EdgeId,
        v: Vertex,
        class: EdgeClass,
    ) -> Result<StepOutcome, ChainError> {
        chi.apply(&batch)?;
        if chi.color(e).is_none() {
            return Err(ChainError::Internal(format!("star step left edge {e} uncolored")));
        }
        self.remove_s(v, e);
        let dirty = touched(chi, &batch);
        self.repair(chi, dirty);
        Ok(StepOutcome::Colored { edge: e, class })
    }

    /// Vizing's procedure on `(v, u)` around `u`, where `v` uses its
    /// tentative color, the fan vertices their reserved colors and `u` the
    /// sampled `x`. Returns the batch to apply, or `None` when the chain is
    /// longer than `L`.
    fn recap_vizing(
        &self,
        chi: &PartialColoring<'_>,
        e: EdgeId,
        x: Color,
    ) -> Result<Option<Batch>, ChainError> {
        let u = self.head(e);
        let f = self.pseudo_forest(chi, u);
        // Fan nodes by the color of their edge to u; node 0 is (u, v).
        let mut fan: Vec<Color> = vec![self.clr(e)];
        let mut pos: HashMap<Color, usize> = HashMap::new();
        pos.insert(self.clr(e), 1);
        let mut edges = vec![e];
        let mut cur = self.clr(e);
        let closing = loop {
            let w = f.vertex_of(cur).expect("fan color is used at u");
            edges.push(chi.edge_at(u, cur).unwrap());
            match f.parent_color(cur) {
                None => break None,
                Some(p) => {
                    if let Some(&j) = pos.get(&p) {
                        break Some(j);
                    }
                    pos.insert(p, edges.len());
                    fan.push(p);
                    cur = p;
                }
            }
            debug_assert!(fan.len() <= chi.graph().degree(u), "fan at {u} through {w} repeats");
        };
        // edges[i] = (u, v_i); color of edges[i] for i >= 1 is fan[i - 1].
        let k = edges.len() - 1;
        let color_of = |i: usize| chi.color(edges[i]);
        let vk = chi.graph().other(edges[k], u);
        let mut batch: Batch = Vec::with_capacity(2 * k + 2);
        let Some(j) = closing else {
            for i in 0..k {
                batch.push((edges[i], color_of(i + 1)));
            }
            batch.push((edges[k], Some(self.reserved(vk))));
            return Ok(Some(batch));
        };
        let y = color_of(j).unwrap();
        let p = trace_alt_path(chi, u, (x, y), Some(self.l_star))?;
        if p.truncated {
            return Ok(None);
        }
        let v_prev = if j == 1 { chi.graph().other(e, u) } else { chi.graph().other(edges[j - 1], u) };
        batch.extend(flips(chi, &p));
        if p.end() != v_prev {
            for i in 0..j {
                batch.push((edges[i], color_of(i + 1)));
            }
            batch.push((edges[j], Some(x)));
        } else {
            let flipped: HashMap<EdgeId, Option<Color>> = batch.iter().copied().collect();
            let post = |g: EdgeId| flipped.get(&g).copied().unwrap_or_else(|| chi.color(g));
            for i in 0..k {
                batch.push((edges[i], post(edges[i + 1])));
            }
            batch.push((edges[k], Some(y)));
        }
        Ok(Some(batch))
    }

    /// Root path of `start` in `f` with the cycle (if any) cut at the first
    /// repeated node. Returned as edge colors at the center.
    fn root_path(f: &PseudoForest, start: Color, cut: Option<Color>) -> Vec<Color> {
        let mut path = vec![start];
        let mut cur = start;
        while Some(cur) != cut {
            match f.parent_color(cur) {
                Some(p) => {
                    path.push(p);
                    cur = p;
                }
                None => break,
            }
        }
        path
    }

    fn cycle_cut(f: &PseudoForest, start: Color) -> Option<Color> {
        let mut seen = HashSet::new();
        let mut cur = start;
        loop {
            if !seen.insert(cur) {
                return Some(cur);
            }
            cur = f.parent_color(cur)?;
        }
    }

    fn pair_lonely(&mut self, chi: &mut PartialColoring<'_>, e: EdgeId) -> Result<StepOutcome, ChainError> {
        let g = chi.graph();
        let u = self.head(e);
        let v = g.other(e, u);
        let a = self.clr(e);
        let f = self.pseudo_forest(chi, u);
        let b = *self
            .lonely_partners(&f, a)
            .first()
            .ok_or_else(|| ChainError::Internal("lonely edge without partner".into()))?;
        let e2 = self.lst_first(u, b).expect("partner list has one edge");
        let v2 = g.other(e2, u);
        let cut = Self::cycle_cut(&f, a);
        let pa = Self::root_path(&f, a, cut);
        let pb = Self::root_path(&f, b, cut);
        let on_b: HashSet<Color> = pb.iter().copied().collect();
        let ia = pa
            .iter()
            .position(|c| on_b.contains(c))
            .ok_or_else(|| ChainError::Internal("lonely pair without common ancestor".into()))?;
        let t = pa[ia];
        let ib = pb.iter().position(|&c| c == t).unwrap();
        let mut batch: Batch = Vec::new();
        let mut added = [e, e2];
        for (side, (first, path, idx)) in [(e, &pa, ia), (e2, &pb, ib)].into_iter().enumerate() {
            // w_0 is the tail of the lonely edge, w_i = node of color path[i-1].
            let edge_of = |i: usize| if i == 0 { first } else { chi.edge_at(u, path[i - 1]).unwrap() };
            let l = idx + 1;
            for i in 0..l - 1 {
                batch.push((edge_of(i), Some(path[i])));
            }
            if l >= 2 {
                batch.push((edge_of(l - 1), None));
            }
            added[side] = edge_of(l - 1);
        }
        chi.apply(&batch)?;
        let shared = t;
        self.remove_s(v, e);
        self.remove_s(v2, e2);
        for &n in &added {
            self.insert_s(g.other(n, u), u, n, shared);
        }
        let dirty = touched(chi, &batch).into_iter().chain(added.iter().map(|&n| g.other(n, u))).collect();
        self.repair(chi, dirty);
        Ok(StepOutcome::Paired { removed: [e, e2], added })
    }
}
