use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Vertex};

const NOT_IN_S: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    Ready,
    Social,
    Independent,
    Lonely,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub ready: usize,
    pub social: usize,
    pub independent: usize,
    pub lonely: usize,
}

impl Census {
    pub fn total(&self) -> usize {
        self.ready + self.social + self.independent + self.lonely
    }

    /// `10|S| + m_lon`.
    pub fn potential(&self) -> usize {
        10 * self.total() + self.lonely
    }
}

/// `F(u)`: colored neighbors of `u`, with an arc `z → w` whenever
/// `χ(u, w) = c(z)`. Nodes are addressed by the color of their edge to `u`.
#[derive(Debug, Clone)]
pub struct PseudoForest {
    pub center: Vertex,
    /// `node[a]` is the neighbor joined to the center by color `a` (or none).
    node: Vec<Option<Vertex>>,
    /// `parent[a]` is the color of the out-neighbor of `node[a]`, 0 if none.
    parent: Vec<Color>,
    comp: Vec<u32>,
}

impl PseudoForest {
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.node.iter().flatten().copied()
    }

    pub fn vertex_of(&self, a: Color) -> Option<Vertex> {
        self.node[a as usize]
    }

    /// Out-neighbor of the node whose edge to the center has color `a`,
    /// addressed by its own edge color.
    pub fn parent_color(&self, a: Color) -> Option<Color> {
        match self.parent[a as usize] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn same_component(&self, a: Color, b: Color) -> bool {
        self.comp[a as usize] == self.comp[b as usize]
    }

    /// Colors of all nodes in the component of `a`, ascending.
    pub fn component(&self, a: Color) -> Vec<Color> {
        let k = self.comp[a as usize];
        (1..self.node.len() as Color)
            .filter(|&b| self.node[b as usize].is_some() && self.comp[b as usize] == k)
            .collect()
    }

    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        (1..self.node.len())
            .filter_map(|a| {
                let p = self.parent[a];
                (p != 0).then(|| (self.node[a].unwrap(), self.node[p as usize].unwrap()))
            })
            .collect()
    }
}

fn find(uf: &mut [u32], mut a: u32) -> u32 {
    while uf[a as usize] != a {
        uf[a as usize] = uf[uf[a as usize] as usize];
        a = uf[a as usize];
    }
    a
}

/// Working state of one star-coloring run.
#[derive(Debug, Clone)]
pub struct StarState {
    pub(crate) d: usize,
    pub(crate) lambda: usize,
    pub(crate) l_star: usize,
    in_w: Vec<bool>,
    s_list: Vec<EdgeId>,
    s_pos: Vec<usize>,
    head: Vec<Vertex>,
    clr: Vec<Color>,
    /// Reserved missing color `c(v)` per vertex.
    reserved: Vec<Color>,
    tails: Vec<Vec<EdgeId>>,
    lst: HashMap<(Vertex, Color), Vec<EdgeId>>,
}

impl StarState {
    /// `S` is every uncolored edge touching `ustar`, directed into `ustar`
    /// (toward the larger id when both ends qualify).
    pub fn new(chi: &PartialColoring<'_>, ustar: &[Vertex], d: usize) -> Self {
        let g = chi.graph();
        let (n, m) = (g.n(), g.m());
        let mut in_w = vec![false; n];
        for &u in ustar {
            in_w[u] = true;
        }
        let mut st = StarState {
            d,
            lambda: 0,
            l_star: 1,
            in_w,
            s_list: Vec::new(),
            s_pos: vec![NOT_IN_S; m],
            head: vec![0; m],
            clr: vec![0; m],
            reserved: vec![0; n],
            tails: vec![Vec::new(); n],
            lst: HashMap::new(),
        };
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if chi.color(e).is_some() || !(st.in_w[a] || st.in_w[b]) {
                continue;
            }
            let u = match (st.in_w[a], st.in_w[b]) {
                (true, true) => a.max(b),
                (true, false) => a,
                _ => b,
            };
            st.insert_s(g.other(e, u), u, e, 0);
        }
        st.lambda = st.s_list.len();
        let mut tails: Vec<Vertex> = (0..n).filter(|&v| !st.tails[v].is_empty()).collect();
        tails.sort_unstable();
        for v in tails {
            st.repair_vertex(chi, v);
        }
        for v in 0..n {
            if st.reserved[v] == 0 {
                st.reserved[v] = chi.first_missing(v, &[]).expect("every vertex misses a color");
            }
        }
        let delta = g.max_degree().max(1);
        let denom = (d.max(1) * st.lambda.max(1)) as f64;
        st.l_star = ((200.0 * delta as f64 * m as f64) / denom).ceil().max(1.0) as usize;
        st
    }

    pub fn s_len(&self) -> usize {
        self.s_list.len()
    }

    pub fn s_edges(&self) -> &[EdgeId] {
        &self.s_list
    }

    pub fn in_s(&self, e: EdgeId) -> bool {
        self.s_pos[e] != NOT_IN_S
    }

    pub fn in_w(&self, u: Vertex) -> bool {
        self.in_w[u]
    }

    pub fn head(&self, e: EdgeId) -> Vertex {
        self.head[e]
    }

    pub fn clr(&self, e: EdgeId) -> Color {
        self.clr[e]
    }

    pub fn reserved(&self, v: Vertex) -> Color {
        self.reserved[v]
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn l_star(&self) -> usize {
        self.l_star
    }

    pub fn lst_len(&self, u: Vertex, x: Color) -> usize {
        self.lst.get(&(u, x)).map_or(0, Vec::len)
    }

    pub(crate) fn lst_first(&self, u: Vertex, x: Color) -> Option<EdgeId> {
        self.lst.get(&(u, x)).and_then(|l| l.first().copied())
    }

    pub(crate) fn edge_at_sample(&self, i: usize) -> EdgeId {
        self.s_list[i]
    }

    /// Inserts `e = (tail, head)` with tentative color `x` (0 = to be assigned).
    pub(crate) fn insert_s(&mut self, tail: Vertex, head: Vertex, e: EdgeId, x: Color) {
        debug_assert!(!self.in_s(e));
        self.s_pos[e] = self.s_list.len();
        self.s_list.push(e);
        self.head[e] = head;
        self.clr[e] = x;
        self.tails[tail].push(e);
        if x != 0 {
            self.lst.entry((head, x)).or_default().push(e);
        }
    }

    pub(crate) fn remove_s(&mut self, tail: Vertex, e: EdgeId) {
        let i = self.s_pos[e];
        debug_assert_ne!(i, NOT_IN_S);
        self.s_list.swap_remove(i);
        if let Some(&moved) = self.s_list.get(i) {
            self.s_pos[moved] = i;
        }
        self.s_pos[e] = NOT_IN_S;
        self.set_lst(e, 0);
        let t = &mut self.tails[tail];
        t.retain(|&f| f != e);
    }

    fn set_lst(&mut self, e: EdgeId, x: Color) {
        let old = self.clr[e];
        let u = self.head[e];
        if old != 0 {
            if let Some(l) = self.lst.get_mut(&(u, old)) {
                l.retain(|&f| f != e);
                if l.is_empty() {
                    self.lst.remove(&(u, old));
                }
            }
        }
        self.clr[e] = x;
        if x != 0 {
            self.lst.entry((u, x)).or_default().push(e);
        }
    }

    /// Restores `clr` and `c` at `v`: valid tentative colors are kept, then
    /// the reserved color, then the rest are reassigned in ascending order.
    pub(crate) fn repair_vertex(&mut self, chi: &PartialColoring<'_>, v: Vertex) {
        let mut used: HashSet<Color> = HashSet::new();
        let mut broken = Vec::new();
        for &e in &self.tails[v] {
            let x = self.clr[e];
            if x != 0 && chi.is_missing(v, x) && used.insert(x) {
                continue;
            }
            broken.push(e);
        }
        let c = self.reserved[v];
        let keep_c = c != 0 && chi.is_missing(v, c) && !used.contains(&c);
        if keep_c {
            used.insert(c);
        }
        let mut free = chi.missing(v).filter(|x| !used.contains(x));
        for e in broken {
            let x = free.next().expect("a vertex misses more colors than it has uncolored edges");
            self.set_lst(e, x);
        }
        if !keep_c {
            self.reserved[v] = free.next().expect("room for the reserved color");
        }
    }

    /// Repairs every vertex in `dirty`, then drops `W` members whose missing
    /// set fell below `d/2`, with their incoming `S` edges.
    pub(crate) fn repair(&mut self, chi: &PartialColoring<'_>, mut dirty: Vec<Vertex>) -> usize {
        dirty.sort_unstable();
        dirty.dedup();
        for &v in &dirty {
            self.repair_vertex(chi, v);
        }
        let g = chi.graph();
        let mut removed = 0;
        for &u in &dirty {
            if self.in_w[u] && 2 * chi.missing_count(u) < self.d {
                self.in_w[u] = false;
                removed += 1;
                for &(w, e) in g.neighbors(u) {
                    if self.in_s(e) && self.head[e] == u {
                        self.remove_s(w, e);
                    }
                }
            }
        }
        removed
    }

    pub fn pseudo_forest(&self, chi: &PartialColoring<'_>, u: Vertex) -> PseudoForest {
        let size = chi.palette() as usize + 1;
        let mut node = vec![None; size];
        let mut parent = vec![0; size];
        let g = chi.graph();
        for &(w, e) in g.neighbors(u) {
            if let Some(a) = chi.color(e) {
                node[a as usize] = Some(w);
            }
        }
        let mut uf: Vec<u32> = (0..size as u32).collect();
        for a in 1..size {
            let Some(z) = node[a] else { continue };
            let cz = self.reserved[z];
            if cz != 0 && !chi.is_missing(u, cz) {
                parent[a] = cz;
                let (ra, rb) = (find(&mut uf, a as u32), find(&mut uf, cz));
                if ra != rb {
                    uf[ra.max(rb) as usize] = ra.min(rb);
                }
            }
        }
        let comp = (0..size as u32).map(|a| find(&mut uf, a)).collect();
        PseudoForest { center: u, node, parent, comp }
    }

    /// Colors `b ≠ a` in `a`'s component whose per-color list at `u` has
    /// exactly one entry.
    pub(crate) fn lonely_partners(&self, f: &PseudoForest, a: Color) -> Vec<Color> {
        f.component(a)
            .into_iter()
            .filter(|&b| b != a && self.lst_len(f.center, b) == 1)
            .collect()
    }

    pub fn classify(&self, chi: &PartialColoring<'_>, e: EdgeId) -> EdgeClass {
        assert!(self.in_s(e), "edge {e} is not in S");
        let u = self.head[e];
        let y = self.clr[e];
        if chi.is_missing(u, y) {
            return EdgeClass::Ready;
        }
        if self.lst_len(u, y) > 1 {
            return EdgeClass::Social;
        }
        let f = self.pseudo_forest(chi, u);
        if self.lonely_partners(&f, y).is_empty() {
            EdgeClass::Independent
        } else {
            EdgeClass::Lonely
        }
    }

    pub fn census(&self, chi: &PartialColoring<'_>) -> Census {
        let mut c = Census::default();
        for &e in &self.s_list {
            match self.classify(chi, e) {
                EdgeClass::Ready => c.ready += 1,
                EdgeClass::Social => c.social += 1,
                EdgeClass::Independent => c.independent += 1,
                EdgeClass::Lonely => c.lonely += 1,
            }
        }
        c
    }

    /// Full recomputation of every maintained invariant. Test hook.
    pub fn check_invariants(&self, chi: &PartialColoring<'_>) -> Result<(), String> {
        let g = chi.graph();
        let mut lst: HashMap<(Vertex, Color), Vec<EdgeId>> = HashMap::new();
        for (i, &e) in self.s_list.iter().enumerate() {
            if self.s_pos[e] != i {
                return Err(format!("position index of edge {e} is stale"));
            }
            let u = self.head[e];
            let v = g.other(e, u);
            if chi.color(e).is_some() {
                return Err(format!("S contains colored edge {e}"));
            }
            if !self.in_w[u] {
                return Err(format!("edge {e} points at {u}, which left W"));
            }
            let x = self.clr[e];
            if x == 0 || !chi.is_missing(v, x) {
                return Err(format!("clr of edge {e} is not missing at its tail {v}"));
            }
            if x == self.reserved[v] {
                return Err(format!("clr of edge {e} equals c({v})"));
            }
            if !self.tails[v].contains(&e) {
                return Err(format!("tail list of {v} misses edge {e}"));
            }
            lst.entry((u, x)).or_default().push(e);
        }
        for v in 0..g.n() {
            let mut seen = HashSet::new();
            for &e in &self.tails[v] {
                if !self.in_s(e) || g.other(e, self.head[e]) != v {
                    return Err(format!("tail list of {v} holds stray edge {e}"));
                }
                if !seen.insert(self.clr[e]) {
                    return Err(format!("two S edges leaving {v} share clr {}", self.clr[e]));
                }
            }
            if !chi.is_missing(v, self.reserved[v]) {
                return Err(format!("c({v}) is not missing at {v}"));
            }
            if self.in_w[v] && 2 * chi.missing_count(v) < self.d {
                return Err(format!("{v} is in W with too few missing colors"));
            }
        }
        let norm = |m: &HashMap<(Vertex, Color), Vec<EdgeId>>| {
            let mut v: Vec<_> = m
                .iter()
                .map(|(k, l)| {
                    let mut l = l.clone();
                    l.sort_unstable();
                    (*k, l)
                })
                .collect();
            v.sort_unstable();
            v
        };
        if norm(&lst) != norm(&self.lst) {
            return Err("per-color lists differ from S".into());
        }
        Ok(())
    }
}
