#![allow(dead_code)]

use std::collections::HashMap;

use edgecolor::coloring::Color;
use edgecolor::graph::Graph;
use edgecolor::rng::stream;
use edgecolor::PartialColoring;
use rand::seq::SliceRandom;
use rand::Rng;

/// Small graph as a sorted list of `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone)]
pub struct Small {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Small {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied()).unwrap()
    }

    fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Color refinement, a few rounds. Equal for isomorphic graphs.
    fn colors(&self) -> Vec<u64> {
        let adj = self.adjacency();
        let mut col: Vec<u64> = adj.iter().map(|a| a.count_ones() as u64).collect();
        for _ in 0..3 {
            let next: Vec<u64> = (0..self.n)
                .map(|u| {
                    let mut ns: Vec<u64> = (0..self.n).filter(|&v| adj[u] >> v & 1 == 1).map(|v| col[v]).collect();
                    ns.sort_unstable();
                    let mut h = col[u].wrapping_mul(0x9e37_79b9_7f4a_7c15);
                    for x in ns {
                        h = (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(17);
                    }
                    h
                })
                .collect();
            col = next;
        }
        col
    }

    fn invariant(&self) -> (usize, usize, Vec<u64>) {
        let mut c = self.colors();
        c.sort_unstable();
        (self.n, self.edges.len(), c)
    }
}

fn isomorphic(a: &Small, b: &Small) -> bool {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        return false;
    }
    let (aa, ba) = (a.adjacency(), b.adjacency());
    let (ac, bc) = (a.colors(), b.colors());
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn extend(
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
        aa: &[u32],
        ba: &[u32],
        ac: &[u64],
        bc: &[u64],
    ) -> bool {
        if i == map.len() {
            return true;
        }
        for j in 0..ba.len() {
            if used[j] || ac[i] != bc[j] {
                continue;
            }
            let ok = (0..i).all(|k| (aa[i] >> k & 1) == (ba[j] >> map[k] & 1));
            if !ok {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if extend(i + 1, map, used, aa, ba, ac, bc) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    extend(0, &mut map, &mut used, &aa, &ba, &ac, &bc)
}

/// One representative per isomorphism class of connected graphs with
/// `1..=max_m` edges, grown one edge at a time.
pub fn connected_graphs(max_m: usize) -> Vec<Small> {
    let mut all = Vec::new();
    let mut level = vec![Small { n: 2, edges: vec![(0, 1)] }];
    for _ in 1..max_m {
        all.extend(level.iter().cloned());
        let mut seen: HashMap<(usize, usize, Vec<u64>), Vec<Small>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            let adj = g.adjacency();
            let mut cands = Vec::new();
            for u in 0..g.n {
                for v in u + 1..g.n {
                    if adj[u] >> v & 1 == 0 {
                        cands.push(Small { n: g.n, edges: with_edge(&g.edges, (u, v)) });
                    }
                }
                cands.push(Small { n: g.n + 1, edges: with_edge(&g.edges, (u, g.n)) });
            }
            for c in cands {
                let bucket = seen.entry(c.invariant()).or_default();
                if !bucket.iter().any(|h| isomorphic(h, &c)) {
                    bucket.push(c.clone());
                    next.push(c);
                }
            }
        }
        level = next;
    }
    all.extend(level);
    all
}

fn with_edge(edges: &[(usize, usize)], e: (usize, usize)) -> Vec<(usize, usize)> {
    let mut out = edges.to_vec();
    out.push(e);
    out.sort_unstable();
    out
}

/// Total length of the maximal `{x, y}`-alternating paths with at least two
/// edges, summed over all `y != x`. Works from the raw color array.
pub fn alternating_path_mass(g: &Graph, colors: &[Option<Color>], palette: Color, x: Color) -> usize {
    let mut total = 0;
    for y in (1..=palette).filter(|&y| y != x) {
        let sub: Vec<usize> = (0..g.m()).filter(|&e| colors[e] == Some(x) || colors[e] == Some(y)).collect();
        // Union-find over the two-colored subgraph.
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut deg = vec![0usize; g.n()];
        for &e in &sub {
            let (a, b) = g.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut edges_in: HashMap<usize, usize> = HashMap::new();
        let mut is_cycle: HashMap<usize, bool> = HashMap::new();
        for &e in &sub {
            let r = find(&mut parent, g.endpoints(e).0);
            *edges_in.entry(r).or_default() += 1;
        }
        for v in 0..g.n() {
            if deg[v] > 0 {
                let r = find(&mut parent, v);
                let c = is_cycle.entry(r).or_insert(true);
                *c &= deg[v] == 2;
            }
        }
        for (r, len) in edges_in {
            if !is_cycle[&r] && len >= 2 {
                total += len;
            }
        }
    }
    total
}

/// Random partial coloring: sequential Vizing on all edges, then a random
/// `fraction` of them uncolored.
pub fn random_partial<'g>(g: &'g Graph, seed: u64, fraction: f64) -> PartialColoring<'g> {
    let (mut chi, _) = edgecolor::baseline_color(g, &mut stream(seed, 100)).unwrap();
    let mut rng = stream(seed, 101);
    let mut ids: Vec<usize> = (0..g.m()).collect();
    ids.shuffle(&mut rng);
    let k = (fraction * g.m() as f64).round() as usize;
    for &e in &ids[..k] {
        chi.uncolor(e).unwrap();
    }
    chi
}

/// Random missing color at `u`.
pub fn random_missing<R: Rng>(chi: &PartialColoring<'_>, u: usize, rng: &mut R) -> Color {
    chi.nth_missing(u, rng.gen_range(0..chi.missing_count(u))).unwrap()
}
