//! Simple undirected graphs with stable edge ids.
//!
//! Vertices are dense `0..n` indices. Edges keep the id they were given at
//! construction time (input order), and every coloring in this crate is keyed
//! by those ids.

mod generate;
mod io;

pub use generate::{generate, Model};
pub use io::{load_graph, parse_graph, write_dimacs, write_edge_list, Format};

use std::collections::HashSet;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {vertex} (line {line})")]
    SelfLoop { vertex: Vertex, line: usize },
    #[error("duplicate edge {u}-{v} (line {line})")]
    DuplicateEdge { u: Vertex, v: Vertex, line: usize },
    #[error("vertex {vertex} out of range for n={n} (line {line})")]
    VertexOutOfRange { vertex: usize, n: usize, line: usize },
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Immutable simple graph. `adj[u]` holds `(neighbor, edge id)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops and parallel
    /// edges. Edge ids follow iteration order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_numbered(n, edges.into_iter().enumerate().map(|(i, (u, v))| (u, v, i + 1)))
    }

    /// Like `from_edges`, with an explicit source line per edge for errors.
    pub(crate) fn from_numbered<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, usize)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v, line) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n, line });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u, line });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { u, v, line });
            }
            list.push((u, v));
        }
        Ok(Self::from_checked(n, list))
    }

    /// Caller guarantees simplicity and range.
    pub(crate) fn from_checked(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Graph { n, edges, adj, max_degree }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_checked(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Maximum degree Δ.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[u]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `u`.
    #[inline]
    pub fn other(&self, e: EdgeId, u: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == u {
            b
        } else {
            debug_assert_eq!(b, u);
            a
        }
    }

    /// Scans the shorter adjacency list.
    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    /// Edge ids of the subgraph induced by the vertices with `keep[u] == true`.
    pub fn induced_edges(&self, keep: &[bool]) -> Vec<EdgeId> {
        (0..self.m())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                keep[u] && keep[v]
            })
            .collect()
    }

    /// Max degree of the subgraph induced by `keep`.
    pub fn induced_max_degree(&self, keep: &[bool]) -> usize {
        (0..self.n)
            .filter(|&u| keep[u])
            .map(|u| self.adj[u].iter().filter(|&&(w, _)| keep[w]).count())
            .max()
            .unwrap_or(0)
    }

    /// Normalized edge set, for comparisons that ignore ids and orientation.
    pub fn edge_set(&self) -> HashSet<(Vertex, Vertex)> {
        self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
    }
}
