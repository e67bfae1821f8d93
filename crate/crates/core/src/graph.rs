//! Finite simple undirected graphs on dense vertex ids.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("graph has {n} vertices, above the exact-solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("sides must be disjoint; vertex {0} is on both")]
    OverlappingSides(usize),
    #[error("requested K_{{{ell},{ell}}} but the smaller side has only {available} vertices")]
    BicliqueTooLarge { ell: usize, available: usize },
}

/// Simple undirected graph with vertices `0..n`.
///
/// Adjacency is kept twice: sorted neighbour lists for iteration and one bit
/// row per vertex for constant-time edge queries. Values are immutable once
/// built. Serialises as `{"n": .., "edges": [[u, v], ..]}` with sorted pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "EdgeList", try_from = "EdgeList")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(list: EdgeList) -> Result<Self, GraphError> {
        Graph::build(list.n, list.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate pairs.
    pub fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let rows = adj
            .iter()
            .map(|nbrs| VertexSet::from_iter(n, nbrs.iter().copied()))
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self {
            adj,
            rows,
            edge_count,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::build(n, []).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Self::build(n, edges).expect("valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::build(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        Self::build(n, (1..n).map(|i| (i - 1, i))).expect("valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::build(a + b, edges).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub(crate) fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Number of edges with both ends in `vertices` (which must be distinct).
    pub fn induced_edge_count(&self, vertices: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Induced subgraph on `vertices`; local vertex `i` is `vertices[i]` of
    /// `self`. The returned map is that list, deduplicated and sorted.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n(),
            });
        }
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let edges = keep.iter().flat_map(|&u| {
            let local = &local;
            self.adj[u]
                .iter()
                .filter(move |&&v| u < v && local[v] != usize::MAX)
                .map(move |&v| (local[u], local[v]))
        });
        let sub = Graph::build(keep.len(), edges.collect::<Vec<_>>())?;
        Ok((sub, keep))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}
