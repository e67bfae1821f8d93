//! Cycles and paths inside a host graph, and their chords.
//!
//! A chord is a host edge between two vertices that are not consecutive on
//! the cycle (or path). For a cycle the count equals `e(G[V(C)]) - |C|`, so it
//! depends only on the vertex set; `chord_count` uses that identity while
//! `chords` lists the pairs directly.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// A cycle given as its cyclic vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Checks that `vertices` is a cycle of `g` and wraps it unchanged.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        let c = Self { vertices };
        c.validate(g)?;
        Ok(c)
    }

    /// Wraps a sequence already known to be a cycle of some host.
    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let vs = &self.vertices;
        let m = vs.len();
        if m < 3 {
            return Err(GraphError::InvalidCycle(format!(
                "a cycle needs at least 3 vertices, got {m}"
            )));
        }
        check_distinct_in_range(g, vs).map_err(GraphError::InvalidCycle)?;
        for i in 0..m {
            let (u, v) = (vs[i], vs[(i + 1) % m]);
            if !g.has_edge(u, v) {
                return Err(GraphError::InvalidCycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rotated and reflected so the minimum id comes first and the second
    /// entry is smaller than the last.
    pub fn canonical(&self) -> Cycle {
        Cycle {
            vertices: canonical_order(&self.vertices),
        }
    }

    pub fn is_canonical(&self) -> bool {
        canonical_order(&self.vertices) == self.vertices
    }

    /// Whether `u` and `v` are neighbours along the cycle.
    pub fn consecutive(&self, u: usize, v: usize) -> bool {
        let m = self.vertices.len();
        let Some(i) = self.vertices.iter().position(|&w| w == u) else {
            return false;
        };
        self.vertices[(i + 1) % m] == v || self.vertices[(i + m - 1) % m] == v
    }
}

fn canonical_order(vs: &[usize]) -> Vec<usize> {
    let m = vs.len();
    if m == 0 {
        return Vec::new();
    }
    let start = (0..m).min_by_key(|&i| vs[i]).expect("non-empty");
    let forward: Vec<usize> = (0..m).map(|i| vs[(start + i) % m]).collect();
    if m > 2 && forward[1] > forward[m - 1] {
        let mut reversed = Vec::with_capacity(m);
        reversed.push(forward[0]);
        reversed.extend(forward[1..].iter().rev());
        reversed
    } else {
        forward
    }
}

fn check_distinct_in_range(g: &Graph, vs: &[usize]) -> Result<(), String> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() {
            return Err(format!("vertex {v} out of range"));
        }
        if seen[v] {
            return Err(format!("vertex {v} repeats"));
        }
        seen[v] = true;
    }
    Ok(())
}

/// A path given as its vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        let p = Self { vertices };
        p.validate(g)?;
        Ok(p)
    }

    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let vs = &self.vertices;
        if vs.is_empty() {
            return Err(GraphError::InvalidPath("empty path".into()));
        }
        check_distinct_in_range(g, vs).map_err(GraphError::InvalidPath)?;
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::InvalidPath(format!(
                    "{}-{} is not an edge",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

/// Chords of `c` via `e(G[V(C)]) - |C|`.
pub fn chord_count(g: &Graph, c: &Cycle) -> Result<usize, GraphError> {
    c.validate(g)?;
    Ok(g.induced_edge_count(c.vertices()) - c.len())
}

/// The chords of `c` as sorted pairs `(u, v)`, `u < v`.
pub fn chords(g: &Graph, c: &Cycle) -> Result<Vec<(usize, usize)>, GraphError> {
    c.validate(g)?;
    let vs = c.vertices();
    let m = vs.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 2)..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            if g.has_edge(vs[i], vs[j]) {
                out.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Chords of a path: `e(G[V(P)]) - (|P| - 1)`.
pub fn path_chord_count(g: &Graph, p: &PathWitness) -> Result<usize, GraphError> {
    p.validate(g)?;
    Ok(g.induced_edge_count(p.vertices()) + 1 - p.len())
}

/// The chords of a path as sorted pairs.
pub fn path_chords(g: &Graph, p: &PathWitness) -> Result<Vec<(usize, usize)>, GraphError> {
    p.validate(g)?;
    let vs = p.vertices();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 2)..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                out.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
