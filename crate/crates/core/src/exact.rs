//! Exact chromatic and clique numbers for small graphs.
//!
//! Both solvers refuse instances above a configurable vertex cap instead of
//! approximating.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_chromatic_vertices: usize,
    pub max_clique_vertices: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        Self {
            max_chromatic_vertices: 24,
            max_clique_vertices: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub chi: usize,
    /// Colour of each vertex, in `0..chi`.
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.chi.max(1))
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clique {
    pub omega: usize,
    /// Sorted clique members.
    pub vertices: Vec<usize>,
}

pub fn chromatic_number(g: &Graph) -> Result<Coloring, GraphError> {
    chromatic_number_with(g, &ExactLimits::default())
}

pub fn clique_number(g: &Graph) -> Result<Clique, GraphError> {
    clique_number_with(g, &ExactLimits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &ExactLimits) -> Result<Coloring, GraphError> {
    let n = g.n();
    if n > limits.max_chromatic_vertices {
        return Err(GraphError::TooLarge {
            n,
            cap: limits.max_chromatic_vertices,
        });
    }
    if n == 0 {
        return Ok(Coloring {
            chi: 0,
            colors: Vec::new(),
        });
    }
    let lower = max_clique(g).len();
    let mut solver = Dsatur::new(g);
    let greedy = solver.greedy();
    let mut best = Coloring {
        chi: greedy.iter().max().map_or(0, |m| m + 1),
        colors: greedy,
    };
    if best.chi > lower {
        solver.lower = lower;
        solver.best = best.chi;
        solver.search(0);
        if let Some(colors) = solver.found.take() {
            best = Coloring {
                chi: solver.best,
                colors,
            };
        }
    }
    Ok(best)
}

pub fn clique_number_with(g: &Graph, limits: &ExactLimits) -> Result<Clique, GraphError> {
    let n = g.n();
    if n > limits.max_clique_vertices {
        return Err(GraphError::TooLarge {
            n,
            cap: limits.max_clique_vertices,
        });
    }
    let vertices = max_clique(g);
    Ok(Clique {
        omega: vertices.len(),
        vertices,
    })
}

/// DSATUR branch and bound. Colours are tried in increasing order and never
/// exceed one more than the largest colour in use, which removes colour
/// permutation symmetry.
struct Dsatur<'g> {
    g: &'g Graph,
    colors: Vec<Option<usize>>,
    /// `adjacent[v][c]`: coloured neighbours of `v` with colour `c`.
    adjacent: Vec<Vec<usize>>,
    saturation: Vec<usize>,
    lower: usize,
    best: usize,
    found: Option<Vec<usize>>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Self {
            g,
            colors: vec![None; n],
            adjacent: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            lower: 0,
            best: n + 1,
            found: None,
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by(|&a, &b| {
                let key = |v: usize| {
                    let free = self.g.neighbors(v).iter().filter(|&&w| self.colors[w].is_none()).count();
                    (self.saturation[v], free)
                };
                // lower id wins ties, so compare ids reversed
                key(a).cmp(&key(b)).then(b.cmp(&a))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for &w in self.g.neighbors(v) {
            if self.adjacent[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.adjacent[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for &w in self.g.neighbors(v) {
            self.adjacent[w][c] -= 1;
            if self.adjacent[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn greedy(&mut self) -> Vec<usize> {
        let mut order = Vec::new();
        while let Some(v) = self.pick() {
            let c = (0..).find(|&c| self.adjacent[v][c] == 0).expect("a free colour exists");
            self.assign(v, c);
            order.push((v, c));
        }
        let out = self.colors.iter().map(|c| c.expect("all coloured")).collect();
        for (v, c) in order.into_iter().rev() {
            self.unassign(v, c);
        }
        out
    }

    fn search(&mut self, used: usize) {
        if self.best <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            self.found = Some(self.colors.iter().map(|c| c.expect("complete")).collect());
            return;
        };
        for c in 0..=used {
            let next_used = used.max(c + 1);
            if next_used >= self.best || self.best <= self.lower {
                break;
            }
            if self.adjacent[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(next_used);
            self.unassign(v, c);
        }
    }
}

/// Maximum clique by branch and bound with a greedy colouring bound. The
/// lexicographically least maximum clique is returned: once ω is known,
/// members are fixed greedily in ascending order.
fn max_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best = vec![0];
    expand(g, &mut Vec::new(), VertexSet::full(n), &mut best);
    let omega = best.len();

    let mut chosen = Vec::with_capacity(omega);
    let mut candidates = VertexSet::full(n);
    while chosen.len() < omega {
        let v = candidates
            .iter()
            .find(|&v| {
                let rest = after(&candidates.intersection(g.row(v)), v);
                let need = omega - chosen.len() - 1;
                let mut found = vec![0; need.saturating_sub(1)];
                need == 0 || {
                    expand(g, &mut Vec::new(), rest, &mut found);
                    found.len() >= need
                }
            })
            .expect("a maximum clique extends the chosen prefix");
        chosen.push(v);
        candidates = after(&candidates.intersection(g.row(v)), v);
    }
    chosen
}

fn after(set: &VertexSet, v: usize) -> VertexSet {
    let mut s = set.clone();
    for w in 0..=v {
        s.remove(w);
    }
    s
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut candidates: VertexSet, best: &mut Vec<usize>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let order = colour_bound(g, &candidates);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        expand(g, current, candidates.intersection(g.row(v)), best);
        current.pop();
        candidates.remove(v);
    }
}

/// Greedy sequential colouring of `candidates`; returns each vertex with the
/// number of colour classes used up to it, in colouring order.
fn colour_bound(g: &Graph, candidates: &VertexSet) -> Vec<(usize, usize)> {
    let mut left = candidates.clone();
    let mut out = Vec::with_capacity(candidates.len());
    let mut colour = 0;
    while !left.is_empty() {
        colour += 1;
        let mut class = left.clone();
        while let Some(v) = class.first() {
            class.remove(v);
            left.remove(v);
            for w in g.row(v).iter() {
                class.remove(w);
            }
            out.push((v, colour));
        }
    }
    out
}
