//! Biclique search between two vertex sides and induced-copy checks.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// Two disjoint vertex sides meant to span a complete bipartite subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Biclique {
    pub fn contains(&self, v: usize) -> bool {
        self.left.contains(&v) || self.right.contains(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.left.iter().chain(&self.right).copied()
    }

    /// Whether the sides are disjoint, fully joined across and independent.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let in_range = self.vertices().all(|v| v < g.n());
        let disjoint = self.left.iter().all(|v| !self.right.contains(v));
        let across = self
            .left
            .iter()
            .all(|&a| self.right.iter().all(|&b| g.has_edge(a, b)));
        let independent = |side: &[usize]| side.iter().all(|&a| side.iter().all(|&b| !g.has_edge(a, b)));
        in_range && disjoint && across && independent(&self.left) && independent(&self.right)
    }
}

type SidePair = (Vec<usize>, Vec<usize>);

/// Finds `ℓ` vertices of `side_a` and `ℓ` of `side_b` that are fully joined,
/// or `None`. Exhaustive over `ℓ`-subsets of `side_a` (ascending ids), taking
/// the lowest `ℓ` common neighbours in `side_b`.
pub fn find_biclique(
    g: &Graph,
    side_a: &[usize],
    side_b: &[usize],
    ell: usize,
) -> Result<Option<SidePair>, GraphError> {
    let mut a: Vec<usize> = side_a.to_vec();
    let mut b: Vec<usize> = side_b.to_vec();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    for &v in a.iter().chain(&b) {
        g.check_vertex(v)?;
    }
    if let Some(&v) = a.iter().find(|v| b.binary_search(v).is_ok()) {
        return Err(GraphError::OverlappingSides(v));
    }
    let available = a.len().min(b.len());
    if ell > available {
        return Err(GraphError::BicliqueTooLarge { ell, available });
    }
    // candidates on A need at least ℓ neighbours in B
    let a: Vec<usize> = a
        .into_iter()
        .filter(|&v| b.iter().filter(|&&w| g.has_edge(v, w)).count() >= ell)
        .collect();
    let mut chosen = Vec::with_capacity(ell);
    Ok(grow(g, &a, 0, &b, ell, &mut chosen))
}

fn grow(
    g: &Graph,
    a: &[usize],
    from: usize,
    common: &[usize],
    ell: usize,
    chosen: &mut Vec<usize>,
) -> Option<SidePair> {
    if common.len() < ell {
        return None;
    }
    if chosen.len() == ell {
        return Some((chosen.clone(), common[..ell].to_vec()));
    }
    let need = ell - chosen.len();
    for i in from..a.len() {
        if a.len() - i < need {
            break;
        }
        let v = a[i];
        let next: Vec<usize> = common.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        chosen.push(v);
        if let Some(found) = grow(g, a, i + 1, &next, ell, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Whether `mapping` (pattern vertex `i` to host vertex `mapping[i]`) is an
/// injective map preserving both edges and non-edges.
pub fn is_induced_copy(g: &Graph, pattern: &Graph, mapping: &[usize]) -> bool {
    if mapping.len() != pattern.n() || mapping.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in mapping {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..pattern.n()).all(|i| {
        ((i + 1)..pattern.n()).all(|j| pattern.has_edge(i, j) == g.has_edge(mapping[i], mapping[j]))
    })
}
