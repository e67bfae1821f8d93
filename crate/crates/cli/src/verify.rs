//! Re-checks witnesses without going through the library's own counting.
//!
//! Chords are counted pair by pair over the witness's vertices, rather than
//! by the induced-edge identity the library uses.

use chordcycle::Graph;

/// Distinct vertices with every consecutive pair adjacent (cyclically when
/// `closed`).
pub fn is_walk(g: &Graph, vs: &[usize], closed: bool) -> bool {
    let min_len = if closed { 3 } else { 1 };
    if vs.len() < min_len || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() {
        return false;
    }
    let steps = vs.windows(2).all(|w| g.has_edge(w[0], w[1]));
    steps && (!closed || g.has_edge(vs[0], vs[vs.len() - 1]))
}

/// Adjacent pairs of the witness that are not consecutive on it.
pub fn chords(g: &Graph, vs: &[usize], closed: bool) -> usize {
    let m = vs.len();
    let mut count = 0;
    for i in 0..m {
        for j in (i + 1)..m {
            let consecutive = j == i + 1 || (closed && i == 0 && j == m - 1);
            if !consecutive && g.has_edge(vs[i], vs[j]) {
                count += 1;
            }
        }
    }
    count
}

pub fn has_triangle(g: &Graph) -> bool {
    (0..g.n()).any(|u| {
        g.neighbors(u).iter().any(|&v| {
            v > u && g.neighbors(v).iter().any(|&w| w > v && g.has_edge(u, w))
        })
    })
}

/// Proper colouring check over every edge.
pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && (0..g.n()).all(|u| g.neighbors(u).iter().all(|&v| colors[u] != colors[v]))
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_counts() {
        let k4 = Graph::complete(4);
        assert_eq!(chords(&k4, &[0, 1, 2, 3], true), 2);
        assert_eq!(chords(&k4, &[0, 1, 2, 3], false), 3);
        assert!(is_walk(&k4, &[0, 1, 2], true));
        assert!(!is_walk(&k4, &[0, 1, 1], true));
        assert!(!is_walk(&Graph::path(3), &[0, 1, 2], true));
    }

    #[test]
    fn triangles() {
        assert!(has_triangle(&Graph::complete(3)));
        assert!(!has_triangle(&Graph::cycle(5)));
    }
}
