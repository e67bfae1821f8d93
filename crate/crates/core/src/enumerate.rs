//! Depth-first enumeration of cycles in canonical form.
//!
//! Every cycle is grown as a path from its minimum vertex `s` through larger
//! ids only, and emitted when it closes with `v1 < v_last`. Preorder with
//! ascending neighbours yields the canonical sequences in lexicographic order.
//!
//! The walker also tracks `e(G[V(P)])` of the current path, which gives the
//! chord count of each closure for free and lets the exact-chord search prune:
//! the path chords `e(G[V(P)]) - (|P| - 1)` never decrease under extension,
//! and any strictly longer closure has at least that many chords.

use crate::cycle::Cycle;
use crate::graph::Graph;

/// Iterator over all cycles of length `<= max_len`, each once, canonical,
/// in lexicographic order.
pub struct Cycles<'g> {
    g: &'g Graph,
    max_len: usize,
    /// Only emit closures with exactly this many chords, and prune paths
    /// that already carry more.
    target: Option<usize>,
    start: usize,
    path: Vec<usize>,
    cursor: Vec<usize>,
    induced: Vec<usize>,
    on_path: Vec<bool>,
}

pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Cycles<'_> {
    Cycles::new(g, max_len, None)
}

impl<'g> Cycles<'g> {
    pub(crate) fn new(g: &'g Graph, max_len: usize, target: Option<usize>) -> Self {
        Self {
            g,
            max_len: max_len.min(g.n()),
            target,
            start: 0,
            path: Vec::new(),
            cursor: Vec::new(),
            induced: Vec::new(),
            on_path: vec![false; g.n()],
        }
    }

    /// Next cycle together with its chord count.
    pub fn next_counted(&mut self) -> Option<(Cycle, usize)> {
        if self.max_len < 3 {
            return None;
        }
        loop {
            if self.path.is_empty() {
                if self.start >= self.g.n() {
                    return None;
                }
                let s = self.start;
                self.start += 1;
                self.push(s, 0);
                continue;
            }
            let top = self.path.len() - 1;
            let v = self.path[top];
            let s = self.path[0];
            let nbrs = self.g.neighbors(v);
            let mut i = self.cursor[top];
            while i < nbrs.len() && (nbrs[i] <= s || self.on_path[nbrs[i]]) {
                i += 1;
            }
            if i >= nbrs.len() {
                self.pop();
                continue;
            }
            self.cursor[top] = i + 1;
            let w = nbrs[i];
            let added = self.g.neighbors(w).iter().filter(|&&u| self.on_path[u]).count();
            let induced = self.induced[top] + added;
            self.push(w, induced);

            let len = self.path.len();
            let path_chords = induced + 1 - len;
            let extendable = len < self.max_len && self.target.is_none_or(|k| path_chords <= k);
            if !extendable {
                *self.cursor.last_mut().expect("just pushed") = usize::MAX;
            }
            if len >= 3 && self.g.has_edge(w, s) && self.path[1] < w {
                let chords = induced - len;
                if self.target.is_none_or(|k| k == chords) {
                    return Some((Cycle::from_trusted(self.path.clone()), chords));
                }
            }
        }
    }

    fn push(&mut self, v: usize, induced: usize) {
        self.path.push(v);
        self.cursor.push(0);
        self.induced.push(induced);
        self.on_path[v] = true;
    }

    fn pop(&mut self) {
        if let Some(v) = self.path.pop() {
            self.on_path[v] = false;
            self.cursor.pop();
            self.induced.pop();
        }
    }
}

impl Iterator for Cycles<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        self.next_counted().map(|(c, _)| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::chord_count;

    #[test]
    fn c5_has_one_cycle() {
        let g = Graph::cycle(5);
        let all: Vec<_> = enumerate_cycles(&g, 5).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(enumerate_cycles(&g, 4).count(), 0);
    }

    #[test]
    fn k4_has_seven_cycles_in_order() {
        let g = Graph::complete(4);
        let all: Vec<Vec<usize>> = enumerate_cycles(&g, 4).map(|c| c.vertices().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 1, 2, 3],
                vec![0, 1, 3],
                vec![0, 1, 3, 2],
                vec![0, 2, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
            ]
        );
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn trees_have_no_cycles() {
        let g = Graph::build(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(enumerate_cycles(&g, 6).count(), 0);
    }

    #[test]
    fn counted_chords_match_identity() {
        let g = Graph::complete_bipartite(3, 3);
        let mut it = enumerate_cycles(&g, 6);
        let mut seen = 0;
        while let Some((c, k)) = it.next_counted() {
            assert!(c.is_canonical());
            assert_eq!(chord_count(&g, &c).unwrap(), k);
            seen += 1;
        }
        // 9 four-cycles and 6 Hamilton cycles
        assert_eq!(seen, 15);
    }

    #[test]
    fn target_filter_keeps_only_matching_cycles() {
        let g = Graph::complete(5);
        let mut it = Cycles::new(&g, 5, Some(2));
        while let Some((c, k)) = it.next_counted() {
            assert_eq!(k, 2);
            assert_eq!(c.len(), 4);
        }
    }
}
