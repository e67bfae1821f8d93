//! Brute-force reference implementations shared by the integration tests.
//! None of these call into the algorithms they check.

#![allow(dead_code)]

use chordcycle::Graph;

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::build(n, pairs.zip(mask).filter(|(_, &on)| on).map(|(e, _)| e)).unwrap()
}

/// Non-consecutive adjacent pairs of a cycle, counted one pair at a time.
pub fn cycle_chords(g: &Graph, vs: &[usize]) -> usize {
    let m = vs.len();
    let mut count = 0;
    for i in 0..m {
        for j in (i + 2)..m {
            if !(i == 0 && j == m - 1) && g.has_edge(vs[i], vs[j]) {
                count += 1;
            }
        }
    }
    count
}

pub fn path_chords(g: &Graph, vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 2)..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                out.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
            }
        }
    }
    out
}

/// Every cycle in canonical form (minimum vertex first, second vertex
/// below the last), sorted lexicographically: all subsets, all orders.
pub fn all_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for set in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
        if members.len() < 3 || members.len() > max_len {
            continue;
        }
        let start = members[0];
        let mut rest = members[1..].to_vec();
        permutations(&mut rest, 0, &mut |order| {
            if order[0] > order[order.len() - 1] {
                return;
            }
            let mut vs = vec![start];
            vs.extend_from_slice(order);
            let closed = vs.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(vs[0], vs[vs.len() - 1]);
            if closed {
                out.push(vs);
            }
        });
    }
    out.sort();
    out
}

fn permutations(items: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permutations(items, from + 1, visit);
        items.swap(from, i);
    }
}

/// Smallest `c` admitting a proper colouring, by plain backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&c| colorable(g, c, &mut vec![usize::MAX; n], 0))
        .expect("n colours always suffice")
}

fn colorable(g: &Graph, c: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for col in 0..c {
        if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == col)) {
            colors[v] = col;
            if colorable(g, c, colors, v + 1) {
                return true;
            }
        }
    }
    false
}

/// Largest clique over all vertex subsets.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..(1 << n))
        .filter(|&set| {
            let vs: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.has_edge(u, w)))
        })
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Distances from `root` by repeated relaxation.
pub fn distances(g: &Graph, root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[root] = Some(0);
    let mut changed = true;
    while changed {
        changed = false;
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if let Some(d) = dist[a] {
                    if dist[b].is_none_or(|e| e > d + 1) {
                        dist[b] = Some(d + 1);
                        changed = true;
                    }
                }
            }
        }
    }
    dist
}

/// Whether some `count` integers, each at least `min_base`, have squares
/// summing to `target`.
pub fn squares_reachable(target: u64, count: usize, min_base: u64) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for _ in 0..count {
        let mut next = vec![false; t + 1];
        for s in 0..=t {
            if !reach[s] {
                continue;
            }
            let mut b = min_base as usize;
            while s + b * b <= t {
                next[s + b * b] = true;
                b += 1;
            }
        }
        reach = next;
    }
    reach[t]
}
