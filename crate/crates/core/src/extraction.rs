//! BFS layers, layer extractions, unimodal paths and the resolution of a
//! vertex with many edges into a path leaving a biclique.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{chord_count, path_chord_count, Cycle, PathWitness};
use crate::exact::chromatic_number;
use crate::graph::{Graph, GraphError};
use crate::subgraph::Biclique;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not connected")]
    Disconnected,
    #[error("root {0} has no vertex at distance 1 or more")]
    NoLayer(usize),
    #[error("{x} and {y} are not distinct vertices of one layer at depth >= 1")]
    NotSameLayer { x: usize, y: usize },
    #[error("path ends {0:?} do not match the path")]
    EndsMismatch((usize, usize)),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no path length in the biclique closes a cycle with exactly {k} chords")]
    Unresolved { k: usize },
}

/// Distance classes from a root with one chosen father per non-root vertex.
/// Ids are those of the graph the layers describe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredState {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    pub father: Vec<Option<usize>>,
    pub depth: Vec<Option<usize>>,
}

impl LayeredState {
    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }
}

/// BFS from `root`; each vertex's father is its lowest-id neighbour one layer
/// closer to the root.
pub fn bfs_layers(g: &Graph, root: usize) -> Result<LayeredState, GraphError> {
    g.check_vertex(root)?;
    let n = g.n();
    let mut depth = vec![None; n];
    let mut father = vec![None; n];
    depth[root] = Some(0);
    let mut layers = vec![vec![root]];
    loop {
        let d = layers.len();
        let mut next: Vec<usize> = Vec::new();
        for &v in &layers[d - 1] {
            for &w in g.neighbors(v) {
                if depth[w].is_none() {
                    depth[w] = Some(d);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        for &w in &next {
            father[w] = g.neighbors(w).iter().copied().find(|&f| depth[f] == Some(d - 1));
        }
        layers.push(next);
    }
    Ok(LayeredState {
        root,
        layers,
        father,
        depth,
    })
}

/// Index `i >= 1` maximising `χ(N_i(root))` (lowest index on ties) and that
/// value. For a connected graph `2 · value >= χ(g)`.
pub fn best_layer(g: &Graph, root: usize) -> Result<(usize, usize), ExtractionError> {
    let state = bfs_layers(g, root)?;
    if !g.is_connected() {
        return Err(ExtractionError::Disconnected);
    }
    pick_layer(g, &state)
}

fn pick_layer(g: &Graph, state: &LayeredState) -> Result<(usize, usize), ExtractionError> {
    let mut best: Option<(usize, usize)> = None;
    for i in 1..state.layers.len() {
        let (sub, _) = g.induced_subgraph(&state.layers[i])?;
        let chi = chromatic_number(&sub)?.chi;
        if best.is_none_or(|(_, b)| chi > b) {
            best = Some((i, chi));
        }
    }
    best.ok_or(ExtractionError::NoLayer(state.root))
}

/// One extraction step. All ids refer to the original graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionStep {
    pub state: LayeredState,
    pub layer_index: usize,
    /// The extracted subgraph's vertices (the chosen layer), sorted.
    pub vertices: Vec<usize>,
    pub chi_before: usize,
    pub chi_after: usize,
}

/// The extracted subgraph is the best BFS layer from `root`.
pub fn extract_once(g: &Graph, root: usize) -> Result<ExtractionStep, ExtractionError> {
    if !g.is_connected() {
        return Err(ExtractionError::Disconnected);
    }
    let state = bfs_layers(g, root)?;
    let (layer_index, chi_after) = pick_layer(g, &state)?;
    Ok(ExtractionStep {
        vertices: state.layers[layer_index].clone(),
        layer_index,
        chi_before: chromatic_number(g)?.chi,
        chi_after,
        state,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionChain {
    /// `χ(G_0)`.
    pub chi: usize,
    pub steps: Vec<ExtractionStep>,
    /// Set when the chain stopped early because the current subgraph had no
    /// layer beyond its root.
    pub bottomed_out: bool,
}

impl ExtractionChain {
    /// `V(G_j)` for `j >= 1`; `G_0` is the whole graph.
    pub fn vertices(&self, j: usize) -> Option<&[usize]> {
        self.steps.get(j.checked_sub(1)?).map(|s| s.vertices.as_slice())
    }

    /// Checks the per-step certificates against `g` from scratch: each `G_j`
    /// is a layer of a BFS inside `G_{j-1}`, `2χ(G_j) >= χ(G_{j-1})`,
    /// `2^j χ(G_j) >= χ(G)`, and every vertex of `G_j` has its father in
    /// `V(G_{j-1}) \ V(G_j)`.
    pub fn verify(&self, g: &Graph) -> Result<bool, ExtractionError> {
        let chi = chromatic_number(g)?.chi;
        if chi != self.chi {
            return Ok(false);
        }
        let mut prev: Vec<usize> = (0..g.n()).collect();
        let mut prev_chi = chi;
        for (j, step) in self.steps.iter().enumerate() {
            let (sub, _) = g.induced_subgraph(&step.vertices)?;
            let now = chromatic_number(&sub)?.chi;
            let fathers_ok = step.vertices.iter().all(|&v| {
                step.state.father[v].is_some_and(|f| {
                    g.has_edge(v, f) && prev.binary_search(&f).is_ok() && step.vertices.binary_search(&f).is_err()
                })
            });
            let layer_ok = step.state.layer(step.layer_index) == step.vertices.as_slice()
                && step.vertices.iter().all(|v| prev.binary_search(v).is_ok());
            if now != step.chi_after
                || prev_chi != step.chi_before
                || 2 * now < prev_chi
                || (now << (j + 1)) < chi
                || !fathers_ok
                || !layer_ok
            {
                return Ok(false);
            }
            prev = step.vertices.clone();
            prev_chi = now;
        }
        Ok(true)
    }
}

/// Up to `p` successive extractions. Each step roots its BFS at the lowest
/// vertex of the first component of the current subgraph whose chromatic
/// number equals that of the whole subgraph.
pub fn extraction_sequence(g: &Graph, p: usize) -> Result<ExtractionChain, ExtractionError> {
    let chi = chromatic_number(g)?.chi;
    let mut chain = ExtractionChain {
        chi,
        steps: Vec::new(),
        bottomed_out: false,
    };
    let mut current: Vec<usize> = (0..g.n()).collect();
    let mut current_chi = chi;
    while chain.steps.len() < p && !current.is_empty() {
        let (sub, map) = g.induced_subgraph(&current)?;
        let mut chosen = None;
        for comp in sub.components() {
            let (cg, cmap) = sub.induced_subgraph(&comp)?;
            if chromatic_number(&cg)?.chi == current_chi {
                chosen = Some((cg, cmap));
                break;
            }
        }
        let (cg, cmap) = chosen.expect("some component attains the chromatic number");
        let state = bfs_layers(&cg, 0)?;
        if state.layers.len() < 2 {
            chain.bottomed_out = true;
            break;
        }
        let (layer_index, chi_after) = pick_layer(&cg, &state)?;
        let to_original = |v: usize| map[cmap[v]];
        let lifted = lift_state(&state, g.n(), &to_original);
        let vertices = lifted.layers[layer_index].clone();
        chain.steps.push(ExtractionStep {
            state: lifted,
            layer_index,
            vertices: vertices.clone(),
            chi_before: current_chi,
            chi_after,
        });
        current = vertices;
        current_chi = chi_after;
    }
    Ok(chain)
}

fn lift_state(state: &LayeredState, n: usize, to_original: &dyn Fn(usize) -> usize) -> LayeredState {
    let mut father = vec![None; n];
    let mut depth = vec![None; n];
    let layers: Vec<Vec<usize>> = state
        .layers
        .iter()
        .map(|layer| {
            let mut l: Vec<usize> = layer.iter().map(|&v| to_original(v)).collect();
            l.sort_unstable();
            l
        })
        .collect();
    for (v, d) in state.depth.iter().enumerate() {
        if let Some(d) = d {
            let o = to_original(v);
            depth[o] = Some(*d);
            father[o] = state.father[v].map(to_original);
        }
    }
    LayeredState {
        root: to_original(state.root),
        layers,
        father,
        depth,
    }
}

/// Path between two vertices of the same layer through earlier layers.
///
/// The fathers of `x` and `y` are chased in lockstep until the two chains
/// meet or become adjacent. Chasing alone can leave chords between the two
/// chains at offset depths, so the final path is a lowest-id-first shortest
/// `x`–`y` path inside the chased vertex set with the edge `xy` ignored;
/// a shortest path is induced there, so the result is induced in `g` except
/// possibly for the pair `xy`.
pub fn unimodal_path(
    g: &Graph,
    state: &LayeredState,
    x: usize,
    y: usize,
) -> Result<PathWitness, ExtractionError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let dx = state.depth.get(x).copied().flatten();
    let dy = state.depth.get(y).copied().flatten();
    if x == y || dx != dy || dx.is_none_or(|d| d == 0) {
        return Err(ExtractionError::NotSameLayer { x, y });
    }
    let mut xs = vec![x];
    let mut ys = vec![y];
    loop {
        let fx = state.father[*xs.last().expect("non-empty")];
        let fy = state.father[*ys.last().expect("non-empty")];
        let (Some(fx), Some(fy)) = (fx, fy) else {
            return Err(ExtractionError::Precondition("father chain broken".into()));
        };
        xs.push(fx);
        if fx == fy {
            break;
        }
        ys.push(fy);
        if g.has_edge(fx, fy) {
            break;
        }
    }
    let mut pool: Vec<usize> = xs.iter().chain(&ys).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let path = shortest_in(g, &pool, x, y).ok_or(ExtractionError::Precondition(
        "chased vertices do not connect the ends".into(),
    ))?;
    Ok(PathWitness::new(g, path)?)
}

/// BFS from `x` to `y` within `pool` (sorted), not using the edge `xy`,
/// scanning neighbours in ascending order.
fn shortest_in(g: &Graph, pool: &[usize], x: usize, y: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[x] = x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if prev[w] != usize::MAX || pool.binary_search(&w).is_err() || (v == x && w == y) {
                continue;
            }
            prev[w] = v;
            if w == y {
                let mut path = vec![y];
                let mut cur = y;
                while cur != x {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Whether the vertices of `p` other than its ends and their path
/// neighbours send no edges to `q` (and `p`'s interior avoids `q`).
pub fn check_noninterference(
    g: &Graph,
    p: &PathWitness,
    q: &PathWitness,
    ends_p: (usize, usize),
    ends_q: (usize, usize),
) -> Result<bool, ExtractionError> {
    p.validate(g)?;
    q.validate(g)?;
    for (path, ends) in [(p, ends_p), (q, ends_q)] {
        let actual = (path.first(), path.last());
        if actual != ends && actual != (ends.1, ends.0) {
            return Err(ExtractionError::EndsMismatch(ends));
        }
    }
    let vs = p.vertices();
    let m = vs.len();
    if m > 2 && vs[1..m - 1].iter().any(|&v| q.contains(v)) {
        return Ok(false);
    }
    let core = if m > 4 { &vs[2..m - 2] } else { &[][..] };
    Ok(core
        .iter()
        .all(|&v| q.vertices().iter().all(|&w| v != w && !g.has_edge(v, w))))
}

/// `u` has at most `8√k` neighbours on the path; they are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBoundCertificate {
    pub u: usize,
    pub k: usize,
    pub neighbours_on_path: Vec<usize>,
}

impl EdgeBoundCertificate {
    pub fn holds(&self) -> bool {
        let e = self.neighbours_on_path.len();
        e * e <= 64 * self.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Resolution {
    Certificate(EdgeBoundCertificate),
    Cycle {
        cycle: Cycle,
        /// Vertices of the path inside the biclique.
        q_len: usize,
        /// Chords of the path `u w Q x x⁻`.
        k_double_prime: usize,
        b: usize,
    },
}

/// Either certifies that `u` sends at most `8√k` edges to `path`, or builds
/// a cycle with exactly `k` chords.
///
/// `path` starts at `x` in the biclique `k_ab` and runs through `x⁻`. The
/// cycle is `u w Q x x⁻ … u_b u`: `Q` alternates between the sides from
/// `w` (the lowest neighbour of `u` in the biclique, off the path, not `x`)
/// to `x` on about `2a` vertices with `a = ⌊√k⌋ - 2`; if `u w Q x x⁻` has
/// `k''` chords then `b = k - k''` and `u_b` is the `(b+1)`-th neighbour of
/// `u` along `path` after `x` and `x⁻`. Each extra neighbour of `u` on the
/// segment adds exactly one chord, so the total is `k''+b = k`. Smaller `Q`
/// are tried if the first choice does not close, and every returned cycle
/// is re-counted.
pub fn resolve_biclique_path_overlap(
    g: &Graph,
    k_ab: &Biclique,
    path: &PathWitness,
    u: usize,
    k: usize,
) -> Result<Resolution, ExtractionError> {
    check_overlap_preconditions(g, k_ab, path, u, k)?;
    let vs = path.vertices();
    let on_path: Vec<usize> = vs.iter().copied().filter(|&v| g.has_edge(u, v)).collect();
    let cert = EdgeBoundCertificate {
        u,
        k,
        neighbours_on_path: on_path,
    };
    if cert.holds() {
        return Ok(Resolution::Certificate(cert));
    }

    let x = vs[0];
    let x_minus = vs[1];
    let w = k_ab
        .vertices()
        .filter(|&v| v != x && v != u && !path.contains(v) && g.has_edge(u, v))
        .min()
        .expect("checked above");
    // positions of u's neighbours after x and x⁻, stopping short of y⁻
    let m = vs.len();
    let tail: Vec<usize> = (2..m.saturating_sub(2)).filter(|&i| g.has_edge(u, vs[i])).collect();

    let x_left = k_ab.left.contains(&x);
    let w_left = k_ab.left.contains(&w);
    let same_side = x_left == w_left;
    let a0 = k.isqrt().saturating_sub(2);
    for a in (1..=a0).rev() {
        let size = if same_side { 2 * a + 1 } else { 2 * a };
        let Some(q) = biclique_path(k_ab, w, x, size, |v| v == u || path.contains(v)) else {
            continue;
        };
        let mut head: Vec<usize> = vec![u];
        head.extend(&q);
        head.push(x_minus);
        let k2 = path_chord_count(g, &PathWitness::new(g, head)?)?;
        let Some(b) = k.checked_sub(k2) else { continue };
        let Some(&end) = tail.get(b) else { continue };
        let mut cycle: Vec<usize> = vec![u];
        cycle.extend(&q);
        cycle.extend(&vs[1..=end]);
        let cycle = Cycle::new(g, cycle)?;
        if chord_count(g, &cycle)? == k {
            return Ok(Resolution::Cycle {
                cycle,
                q_len: size,
                k_double_prime: k2,
                b,
            });
        }
    }
    Err(ExtractionError::Unresolved { k })
}

/// Alternating path from `from` to `to` on `size` vertices inside the
/// biclique, filling the interior with the lowest unused ids.
fn biclique_path(
    k_ab: &Biclique,
    from: usize,
    to: usize,
    size: usize,
    banned: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let side_of = |v: usize| k_ab.left.contains(&v);
    let pick = |left: bool, count: usize| -> Option<Vec<usize>> {
        let side = if left { &k_ab.left } else { &k_ab.right };
        let mut pool: Vec<usize> = side
            .iter()
            .copied()
            .filter(|&v| v != from && v != to && !banned(v))
            .collect();
        pool.sort_unstable();
        (pool.len() >= count).then(|| pool[..count].to_vec())
    };
    if size < 2 || (side_of(from) == side_of(to)) != (size % 2 == 1) {
        return None;
    }
    // interior positions 1..size-1 alternate starting on the other side
    let from_side = side_of(from);
    let need_same = (1..size - 1).filter(|i| i % 2 == 0).count();
    let need_other = (1..size - 1).filter(|i| i % 2 == 1).count();
    let mut same = pick(from_side, need_same)?.into_iter();
    let mut other = pick(!from_side, need_other)?.into_iter();
    let mut q = vec![from];
    for i in 1..size - 1 {
        q.push(if i % 2 == 0 { same.next()? } else { other.next()? });
    }
    q.push(to);
    Some(q)
}

fn check_overlap_preconditions(
    g: &Graph,
    k_ab: &Biclique,
    path: &PathWitness,
    u: usize,
    k: usize,
) -> Result<(), ExtractionError> {
    let fail = |msg: String| Err(ExtractionError::Precondition(msg));
    path.validate(g)?;
    g.check_vertex(u)?;
    if !k_ab.is_induced_in(g) {
        return fail("biclique is not an induced complete bipartite graph".into());
    }
    let ell = k_ab.left.len().min(k_ab.right.len());
    let need = k.isqrt() + usize::from(k.isqrt().pow(2) < k) + 2;
    if ell < need {
        return fail(format!("sides have {ell} vertices, need at least {need}"));
    }
    let vs = path.vertices();
    let m = vs.len();
    if m < 2 || !k_ab.contains(vs[0]) {
        return fail("path must start in the biclique and have at least two vertices".into());
    }
    if path.contains(u) {
        return fail("u lies on the path".into());
    }
    let own = path_chord_count(g, path)?;
    if own > usize::from(g.has_edge(vs[0], vs[m - 1]) && m > 2) {
        return fail("path is not induced apart from its end pair".into());
    }
    // biclique vertices see only x, x⁻, y⁻, y on the path
    let inner = if m > 4 { &vs[2..m - 2] } else { &[][..] };
    if k_ab
        .vertices()
        .any(|a| inner.iter().any(|&v| v == a || g.has_edge(a, v)))
    {
        return fail("biclique sends edges into the interior of the path".into());
    }
    let x = vs[0];
    if !k_ab
        .vertices()
        .any(|v| v != x && v != u && !path.contains(v) && g.has_edge(u, v))
    {
        return fail("u has no neighbour in the biclique off the path".into());
    }
    Ok(())
}

/// A synthetic instance for the resolver.
#[derive(Clone, Debug)]
pub struct OverlapInstance {
    pub graph: Graph,
    pub biclique: Biclique,
    pub path: PathWitness,
    pub u: usize,
}

/// Biclique `K_{ell,ell}` on `0..2·ell` with `x = 0`, a path
/// `x, x⁻, …` of `path_len` further vertices leaving it, and a vertex `u`
/// joined to `u_degree` random path vertices beyond `x⁻` (never `y` or
/// `y⁻`), to a random non-empty set of biclique vertices other than `x`,
/// and possibly to `x` and `x⁻`. `x⁻` gets a few random biclique edges.
pub fn synthetic_overlap_instance<R: Rng>(
    rng: &mut R,
    ell: usize,
    path_len: usize,
    u_degree: usize,
) -> OverlapInstance {
    assert!(ell >= 2 && path_len >= 4 && u_degree + 3 <= path_len);
    let mut edges = Vec::new();
    for a in 0..ell {
        for b in ell..2 * ell {
            edges.push((a, b));
        }
    }
    let first = 2 * ell;
    let mut vs = vec![0];
    vs.extend(first..first + path_len);
    for w in vs.windows(2) {
        edges.push((w[0], w[1]));
    }
    let x_minus = first;
    for v in 1..2 * ell {
        if rng.gen_bool(0.2) {
            edges.push((x_minus, v));
        }
    }
    let u = first + path_len;
    let mut k_nbrs: Vec<usize> = (1..2 * ell).filter(|_| rng.gen_bool(0.15)).collect();
    if k_nbrs.is_empty() {
        k_nbrs.push(rng.gen_range(1..2 * ell));
    }
    edges.extend(k_nbrs.iter().map(|&v| (u, v)));
    if rng.gen_bool(0.5) {
        edges.push((u, 0));
    }
    if rng.gen_bool(0.5) {
        edges.push((u, x_minus));
    }
    // candidates: path vertices after x⁻ and before y⁻
    let mut candidates: Vec<usize> = (first + 1..first + path_len - 2).collect();
    candidates.shuffle(rng);
    edges.extend(candidates[..u_degree].iter().map(|&v| (u, v)));

    let graph = Graph::build(u + 1, edges).expect("ids in range");
    let path = PathWitness::new(&graph, vs).expect("path edges present");
    OverlapInstance {
        graph,
        biclique: Biclique {
            left: (0..ell).collect(),
            right: (ell..2 * ell).collect(),
        },
        path,
        u,
    }
}
