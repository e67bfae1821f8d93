//! Explicit constructions paired with closed-form chord counts.
//!
//! Every constructor measures the chord count of its distinguished cycle or
//! path against the host graph and refuses to return a blueprint whose
//! prediction disagrees.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordsearch::WheelWitness;
use crate::cycle::{chord_count, path_chord_count, Cycle, PathWitness};
use crate::graph::{Graph, GraphError};

/// Largest Mycielski index built; `M_12` already has 3071 vertices.
pub const MYCIELSKI_MAX: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("connector model breaks the complete/anti-complete rule: {0}")]
    Discipline(String),
    #[error("no table entry for sigma = {sigma}, requirement = {requirement}")]
    NotInTable { sigma: usize, requirement: usize },
    #[error("predicted {predicted} chords but measured {measured}")]
    Mismatch { predicted: usize, measured: usize },
}

fn invalid(msg: impl Into<String>) -> GadgetError {
    GadgetError::Invalid(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    /// Rim of a wheel: no chords.
    Wheel,
    /// Alternating path with `2a + 1` edges in a biclique: `a²`.
    BicliquePath,
    /// Hubs complete to every biclique: `Σ(a² + 2r·a + 2r − 2) + x`.
    CompleteCase,
    /// Hubs complete to one side of every biclique: `Σ(a² + (r−1)a + r − 2) + x`.
    OneSideCase,
    /// Bicliques joined by connectors: `Σa² + Σt·a + C_0`.
    MultiBiclique,
    /// Triangle blocks `x f e` with a pendant `e y`: one chord per block.
    TriangleBlocks,
    /// Triangle blocks with the extra edge `f y`: two chords per block.
    DoubleChordBlocks,
    /// Five-vertex host with a path of prescribed chord count.
    PathTable,
    /// Path of a fan: no chords.
    Fan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Distinguished {
    Cycle(Cycle),
    Path(PathWitness),
}

impl Distinguished {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Distinguished::Cycle(c) => c.vertices(),
            Distinguished::Path(p) => p.vertices(),
        }
    }

    pub fn chord_count(&self, g: &Graph) -> Result<usize, GraphError> {
        match self {
            Distinguished::Cycle(c) => chord_count(g, c),
            Distinguished::Path(p) => path_chord_count(g, p),
        }
    }
}

/// A host graph, a distinguished cycle or path, and its predicted chord count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetBlueprint {
    pub graph: Graph,
    pub distinguished: Distinguished,
    pub formula_id: FormulaId,
    pub parameters: BTreeMap<String, i64>,
    pub predicted_chords: usize,
    pub measured_chords: usize,
}

impl GadgetBlueprint {
    fn verified(
        graph: Graph,
        distinguished: Distinguished,
        formula_id: FormulaId,
        parameters: BTreeMap<String, i64>,
        predicted_chords: usize,
    ) -> Result<Self, GadgetError> {
        let measured_chords = distinguished.chord_count(&graph)?;
        if measured_chords != predicted_chords {
            return Err(GadgetError::Mismatch {
                predicted: predicted_chords,
                measured: measured_chords,
            });
        }
        Ok(GadgetBlueprint {
            graph,
            distinguished,
            formula_id,
            parameters,
            predicted_chords,
            measured_chords,
        })
    }

    /// Re-measures the distinguished object against the stored prediction.
    pub fn verify(&self) -> Result<(), GadgetError> {
        let measured = self.distinguished.chord_count(&self.graph)?;
        if measured != self.predicted_chords {
            return Err(GadgetError::Mismatch {
                predicted: self.predicted_chords,
                measured,
            });
        }
        Ok(())
    }

    pub fn parameter(&self, name: &str) -> Option<i64> {
        self.parameters.get(name).copied()
    }

    /// For wheel blueprints, the hub and rim as a wheel witness.
    pub fn wheel_witness(&self) -> Option<WheelWitness> {
        match (&self.formula_id, &self.distinguished) {
            (FormulaId::Wheel, Distinguished::Cycle(rim)) => Some(WheelWitness {
                hub: self.parameter("hub")? as usize,
                rim: rim.clone(),
                spokes: self.parameter("spokes")? as usize,
            }),
            _ => None,
        }
    }
}

struct Params(BTreeMap<String, i64>);

impl Params {
    fn new() -> Self {
        Params(BTreeMap::new())
    }

    fn set(mut self, name: &str, value: usize) -> Self {
        self.0.insert(name.to_string(), value as i64);
        self
    }

    fn seq(mut self, prefix: &str, values: &[usize]) -> Self {
        for (i, &v) in values.iter().enumerate() {
            self.0.insert(format!("{prefix}_{}", i + 1), v as i64);
        }
        self
    }
}

/// Hub `rim_len` joined to the first `spokes` vertices of the cycle
/// `0 .. rim_len`. The distinguished cycle is the rim itself.
pub fn gen_wheel(rim_len: usize, spokes: usize) -> Result<GadgetBlueprint, GadgetError> {
    if spokes < 3 || spokes > rim_len {
        return Err(invalid(format!("need 3 <= spokes <= rim_len, got {spokes} and {rim_len}")));
    }
    let hub = rim_len;
    let rim_edges = (0..rim_len).map(|i| (i, (i + 1) % rim_len));
    let graph = Graph::build(rim_len + 1, rim_edges.chain((0..spokes).map(|i| (hub, i))))?;
    let rim = Cycle::new(&graph, (0..rim_len).collect())?;
    let params = Params::new()
        .set("rim_len", rim_len)
        .set("spokes", spokes)
        .set("hub", hub);
    GadgetBlueprint::verified(graph, Distinguished::Cycle(rim), FormulaId::Wheel, params.0, 0)
}

/// Alternating path `U1[0] U2[0] U1[1] U2[1] .. U1[a] U2[a]` in `K_{ℓ,ℓ}`.
pub fn biclique_path(ell: usize, a: usize) -> Result<GadgetBlueprint, GadgetError> {
    if a + 1 > ell {
        return Err(invalid(format!("a + 1 = {} exceeds ell = {ell}", a + 1)));
    }
    let graph = Graph::complete_bipartite(ell, ell);
    let vs = (0..=a).flat_map(|i| [i, ell + i]).collect();
    let path = PathWitness::new(&graph, vs)?;
    let params = Params::new().set("ell", ell).set("a", a);
    GadgetBlueprint::verified(graph, Distinguished::Path(path), FormulaId::BicliquePath, params.0, a * a)
}

fn hub_edge_set(r: usize, hub_edges: &[(usize, usize)]) -> Result<BTreeSet<(usize, usize)>, GadgetError> {
    let mut set = BTreeSet::new();
    for &(u, v) in hub_edges {
        if u >= r || v >= r || u == v {
            return Err(invalid(format!("hub edge ({u}, {v}) is not a pair of distinct hubs below {r}")));
        }
        set.insert((u.min(v), u.max(v)));
    }
    Ok(set)
}

fn check_sequence(r: usize, ell: usize, a: &[usize]) -> Result<(), GadgetError> {
    if a.len() != r {
        return Err(invalid(format!("expected {r} values of a, got {}", a.len())));
    }
    if let Some(&big) = a.iter().find(|&&ai| ai + 1 > ell) {
        return Err(invalid(format!("a = {big} needs a + 1 <= ell = {ell}")));
    }
    Ok(())
}

/// `r` disjoint copies of `K_{ℓ,ℓ}` (copy `i` on `2ℓi .. 2ℓ(i+1)`, first half
/// is side 1) followed by `r` hubs complete to every copy. The cycle is
/// `x_1 Q_1 x_2 Q_2 .. x_r Q_r`, where `Q_i` alternates through `2a_i + 2`
/// vertices of copy `i` starting on side 1.
pub fn assemble_complete_case(
    r: usize,
    ell: usize,
    a: &[usize],
    hub_edges: &[(usize, usize)],
) -> Result<GadgetBlueprint, GadgetError> {
    if r < 2 {
        return Err(invalid("need at least two bicliques"));
    }
    check_sequence(r, ell, a)?;
    let hubs = hub_edge_set(r, hub_edges)?;
    let hub0 = 2 * ell * r;
    let mut edges = biclique_copies(r, ell);
    for h in 0..r {
        edges.extend((0..2 * ell * r).map(|v| (hub0 + h, v)));
    }
    edges.extend(hubs.iter().map(|&(u, v)| (hub0 + u, hub0 + v)));
    let graph = Graph::build(hub0 + r, edges)?;

    let mut vs = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        vs.push(hub0 + i);
        let base = 2 * ell * i;
        vs.extend((0..=ai).flat_map(|j| [base + j, base + ell + j]));
    }
    let cycle = Cycle::new(&graph, vs)?;
    let x = hubs.len();
    let predicted = a.iter().map(|&ai| ai * ai + 2 * r * ai + 2 * r - 2).sum::<usize>() + x;
    let params = Params::new().set("r", r).set("ell", ell).set("x", x).seq("a", a);
    GadgetBlueprint::verified(graph, Distinguished::Cycle(cycle), FormulaId::CompleteCase, params.0, predicted)
}

/// Same layout as [`assemble_complete_case`], but hubs are complete to side 1
/// of each copy and anti-complete to side 2, and `Q_i` has `2a_i + 1`
/// vertices with both ends on side 1.
pub fn assemble_oneside_case(
    r: usize,
    ell: usize,
    a: &[usize],
    hub_edges: &[(usize, usize)],
) -> Result<GadgetBlueprint, GadgetError> {
    if r < 2 {
        return Err(invalid("need at least two bicliques"));
    }
    check_sequence(r, ell, a)?;
    let hubs = hub_edge_set(r, hub_edges)?;
    let hub0 = 2 * ell * r;
    let mut edges = biclique_copies(r, ell);
    for h in 0..r {
        for i in 0..r {
            edges.extend((0..ell).map(|j| (hub0 + h, 2 * ell * i + j)));
        }
    }
    edges.extend(hubs.iter().map(|&(u, v)| (hub0 + u, hub0 + v)));
    let graph = Graph::build(hub0 + r, edges)?;

    let mut vs = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        vs.push(hub0 + i);
        let base = 2 * ell * i;
        vs.push(base);
        vs.extend((1..=ai).flat_map(|j| [base + ell + j - 1, base + j]));
    }
    let cycle = Cycle::new(&graph, vs)?;
    let x = hubs.len();
    let predicted = a.iter().map(|&ai| ai * ai + (r - 1) * ai + r - 2).sum::<usize>() + x;
    let params = Params::new().set("r", r).set("ell", ell).set("x", x).seq("a", a);
    GadgetBlueprint::verified(graph, Distinguished::Cycle(cycle), FormulaId::OneSideCase, params.0, predicted)
}

fn biclique_copies(r: usize, ell: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(r * ell * ell);
    for i in 0..r {
        let base = 2 * ell * i;
        for p in 0..ell {
            edges.extend((0..ell).map(|q| (base + p, base + ell + q)));
        }
    }
    edges
}

/// Adjacency between two-vertex connectors and a chain of `r` bicliques.
///
/// Connector `s` joins biclique `s` to biclique `s + 1` (cyclically) and has
/// an exit vertex `2s`, adjacent to `U_{s,2}[0]`, and an entry vertex
/// `2s + 1`, adjacent to `U_{s+1,1}[0]`. Index 0 of each side is the fixed
/// attachment; indices `1..ℓ` form the retained part, to which every
/// connector vertex must be complete or anti-complete.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectorModel {
    pub r: usize,
    pub ell: usize,
    /// `(connector vertex, biclique, side, index)` edges beyond the attachments.
    pub links: BTreeSet<(usize, usize, usize, usize)>,
    /// Edges between connector vertices beyond each connector's own edge.
    pub joins: BTreeSet<(usize, usize)>,
}

impl ConnectorModel {
    pub fn new(r: usize, ell: usize) -> Self {
        ConnectorModel {
            r,
            ell,
            ..Default::default()
        }
    }

    /// Makes `vertex` complete to the retained part of side `side` of
    /// biclique `biclique`.
    pub fn complete_to(mut self, vertex: usize, biclique: usize, side: usize) -> Self {
        self.links
            .extend((1..self.ell).map(|j| (vertex, biclique, side, j)));
        self
    }

    pub fn link(mut self, vertex: usize, biclique: usize, side: usize, index: usize) -> Self {
        self.links.insert((vertex, biclique, side, index));
        self
    }

    pub fn join(mut self, u: usize, v: usize) -> Self {
        self.joins.insert((u.min(v), u.max(v)));
        self
    }

    pub fn connector_vertices(&self) -> usize {
        2 * self.r
    }

    /// Checks ranges and the complete/anti-complete rule.
    pub fn validate(&self) -> Result<(), GadgetError> {
        if self.r == 0 || self.ell == 0 {
            return Err(invalid("connector model needs r >= 1 and ell >= 1"));
        }
        let cv = self.connector_vertices();
        for &(v, s, t, j) in &self.links {
            if v >= cv || s >= self.r || t > 1 || j >= self.ell {
                return Err(invalid(format!("link ({v}, {s}, {t}, {j}) out of range")));
            }
        }
        for &(u, v) in &self.joins {
            if u >= cv || v >= cv || u == v {
                return Err(invalid(format!("join ({u}, {v}) is not a pair of connector vertices")));
            }
        }
        for v in 0..cv {
            for s in 0..self.r {
                for t in 0..2 {
                    let hit = (1..self.ell)
                        .filter(|&j| self.links.contains(&(v, s, t, j)))
                        .count();
                    if hit != 0 && hit != self.ell - 1 {
                        return Err(GadgetError::Discipline(format!(
                            "connector vertex {v} sees {hit} of {} retained vertices of side {} of biclique {s}",
                            self.ell - 1,
                            t + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `t_s`: connector-vertex/side pairs of biclique `s` that are complete.
    pub fn t(&self, s: usize) -> usize {
        if self.ell < 2 {
            return 0;
        }
        (0..self.connector_vertices())
            .flat_map(|v| (0..2).map(move |t| (v, t)))
            .filter(|&(v, t)| self.links.contains(&(v, s, t, 1)))
            .count()
    }
}

/// Bicliques `K_s` on `2ℓs .. 2ℓ(s+1)` joined in a ring by the connectors of
/// `model`. `Q_s` runs `U1[0], U2[1], U1[1], .., U2[a], U1[a], U2[0]`, a
/// `(2a_s + 1)`-edge path with fixed ends. The constant `C_0` is the chord
/// count of the same model at `a = 0`.
pub fn assemble_multi_biclique(
    a: &[usize],
    model: &ConnectorModel,
) -> Result<GadgetBlueprint, GadgetError> {
    model.validate()?;
    check_sequence(model.r, model.ell, a)?;
    let c0 = chord_count_of(&vec![0; model.r], model)?;
    let (graph, cycle) = build_multi(a, model)?;
    let ts: Vec<usize> = (0..model.r).map(|s| model.t(s)).collect();
    let predicted = a
        .iter()
        .zip(&ts)
        .map(|(&ai, &t)| ai * ai + t * ai)
        .sum::<usize>()
        + c0;
    let params = Params::new()
        .set("r", model.r)
        .set("ell", model.ell)
        .set("c0", c0)
        .seq("a", a)
        .seq("t", &ts);
    GadgetBlueprint::verified(graph, Distinguished::Cycle(cycle), FormulaId::MultiBiclique, params.0, predicted)
}

fn chord_count_of(a: &[usize], model: &ConnectorModel) -> Result<usize, GadgetError> {
    let (graph, cycle) = build_multi(a, model)?;
    Ok(chord_count(&graph, &cycle)?)
}

fn build_multi(a: &[usize], model: &ConnectorModel) -> Result<(Graph, Cycle), GadgetError> {
    let (r, ell) = (model.r, model.ell);
    let side = |s: usize, t: usize, j: usize| 2 * ell * s + t * ell + j;
    let conn = |v: usize| 2 * ell * r + v;
    let mut edges = biclique_copies(r, ell);
    for s in 0..r {
        edges.push((conn(2 * s), conn(2 * s + 1)));
        edges.push((conn(2 * s), side(s, 1, 0)));
        edges.push((conn(2 * s + 1), side((s + 1) % r, 0, 0)));
    }
    edges.extend(model.links.iter().map(|&(v, s, t, j)| (conn(v), side(s, t, j))));
    edges.extend(model.joins.iter().map(|&(u, v)| (conn(u), conn(v))));
    let graph = Graph::build(2 * ell * r + 2 * r, edges)?;

    let mut vs = Vec::new();
    for (s, &ai) in a.iter().enumerate() {
        vs.push(side(s, 0, 0));
        vs.extend((1..=ai).flat_map(|j| [side(s, 1, j), side(s, 0, j)]));
        vs.push(side(s, 1, 0));
        vs.push(conn(2 * s));
        vs.push(conn(2 * s + 1));
    }
    let cycle = Cycle::new(&graph, vs)?;
    Ok((graph, cycle))
}

/// Blocks `x_i f_i e_i y_i` (ids `4i .. 4i + 4`) with edges `xf, fe, ey, xe`,
/// and the extra edge `fy` when `double`. Block `i` is joined to block
/// `i + 1` by a chordless path with `path_lens[i]` interior vertices.
fn blocks(
    path_lens: &[usize],
    double: bool,
    formula_id: FormulaId,
) -> Result<GadgetBlueprint, GadgetError> {
    let k = path_lens.len();
    if k == 0 {
        return Err(invalid("need at least one block"));
    }
    if k == 1 && path_lens[0] == 0 && double {
        // x f e y closed by y x would make x y a cycle edge of a K4
        return Err(invalid("a single doubled block needs at least one connector vertex"));
    }
    let mut edges = Vec::new();
    let mut vs = Vec::new();
    let mut next = 4 * k;
    for (i, &len) in path_lens.iter().enumerate() {
        let (x, f, e, y) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([(x, f), (f, e), (e, y), (x, e)]);
        if double {
            edges.push((f, y));
        }
        vs.extend([x, f, e, y]);
        let mut prev = y;
        for _ in 0..len {
            edges.push((prev, next));
            vs.push(next);
            prev = next;
            next += 1;
        }
        edges.push((prev, 4 * ((i + 1) % k)));
    }
    let graph = Graph::build(next, edges)?;
    let cycle = Cycle::new(&graph, vs)?;
    let per_block = if double { 2 } else { 1 };
    let params = Params::new().set("blocks", k).seq("len", path_lens);
    GadgetBlueprint::verified(graph, Distinguished::Cycle(cycle), formula_id, params.0, per_block * k)
}

/// `k` triangle blocks in a ring; the cycle's chords are exactly the `x_i e_i`.
pub fn case1_gadget(k: usize, path_lens: &[usize]) -> Result<GadgetBlueprint, GadgetError> {
    if path_lens.len() != k {
        return Err(invalid(format!("expected {k} connector lengths, got {}", path_lens.len())));
    }
    blocks(path_lens, false, FormulaId::TriangleBlocks)
}

/// `s` blocks with both `x_i e_i` and `f_i y_i` as chords, `2s` in total.
pub fn case2_gadget(s: usize, path_lens: &[usize]) -> Result<GadgetBlueprint, GadgetError> {
    if path_lens.len() != s {
        return Err(invalid(format!("expected {s} connector lengths, got {}", path_lens.len())));
    }
    blocks(path_lens, true, FormulaId::DoubleChordBlocks)
}

/// Vertex ids of the five-vertex host used by [`chord_table_path`].
pub const TABLE_X: usize = 0;
pub const TABLE_Y: usize = 1;
pub const TABLE_E: usize = 2;
pub const TABLE_F: usize = 3;
pub const TABLE_G: usize = 4;

/// Host on `x, y, e, f, g` with edges `xe, ey, fx, fe, fy, fg`, where `g`
/// also sees the first `sigma` of `y, x, e`.
pub fn chord_table_host(sigma: usize) -> Result<Graph, GadgetError> {
    if sigma > 3 {
        return Err(invalid(format!("sigma must be in 0..=3, got {sigma}")));
    }
    let (x, y, e, f, g) = (TABLE_X, TABLE_Y, TABLE_E, TABLE_F, TABLE_G);
    let base = [(x, e), (e, y), (f, x), (f, e), (f, y), (f, g)];
    let extra = [(g, y), (g, x), (g, e)];
    Ok(Graph::build(5, base.into_iter().chain(extra.into_iter().take(sigma)))?)
}

/// The path starting at `g` and ending at `y` or `x` with exactly
/// `requirement` chords on the host with parameter `sigma`.
pub fn chord_table_path(sigma: usize, requirement: usize) -> Result<GadgetBlueprint, GadgetError> {
    let (x, y, e, f, g) = (TABLE_X, TABLE_Y, TABLE_E, TABLE_F, TABLE_G);
    let vs: Vec<usize> = match (sigma, requirement) {
        (0, 1) => vec![g, f, e, y],
        (0, 2) => vec![g, f, x, e, y],
        (1, 0) => vec![g, f, x],
        (1, 2) => vec![g, f, e, y],
        (1, 3) => vec![g, f, x, e, y],
        (2, 1) => vec![g, x, e, y],
        (2, 2) => vec![g, f, e, y],
        (3, 1) => vec![g, e, y],
        (3, 2) => vec![g, x, e, y],
        _ => return Err(GadgetError::NotInTable { sigma, requirement }),
    };
    let graph = chord_table_host(sigma)?;
    let path = PathWitness::new(&graph, vs)?;
    let params = Params::new().set("sigma", sigma).set("requirement", requirement);
    GadgetBlueprint::verified(graph, Distinguished::Path(path), FormulaId::PathTable, params.0, requirement)
}

/// Sets `A′ ⊆ A` and `B′ ⊆ B` on which both graphs induce the same perfect
/// matching; `pairs[i] = (a, b)` with `b` on the `m..2m` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleMatching {
    pub m: usize,
    pub d: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl DoubleMatching {
    /// Whether both `g1[A′, B′]` and `g2[A′, B′]` are exactly the pairs.
    pub fn is_induced_in(&self, g1: &Graph, g2: &Graph) -> bool {
        [g1, g2].iter().all(|g| {
            self.pairs.iter().enumerate().all(|(i, &(a, _))| {
                self.pairs
                    .iter()
                    .enumerate()
                    .all(|(j, &(_, b))| g.has_edge(a, b) == (i == j))
            })
        })
    }

    /// `4d²|A′| >= m`.
    pub fn meets_bound(&self) -> bool {
        4 * self.d * self.d * self.pairs.len() >= self.m
    }
}

/// Greedy induced double matching between sides `A = 0..m` and `B = m..2m`.
///
/// Requires `g1 ⊆ g2`, both bipartite across the sides, every `A`-vertex of
/// positive `g1`-degree and every `B`-vertex of `g2`-degree at most `d`.
/// Scans `A`-vertices of `g2`-degree at most `2d` in ascending order, keeping
/// one whenever its `g2`-neighbourhood misses that of the kept set, matched
/// to its lowest `g1`-neighbour.
pub fn induced_double_matching(
    g1: &Graph,
    g2: &Graph,
    m: usize,
    d: usize,
) -> Result<DoubleMatching, GadgetError> {
    if m == 0 || d == 0 {
        return Err(invalid("need m >= 1 and d >= 1"));
    }
    for g in [g1, g2] {
        if g.n() != 2 * m {
            return Err(invalid(format!("graph has {} vertices, expected {}", g.n(), 2 * m)));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| (u < m) == (v < m)) {
            return Err(invalid(format!("edge ({u}, {v}) lies inside one side")));
        }
    }
    if let Some((u, v)) = g1.edges().find(|&(u, v)| !g2.has_edge(u, v)) {
        return Err(invalid(format!("edge ({u}, {v}) of g1 is missing from g2")));
    }
    if let Some(a) = (0..m).find(|&a| g1.degree(a) == 0) {
        return Err(invalid(format!("vertex {a} has no g1-neighbour")));
    }
    if let Some(b) = (m..2 * m).find(|&b| g2.degree(b) > d) {
        return Err(invalid(format!("vertex {b} has g2-degree {} > {d}", g2.degree(b))));
    }

    let mut blocked = vec![false; 2 * m];
    let mut pairs = Vec::new();
    for a in (0..m).filter(|&a| g2.degree(a) <= 2 * d) {
        if g2.neighbors(a).iter().any(|&b| blocked[b]) {
            continue;
        }
        let b = g1.neighbors(a)[0];
        for &w in g2.neighbors(a) {
            blocked[w] = true;
        }
        pairs.push((a, b));
    }
    let out = DoubleMatching { m, d, pairs };
    debug_assert!(out.is_induced_in(g1, g2) && out.meets_bound());
    Ok(out)
}

/// `M_1 = K_1`, `M_2 = K_2`, and `M_{t+1}` adds a shadow `u_i` for each
/// vertex `v_i` (joined to `N(v_i)`) and an apex joined to every shadow.
pub fn gen_mycielski(t: usize) -> Result<Graph, GadgetError> {
    if t == 0 || t > MYCIELSKI_MAX {
        return Err(invalid(format!("t must be in 1..={MYCIELSKI_MAX}, got {t}")));
    }
    if t == 1 {
        return Ok(Graph::empty(1));
    }
    let mut g = Graph::complete(2);
    for _ in 2..t {
        let n = g.n();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for (u, v) in g.edges() {
            edges.push((n + u, v));
            edges.push((u, n + v));
        }
        edges.extend((0..n).map(|i| (n + i, 2 * n)));
        g = Graph::build(2 * n + 1, edges)?;
    }
    Ok(g)
}

/// Path `0 .. path_len` with a hub `path_len` adjacent to `k` positions
/// spread evenly from the first vertex to the last.
pub fn gen_fan(path_len: usize, k: usize) -> Result<GadgetBlueprint, GadgetError> {
    if k < 2 || k > path_len {
        return Err(invalid(format!("need 2 <= k <= path_len, got k = {k}, path_len = {path_len}")));
    }
    let hub = path_len;
    let span = path_len - 1;
    let spokes = (0..k).map(|i| (2 * i * span + (k - 1)) / (2 * (k - 1)));
    let edges = (1..path_len).map(|i| (i - 1, i));
    let graph = Graph::build(path_len + 1, edges.chain(spokes.map(|p| (hub, p))))?;
    let path = PathWitness::new(&graph, (0..path_len).collect())?;
    let params = Params::new().set("path_len", path_len).set("k", k).set("hub", hub);
    GadgetBlueprint::verified(graph, Distinguished::Path(path), FormulaId::Fan, params.0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordsearch::{fan_to_chorded_cycle, wheel_to_chorded_cycle};
    use crate::cycle::chords;
    use crate::exact::{chromatic_number, clique_number};

    #[test]
    fn wheels() {
        let w = gen_wheel(7, 7).unwrap();
        assert_eq!(w.graph.degree(7), 7);
        let witness = w.wheel_witness().unwrap();
        let c = wheel_to_chorded_cycle(&w.graph, &witness, 4).unwrap();
        assert_eq!(chord_count(&w.graph, &c), Ok(4));
        assert_eq!(gen_wheel(3, 3).unwrap().graph, Graph::complete(4));
        let w = gen_wheel(10, 5).unwrap();
        assert_eq!(w.graph.degree(10), 5);
        assert_eq!(w.measured_chords, 0);
        assert!(gen_wheel(4, 5).is_err());
        assert!(gen_wheel(5, 2).is_err());
    }

    #[test]
    fn biclique_paths() {
        assert_eq!(biclique_path(2, 1).unwrap().predicted_chords, 1);
        let single = biclique_path(5, 0).unwrap();
        assert_eq!(single.distinguished.vertices().len(), 2);
        assert_eq!(biclique_path(6, 4).unwrap().measured_chords, 16);
        assert!(biclique_path(3, 3).is_err());
    }

    #[test]
    fn complete_case_examples() {
        assert_eq!(assemble_complete_case(20, 1, &[0; 20], &[]).unwrap().predicted_chords, 760);
        assert_eq!(assemble_complete_case(2, 1, &[0, 0], &[]).unwrap().predicted_chords, 4);
        let b = assemble_complete_case(3, 3, &[1, 2, 0], &[(0, 2)]).unwrap();
        assert_eq!(b.predicted_chords, 36);
        assert_eq!(b.parameter("x"), Some(1));
        assert!(assemble_complete_case(3, 2, &[1, 2, 0], &[]).is_err());
        assert!(assemble_complete_case(1, 2, &[0], &[]).is_err());
        assert!(assemble_complete_case(2, 2, &[0, 0], &[(0, 0)]).is_err());
    }

    #[test]
    fn oneside_case_examples() {
        assert_eq!(assemble_oneside_case(21, 1, &[0; 21], &[]).unwrap().predicted_chords, 399);
        assert_eq!(assemble_oneside_case(3, 1, &[0; 3], &[]).unwrap().predicted_chords, 3);
        let b = assemble_oneside_case(4, 3, &[2, 0, 1, 0], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(b.predicted_chords, 24);
    }

    #[test]
    fn printed_coefficients() {
        // a single nonzero entry isolates the linear coefficient
        let base = assemble_complete_case(20, 2, &[0; 20], &[]).unwrap().measured_chords;
        let mut a = [0; 20];
        a[5] = 1;
        let one = assemble_complete_case(20, 2, &a, &[]).unwrap().measured_chords;
        assert_eq!((base / 20, one - base - 1), (38, 40));
        let base = assemble_oneside_case(21, 2, &[0; 21], &[]).unwrap().measured_chords;
        let mut a = [0; 21];
        a[0] = 1;
        let one = assemble_oneside_case(21, 2, &a, &[]).unwrap().measured_chords;
        assert_eq!((base / 21, one - base - 1), (19, 20));
    }

    fn sample_model() -> ConnectorModel {
        ConnectorModel::new(4, 4)
            .complete_to(2, 1, 0)
            .link(5, 0, 1, 0)
            .join(0, 3)
    }

    #[test]
    fn multi_biclique_calibration() {
        let model = sample_model();
        let zero = assemble_multi_biclique(&[0; 4], &model).unwrap();
        let c0 = zero.parameter("c0").unwrap() as usize;
        assert_eq!(zero.predicted_chords, c0);
        let b = assemble_multi_biclique(&[0, 3, 0, 0], &model).unwrap();
        assert_eq!(b.parameter("t_2"), Some(1));
        assert_eq!(b.measured_chords, c0 + 12);
    }

    #[test]
    fn multi_biclique_paired_sequences() {
        let model = sample_model();
        // t = (0, 1, 0, 0): a_2 = 2 gives 4 + 2, a_1 = 2 and a_3 = 1 give 4 + 1 + 1
        let p = assemble_multi_biclique(&[0, 2, 0, 0], &model).unwrap();
        let q = assemble_multi_biclique(&[1, 0, 2, 1], &model).unwrap();
        assert_eq!(p.measured_chords, q.measured_chords);
    }

    #[test]
    fn multi_biclique_discipline() {
        let partial = ConnectorModel::new(3, 4).link(1, 2, 0, 2);
        assert!(matches!(
            assemble_multi_biclique(&[0; 3], &partial),
            Err(GadgetError::Discipline(_))
        ));
        let out_of_range = ConnectorModel::new(3, 4).link(6, 0, 0, 0);
        assert!(matches!(out_of_range.validate(), Err(GadgetError::Invalid(_))));
    }

    #[test]
    fn triangle_blocks() {
        assert_eq!(case1_gadget(1, &[0]).unwrap().measured_chords, 1);
        assert_eq!(case1_gadget(4, &[1; 4]).unwrap().measured_chords, 4);
        let b = case1_gadget(6, &[1, 3, 0, 2, 5, 1]).unwrap();
        let Distinguished::Cycle(c) = &b.distinguished else { panic!() };
        let expected: Vec<_> = (0..6).map(|i| (4 * i, 4 * i + 2)).collect();
        assert_eq!(chords(&b.graph, c).unwrap(), expected);
        assert!(case1_gadget(2, &[1]).is_err());
    }

    #[test]
    fn double_chord_blocks() {
        assert_eq!(case2_gadget(1, &[1]).unwrap().measured_chords, 2);
        assert_eq!(case2_gadget(3, &[1; 3]).unwrap().measured_chords, 6);
        let b = case2_gadget(5, &[7; 5]).unwrap();
        let Distinguished::Cycle(c) = &b.distinguished else { panic!() };
        let mut expected: Vec<_> = (0..5)
            .flat_map(|i| [(4 * i, 4 * i + 2), (4 * i + 1, 4 * i + 3)])
            .collect();
        expected.sort_unstable();
        assert_eq!(chords(&b.graph, c).unwrap(), expected);
    }

    #[test]
    fn chord_table() {
        let legal = [(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)];
        for sigma in 0..4 {
            for req in 0..4 {
                let out = chord_table_path(sigma, req);
                if legal.contains(&(sigma, req)) {
                    assert_eq!(out.unwrap().measured_chords, req);
                } else {
                    assert_eq!(out, Err(GadgetError::NotInTable { sigma, requirement: req }));
                }
            }
        }
        let p = chord_table_path(0, 1).unwrap();
        assert_eq!(p.distinguished.vertices(), &[TABLE_G, TABLE_F, TABLE_E, TABLE_Y]);
    }

    #[test]
    fn double_matching_examples() {
        let matching = Graph::build(8, (0..4).map(|i| (i, 4 + i))).unwrap();
        let out = induced_double_matching(&matching, &matching, 4, 1).unwrap();
        assert_eq!(out.pairs.len(), 4);
        assert!(out.is_induced_in(&matching, &matching));

        let g1 = Graph::build(16, (0..8).map(|i| (i, 8 + i))).unwrap();
        let g2 = Graph::build(16, (0..8).map(|i| (i, 8 + i)).chain([(0, 9), (2, 11)])).unwrap();
        let out = induced_double_matching(&g1, &g2, 8, 2).unwrap();
        assert!(out.is_induced_in(&g1, &g2) && out.meets_bound());
        assert!(!out.pairs.iter().any(|&(a, _)| a == 1));

        assert!(induced_double_matching(&g2, &g1, 8, 2).is_err());
        assert!(induced_double_matching(&g1, &g2, 8, 0).is_err());
    }

    #[test]
    fn mycielski() {
        let c5 = gen_mycielski(3).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert!(c5.is_connected() && (0..5).all(|v| c5.degree(v) == 2));
        let g = gen_mycielski(4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (11, 20));
        assert_eq!(chromatic_number(&g).unwrap().chi, 4);
        assert_eq!(clique_number(&g).unwrap().omega, 2);
        assert!(gen_mycielski(0).is_err());
    }

    #[test]
    fn fans() {
        for (len, k, chords_expected) in [(5, 2, 0), (9, 5, 3), (12, 4, 2)] {
            let fan = gen_fan(len, k).unwrap();
            let Distinguished::Path(p) = &fan.distinguished else { panic!() };
            assert_eq!(fan.graph.degree(len), k);
            let c = fan_to_chorded_cycle(&fan.graph, p, len, k).unwrap();
            assert_eq!(chord_count(&fan.graph, &c), Ok(chords_expected));
        }
        assert!(gen_fan(3, 4).is_err());
    }

    #[test]
    fn blueprint_json_roundtrip() {
        let b = case1_gadget(2, &[1, 2]).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        let back: GadgetBlueprint = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        back.verify().unwrap();
    }
}
