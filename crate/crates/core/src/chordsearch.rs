//! Cycles with exactly `k` chords, chord spectra, wheels and fans.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{chord_count, path_chord_count, Cycle, PathWitness};
use crate::enumerate::Cycles;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordSearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a wheel: {0}")]
    InvalidWheel(String),
    #[error("a wheel with {spokes} spokes yields at most {max} chords, asked for {j}")]
    TooManyChords { j: usize, spokes: usize, max: usize },
    #[error("every run of {j} consecutive spokes covers the whole rim, so the closing pair is an extra chord")]
    NoOpenArc { j: usize },
    #[error("hub has {found} neighbours on the path, expected {expected} (at least 2)")]
    FanMismatch { found: usize, expected: usize },
    #[error("the path segment between the outer hub neighbours has {0} chords of its own")]
    PathHasChords(usize),
}

/// Result of a bounded search. `NoneUpTo` never claims global absence unless
/// `exhaustive` is set, which happens when `max_len` reaches `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { cycle: Cycle },
    NoneUpTo { max_len: usize, exhaustive: bool },
}

impl SearchOutcome {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            SearchOutcome::Found { cycle } => Some(cycle),
            SearchOutcome::NoneUpTo { .. } => None,
        }
    }
}

/// Lexicographically least canonical cycle of length `<= max_len` with
/// exactly `k` chords.
pub fn find_cycle_with_exact_chords(g: &Graph, k: usize, max_len: usize) -> SearchOutcome {
    match Cycles::new(g, max_len, Some(k)).next() {
        Some(cycle) => SearchOutcome::Found { cycle },
        None => SearchOutcome::NoneUpTo {
            max_len,
            exhaustive: max_len >= g.n(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordSpectrumReport {
    pub max_len: usize,
    /// Each achievable chord count with its lexicographically least witness.
    pub achievable: BTreeMap<usize, Cycle>,
}

impl ChordSpectrumReport {
    pub fn counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.achievable.keys().copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.achievable.contains_key(&k)
    }
}

pub fn chord_spectrum(g: &Graph, max_len: usize) -> ChordSpectrumReport {
    let mut achievable = BTreeMap::new();
    let mut it = Cycles::new(g, max_len, None);
    while let Some((cycle, k)) = it.next_counted() {
        achievable.entry(k).or_insert(cycle);
    }
    ChordSpectrumReport { max_len, achievable }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelWitness {
    pub hub: usize,
    pub rim: Cycle,
    pub spokes: usize,
}

impl WheelWitness {
    /// Checks that the rim is an induced cycle avoiding the hub and that
    /// `spokes` matches the hub's rim degree.
    pub fn validate(&self, g: &Graph) -> Result<(), ChordSearchError> {
        let chords = chord_count(g, &self.rim)?;
        if chords != 0 {
            return Err(ChordSearchError::InvalidWheel(format!("rim has {chords} chords")));
        }
        g.check_vertex(self.hub)?;
        if self.rim.vertices().contains(&self.hub) {
            return Err(ChordSearchError::InvalidWheel("hub lies on the rim".into()));
        }
        let measured = spokes_on(g, self.hub, self.rim.vertices());
        if measured != self.spokes {
            return Err(ChordSearchError::InvalidWheel(format!(
                "declared {} spokes, measured {measured}",
                self.spokes
            )));
        }
        Ok(())
    }
}

fn spokes_on(g: &Graph, hub: usize, vs: &[usize]) -> usize {
    vs.iter().filter(|&&v| g.has_edge(hub, v)).count()
}

/// First induced cycle of length `<= max_rim` (lexicographic order) with a
/// vertex off it having at least `k` neighbours on it; the lowest such hub.
pub fn find_k_wheel(g: &Graph, k: usize, max_rim: usize) -> Option<WheelWitness> {
    Cycles::new(g, max_rim, Some(0)).find_map(|rim| {
        let on_rim = rim.vertices();
        (0..g.n())
            .filter(|v| !on_rim.contains(v))
            .find_map(|hub| {
                let spokes = spokes_on(g, hub, on_rim);
                (spokes >= k).then_some(hub).map(|hub| (hub, spokes))
            })
            .map(|(hub, spokes)| WheelWitness { hub, rim, spokes })
    })
}

/// The cycle formed by the hub and a rim arc `u_0 .. u_{j+1}` through
/// `j + 2` consecutive spokes. Its chords are exactly the `j` inner spokes,
/// provided the arc leaves some rim vertex out; the first such arc in rim
/// order is used.
pub fn wheel_to_chorded_cycle(
    g: &Graph,
    w: &WheelWitness,
    j: usize,
) -> Result<Cycle, ChordSearchError> {
    w.validate(g)?;
    if j + 2 > w.spokes {
        return Err(ChordSearchError::TooManyChords {
            j,
            spokes: w.spokes,
            max: w.spokes.saturating_sub(2),
        });
    }
    let rim = w.rim.vertices();
    let m = rim.len();
    let spoke_pos: Vec<usize> = (0..m).filter(|&i| g.has_edge(w.hub, rim[i])).collect();
    let s = spoke_pos.len();
    for t in 0..s {
        let from = spoke_pos[t];
        let to = spoke_pos[(t + j + 1) % s];
        let arc_len = (to + m - from) % m + 1;
        if arc_len >= m {
            continue;
        }
        let mut vs: Vec<usize> = (0..arc_len).map(|i| rim[(from + i) % m]).collect();
        vs.push(w.hub);
        let cycle = Cycle::new(g, vs)?.canonical();
        debug_assert_eq!(chord_count(g, &cycle), Ok(j));
        return Ok(cycle);
    }
    Err(ChordSearchError::NoOpenArc { j })
}

/// In a `k`-fan the hub and the path segment between its outermost
/// neighbours form a cycle whose chords are the `k - 2` inner spokes.
pub fn fan_to_chorded_cycle(
    g: &Graph,
    path: &PathWitness,
    hub: usize,
    k: usize,
) -> Result<Cycle, ChordSearchError> {
    path.validate(g)?;
    g.check_vertex(hub)?;
    if path.contains(hub) {
        return Err(GraphError::InvalidPath("hub lies on the path".into()).into());
    }
    let vs = path.vertices();
    let hits: Vec<usize> = (0..vs.len()).filter(|&i| g.has_edge(hub, vs[i])).collect();
    if hits.len() < 2 || hits.len() != k {
        return Err(ChordSearchError::FanMismatch {
            found: hits.len(),
            expected: k,
        });
    }
    let (first, last) = (hits[0], hits[hits.len() - 1]);
    let segment = PathWitness::from_trusted(vs[first..=last].to_vec());
    let own = path_chord_count(g, &segment)?;
    if own != 0 {
        return Err(ChordSearchError::PathHasChords(own));
    }
    let mut cycle = segment.vertices().to_vec();
    cycle.push(hub);
    Ok(Cycle::new(g, cycle)?.canonical())
}
