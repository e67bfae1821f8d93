//! Exact tools for cycles with a prescribed number of chords: chord counting,
//! exact-chord cycle search, BFS extractions and unimodal paths, additive
//! decompositions into squares and pronic numbers, and gadget graphs whose
//! chord counts are predicted in closed form.

pub mod bitset;
pub mod chordsearch;
pub mod corpus;
pub mod cycle;
pub mod enumerate;
pub mod exact;
pub mod extraction;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod numtheory;
pub mod subgraph;

pub use cycle::{chord_count, chords, path_chord_count, path_chords, Cycle, PathWitness};
pub use enumerate::{enumerate_cycles, Cycles};
pub use exact::{chromatic_number, clique_number, Clique, Coloring, ExactLimits};
pub use graph::{Graph, GraphError};
pub use subgraph::{find_biclique, is_induced_copy, Biclique};
