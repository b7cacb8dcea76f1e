//! Small-group graph constructions.
//!
//! This crate builds orbital digraphs and coset graphs from explicit
//! permutation groups, reports vertex/edge/arc transitivity, and decides the
//! half-arc-transitive verdict (vertex- and edge- but not arc-transitive).
//! Everything is deliberately desk-scale: the graphs certified elsewhere in
//! this workspace act on point sets far too large to materialize, so this
//! module exercises the same mechanics on honest small instances — most
//! prominently the 27-vertex, 4-valent half-arc-transitive graph built from
//! a two-parameter modular adjacency rule.

mod automorphism;
mod coset;
mod export;
mod graph;
mod holt;
mod orbital;
mod transitivity;

pub use automorphism::{tiny_automorphism_group, AUTOMORPHISM_CAP, MAX_AUT_VERTICES};
pub use coset::{coset_graph, MAX_COSET_GROUP};
pub use export::{export_graph, import_graph, GraphFormat};
pub use graph::Graph;
pub use holt::holt_graph;
pub use orbital::{
    is_self_paired, orbital_digraph, suborbits, OrbitalDigraph, MAX_ORBITAL_DEGREE,
};
pub use transitivity::{hat_verdict, transitivity_report, HatVerdict, TransitivityReport};

use thiserror::Error;

/// Errors across graph construction and analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HatGraphError {
    #[error("edge ({u}, {v}) is out of range for {n} vertices")]
    EdgeOutOfRange { u: u32, v: u32, n: usize },
    #[error("loop at vertex {v} is not allowed in a simple graph")]
    LoopEdge { v: u32 },
    #[error("permutation degree {got} does not match the {expected}-point domain")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("the generators do not act transitively on the {degree}-point domain")]
    Intransitive { degree: usize },
    #[error("orbital seed ({v}, {v}) is a loop; seed points must differ")]
    SeedLoop { v: u32 },
    #[error("domain has {degree} points, above the orbital materialization cap {max}")]
    OrbitalDegreeTooLarge { degree: usize, max: usize },
    #[error("generator {index} is not an automorphism of the graph")]
    NotAnAutomorphism { index: usize },
    #[error("graph has {n} vertices, above the automorphism search cap {max}")]
    AutVerticesTooMany { n: usize, max: usize },
    #[error("more than {cap} automorphisms; the graph is too symmetric for full enumeration")]
    AutomorphismCountExceeded { cap: usize },
    #[error("element list has {order} entries, above the coset construction cap {max}")]
    CosetGroupTooLarge { order: usize, max: usize },
    #[error("element list is not usable as a group: {detail}")]
    NotAGroup { detail: String },
    #[error("subgroup closure left the supplied element list: {detail}")]
    NotASubgroup { detail: String },
    #[error("could not parse the {format} document: {detail}")]
    ParseError { format: String, detail: String },
    #[error(transparent)]
    Analysis(#[from] group_analysis::AnalysisError),
}
