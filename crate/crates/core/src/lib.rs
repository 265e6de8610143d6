//! Traversal-relation graph model.
//!
//! A graph instance is a multiset of ordered vertex pairs (arcs with positive
//! multiplicities). Everything else in this crate is derived from that
//! relation:
//!
//! * [`graph`] holds the relation and classifies instances. It also derives
//!   the unit subgraphs keyed by tail and the visiting sets keyed by head.
//! * [`generators`] builds the deterministic instance families.
//! * [`traversal`] is the exhaustive equivalent-visiting search (table-copying
//!   and occurrence-counting engines) with search and Hamiltonian counts.
//! * [`sequences`] validates arc sequences and implements cycle permutation.
//! * [`bocps`] derives integer ratios from cycle permutation return times.
//! * [`partition`] layers the vertex set into regions from a seed set.
//! * [`coloring`] holds the randomized coloring heuristics together with
//!   exact tools for small instances.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bocps;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod partition;
pub mod sequences;
pub mod traversal;

pub use error::{Error, Result};
pub use graph::{Arc, GraphClass, MultiTraversalRelation, MultipleVisitingSet, VertexId, WeightedUnitSubgraph};
