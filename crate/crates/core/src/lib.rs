//! Minimum-weight packings of mixed hyperarborescences.
//!
//! The crate covers four packing requirements over a rooted mixed hypergraph
//! (dyperedges plus undirected hyperedges):
//!
//! * spanning: every root reaches every vertex,
//! * reachability: every root covers exactly what it can reach,
//! * matroid-based: the roots covering a vertex form a basis of a matroid on the roots,
//! * matroid-reachability-based: the same, restricted to the roots that can reach the vertex.
//!
//! [`engine`] holds the solvers, [`verify`] the validators and the exhaustive condition
//! checkers used as ground truth. Everything is `no_std` with `alloc`; weights are exact
//! rationals.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
pub mod error;
pub mod hypercore;
pub mod intersect;
pub mod matroid;
pub mod reach;
pub mod tanigawa;
pub mod verify;

pub use engine::{Arborescence, Outcome, Packing};
pub use error::{Error, Result};
pub use hypercore::{
    Biset, BisetSubpartition, Dyperedge, ElementId, Hyperedge, MixedHypergraph, NodeId, NodeKind,
    NodeSet, Shape, Trim,
};
pub use matroid::{Matroid, SharedMatroid};
pub use verify::PackingMode;

/// Exact rational weight attached to dyperedges and hyperedges.
pub type Weight = num_rational::Ratio<i64>;
