//! Exact-arithmetic toolkit for plane-bipartite graphs embedded in a disk.
//!
//! Starting from a combinatorial embedding (vertices, edges, clockwise
//! rotations), the crate computes the objects such a graph carries:
//!
//! * almost perfect matchings, perfect orientations, and flows, together
//!   with the bijections among them ([`matching`]);
//! * symbolic Pluecker coordinates as sparse Laurent polynomials over the
//!   edge variables, their positive evaluations, and Newton polytopes
//!   ([`measurement`]);
//! * the positroid of the graph, its matroid polytope, and the projection
//!   from the matching polytope onto it ([`positroid`]);
//! * the matching polytope itself: vertices, inequality description,
//!   dimension, full face lattice, f-vector, and facets ([`polytope`]);
//! * Ehrhart counts, the Ehrhart polynomial, h*-vector, and volumes
//!   ([`ehrhart`]).
//!
//! Everything is exact: integers are arbitrary precision and evaluations are
//! rational. All values are immutable after construction and safe to share
//! across threads.

pub mod ehrhart;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod laurent;
pub mod matching;
pub mod measurement;
pub mod polytope;
pub mod positroid;
pub mod sets;

pub use error::{Error, Result};
pub use graph::{parse_graph, Color, DiskGraph, GraphBuilder, GraphType};
pub use matching::{Matching, Orientation};
