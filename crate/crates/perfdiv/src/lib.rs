//! Exhaustive verification toolkit for perfect divisibility of small graph
//! classes.
//!
//! The crate provides:
//! - compact bitset graphs with constructors for the named small patterns
//!   and parametric families ([`graph`], [`patterns`]);
//! - graph6 text I/O and canonical forms with exhaustive non-isomorphic
//!   enumeration ([`graph6`], [`canon`]);
//! - induced-subgraph detectors and forbidden-class membership ([`detect`],
//!   [`classes`]);
//! - exact invariants: clique numbers, chromatic number, perfection, local
//!   perfection, homogeneous sets, clique cutsets ([`invariants`]);
//! - good partitions, perfect divisibility, bounded perfect weight
//!   divisibility, and the constructive coloring they yield
//!   ([`divisibility`]);
//! - the 5-hole neighborhood decomposition with claim-by-claim verifiers
//!   and the explicit red/blue partition ([`structure`]);
//! - enumeration-driven verification campaigns with machine-readable
//!   reports ([`campaign`]).
//!
//! Campaigns run data-parallel via rayon when the `parallel` feature
//! (default) is enabled, and sequentially otherwise; results are identical
//! either way.

pub mod campaign;
pub mod canon;
pub mod classes;
pub mod detect;
pub mod divisibility;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod patterns;
pub mod structure;

mod par;

pub use canon::{canonical_form, enumerate_nonisomorphic, CanonicalKey, Enumerator};
pub use classes::{find_forbidden, is_class_member, ClassSpec, Selector};
pub use detect::{contains_induced, find_hole, find_odd_antihole, find_odd_torch, Parity, Witness};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{decode_graph6, encode_graph6};
pub use invariants::{
    chromatic_number, clique_number, is_k_colorable, is_locally_perfect, is_perfect, Coloring,
    WeightFn,
};
pub use patterns::{make_family, make_named, make_odd_torch, Family, PatternName};
