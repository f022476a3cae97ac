//! Verification, analysis and isomorph-free enumeration of quasi-strongly
//! regular graphs.
//!
//! - [`graph`]: bitmask graphs, graph6, independence number, cut sizes
//! - [`catalog`]: named reference graphs
//! - [`qsr`]: parameter extraction, t-profiles, counting identities, order bounds
//! - [`canon`]: canonical forms, isomorphism, automorphism group order
//! - [`enumerate`]: canonical-augmentation census with a brute-force oracle
//! - [`cli`]: the `qsr` command line front end

pub mod canon;
pub mod catalog;
pub mod cli;
pub mod graph;
pub mod enumerate;
pub mod qsr;

pub use canon::{automorphism_count, canonical_form, is_isomorphic, CanonicalForm};
pub use graph::{Graph, GraphBuilder, GraphError, VertexId, VertexSet};
pub use enumerate::{certify, enumerate, EnumReport, EnumSpec};
pub use qsr::{analyze, matches, sqsr_bounds, QsrParams, QsrSignature};
