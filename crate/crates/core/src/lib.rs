//! Longest arc-preserving common subsequences (LAPCS) of arc-annotated
//! sequences.
//!
//! The crate provides the sequence/arc data model and structure classifier
//! ([`arcs`]), exact solvers ([`solvers`]), the two Independent Set
//! reductions with brute-force oracles and an equivalence checker
//! ([`reductions`]), and file formats, generators and sweep reporting
//! ([`harness`]) used by the `lapcs` binary.

pub mod arcs;
pub mod error;
pub mod harness;
pub mod reductions;
pub mod solvers;

pub use arcs::{
    classify_structure, is_arc_preserving, AnnotatedSequence, Mapping, MatchConstraint,
    StructureLevel,
};
pub use error::{Error, Result};
pub use reductions::{Graph, ReductionInstance};
pub use solvers::{solve, SearchBudget, SolveResult};
