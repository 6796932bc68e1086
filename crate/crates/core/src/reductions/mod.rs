//! Independent Set reductions to identity-constrained LAPCS, the exact
//! independent set oracle, witness extraction and the equivalence checker.

pub mod construct;
pub mod equivalence;
pub mod extract;
pub mod graph;

pub use construct::{
    mapping_from_independent_set, reduce, reduce_theorem1, reduce_theorem2, Construction,
    Provenance, ReductionInstance, Theorem,
};
pub use equivalence::{check_equivalence, EquivalenceRow, OracleBudget};
pub use extract::{extract_independent_set, ExtractedSet};
pub use graph::{max_independent_set, parse_dimacs_edges, DimacsEdge, Graph};
