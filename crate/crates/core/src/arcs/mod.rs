//! Arc-annotated sequences, arc-structure levels, mappings and match
//! constraints.

pub mod constraint;
pub mod mapping;
pub mod sequence;
pub mod structure;

pub use constraint::MatchConstraint;
pub use mapping::{is_arc_preserving, Mapping};
pub use sequence::AnnotatedSequence;
pub use structure::{classify_structure, StructureLevel};
