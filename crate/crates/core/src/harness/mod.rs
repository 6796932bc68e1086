//! Instance generation, equivalence sweeps and the command-line front end.

pub mod cli;
pub mod generate;
pub mod sweep;

pub use generate::{
    all_labeled_graphs, random_annotated, random_arcs, random_graph, random_sequence,
    MAX_ENUMERATION_ORDER,
};
pub use sweep::{
    default_exhaustive_order, rows_to_csv, run_sweep, GraphSource, KPolicy, SweepConfig,
    SweepReport, SweepSummary, CSV_HEADER,
};
