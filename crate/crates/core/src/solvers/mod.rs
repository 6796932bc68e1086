//! Exact LAPCS solvers and the dispatcher that picks between them.

pub mod conflict;
pub mod lcs;
pub mod search;

use std::fmt;

use crate::arcs::{AnnotatedSequence, Mapping, MatchConstraint};
use crate::error::{Error, Result};

pub use conflict::{diagonal_conflict_solve, ConflictGraph};
pub use lcs::lcs_dp;
pub use search::exact_search;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    LcsDp,
    ConflictGraph,
    ExactSearch,
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverKind::LcsDp => "lcs_dp",
            SolverKind::ConflictGraph => "conflict_graph",
            SolverKind::ExactSearch => "exact_search",
        })
    }
}

/// Diagnostics: which solver ran, search nodes visited, DP cells filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveStats {
    pub solver: SolverKind,
    pub nodes: u64,
    pub table_cells: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub length: usize,
    pub witness: Mapping,
    /// Always true: every solver here is exact.
    pub optimal: bool,
    pub stats: SolveStats,
}

impl SolveResult {
    pub(crate) fn new(witness: Mapping, stats: SolveStats) -> Self {
        Self {
            length: witness.len(),
            witness,
            optimal: true,
            stats,
        }
    }
}

/// Limits for the exponential exact search. Exceeding any of them is a
/// [`Error::Budget`], never a truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum `|S1| * |S2|` for non-identity constraints.
    pub max_cells: usize,
    /// Maximum sequence length under `Fragment(1)` / `Diagonal(0)`.
    pub max_identity_len: usize,
    /// Maximum branch-and-bound nodes.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_cells: 400,
            max_identity_len: 64,
            max_nodes: 20_000_000,
        }
    }
}

impl SearchBudget {
    pub fn check_instance(&self, n1: usize, n2: usize, mc: MatchConstraint) -> Result<()> {
        if mc.is_identity() {
            let n = n1.max(n2);
            if n > self.max_identity_len {
                return Err(Error::Budget(format!(
                    "identity-constrained search limited to length {}, got {n}",
                    self.max_identity_len
                )));
            }
        } else if n1.saturating_mul(n2) > self.max_cells {
            return Err(Error::Budget(format!(
                "search limited to {} position pairs, got {n1}x{n2}",
                self.max_cells
            )));
        }
        Ok(())
    }
}

/// Solves with the default search budget.
pub fn solve(
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
    mc: MatchConstraint,
) -> Result<SolveResult> {
    solve_with_budget(a1, a2, mc, &SearchBudget::default())
}

/// Routes to `lcs_dp` for arc-free unconstrained instances, to the conflict
/// graph solver for identity-constrained instances whose conflict graph has
/// maximum degree two, and to `exact_search` otherwise.
pub fn solve_with_budget(
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
    mc: MatchConstraint,
    budget: &SearchBudget,
) -> Result<SolveResult> {
    if mc == MatchConstraint::Unconstrained && !a1.has_arcs() && !a2.has_arcs() {
        return lcs_dp(a1, a2);
    }
    if mc.is_identity() && a1.len() == a2.len() {
        let graph = ConflictGraph::build(a1, a2)?;
        if graph.max_degree() <= 2 {
            return diagonal_conflict_solve(a1, a2);
        }
    }
    exact_search(a1, a2, mc, budget)
}
