use serde::Serialize;

use crate::error::Result;
use crate::reductions::construct::{reduce, ReductionInstance, Theorem};
use crate::reductions::graph::{max_independent_set, Graph};
use crate::solvers::{solve_with_budget, SearchBudget};

/// Limits for both oracles used by the checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub search: SearchBudget,
    /// Largest graph order the independent set oracle accepts.
    pub max_graph_order: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            search: SearchBudget::default(),
            max_graph_order: 20,
        }
    }
}

/// One (graph, k) measurement. Oracle fields are `None` when the row was
/// skipped for budget reasons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub k: usize,
    pub theorem: u8,
    pub is_size: Option<usize>,
    pub is_answer: Option<bool>,
    pub lapcs_len: Option<usize>,
    pub threshold: Option<usize>,
    pub lapcs_answer: Option<bool>,
    pub forward_ok: Option<bool>,
    pub backward_ok: Option<bool>,
    pub skipped: Option<String>,
}

impl EquivalenceRow {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn forward_failed(&self) -> bool {
        self.forward_ok == Some(false)
    }

    pub fn backward_failed(&self) -> bool {
        self.backward_ok == Some(false)
    }
}

/// Builds the reduction instance for `(g, k)`, solves both sides exactly and
/// records whether each direction of the equivalence held.
///
/// Construction errors (e.g. `k = 0`) are returned; budget errors from
/// either oracle mark the row as skipped instead.
pub fn check_equivalence(
    g: &Graph,
    k: usize,
    theorem: Theorem,
    budget: &OracleBudget,
) -> Result<EquivalenceRow> {
    let inst = reduce(g, k, theorem)?;
    let mut row = EquivalenceRow {
        graph_id: g.id(),
        n: g.order(),
        m: g.size(),
        connected: g.is_connected(),
        k,
        theorem: theorem.number(),
        is_size: None,
        is_answer: None,
        lapcs_len: None,
        threshold: Some(inst.threshold),
        lapcs_answer: None,
        forward_ok: None,
        backward_ok: None,
        skipped: None,
    };
    match measure(g, &inst, budget) {
        Ok((is_size, lapcs_len)) => {
            let is_answer = is_size >= k;
            let lapcs_answer = lapcs_len >= inst.threshold;
            row.is_size = Some(is_size);
            row.is_answer = Some(is_answer);
            row.lapcs_len = Some(lapcs_len);
            row.lapcs_answer = Some(lapcs_answer);
            row.forward_ok = Some(!is_answer || lapcs_answer);
            row.backward_ok = Some(!lapcs_answer || is_answer);
        }
        Err(e) if e.is_budget() => row.skipped = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(row)
}

fn measure(g: &Graph, inst: &ReductionInstance, budget: &OracleBudget) -> Result<(usize, usize)> {
    let (is_size, _) = max_independent_set(g, budget.max_graph_order)?;
    let lapcs = solve_with_budget(&inst.a1, &inst.a2, inst.mc, &budget.search)?;
    Ok((is_size, lapcs.length))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(g: &Graph, k: usize, t: Theorem) -> EquivalenceRow {
        check_equivalence(g, k, t, &OracleBudget::default()).unwrap()
    }

    #[test]
    fn triangle_first_reduction() {
        let r = row(&Graph::complete(3), 1, Theorem::One);
        assert_eq!(
            (r.is_answer, r.lapcs_answer, r.forward_ok, r.backward_ok),
            (Some(true), Some(true), Some(true), Some(true))
        );
        let r = row(&Graph::complete(3), 2, Theorem::One);
        assert_eq!(r.lapcs_len, Some(1));
        assert_eq!(
            (r.is_answer, r.lapcs_answer, r.forward_ok, r.backward_ok),
            (Some(false), Some(false), Some(true), Some(true))
        );
    }

    #[test]
    fn triangle_second_reduction_backward_gap() {
        let r = row(&Graph::complete(3), 2, Theorem::Two);
        assert_eq!(r.is_answer, Some(false));
        assert_eq!(r.threshold, Some(10));
        assert_eq!(r.lapcs_len, Some(12));
        assert_eq!(r.lapcs_answer, Some(true));
        assert_eq!(r.forward_ok, Some(true));
        assert_eq!(r.backward_ok, Some(false));
    }

    #[test]
    fn single_edge_second_reduction_forward() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let r = row(&g, 1, Theorem::Two);
        assert_eq!(r.lapcs_len, Some(7));
        assert_eq!(r.forward_ok, Some(true));
    }

    #[test]
    fn case_one_rows() {
        let r = row(&Graph::path(2), 3, Theorem::Two);
        assert_eq!(r.lapcs_len, Some(1));
        assert_eq!(r.lapcs_answer, Some(false));
        assert_eq!(r.is_answer, Some(false));
    }

    #[test]
    fn budget_errors_skip_the_row() {
        let tight = OracleBudget {
            max_graph_order: 2,
            ..OracleBudget::default()
        };
        let r = check_equivalence(&Graph::complete(3), 1, Theorem::One, &tight).unwrap();
        assert!(r.is_skipped());
        assert_eq!(r.lapcs_len, None);
        assert!(check_equivalence(&Graph::complete(3), 0, Theorem::One, &tight).is_err());
    }
}
