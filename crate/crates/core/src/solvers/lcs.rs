use crate::arcs::{AnnotatedSequence, Mapping, MatchConstraint};
use crate::error::{Error, Result};
use crate::solvers::{SolveResult, SolveStats, SolverKind};

/// Suffix LCS table restricted to allowed pairs.
///
/// `get(i, j)` is the longest common subsequence of `s1[i..]` and `s2[j..]`
/// (0-based suffix starts) using only pairs the constraint admits.
pub(crate) struct SuffixTable {
    cols: usize,
    cells: Vec<u32>,
}

impl SuffixTable {
    pub(crate) fn new(s1: &[char], s2: &[char], mc: MatchConstraint) -> Self {
        let (n, m) = (s1.len(), s2.len());
        let cols = m + 1;
        let mut cells = vec![0u32; (n + 1) * cols];
        for i in (0..n).rev() {
            for j in (0..m).rev() {
                let skip = cells[(i + 1) * cols + j].max(cells[i * cols + j + 1]);
                let take = if s1[i] == s2[j] && mc.allowed(i + 1, j + 1) {
                    cells[(i + 1) * cols + j + 1] + 1
                } else {
                    0
                };
                cells[i * cols + j] = skip.max(take);
            }
        }
        Self { cols, cells }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.cols + j]
    }

    pub(crate) fn len(&self) -> usize {
        self.cells.len()
    }
}

/// Classic O(nm) longest common subsequence for two arc-free sequences.
///
/// The witness is the lexicographically smallest optimal pair list.
pub fn lcs_dp(a1: &AnnotatedSequence, a2: &AnnotatedSequence) -> Result<SolveResult> {
    if a1.has_arcs() || a2.has_arcs() {
        return Err(Error::WrongSolver(
            "lcs_dp needs two arc-free sequences; use exact_search".into(),
        ));
    }
    let table = SuffixTable::new(a1.letters(), a2.letters(), MatchConstraint::Unconstrained);
    let witness = lex_min_witness(a1.letters(), a2.letters(), &table);
    Ok(SolveResult::new(
        witness,
        SolveStats {
            solver: SolverKind::LcsDp,
            nodes: 0,
            table_cells: table.len() as u64,
        },
    ))
}

/// Walks the suffix table picking, at each step, the smallest `(p, q)` that
/// still completes an optimal subsequence. Each row is scanned at most once,
/// so the walk is O(nm) overall.
fn lex_min_witness(s1: &[char], s2: &[char], table: &SuffixTable) -> Mapping {
    let mut remaining = table.get(0, 0);
    let mut pairs = Vec::with_capacity(remaining as usize);
    let (mut i, mut j) = (0, 0);
    while remaining > 0 {
        let (p, q) = (i..s1.len())
            .flat_map(|p| (j..s2.len()).map(move |q| (p, q)))
            .find(|&(p, q)| s1[p] == s2[q] && table.get(p + 1, q + 1) + 1 == remaining)
            .expect("suffix table promises another match");
        pairs.push((p + 1, q + 1));
        remaining -= 1;
        i = p + 1;
        j = q + 1;
    }
    Mapping::from_sorted_unchecked(pairs)
}
