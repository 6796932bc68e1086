use crate::arcs::{AnnotatedSequence, Mapping, MatchConstraint};
use crate::error::{Error, Result};
use crate::solvers::lcs::SuffixTable;
use crate::solvers::{SearchBudget, SolveResult, SolveStats, SolverKind};

/// Exact LAPCS by branch and bound over candidate pairs in lexicographic
/// order.
///
/// A node is a valid arc-preserving mapping; its children append one later
/// candidate that is compatible with every pair chosen so far. The bound is
/// the longest chain among the remaining compatible candidates, which is a
/// plain-LCS relaxation of the remaining region and hence admissible.
/// Because children are visited in lexicographic order and only strict
/// improvements are recorded, the witness is the lexicographically smallest
/// optimal pair list.
pub fn exact_search(
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
    mc: MatchConstraint,
    budget: &SearchBudget,
) -> Result<SolveResult> {
    budget.check_instance(a1.len(), a2.len(), mc)?;
    let mut search = Search::new(a1, a2, mc, budget.max_nodes);
    let root: Vec<u64> = (0..search.words)
        .map(|w| {
            let lo = w * 64;
            let hi = (lo + 64).min(search.cand.len());
            if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            }
        })
        .collect();
    search.dfs(&root)?;
    let table_cells = search.static_bound.len() as u64;
    Ok(SolveResult::new(
        Mapping::from_sorted_unchecked(search.best),
        SolveStats {
            solver: SolverKind::ExactSearch,
            nodes: search.nodes,
            table_cells,
        },
    ))
}

struct Search {
    cand: Vec<(usize, usize)>,
    words: usize,
    /// Row `c` holds the candidates after `cand[c]` that can coexist with it.
    compat: Vec<u64>,
    static_bound: SuffixTable,
    path: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    nodes: u64,
    max_nodes: u64,
    tails: Vec<usize>,
}

impl Search {
    fn new(
        a1: &AnnotatedSequence,
        a2: &AnnotatedSequence,
        mc: MatchConstraint,
        max_nodes: u64,
    ) -> Self {
        let (s1, s2) = (a1.letters(), a2.letters());
        let mut cand = Vec::new();
        for p in 1..=s1.len() {
            for q in 1..=s2.len() {
                if s1[p - 1] == s2[q - 1] && mc.allowed(p, q) {
                    cand.push((p, q));
                }
            }
        }
        let words = cand.len().div_ceil(64);
        let mut compat = vec![0u64; cand.len() * words];
        for (c, &(p, q)) in cand.iter().enumerate() {
            let row = &mut compat[c * words..(c + 1) * words];
            for (d, &(p2, q2)) in cand.iter().enumerate().skip(c + 1) {
                if p2 > p && q2 > q && a1.has_arc(p, p2) == a2.has_arc(q, q2) {
                    row[d / 64] |= 1 << (d % 64);
                }
            }
        }
        Self {
            cand,
            words,
            compat,
            static_bound: SuffixTable::new(s1, s2, mc),
            path: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            max_nodes,
            tails: Vec::new(),
        }
    }

    fn dfs(&mut self, set: &[u64]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget(format!(
                "exact search exceeded {} nodes",
                self.max_nodes
            )));
        }
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
        }
        let depth = self.path.len();
        if depth + self.chain_bound(set) <= self.best.len() {
            return Ok(());
        }
        let mut child = vec![0u64; self.words];
        for w in 0..self.words {
            let mut bits = set[w];
            while bits != 0 {
                let c = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (p, q) = self.cand[c];
                // Static suffix bound: the best completion after (p, q).
                if depth + 1 + self.static_bound.get(p, q) as usize <= self.best.len() {
                    continue;
                }
                let row = &self.compat[c * self.words..(c + 1) * self.words];
                for (dst, (a, b)) in child.iter_mut().zip(set.iter().zip(row)) {
                    *dst = a & b;
                }
                self.path.push((p, q));
                self.dfs(&child)?;
                self.path.pop();
            }
        }
        Ok(())
    }

    /// Longest chain strictly increasing in both coordinates among `set`,
    /// by patience sorting with each row's columns fed in decreasing order.
    fn chain_bound(&mut self, set: &[u64]) -> usize {
        let tails = &mut self.tails;
        tails.clear();
        let mut row: Vec<usize> = Vec::new();
        let mut row_p = 0;
        let flush = |row: &mut Vec<usize>, tails: &mut Vec<usize>| {
            for &q in row.iter().rev() {
                let at = tails.partition_point(|&t| t < q);
                if at == tails.len() {
                    tails.push(q);
                } else {
                    tails[at] = q;
                }
            }
            row.clear();
        };
        for (w, &word) in set.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let c = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (p, q) = self.cand[c];
                if p != row_p {
                    flush(&mut row, tails);
                    row_p = p;
                }
                row.push(q);
            }
        }
        flush(&mut row, tails);
        tails.len()
    }
}
