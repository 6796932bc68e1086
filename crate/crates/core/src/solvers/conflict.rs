//! Identity-constrained LAPCS as maximum independent set on a conflict graph.
//!
//! Under `Fragment(1)` (equivalently `Diagonal(0)`) a mapping is a set `U` of
//! positions matched to themselves. `U` is arc-preserving iff no two of its
//! positions are joined by an arc present on exactly one side, so the
//! optimum is a maximum independent set of the graph whose edges are
//! `P1 Δ P2` restricted to positions with `S1[p] = S2[p]`. When both arc
//! sets have no shared endpoints, every vertex has degree at most two and
//! the graph is a disjoint union of paths and cycles.

use crate::arcs::{AnnotatedSequence, Mapping};
use crate::error::{Error, Result};
use crate::solvers::{SolveResult, SolveStats, SolverKind};

/// Candidate identity matches and the arcs that forbid matching both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    n: usize,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn build(a1: &AnnotatedSequence, a2: &AnnotatedSequence) -> Result<Self> {
        if a1.len() != a2.len() {
            return Err(Error::Instance(format!(
                "conflict graph needs equal lengths, got {} and {}",
                a1.len(),
                a2.len()
            )));
        }
        let n = a1.len();
        let is_vertex: Vec<bool> = (0..=n)
            .map(|p| p > 0 && a1.letter(p) == a2.letter(p))
            .collect();
        let vertices: Vec<usize> = (1..=n).filter(|&p| is_vertex[p]).collect();
        let edges: Vec<(usize, usize)> = a1
            .arcs()
            .symmetric_difference(a2.arcs())
            .copied()
            .filter(|&(p, q)| is_vertex[p] && is_vertex[q])
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut adjacency = vec![Vec::new(); n + 1];
        for &(p, q) in &edges {
            adjacency[p].push(q);
            adjacency[q].push(p);
        }
        Ok(Self {
            n,
            vertices,
            edges,
            adjacency,
        })
    }

    /// Sequence length the graph was built from.
    pub fn sequence_len(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, p: usize) -> &[usize] {
        &self.adjacency[p]
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Lexicographically smallest maximum independent set, in increasing
    /// order. Linear time; requires maximum degree at most two.
    pub fn max_independent_set(&self) -> Result<Vec<usize>> {
        let degree = self.max_degree();
        if degree > 2 {
            return Err(Error::Capability(format!(
                "conflict graph has a vertex of degree {degree}; \
                 the linear-time solver handles degree <= 2 only, use exact_search"
            )));
        }
        let components = self.components();
        let mut locate = vec![(usize::MAX, 0usize); self.n + 1];
        for (c, comp) in components.iter().enumerate() {
            for (k, &p) in comp.order.iter().enumerate() {
                locate[p] = (c, k);
            }
        }
        let mut state: Vec<Vec<Slot>> = components
            .iter()
            .map(|c| vec![Slot::Open; c.order.len()])
            .collect();
        let mut chosen = Vec::new();
        for &p in &self.vertices {
            let (c, k) = locate[p];
            let take = components[c].admits(k, &state[c]);
            state[c][k] = if take { Slot::In } else { Slot::Out };
            if take {
                chosen.push(p);
            }
        }
        Ok(chosen)
    }

    /// Paths (walked from an endpoint) and cycles (rotated so the smallest
    /// position comes first), each with nearest-smaller-label indices.
    fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        let path_starts = self
            .vertices
            .iter()
            .filter(|&&p| self.adjacency[p].len() <= 1);
        for &start in path_starts {
            if !seen[start] {
                out.push(Component::new(self.walk(start, &mut seen), false));
            }
        }
        // Every vertex left has degree two. Scanning in increasing order, the
        // first unseen vertex is the smallest one of its cycle.
        for &start in &self.vertices {
            if !seen[start] {
                out.push(Component::new(self.walk(start, &mut seen), true));
            }
        }
        out
    }

    fn walk(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut order = vec![start];
        seen[start] = true;
        let mut prev = 0;
        let mut cur = start;
        loop {
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&q| q != prev && !seen[q]);
            match next {
                Some(q) => {
                    seen[q] = true;
                    order.push(q);
                    prev = cur;
                    cur = q;
                }
                None => return order,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Open,
    In,
    Out,
}

struct Component {
    order: Vec<usize>,
    cyclic: bool,
    /// Index of the nearest earlier-processed vertex to the left, or -1.
    left: Vec<isize>,
    /// Index of the nearest earlier-processed vertex to the right, or `len`.
    right: Vec<isize>,
}

impl Component {
    fn new(order: Vec<usize>, cyclic: bool) -> Self {
        let len = order.len();
        let mut left = vec![-1isize; len];
        let mut right = vec![len as isize; len];
        let mut stack: Vec<usize> = Vec::new();
        for k in 0..len {
            while let Some(&top) = stack.last() {
                if order[top] > order[k] {
                    right[top] = k as isize;
                    stack.pop();
                } else {
                    break;
                }
            }
            if let Some(&top) = stack.last() {
                left[k] = top as isize;
            }
            stack.push(k);
        }
        Self {
            order,
            cyclic,
            left,
            right,
        }
    }

    fn len(&self) -> isize {
        self.order.len() as isize
    }

    /// State of a segment boundary. Path ends behave as excluded vertices;
    /// on a cycle the index `len` wraps to the root at index 0.
    fn boundary_in(&self, idx: isize, state: &[Slot]) -> bool {
        if idx < 0 {
            return false;
        }
        if idx >= self.len() {
            return self.cyclic && state[0] == Slot::In;
        }
        state[idx as usize] == Slot::In
    }

    /// Whether vertex `k` belongs to some maximum independent set that agrees
    /// with every decision taken so far. All vertices strictly between
    /// `left[k]` and `right[k]` are still open, so only that segment changes.
    fn admits(&self, k: usize, state: &[Slot]) -> bool {
        if self.cyclic && k == 0 {
            // Cycles are vertex-transitive: every vertex lies in some optimum.
            return true;
        }
        let (l, r, ki) = (self.left[k], self.right[k], k as isize);
        let l_in = self.boundary_in(l, state) as isize;
        let r_in = self.boundary_in(r, state) as isize;
        if (l == ki - 1 && l_in == 1) || (r == ki + 1 && r_in == 1) {
            return false;
        }
        let half = |cells: isize| (cells.max(0) + 1) / 2;
        let current = half(r - l - 1 - l_in - r_in);
        let with_k = 1 + half(ki - l - 1 - l_in - 1) + half(r - ki - 1 - r_in - 1);
        with_k == current
    }
}

/// Exact identity-constrained LAPCS in linear time for conflict graphs of
/// maximum degree two (both arc sets free of shared endpoints).
pub fn diagonal_conflict_solve(
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
) -> Result<SolveResult> {
    let graph = ConflictGraph::build(a1, a2)?;
    let chosen = graph.max_independent_set()?;
    let witness = Mapping::from_sorted_unchecked(chosen.into_iter().map(|p| (p, p)).collect());
    Ok(SolveResult::new(
        witness,
        SolveStats {
            solver: SolverKind::ConflictGraph,
            nodes: graph.vertices.len() as u64,
            table_cells: 0,
        },
    ))
}
