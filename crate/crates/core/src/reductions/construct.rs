//! The two constructions from Independent Set to identity-constrained LAPCS.
//!
//! * First reduction: `S1 = S2 = a^n`, `P1 = E`, `P2 = {}`, threshold `k`.
//!   An identity mapping on `I` is arc-preserving iff `I` is independent.
//! * Second reduction (alphabet `{a, b}`): if `k > n`, the trivially
//!   unsatisfiable instance `S1 = S2 = "a"` with threshold `k`. Otherwise
//!   `S1 = S2 = (b a^n b)^n`, with blocks of width `w = n + 2`. Both arc sets
//!   hold the bracket arcs `((i-1)w + 1, i*w)` linking the two `b`s of block
//!   `i`; `P1` additionally holds, for every edge `{i, j}`, the edge arc
//!   `((i-1)w + j + 1, (j-1)w + i + 1)` between the `j`-th `a` of block `i`
//!   and the `i`-th `a` of block `j`. The threshold is `k * w`.

use std::fmt;

use crate::arcs::{AnnotatedSequence, Mapping, MatchConstraint, StructureLevel};
use crate::error::{Error, Result};
use crate::reductions::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `|Σ| = 1`, LAPCS(unlimited, plain).
    One,
    /// `|Σ| = 2`, LAPCS(crossing, chain).
    Two,
}

impl Theorem {
    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Theorem::One),
            2 => Ok(Theorem::Two),
            _ => Err(Error::InvalidInput(format!(
                "unknown reduction {n}; expected 1 or 2"
            ))),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

/// Which construction produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Theorem1,
    /// `k > n`: constant single-letter instance.
    Theorem2CaseI,
    /// `k <= n`: block construction.
    Theorem2CaseII,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: Construction,
    pub graph: Graph,
    pub k: usize,
}

/// A decision instance: is there an arc-preserving common subsequence of
/// `a1`, `a2` under `mc` with length at least `threshold`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub a1: AnnotatedSequence,
    pub a2: AnnotatedSequence,
    pub mc: MatchConstraint,
    pub threshold: usize,
    pub provenance: Provenance,
}

impl ReductionInstance {
    pub fn theorem(&self) -> Theorem {
        match self.provenance.construction {
            Construction::Theorem1 => Theorem::One,
            _ => Theorem::Two,
        }
    }

    /// Block width `n + 2` of the second construction.
    pub fn block_width(&self) -> usize {
        self.provenance.graph.order() + 2
    }
}

pub fn reduce(g: &Graph, k: usize, theorem: Theorem) -> Result<ReductionInstance> {
    match theorem {
        Theorem::One => reduce_theorem1(g, k),
        Theorem::Two => reduce_theorem2(g, k),
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(())
}

pub fn reduce_theorem1(g: &Graph, k: usize) -> Result<ReductionInstance> {
    check_k(k)?;
    let letters = "a".repeat(g.order());
    Ok(ReductionInstance {
        a1: AnnotatedSequence::new(&letters, g.edges().iter().copied())?,
        a2: AnnotatedSequence::plain(&letters),
        mc: MatchConstraint::identity(),
        threshold: k,
        provenance: Provenance {
            construction: Construction::Theorem1,
            graph: g.clone(),
            k,
        },
    })
}

/// Bracket arc of block `i` (1-based) for a graph of order `n`.
pub fn bracket_arc(n: usize, i: usize) -> (usize, usize) {
    let w = n + 2;
    ((i - 1) * w + 1, i * w)
}

/// Edge arc for the ordered vertex pair `(i, j)`, normalized to `α < β`.
/// `(i, j)` and `(j, i)` give the same arc.
pub fn edge_arc(n: usize, i: usize, j: usize) -> (usize, usize) {
    let w = n + 2;
    let alpha = (i - 1) * w + j + 1;
    let beta = (j - 1) * w + i + 1;
    (alpha.min(beta), alpha.max(beta))
}

pub fn reduce_theorem2(g: &Graph, k: usize) -> Result<ReductionInstance> {
    check_k(k)?;
    // `Graph` already excludes loops and parallel edges, so every `a`
    // carries at most one edge arc.
    let g = g.clone();
    let n = g.order();
    if k > n {
        return Ok(ReductionInstance {
            a1: AnnotatedSequence::plain("a"),
            a2: AnnotatedSequence::plain("a"),
            mc: MatchConstraint::identity(),
            threshold: k,
            provenance: Provenance {
                construction: Construction::Theorem2CaseI,
                graph: g,
                k,
            },
        });
    }

    let block = format!("b{}b", "a".repeat(n));
    let letters = block.repeat(n);
    let brackets: Vec<(usize, usize)> = (1..=n).map(|i| bracket_arc(n, i)).collect();
    let edge_arcs = g.edges().iter().map(|&(i, j)| edge_arc(n, i, j));
    let a1 = AnnotatedSequence::new(&letters, brackets.iter().copied().chain(edge_arcs))?;
    let a2 = AnnotatedSequence::new(&letters, brackets.iter().copied())?;
    let inst = ReductionInstance {
        a1,
        a2,
        mc: MatchConstraint::identity(),
        threshold: k * (n + 2),
        provenance: Provenance {
            construction: Construction::Theorem2CaseII,
            graph: g,
            k,
        },
    };
    check_case_two(&inst)?;
    Ok(inst)
}

/// Structural post-conditions of the block construction.
fn check_case_two(inst: &ReductionInstance) -> Result<()> {
    let g = &inst.provenance.graph;
    let n = g.order();
    let fail = |what: &str| Err(Error::Validation(format!("block construction: {what}")));
    if inst.a1.len() != n * (n + 2) || inst.a2.len() != inst.a1.len() {
        return fail("sequence length is not n(n+2)");
    }
    if inst.a1.arcs().len() != g.size() + n || inst.a2.arcs().len() != n {
        return fail("unexpected arc count");
    }
    if !inst.a2.arcs().is_subset(inst.a1.arcs()) {
        return fail("P2 is not contained in P1");
    }
    if inst.a2.structure() != StructureLevel::Chain {
        return fail("P2 does not classify as chain");
    }
    if !StructureLevel::Crossing.permits(inst.a1.structure()) {
        return fail("P1 shares endpoints");
    }
    let w = n + 2;
    for &(i, j) in g.edges() {
        let (alpha, beta) = edge_arc(n, i, j);
        let in_block = |pos: usize, blk: usize| (pos - 1) / w + 1 == blk;
        if inst.a1.letter(alpha) != Some('a')
            || inst.a1.letter(beta) != Some('a')
            || !in_block(alpha, i)
            || !in_block(beta, j)
        {
            return fail("edge arc does not join 'a' positions of its two blocks");
        }
    }
    Ok(())
}

/// The mapping used in the forward direction of each proof: identity on `I`
/// for the first construction, identity on every position of the blocks in
/// `I` for the block construction. For the constant instance the empty
/// mapping is returned.
pub fn mapping_from_independent_set(inst: &ReductionInstance, set: &[usize]) -> Result<Mapping> {
    let n = inst.provenance.graph.order();
    if let Some(&v) = set.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::InvalidInput(format!("vertex {v} outside 1..={n}")));
    }
    match inst.provenance.construction {
        Construction::Theorem1 => Mapping::identity(set.iter().copied()),
        Construction::Theorem2CaseI => Ok(Mapping::empty()),
        Construction::Theorem2CaseII => {
            let w = inst.block_width();
            Mapping::identity(
                set.iter()
                    .flat_map(|&i| (1..=w).map(move |l| (i - 1) * w + l)),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(a: &AnnotatedSequence) -> Vec<(usize, usize)> {
        a.arcs().iter().copied().collect()
    }

    #[test]
    fn first_reduction_examples() {
        let inst = reduce_theorem1(&Graph::complete(3), 1).unwrap();
        assert_eq!(inst.a1.sequence(), "aaa");
        assert_eq!(inst.a2.sequence(), "aaa");
        assert_eq!(arcs(&inst.a1), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(arcs(&inst.a2).is_empty());
        assert_eq!(inst.threshold, 1);
        assert_eq!(inst.mc, MatchConstraint::identity());
        assert_eq!(inst.a2.structure(), StructureLevel::Plain);
        assert_eq!(inst.a1.structure(), StructureLevel::Unlimited);

        let inst = reduce_theorem1(&Graph::empty(2), 2).unwrap();
        assert_eq!(inst.a1.sequence(), "aa");
        assert!(arcs(&inst.a1).is_empty());
        assert_eq!(inst.threshold, 2);

        let inst = reduce_theorem1(&Graph::path(3), 2).unwrap();
        assert_eq!(arcs(&inst.a1), vec![(1, 2), (2, 3)]);
        assert_eq!(inst.threshold, 2);

        assert!(reduce_theorem1(&Graph::path(3), 0).is_err());
    }

    #[test]
    fn second_reduction_single_edge() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let inst = reduce_theorem2(&g, 1).unwrap();
        assert_eq!(inst.a1.sequence(), "baabbaab");
        assert_eq!(inst.a2.sequence(), "baabbaab");
        assert_eq!(arcs(&inst.a1), vec![(1, 4), (3, 6), (5, 8)]);
        assert_eq!(arcs(&inst.a2), vec![(1, 4), (5, 8)]);
        assert_eq!(inst.threshold, 4);
        assert_eq!(inst.provenance.construction, Construction::Theorem2CaseII);
        assert_eq!(inst.a1.structure(), StructureLevel::Crossing);
    }

    #[test]
    fn second_reduction_triangle() {
        let inst = reduce_theorem2(&Graph::complete(3), 1).unwrap();
        assert_eq!(inst.a1.sequence(), "baaab".repeat(3));
        assert_eq!(
            arcs(&inst.a1),
            vec![(1, 5), (3, 7), (4, 12), (6, 10), (9, 13), (11, 15)]
        );
        assert_eq!(arcs(&inst.a2), vec![(1, 5), (6, 10), (11, 15)]);
        assert_eq!(inst.threshold, 5);
    }

    #[test]
    fn second_reduction_case_one() {
        for g in [Graph::complete(3), Graph::empty(1), Graph::path(4)] {
            let n = g.order();
            let inst = reduce_theorem2(&g, n + 1).unwrap();
            assert_eq!(inst.a1, AnnotatedSequence::plain("a"));
            assert_eq!(inst.a2, AnnotatedSequence::plain("a"));
            assert_eq!(inst.threshold, n + 1);
            assert_eq!(inst.provenance.construction, Construction::Theorem2CaseI);
        }
    }

    #[test]
    fn edgeless_block_construction_is_chain() {
        let inst = reduce_theorem2(&Graph::empty(3), 2).unwrap();
        assert_eq!(inst.a1.structure(), StructureLevel::Chain);
        assert_eq!(inst.threshold, 10);
    }

    #[test]
    fn symmetric_edge_formula() {
        assert_eq!(edge_arc(2, 1, 2), (3, 6));
        assert_eq!(edge_arc(2, 2, 1), (3, 6));
        assert_eq!(bracket_arc(3, 2), (6, 10));
    }

    #[test]
    fn forward_mappings() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let inst = reduce_theorem2(&g, 1).unwrap();
        let m = mapping_from_independent_set(&inst, &[2]).unwrap();
        assert_eq!(m, Mapping::identity(5..=8).unwrap());
        let inst = reduce_theorem1(&Graph::path(3), 2).unwrap();
        let m = mapping_from_independent_set(&inst, &[1, 3]).unwrap();
        assert_eq!(m, Mapping::identity([1, 3]).unwrap());
        assert!(mapping_from_independent_set(&inst, &[4]).is_err());
    }
}
