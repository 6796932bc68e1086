//! Brute-force oracles shared by the integration tests. None of them call
//! the library's solvers or classifier.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lapcs::{AnnotatedSequence, MatchConstraint, StructureLevel};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seq(s: &str, arcs: &[(usize, usize)]) -> AnnotatedSequence {
    AnnotatedSequence::new(s, arcs.iter().copied()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn has_arc(arcs: &BTreeSet<(usize, usize)>, a: usize, b: usize) -> bool {
    arcs.contains(&(a.min(b), a.max(b)))
}

fn allowed(mc: MatchConstraint, i: usize, j: usize) -> bool {
    match mc {
        MatchConstraint::Unconstrained => true,
        MatchConstraint::Fragment(c) => (i - 1) / c.get() == (j - 1) / c.get(),
        MatchConstraint::Diagonal(c) => i.abs_diff(j) <= c,
    }
}

/// Pairwise definition of arc preservation on an increasing pair list.
pub fn preserves_arcs(
    pairs: &[(usize, usize)],
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
) -> bool {
    pairs.iter().enumerate().all(|(x, &(i1, j1))| {
        pairs[x + 1..]
            .iter()
            .all(|&(i2, j2)| has_arc(a1.arcs(), i1, i2) == has_arc(a2.arcs(), j1, j2))
    })
}

/// Lexicographically smallest maximum arc-preserving mapping, by exhaustive
/// pre-order enumeration of increasing pair lists.
pub fn brute_force_lapcs(
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
    mc: MatchConstraint,
) -> Vec<(usize, usize)> {
    let cand: Vec<(usize, usize)> = (1..=a1.len())
        .flat_map(|i| (1..=a2.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| a1.letter(i) == a2.letter(j) && allowed(mc, i, j))
        .collect();
    fn go(
        cand: &[(usize, usize)],
        start: usize,
        path: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
        a1: &AnnotatedSequence,
        a2: &AnnotatedSequence,
    ) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        for x in start..cand.len() {
            let (i, j) = cand[x];
            if let Some(&(pi, pj)) = path.last() {
                if i <= pi || j <= pj {
                    continue;
                }
            }
            let ok = path
                .iter()
                .all(|&(pi, pj)| has_arc(a1.arcs(), pi, i) == has_arc(a2.arcs(), pj, j));
            if ok {
                path.push((i, j));
                go(cand, x + 1, path, best, a1, a2);
                path.pop();
            }
        }
    }
    let mut best = Vec::new();
    go(&cand, 0, &mut Vec::new(), &mut best, a1, a2);
    best
}

/// Classic LCS length by enumerating every subsequence of the shorter side.
pub fn brute_force_lcs(s1: &str, s2: &str) -> usize {
    let (short, long): (Vec<char>, Vec<char>) = if s1.len() <= s2.len() {
        (s1.chars().collect(), s2.chars().collect())
    } else {
        (s2.chars().collect(), s1.chars().collect())
    };
    let is_subseq = |sub: &[char]| {
        let mut it = long.iter();
        sub.iter().all(|c| it.any(|d| d == c))
    };
    (0u32..1 << short.len())
        .filter_map(|mask| {
            let sub: Vec<char> = (0..short.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| short[b])
                .collect();
            is_subseq(&sub).then_some(sub.len())
        })
        .max()
        .unwrap_or(0)
}

/// Minimum vertex cover size by subset enumeration.
pub fn brute_force_min_vertex_cover(vertices: &[usize], edges: &[(usize, usize)]) -> usize {
    assert!(vertices.len() <= 24);
    let index = |v: usize| vertices.iter().position(|&u| u == v).unwrap();
    let edge_masks: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(a, b)| (1 << index(a), 1 << index(b)))
        .collect();
    (0u32..1 << vertices.len())
        .filter(|&s| edge_masks.iter().all(|&(a, b)| s & (a | b) != 0))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Structure level by evaluating the four restrictions over all ordered
/// pairs of distinct arcs.
pub fn quantifier_level(arcs: &BTreeSet<(usize, usize)>) -> StructureLevel {
    let within = |x: usize, (lo, hi): (usize, usize)| lo <= x && x <= hi;
    let pairs = || {
        arcs.iter()
            .flat_map(|&a| arcs.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| a != b)
    };
    let r1 = pairs().all(|((i1, i2), (i3, i4))| i1 != i3 && i1 != i4 && i2 != i3 && i2 != i4);
    let r2 = pairs().all(|((i1, i2), b)| within(i1, b) == within(i2, b));
    let r3 = pairs().all(|((i1, i2), (i3, _))| (i1 <= i3) == (i2 <= i3));
    let r4 = arcs.is_empty();
    if r4 {
        StructureLevel::Plain
    } else if r1 && r2 && r3 {
        StructureLevel::Chain
    } else if r1 && r2 {
        StructureLevel::Nested
    } else if r1 {
        StructureLevel::Crossing
    } else {
        StructureLevel::Unlimited
    }
}

/// Annotated sequence of length `0..=max_len` over `alphabet` with an
/// arbitrary arc set.
pub fn arb_annotated(
    max_len: usize,
    alphabet: &'static [char],
) -> impl Strategy<Value = AnnotatedSequence> {
    (0..=max_len).prop_flat_map(move |n| {
        let hi = n.max(1);
        (
            proptest::collection::vec(proptest::sample::select(alphabet), n),
            proptest::collection::vec((0..hi, 0..hi), 0..=n),
        )
            .prop_map(move |(letters, raw)| {
                let s: String = letters.into_iter().collect();
                let arcs = raw
                    .into_iter()
                    .filter(|&(a, b)| a != b && a < n && b < n)
                    .map(|(a, b)| (a + 1, b + 1));
                AnnotatedSequence::new(&s, arcs).unwrap()
            })
    })
}

pub fn arb_constraint() -> impl Strategy<Value = MatchConstraint> {
    prop_oneof![
        Just(MatchConstraint::Unconstrained),
        (1usize..=4).prop_map(|c| MatchConstraint::fragment(c).unwrap()),
        (0usize..=3).prop_map(MatchConstraint::diagonal),
    ]
}
