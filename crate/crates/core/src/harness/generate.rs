//! Graph enumeration and seeded random instance generation.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arcs::{AnnotatedSequence, StructureLevel};
use crate::error::{Error, Result};
use crate::reductions::Graph;

/// Largest order whose labeled graphs fit a `u64` edge mask.
pub const MAX_ENUMERATION_ORDER: usize = 11;

/// Every labeled simple graph on `n` vertices, in edge-mask order
/// (`2^(n(n-1)/2)` graphs, no isomorphism reduction).
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Budget(format!(
            "exhaustive enumeration limited to order {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Erdős–Rényi graph: each pair becomes an edge with probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated pairs are simple")
}

pub fn random_sequence<R: Rng>(len: usize, alphabet: &[char], rng: &mut R) -> String {
    (0..len)
        .map(|_| *alphabet.choose(rng).expect("non-empty alphabet"))
        .collect()
}

/// Random arc set on a length-`len` sequence whose classification is at
/// most `level` (it may come out stricter).
pub fn random_arcs<R: Rng>(len: usize, level: StructureLevel, rng: &mut R) -> Vec<(usize, usize)> {
    let pick_endpoints = |rng: &mut R| {
        let r = rng.gen_range(0..=len / 2);
        let mut positions: Vec<usize> = (1..=len).collect();
        positions.shuffle(rng);
        positions.truncate(2 * r);
        positions.sort_unstable();
        positions
    };
    match level {
        StructureLevel::Plain => Vec::new(),
        StructureLevel::Chain => pick_endpoints(rng)
            .chunks(2)
            .map(|c| (c[0], c[1]))
            .collect(),
        StructureLevel::Nested => {
            let positions = pick_endpoints(rng);
            let mut opens_left = positions.len() / 2;
            let mut stack = Vec::new();
            let mut arcs = Vec::new();
            for p in positions {
                if opens_left > 0 && (stack.is_empty() || rng.gen_bool(0.5)) {
                    stack.push(p);
                    opens_left -= 1;
                } else {
                    arcs.push((stack.pop().expect("balanced"), p));
                }
            }
            arcs
        }
        StructureLevel::Crossing => {
            let mut positions = pick_endpoints(rng);
            positions.shuffle(rng);
            positions
                .chunks(2)
                .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
                .collect()
        }
        StructureLevel::Unlimited => {
            if len < 2 {
                return Vec::new();
            }
            let count = rng.gen_range(0..=len);
            (0..count)
                .map(|_| {
                    let a = rng.gen_range(1..len);
                    let b = rng.gen_range(a + 1..=len);
                    (a, b)
                })
                .collect()
        }
    }
}

pub fn random_annotated<R: Rng>(
    len: usize,
    alphabet: &[char],
    level: StructureLevel,
    rng: &mut R,
) -> AnnotatedSequence {
    let seq = random_sequence(len, alphabet, rng);
    AnnotatedSequence::new(&seq, random_arcs(len, level, rng)).expect("generated arcs are valid")
}
