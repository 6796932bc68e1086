use std::fmt::Write as _;

use crate::arcs::constraint::MatchConstraint;
use crate::arcs::sequence::AnnotatedSequence;
use crate::error::{Error, Result};

/// An order-preserving partial matching between positions of two sequences.
///
/// Pairs are `(i, j)` with `i` a 1-based position of S1 and `j` of S2, kept
/// sorted and strictly increasing in both coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mapping {
    pairs: Vec<(usize, usize)>,
}

impl Mapping {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for &(i, j) in &pairs {
            if i == 0 || j == 0 {
                return Err(Error::Validation(format!(
                    "pair ({i},{j}) uses a 0 position; positions are 1-based"
                )));
            }
        }
        for w in pairs.windows(2) {
            let ((i1, j1), (i2, j2)) = (w[0], w[1]);
            if i1 == i2 || j1 >= j2 {
                return Err(Error::Validation(format!(
                    "pairs ({i1},{j1}) and ({i2},{j2}) are not strictly increasing in both coordinates"
                )));
            }
        }
        Ok(Self { pairs })
    }

    /// The identity mapping on the given positions.
    pub fn identity(positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(positions.into_iter().map(|p| (p, p)))
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        debug_assert!(Self::new(pairs.clone()).is_ok());
        Self { pairs }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    /// The same matching seen from S2 to S1.
    pub fn inverse(&self) -> Mapping {
        Mapping {
            pairs: self.pairs.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// Checks positions are in range and matched letters agree.
    pub fn validate(&self, a1: &AnnotatedSequence, a2: &AnnotatedSequence) -> Result<()> {
        for &(i, j) in &self.pairs {
            let (Some(x), Some(y)) = (a1.letter(i), a2.letter(j)) else {
                return Err(Error::Validation(format!(
                    "pair ({i},{j}) out of range for lengths {} and {}",
                    a1.len(),
                    a2.len()
                )));
            };
            if x != y {
                return Err(Error::Validation(format!(
                    "pair ({i},{j}) matches different letters {x:?} and {y:?}"
                )));
            }
        }
        Ok(())
    }

    pub fn satisfies(&self, mc: MatchConstraint) -> bool {
        self.pairs.iter().all(|&(i, j)| mc.allowed(i, j))
    }

    /// The common subsequence spelled by this mapping.
    pub fn common_subsequence(&self, a1: &AnnotatedSequence) -> String {
        self.pairs
            .iter()
            .filter_map(|&(i, _)| a1.letter(i))
            .collect()
    }

    /// One `i j` line per pair.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (i, j) in &self.pairs {
            writeln!(out, "{i} {j}").unwrap();
        }
        out
    }
}

/// True iff every pair of matched S1 positions carries an arc exactly when
/// the corresponding S2 positions do.
///
/// A mapping that is itself invalid for `(a1, a2)` is an error rather than
/// `false`.
pub fn is_arc_preserving(
    m: &Mapping,
    a1: &AnnotatedSequence,
    a2: &AnnotatedSequence,
) -> Result<bool> {
    m.validate(a1, a2)?;
    let mut to2 = vec![0usize; a1.len() + 1];
    let mut to1 = vec![0usize; a2.len() + 1];
    for &(i, j) in m.pairs() {
        to2[i] = j;
        to1[j] = i;
    }
    let preserved = |arcs: &AnnotatedSequence, image: &[usize], other: &AnnotatedSequence| {
        arcs.arcs().iter().all(|&(a, b)| {
            let (x, y) = (image[a], image[b]);
            x == 0 || y == 0 || other.has_arc(x, y)
        })
    };
    Ok(preserved(a1, &to2, a2) && preserved(a2, &to1, a1))
}
