use std::fmt;
use std::num::NonZeroUsize;

use crate::error::{Error, Result};

/// Restriction on which position pairs `(i, j)` (S1 position, S2 position)
/// may be matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchConstraint {
    Unconstrained,
    /// Both sequences are cut into blocks of `c` letters (the last block may
    /// be short); matches stay within blocks of the same index.
    Fragment(NonZeroUsize),
    /// `S2[j]` may only match `S1[j-c ..= j+c]`.
    Diagonal(usize),
}

impl MatchConstraint {
    pub fn fragment(c: usize) -> Result<Self> {
        NonZeroUsize::new(c)
            .map(MatchConstraint::Fragment)
            .ok_or_else(|| Error::Validation("fragment length must be at least 1".into()))
    }

    pub fn diagonal(c: usize) -> Self {
        MatchConstraint::Diagonal(c)
    }

    /// `Fragment(1)`, the constraint every reduction instance uses.
    pub fn identity() -> Self {
        MatchConstraint::Fragment(NonZeroUsize::MIN)
    }

    /// True for the constraints that only admit `i == j`.
    pub fn is_identity(self) -> bool {
        match self {
            MatchConstraint::Unconstrained => false,
            MatchConstraint::Fragment(c) => c.get() == 1,
            MatchConstraint::Diagonal(c) => c == 0,
        }
    }

    /// Whether 1-based positions `i` of S1 and `j` of S2 may be matched.
    pub fn allowed(self, i: usize, j: usize) -> bool {
        debug_assert!(i >= 1 && j >= 1, "positions are 1-based");
        match self {
            MatchConstraint::Unconstrained => true,
            MatchConstraint::Fragment(c) => (i - 1) / c.get() == (j - 1) / c.get(),
            MatchConstraint::Diagonal(c) => i.abs_diff(j) <= c,
        }
    }
}

impl fmt::Display for MatchConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchConstraint::Unconstrained => f.write_str("unconstrained"),
            MatchConstraint::Fragment(c) => write!(f, "fragment({c})"),
            MatchConstraint::Diagonal(c) => write!(f, "diagonal({c})"),
        }
    }
}
