use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Permitted arc structure, from strictest (`Plain`) to loosest (`Unlimited`).
///
/// The derived ordering follows strictness, so `a <= b` means every arc set
/// of level `a` is also admitted at level `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureLevel {
    /// No arcs at all.
    Plain,
    /// No shared endpoints, no crossing, no nesting.
    Chain,
    /// No shared endpoints, no crossing.
    Nested,
    /// No shared endpoints.
    Crossing,
    Unlimited,
}

impl StructureLevel {
    pub const ALL: [StructureLevel; 5] = [
        StructureLevel::Plain,
        StructureLevel::Chain,
        StructureLevel::Nested,
        StructureLevel::Crossing,
        StructureLevel::Unlimited,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureLevel::Plain => "plain",
            StructureLevel::Chain => "chain",
            StructureLevel::Nested => "nested",
            StructureLevel::Crossing => "crossing",
            StructureLevel::Unlimited => "unlimited",
        }
    }

    /// Whether an arc set classified as `other` is admitted at this level.
    pub fn permits(self, other: StructureLevel) -> bool {
        other <= self
    }
}

impl fmt::Display for StructureLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StructureLevel::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown structure level {s:?}")))
    }
}

/// Returns the strictest level whose restrictions all hold for `arcs`.
///
/// Runs in O(n + m log m): endpoint sharing is detected by counting, and on
/// endpoint-disjoint sets a single left-to-right bracket scan detects
/// crossing (a close that does not match the innermost open arc) and
/// nesting (bracket depth reaching two).
pub fn classify_structure<I>(arcs: I, n: usize) -> Result<StructureLevel>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
    for &(a, b) in &arcs {
        if !(1 <= a && a < b && b <= n) {
            return Err(Error::Validation(format!(
                "arc ({a},{b}) is not a canonical arc of a length-{n} sequence"
            )));
        }
    }
    arcs.sort_unstable();
    arcs.dedup();
    if arcs.is_empty() {
        return Ok(StructureLevel::Plain);
    }

    // Open/close event per position; a second event at a position means a
    // shared endpoint.
    let mut event: Vec<Option<(usize, bool)>> = vec![None; n + 1];
    for (id, &(a, b)) in arcs.iter().enumerate() {
        for (pos, opens) in [(a, true), (b, false)] {
            if event[pos].is_some() {
                return Ok(StructureLevel::Unlimited);
            }
            event[pos] = Some((id, opens));
        }
    }

    let mut stack: Vec<usize> = Vec::new();
    let mut max_depth = 0;
    for (id, opens) in event.into_iter().flatten() {
        if opens {
            stack.push(id);
            max_depth = max_depth.max(stack.len());
        } else if stack.pop() != Some(id) {
            return Ok(StructureLevel::Crossing);
        }
    }
    Ok(if max_depth >= 2 {
        StructureLevel::Nested
    } else {
        StructureLevel::Chain
    })
}
