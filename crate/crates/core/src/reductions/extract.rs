use crate::arcs::{is_arc_preserving, Mapping};
use crate::error::{Error, Result};
use crate::reductions::construct::{Construction, ReductionInstance};

/// Vertex set read back from a mapping of a reduction instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedSet {
    pub vertices: Vec<usize>,
    /// Source-graph edges with both ends in `vertices`.
    pub violations: Vec<(usize, usize)>,
}

impl ExtractedSet {
    pub fn is_independent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reads a vertex set off a valid, arc-preserving mapping.
///
/// First construction: `{i : (i, i) in m}`, which is always independent.
/// Block construction: the blocks whose `n + 2` positions are all matched;
/// independence is not guaranteed there and violations are reported.
/// The constant instance encodes no vertices and yields the empty set.
pub fn extract_independent_set(inst: &ReductionInstance, m: &Mapping) -> Result<ExtractedSet> {
    if !m.satisfies(inst.mc) {
        return Err(Error::Validation(format!(
            "mapping violates the {} constraint",
            inst.mc
        )));
    }
    if !is_arc_preserving(m, &inst.a1, &inst.a2)? {
        return Err(Error::Validation("mapping is not arc-preserving".into()));
    }
    let graph = &inst.provenance.graph;
    let vertices: Vec<usize> = match inst.provenance.construction {
        Construction::Theorem1 => m.pairs().iter().map(|&(i, _)| i).collect(),
        Construction::Theorem2CaseI => Vec::new(),
        Construction::Theorem2CaseII => {
            let w = inst.block_width();
            let mut matched = vec![0usize; graph.order() + 1];
            for &(i, _) in m.pairs() {
                matched[(i - 1) / w + 1] += 1;
            }
            (1..=graph.order()).filter(|&b| matched[b] == w).collect()
        }
    };
    let violations = graph.violated_edges(&vertices);
    if inst.provenance.construction == Construction::Theorem1 && !violations.is_empty() {
        return Err(Error::Validation(format!(
            "arc-preserving mapping produced dependent vertices {violations:?}"
        )));
    }
    Ok(ExtractedSet {
        vertices,
        violations,
    })
}
