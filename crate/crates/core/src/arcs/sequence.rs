use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::arcs::structure::{classify_structure, StructureLevel};
use crate::error::{Error, Result};

/// A sequence over an arbitrary alphabet together with a set of arcs.
///
/// Positions are 1-based. Arcs are stored canonically as `(left, right)` with
/// `left < right`, deduplicated and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnotatedSequence {
    seq: Vec<char>,
    arcs: BTreeSet<(usize, usize)>,
}

impl AnnotatedSequence {
    /// Builds an annotated sequence, normalizing reversed pairs and merging
    /// duplicates. Self-pairs and out-of-range endpoints are rejected.
    pub fn new<I>(seq: &str, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let seq: Vec<char> = seq.chars().collect();
        let n = seq.len();
        let mut canon = BTreeSet::new();
        for (a, b) in arcs {
            canon.insert(canonical_arc(a, b, n)?);
        }
        Ok(Self { seq, arcs: canon })
    }

    /// A sequence with no arcs.
    pub fn plain(seq: &str) -> Self {
        Self {
            seq: seq.chars().collect(),
            arcs: BTreeSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.seq
    }

    /// Letter at 1-based position `pos`.
    pub fn letter(&self, pos: usize) -> Option<char> {
        pos.checked_sub(1).and_then(|i| self.seq.get(i)).copied()
    }

    pub fn sequence(&self) -> String {
        self.seq.iter().collect()
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arcs(&self) -> bool {
        !self.arcs.is_empty()
    }

    /// Whether positions `a` and `b` are linked by an arc, in either order.
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.arcs.contains(&key)
    }

    pub fn structure(&self) -> StructureLevel {
        classify_structure(self.arcs.iter().copied(), self.len())
            .expect("arcs are validated on construction")
    }

    /// Parses the line-oriented text format.
    ///
    /// The first line that does not start with `#` holds the sequence (it may
    /// be empty). Every later non-empty, non-comment line is an arc `i j`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut seq: Option<Vec<char>> = None;
        let mut arcs = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') {
                continue;
            }
            let Some(letters) = &seq else {
                if let Some(c) = line.chars().find(|c| c.is_whitespace()) {
                    return Err(Error::parse(
                        line_no,
                        format!("sequence line contains whitespace {c:?}"),
                    ));
                }
                seq = Some(line.chars().collect());
                continue;
            };
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(
                    line_no,
                    format!("expected two positions \"i j\", found {line:?}"),
                ));
            }
            let a = parse_position(fields[0], line_no)?;
            let b = parse_position(fields[1], line_no)?;
            let arc = canonical_arc(a, b, letters.len())
                .map_err(|e| Error::parse(line_no, e.to_string()))?;
            arcs.insert(arc);
        }
        Ok(Self {
            seq: seq.unwrap_or_default(),
            arcs,
        })
    }

    /// Renders the text format: the sequence line, then one `i j` line per
    /// arc in sorted order.
    ///
    /// Fails if the sequence cannot be represented on a single line (it
    /// contains whitespace or starts with the comment marker).
    pub fn to_text(&self) -> Result<String> {
        if self.seq.first() == Some(&'#') {
            return Err(Error::Validation(
                "sequence starting with '#' cannot be written".into(),
            ));
        }
        if self.seq.iter().any(|c| c.is_whitespace()) {
            return Err(Error::Validation(
                "sequence containing whitespace cannot be written".into(),
            ));
        }
        let mut out = self.sequence();
        out.push('\n');
        for (a, b) in &self.arcs {
            writeln!(out, "{a} {b}").unwrap();
        }
        Ok(out)
    }
}

fn parse_position(field: &str, line_no: usize) -> Result<usize> {
    field
        .parse::<usize>()
        .map_err(|_| Error::parse(line_no, format!("invalid position {field:?}")))
}

fn canonical_arc(a: usize, b: usize, n: usize) -> Result<(usize, usize)> {
    if a == b {
        return Err(Error::Validation(format!(
            "self-pair ({a},{b}) is not an arc"
        )));
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    if lo == 0 || hi > n {
        return Err(Error::Validation(format!(
            "arc ({lo},{hi}) out of range for length {n}"
        )));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_arcs() {
        let a = AnnotatedSequence::new("abcd", [(4, 1), (1, 4), (2, 3)]).unwrap();
        assert_eq!(
            a.arcs().iter().copied().collect::<Vec<_>>(),
            vec![(1, 4), (2, 3)]
        );
        assert!(a.has_arc(4, 1));
        assert!(!a.has_arc(1, 2));
    }

    #[test]
    fn rejects_self_pairs_and_out_of_range() {
        assert!(AnnotatedSequence::new("ab", [(1, 1)]).is_err());
        assert!(AnnotatedSequence::new("ab", [(1, 3)]).is_err());
        assert!(AnnotatedSequence::new("ab", [(0, 2)]).is_err());
        assert!(AnnotatedSequence::new("", [(1, 2)]).is_err());
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let text = "# header\nbaab\n# arcs\n1 4\n\n3 2\n";
        let a = AnnotatedSequence::parse_text(text).unwrap();
        assert_eq!(a.sequence(), "baab");
        assert_eq!(a.to_text().unwrap(), "baab\n1 4\n2 3\n");
    }

    #[test]
    fn empty_sequence_line() {
        let a = AnnotatedSequence::parse_text("\n").unwrap();
        assert!(a.is_empty());
        assert_eq!(a.to_text().unwrap(), "\n");
        assert!(AnnotatedSequence::parse_text("").unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = AnnotatedSequence::parse_text("aaa\n1 2\n1 x\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "invalid position \"x\""));
        let err = AnnotatedSequence::parse_text("aaa\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = AnnotatedSequence::parse_text("aaa\n2 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = AnnotatedSequence::parse_text("a a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn unwritable_sequences() {
        assert!(AnnotatedSequence::plain("#ab").to_text().is_err());
        assert!(AnnotatedSequence::plain("a b").to_text().is_err());
    }
}
