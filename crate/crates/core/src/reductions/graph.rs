use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `1..=n`.
///
/// Edges are stored as `(i, j)` with `i < j`. Loops and parallel edges are
/// rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub fn new_merging(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges, true)
    }

    fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        merge: bool,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if e.0 == 0 || e.1 > n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) outside vertex range 1..={n}"
                )));
            }
            if !set.insert(e) && !merge {
                return Err(Error::InvalidInput(format!(
                    "multiple edge ({},{})",
                    e.0, e.1
                )));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Self {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Labeled graph whose edge set is the bitmask `mask` over the pairs
    /// `(1,2), (1,3), ..., (n-1,n)` in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let edges = all_pairs(n)
            .enumerate()
            .filter(|&(bit, _)| bit < 64 && mask >> bit & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Self { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.violated_edges(set).is_empty()
    }

    /// Edges of the graph with both endpoints in `set`.
    pub fn violated_edges(&self, set: &[usize]) -> Vec<(usize, usize)> {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        self.edges
            .iter()
            .copied()
            .filter(|(a, b)| members.contains(a) && members.contains(b))
            .collect()
    }

    /// The empty graph and single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Stable identifier: order plus the hex edge bitmask over lexicographic
    /// vertex pairs.
    pub fn id(&self) -> String {
        let pairs: Vec<(usize, usize)> = all_pairs(self.n).collect();
        let mut nibbles = vec![0u8; pairs.len().div_ceil(4).max(1)];
        for (bit, e) in pairs.iter().enumerate() {
            if self.edges.contains(e) {
                nibbles[bit / 4] |= 1 << (bit % 4);
            }
        }
        let hex: String = nibbles
            .iter()
            .rev()
            .map(|d| char::from_digit(u32::from(*d), 16).unwrap())
            .collect();
        format!("n{}_{}", self.n, hex)
    }

    /// Parses the DIMACS edge format: `c` comment lines, one `p edge n m`
    /// header, then exactly `m` lines `e i j`. Loops and repeated edges are
    /// rejected; see [`parse_dimacs_edges`] for the raw edge list.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let (n, edges) = parse_dimacs_edges(text)?;
        let mut set = BTreeSet::new();
        for (line, a, b) in edges {
            if a == b {
                return Err(Error::parse(line, format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::parse(line, format!("multiple edge ({a},{b})")));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for (a, b) in &self.edges {
            writeln!(out, "e {a} {b}").unwrap();
        }
        out
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// An edge line as `(line number, i, j)`.
pub type DimacsEdge = (usize, usize, usize);

/// Raw DIMACS parse: vertex count and every edge line, with endpoints
/// range-checked but loops and repeats kept.
pub fn parse_dimacs_edges(text: &str) -> Result<(usize, Vec<DimacsEdge>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::parse(line_no, "expected \"p edge <n> <m>\""));
                }
                let n = parse_count(fields[2], line_no)?;
                let m = parse_count(fields[3], line_no)?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "edge line before problem line"));
                };
                if fields.len() != 3 {
                    return Err(Error::parse(line_no, "expected \"e <i> <j>\""));
                }
                let a = parse_count(fields[1], line_no)?;
                let b = parse_count(fields[2], line_no)?;
                for v in [a, b] {
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("vertex {v} outside 1..={n}")));
                    }
                }
                edges.push((line_no, a, b));
            }
            other => {
                return Err(Error::parse(
                    line_no,
                    format!("unknown line type {other:?}"),
                ));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(
            last_line.max(1),
            "missing \"p edge\" problem line",
        ));
    };
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok((n, edges))
}

fn parse_count(field: &str, line_no: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid integer {field:?}")))
}

/// Exact maximum independent set by branch and bound on bitmasks.
///
/// Returns the size and the lexicographically smallest optimal vertex list.
/// Graphs with more than `max_order` vertices (hard cap 64) are a budget
/// error.
pub fn max_independent_set(g: &Graph, max_order: usize) -> Result<(usize, Vec<usize>)> {
    if g.n > max_order.min(64) {
        return Err(Error::Budget(format!(
            "independent set oracle limited to {} vertices, got {}",
            max_order.min(64),
            g.n
        )));
    }
    let mut adj = vec![0u64; g.n];
    for &(a, b) in &g.edges {
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    let all = if g.n == 64 {
        u64::MAX
    } else {
        (1u64 << g.n) - 1
    };
    let mut best = (0u32, 0u64);
    branch(&adj, all, 0, &mut best);
    let witness = (0..g.n)
        .filter(|v| best.1 >> v & 1 == 1)
        .map(|v| v + 1)
        .collect();
    Ok((best.0 as usize, witness))
}

/// Include-first on the lowest candidate visits vertex sets in lexicographic
/// order, so the first optimum recorded is the lexicographically smallest.
fn branch(adj: &[u64], cand: u64, chosen: u64, best: &mut (u32, u64)) {
    let size = chosen.count_ones();
    if size > best.0 {
        *best = (size, chosen);
    }
    if cand == 0 || size + cand.count_ones() <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    branch(adj, cand & !bit & !adj[v], chosen | bit, best);
    branch(adj, cand & !bit, chosen, best);
}
