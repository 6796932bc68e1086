//! Equivalence sweeps over many (graph, k) pairs with CSV and JSON reports.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::generate::{all_labeled_graphs, random_graph};
use crate::reductions::{check_equivalence, reduce, EquivalenceRow, Graph, OracleBudget, Theorem};
use crate::solvers::exact_search;

pub const CSV_HEADER: [&str; 11] = [
    "graph_id",
    "n",
    "m",
    "connected",
    "k",
    "is_answer",
    "lapcs_len",
    "threshold",
    "lapcs_answer",
    "forward_ok",
    "backward_ok",
];

/// Every tenth row is re-solved with `exact_search`.
const SPOT_CHECK_STRIDE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KPolicy {
    /// Every `k` in `1..=n`.
    All,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphSource {
    /// All labeled graphs of each order.
    Exhaustive,
    /// `count` graphs with orders drawn uniformly from the range.
    Random {
        count: usize,
        edge_probability: f64,
        seed: u64,
    },
    /// No graphs at all.
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub theorem: Theorem,
    pub n_min: usize,
    pub n_max: usize,
    pub k_policy: KPolicy,
    pub source: GraphSource,
    pub budget: OracleBudget,
    /// Largest order allowed in exhaustive mode.
    pub max_exhaustive_order: usize,
}

impl SweepConfig {
    pub fn exhaustive(theorem: Theorem, n_min: usize, n_max: usize) -> Self {
        Self {
            theorem,
            n_min,
            n_max,
            k_policy: KPolicy::All,
            source: GraphSource::Exhaustive,
            budget: OracleBudget::default(),
            max_exhaustive_order: default_exhaustive_order(theorem),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::InvalidInput(format!(
                "empty order range {}..={}",
                self.n_min, self.n_max
            )));
        }
        match self.source {
            GraphSource::Exhaustive if self.n_max > self.max_exhaustive_order => {
                Err(Error::InvalidInput(format!(
                    "exhaustive {} sweeps are limited to n <= {}",
                    self.theorem, self.max_exhaustive_order
                )))
            }
            GraphSource::Random {
                edge_probability, ..
            } if !(0.0..=1.0).contains(&edge_probability) => Err(Error::InvalidInput(format!(
                "edge probability {edge_probability} outside [0, 1]"
            ))),
            _ => Ok(()),
        }
    }

    fn graphs(&self) -> Result<Vec<Graph>> {
        match self.source {
            GraphSource::Empty => Ok(Vec::new()),
            GraphSource::Exhaustive => {
                let mut out = Vec::new();
                for n in self.n_min..=self.n_max {
                    out.extend(all_labeled_graphs(n)?);
                }
                Ok(out)
            }
            GraphSource::Random {
                count,
                edge_probability,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok((0..count)
                    .map(|_| {
                        let n = rng.gen_range(self.n_min..=self.n_max);
                        random_graph(n, edge_probability, &mut rng)
                    })
                    .collect())
            }
        }
    }

    fn ks(&self, n: usize) -> Vec<usize> {
        match self.k_policy {
            KPolicy::All => (1..=n).collect(),
            KPolicy::Fixed(k) => vec![k],
        }
    }
}

/// Default exhaustive bound: the block construction grows as `n(n+2)`.
pub fn default_exhaustive_order(theorem: Theorem) -> usize {
    match theorem {
        Theorem::One => 6,
        Theorem::Two => 4,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub k: usize,
    pub is_size: usize,
    pub lapcs_len: usize,
    pub threshold: usize,
    /// `forward` or `backward`.
    pub direction: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotCheckMismatch {
    pub graph_id: String,
    pub k: usize,
    pub reported: usize,
    pub recomputed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub theorem: u8,
    pub graph_source: String,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: Option<u64>,
    pub graphs: usize,
    pub rows: usize,
    pub skipped_rows: usize,
    pub connected_rows: usize,
    pub forward_failures: usize,
    pub backward_failures: usize,
    pub spot_checked: usize,
    pub spot_check_skipped: usize,
    pub spot_check_mismatches: Vec<SpotCheckMismatch>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<EquivalenceRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn has_counterexamples(&self) -> bool {
        !self.summary.counterexamples.is_empty()
    }

    pub fn to_csv(&self) -> Result<String> {
        rows_to_csv(&self.rows)
    }

    pub fn summary_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.summary).expect("summary serializes");
        text.push('\n');
        text
    }

    /// Writes the CSV to `csv_path` and the summary next to it with a
    /// `.json` extension. Returns the JSON path.
    pub fn write(&self, csv_path: &Path) -> std::io::Result<PathBuf> {
        let json_path = csv_path.with_extension("json");
        let csv = self
            .to_csv()
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()))?;
        std::fs::write(csv_path, csv)?;
        std::fs::write(&json_path, self.summary_json())?;
        Ok(json_path)
    }
}

/// CSV with the fixed header; unavailable values of skipped rows are written
/// as `skipped`.
pub fn rows_to_csv(rows: &[EquivalenceRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let to_csv_err = |e: csv::Error| Error::Validation(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(to_csv_err)?;
    fn cell<T: ToString>(v: Option<T>) -> String {
        v.map_or_else(|| "skipped".to_string(), |x| x.to_string())
    }
    for r in rows {
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.connected.to_string(),
            r.k.to_string(),
            cell(r.is_answer),
            cell(r.lapcs_len),
            cell(r.threshold),
            cell(r.lapcs_answer),
            cell(r.forward_ok),
            cell(r.backward_ok),
        ])
        .map_err(to_csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Validation(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Runs every (graph, k) row sequentially in generation order, then
/// re-solves every tenth measured row with `exact_search`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let graphs = cfg.graphs()?;
    let mut rows = Vec::new();
    for g in &graphs {
        for k in cfg.ks(g.order()) {
            rows.push(check_equivalence(g, k, cfg.theorem, &cfg.budget)?);
        }
    }

    let mut spot_checked = 0;
    let mut spot_check_skipped = 0;
    let mut mismatches = Vec::new();
    let row_graphs = graphs
        .iter()
        .flat_map(|g| cfg.ks(g.order()).into_iter().map(move |_| g));
    for (idx, (row, g)) in rows.iter().zip(row_graphs).enumerate() {
        let Some(reported) = row.lapcs_len else {
            continue;
        };
        if idx % SPOT_CHECK_STRIDE != 0 {
            continue;
        }
        let inst = reduce(g, row.k, cfg.theorem)?;
        match exact_search(&inst.a1, &inst.a2, inst.mc, &cfg.budget.search) {
            Ok(r) => {
                spot_checked += 1;
                if r.length != reported {
                    mismatches.push(SpotCheckMismatch {
                        graph_id: row.graph_id.clone(),
                        k: row.k,
                        reported,
                        recomputed: r.length,
                    });
                }
            }
            Err(e) if e.is_budget() => spot_check_skipped += 1,
            Err(e) => return Err(e),
        }
    }

    let counterexamples = rows
        .iter()
        .flat_map(|r| {
            let failed = [
                ("forward", r.forward_failed()),
                ("backward", r.backward_failed()),
            ];
            failed
                .into_iter()
                .filter(|&(_, f)| f)
                .map(move |(direction, _)| Counterexample {
                    graph_id: r.graph_id.clone(),
                    n: r.n,
                    m: r.m,
                    connected: r.connected,
                    k: r.k,
                    is_size: r.is_size.unwrap_or_default(),
                    lapcs_len: r.lapcs_len.unwrap_or_default(),
                    threshold: r.threshold.unwrap_or_default(),
                    direction,
                })
        })
        .collect();

    let (source, seed) = match cfg.source {
        GraphSource::Exhaustive => ("exhaustive", None),
        GraphSource::Random { seed, .. } => ("random", Some(seed)),
        GraphSource::Empty => ("empty", None),
    };
    let summary = SweepSummary {
        theorem: cfg.theorem.number(),
        graph_source: source.to_string(),
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        seed,
        graphs: graphs.len(),
        rows: rows.len(),
        skipped_rows: rows.iter().filter(|r| r.is_skipped()).count(),
        connected_rows: rows.iter().filter(|r| r.connected).count(),
        forward_failures: rows.iter().filter(|r| r.forward_failed()).count(),
        backward_failures: rows.iter().filter(|r| r.backward_failed()).count(),
        spot_checked,
        spot_check_skipped,
        spot_check_mismatches: mismatches,
        counterexamples,
    };
    Ok(SweepReport { rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_source_gives_header_only() {
        let cfg = SweepConfig {
            source: GraphSource::Empty,
            ..SweepConfig::exhaustive(Theorem::One, 1, 3)
        };
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(
            report.to_csv().unwrap(),
            format!("{}\n", CSV_HEADER.join(","))
        );
        assert_eq!(report.summary.rows, 0);
    }

    #[test]
    fn first_reduction_small_sweep_has_no_failures() {
        let report = run_sweep(&SweepConfig::exhaustive(Theorem::One, 1, 3)).unwrap();
        // 1 + 2*2 + 8*3 rows.
        assert_eq!(report.summary.rows, 29);
        assert_eq!(report.summary.forward_failures, 0);
        assert_eq!(report.summary.backward_failures, 0);
        assert_eq!(report.summary.spot_checked, 3);
        assert!(report.summary.spot_check_mismatches.is_empty());
    }

    #[test]
    fn exhaustive_bounds_are_enforced() {
        assert!(run_sweep(&SweepConfig::exhaustive(Theorem::Two, 1, 5)).is_err());
        assert!(run_sweep(&SweepConfig::exhaustive(Theorem::One, 3, 2)).is_err());
    }

    #[test]
    fn skipped_cells() {
        let cfg = SweepConfig {
            budget: OracleBudget {
                max_graph_order: 1,
                ..OracleBudget::default()
            },
            ..SweepConfig::exhaustive(Theorem::One, 2, 2)
        };
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(report.summary.skipped_rows, 4);
        let csv = report.to_csv().unwrap();
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .ends_with(",skipped,skipped,1,skipped,skipped,skipped"));
    }
}
