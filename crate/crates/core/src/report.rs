//! One CSV row per (graph, algorithm) run, in the shape of a benchmark
//! table: size, time and width + 1, plus work counters.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::triangulation::{Algorithm, Decomposition, Mode};

/// Column order of the CSV report. Rows are only ever appended.
pub const COLUMNS: [&str; 10] = [
    "graph",
    "n",
    "m",
    "algorithm",
    "mode",
    "k_used",
    "width_plus_one",
    "separator_calls",
    "flow_augmentations",
    "wall_ms",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgoReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub mode: String,
    /// Empty when no `k` succeeded.
    pub k_used: Option<usize>,
    /// Width + 1 of the emitted decomposition, empty on failure.
    pub width_plus_one: Option<usize>,
    pub separator_calls: u64,
    pub flow_augmentations: u64,
    pub wall_ms: f64,
}

impl AlgoReport {
    pub fn new(graph: &str, g: &Graph, algo: Algorithm, mode: Mode, d: &Decomposition) -> Self {
        AlgoReport {
            graph: graph.to_string(),
            n: g.n(),
            m: g.m(),
            algorithm: algo.id().to_string(),
            mode: mode.id().to_string(),
            k_used: d.k_used,
            width_plus_one: d.outcome.success().map(|(_, td)| td.width() + 1),
            separator_calls: d.stats.separator_calls,
            flow_augmentations: d.stats.flow_augmentations,
            wall_ms: (d.elapsed.as_secs_f64() * 1e6).round() / 1e3,
        }
    }
}

/// Appends rows to `path`, writing the header first if the file is new or
/// empty.
pub fn append_reports(path: &Path, rows: &[AlgoReport]) -> anyhow::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let fresh = file.metadata()?.len() == 0;
    let mut buf = Vec::new();
    {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut buf);
        if fresh {
            w.write_record(COLUMNS)?;
        }
        for row in rows {
            w.serialize(row)?;
        }
        w.flush()?;
    }
    file.write_all(&buf)?;
    Ok(())
}

pub fn read_reports(path: &Path) -> anyhow::Result<Vec<AlgoReport>> {
    let mut r = csv::Reader::from_path(path)?;
    let headers = r.headers()?.clone();
    anyhow::ensure!(headers.iter().eq(COLUMNS), "unexpected report columns {headers:?}");
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}
