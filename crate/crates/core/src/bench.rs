//! Batch runs over seeded random connected graphs, one row per instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{random_connected_graph, RandomSpec};
use crate::greedy::TieBreak;
use crate::oracle::DEFAULT_LIMIT;
use crate::purify::PurifyMode;
use crate::solver::{solve, SolverConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// `m = round(m_factor · n)`.
    pub m_factor: f64,
    pub seed: u64,
    pub exact: bool,
    pub tie_break: TieBreak,
    pub mode: PurifyMode,
    /// Worker count; `None` uses all cores.
    pub threads: Option<usize>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            count: 10,
            n_min: 10,
            n_max: 18,
            m_factor: 1.3,
            seed: 0,
            exact: false,
            tie_break: TieBreak::MinIndex,
            mode: PurifyMode::Extended,
            threads: None,
        }
    }
}

/// Columns follow the published table (number, order, size, stage-one size,
/// `|S*|`, purification count) with derived columns appended.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub no: usize,
    pub n: usize,
    pub m: usize,
    pub greedy: usize,
    pub purified: usize,
    pub purification: usize,
    pub reduction_pct: f64,
    pub seed: u64,
    pub gamma: Option<usize>,
    pub greedy_ratio: Option<f64>,
    pub ratio: Option<f64>,
    pub greedy_ms: f64,
    pub forest_ms: f64,
    pub purify_ms: f64,
    pub total_ms: f64,
}

impl BenchRow {
    /// `purified + purification = greedy` and the percentage agrees.
    pub fn is_consistent(&self) -> bool {
        self.purified + self.purification == self.greedy
            && self.greedy > 0
            && (self.reduction_pct - 100.0 * self.purification as f64 / self.greedy as f64).abs()
                < 1e-9
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub no: usize,
    pub n: usize,
    pub m: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub skipped: Vec<Skipped>,
    /// Mean of `reduction_pct` over all rows.
    pub mean_reduction_pct: Option<f64>,
}

/// Instance `no` gets order `n` and generator seed `seed`, both drawn up front
/// from one stream so the plan does not depend on scheduling.
fn plan(config: &BenchConfig) -> Vec<(usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (1..=config.count)
        .map(|no| (no, rng.gen_range(config.n_min..=config.n_max), rng.gen()))
        .collect()
}

fn run_instance(
    config: &BenchConfig,
    solver: &SolverConfig,
    (no, n, seed): (usize, usize, u64),
) -> Result<std::result::Result<BenchRow, Skipped>> {
    let m = (config.m_factor * n as f64).round() as usize;
    let graph = match random_connected_graph(RandomSpec { n, m, seed }) {
        Ok(g) => g,
        Err(Error::InvalidParameter(reason)) => return Ok(Err(Skipped { no, n, m, reason })),
        Err(e) => return Err(e),
    };
    let r = solve(&graph, solver)?.result;
    let greedy = r.greedy_size();
    let purified = r.purified_size();
    Ok(Ok(BenchRow {
        no,
        n,
        m,
        greedy,
        purified,
        purification: greedy - purified,
        reduction_pct: 100.0 * (greedy - purified) as f64 / greedy as f64,
        seed,
        gamma: r.gamma,
        greedy_ratio: r.report.realized_greedy_ratio,
        ratio: r.report.realized_ratio,
        greedy_ms: r.timings.greedy_ms,
        forest_ms: r.timings.forest_ms,
        purify_ms: r.timings.purify_ms,
        total_ms: r.timings.total_ms,
    }))
}

/// Runs every planned instance on a worker pool. Rows come back in instance
/// order; instances whose parameters admit no connected graph are skipped.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    if config.n_min == 0 || config.n_min > config.n_max {
        return Err(Error::InvalidParameter(format!(
            "bad order range {}..{}",
            config.n_min, config.n_max
        )));
    }
    if !(config.m_factor.is_finite() && config.m_factor >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bad m-factor {}",
            config.m_factor
        )));
    }
    let solver = SolverConfig {
        tie_break: config.tie_break,
        mode: config.mode,
        exact_limit: config.exact.then_some(DEFAULT_LIMIT),
        ..SolverConfig::default()
    };
    let jobs = plan(config);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = config.threads {
        builder = builder.num_threads(threads);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let outcomes: Vec<_> = pool.install(|| {
        jobs.into_par_iter()
            .map(|job| run_instance(config, &solver, job))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(skip) => skipped.push(skip),
        }
    }
    let mean_reduction_pct = (!rows.is_empty())
        .then(|| rows.iter().map(|r| r.reduction_pct).sum::<f64>() / rows.len() as f64);
    Ok(BenchReport {
        rows,
        skipped,
        mean_reduction_pct,
    })
}

/// Rows as CSV with a header line; empty input gives empty output.
pub fn rows_to_csv(rows: &[BenchRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv: {e}")))
}
