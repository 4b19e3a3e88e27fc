//! The two-stage solver: greedy selection, tied-pair forest, purification,
//! then certificates and the bound report.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{evaluate_bounds, RatioReport};
use crate::error::{Error, Result};
use crate::forest::{build_forest, tied_pairs, ClusterForest, TiedPairSet};
use crate::graph::{Graph, Vertex};
use crate::greedy::{
    certify_independent_partition, certify_size_two, greedy_dominating_set, Certificate,
    GreedyTrace, TieBreak,
};
use crate::oracle::exact_gamma;
use crate::purify::{ensure_minimal, purify_all, PurifyMode, PurifyState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub tie_break: TieBreak,
    pub mode: PurifyMode,
    /// Run the redundancy sweep on `S*`.
    pub ensure_minimal: bool,
    /// Solve each connected component on its own instead of rejecting
    /// disconnected input.
    pub components: bool,
    /// Compute the exact domination number when `n` is at most this.
    pub exact_limit: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tie_break: TieBreak::MinIndex,
            mode: PurifyMode::Extended,
            ensure_minimal: false,
            components: false,
            exact_limit: None,
        }
    }
}

/// Wall-clock milliseconds per stage.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub greedy_ms: f64,
    pub forest_ms: f64,
    pub purify_ms: f64,
    pub oracle_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominationResult {
    pub n: usize,
    pub m: usize,
    pub tie_break: TieBreak,
    pub mode: PurifyMode,
    pub components: usize,
    /// Stage-one selection order.
    pub greedy_order: Vec<Vertex>,
    pub greedy_set: Vec<Vertex>,
    pub tied_pairs: Vec<(Vertex, Vertex)>,
    pub forest_trees: usize,
    /// `S*`, after the redundancy sweep when it is enabled.
    pub purified_set: Vec<Vertex>,
    /// Vertices dropped by the redundancy sweep.
    pub sweep_removed: Vec<Vertex>,
    pub certificates: Vec<Certificate>,
    pub gamma: Option<usize>,
    pub gamma_witness: Option<Vec<Vertex>>,
    pub report: RatioReport,
    pub notes: Vec<String>,
    pub timings: Timings,
}

impl DominationResult {
    pub fn greedy_size(&self) -> usize {
        self.greedy_set.len()
    }

    pub fn purified_size(&self) -> usize {
        self.purified_set.len()
    }
}

/// Everything a run produced, including the intermediate structures.
#[derive(Clone, Debug)]
pub struct Solution {
    pub trace: GreedyTrace,
    pub pairs: TiedPairSet,
    pub forest: ClusterForest,
    pub state: PurifyState,
    pub result: DominationResult,
}

fn elapsed_ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn stage_one(
    graph: &Graph,
    config: &SolverConfig,
    components: &[Vec<Vertex>],
) -> Result<GreedyTrace> {
    if components.len() <= 1 {
        return Ok(greedy_dominating_set(graph, config.tie_break));
    }
    let parts: Vec<(GreedyTrace, Vec<Vertex>)> = components
        .iter()
        .map(|component| {
            let (sub, map) = graph.induced_subgraph(component);
            (greedy_dominating_set(&sub, config.tie_break), map)
        })
        .collect();
    GreedyTrace::concat(graph.n(), &parts, config.tie_break)
}

/// Runs both stages on `graph`.
///
/// Fails on an empty graph, on disconnected input unless
/// `config.components` is set, and with an internal error when a proven
/// bound is violated.
pub fn solve(graph: &Graph, config: &SolverConfig) -> Result<Solution> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let start = Instant::now();
    let components = graph.connected_components();
    if components.len() > 1 && !config.components {
        return Err(Error::Disconnected {
            components: components.len(),
        });
    }
    let mut timings = Timings::default();
    let mut notes = Vec::new();

    let t = Instant::now();
    let trace = stage_one(graph, config, &components)?;
    timings.greedy_ms = elapsed_ms(t);
    let greedy_set = trace.final_set();
    if !graph.is_dominating(&greedy_set) {
        return Err(Error::Internal("stage-one set is not dominating".into()));
    }

    let t = Instant::now();
    let pairs = tied_pairs(graph, &trace);
    let forest = build_forest(graph, &pairs, &trace)?;
    timings.forest_ms = elapsed_ms(t);

    let t = Instant::now();
    let purification = purify_all(graph, &trace, &forest, config.mode)?;
    let mut set = purification.set;
    let mut sweep_removed = Vec::new();
    if config.ensure_minimal {
        let swept = ensure_minimal(graph, &set)?;
        sweep_removed = set.iter().filter(|&v| !swept.contains(v)).collect();
        set = swept;
    }
    timings.purify_ms = elapsed_ms(t);

    let certificates = vec![
        certify_size_two(&trace),
        certify_independent_partition(graph, &trace),
    ];

    let mut oracle = None;
    if let Some(limit) = config.exact_limit {
        if graph.n() <= limit {
            let t = Instant::now();
            oracle = Some(exact_gamma(graph, limit)?);
            timings.oracle_ms = elapsed_ms(t);
        } else {
            notes.push(format!(
                "exact oracle skipped: n = {} exceeds limit {limit}",
                graph.n()
            ));
        }
    }
    let gamma = oracle.as_ref().map(|o| o.gamma);

    let report = evaluate_bounds(graph, greedy_set.len(), set.len(), gamma)?;
    let minimal_set = config.mode == PurifyMode::Extended || config.ensure_minimal;
    if report.within_parekh == Some(false) {
        notes.push(format!(
            "stage-one size {} exceeds n+1-sqrt(2m+1) = {:.4}",
            report.greedy_size, report.parekh_bound
        ));
    }
    if !minimal_set && report.within_half == Some(false) {
        notes.push(format!(
            "strict-mode set of size {} exceeds n/2 = {}",
            report.purified_size,
            report.n / 2
        ));
    }
    let violations = report.violations(minimal_set);
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "proven bound violated: {}",
            violations.join("; ")
        )));
    }
    if let Some(g) = gamma {
        if certificates.iter().any(Certificate::is_granted) && greedy_set.len() != g {
            return Err(Error::Internal(format!(
                "certificate granted but |S| = {} while gamma = {g}",
                greedy_set.len()
            )));
        }
    }
    timings.total_ms = elapsed_ms(start);

    let result = DominationResult {
        n: graph.n(),
        m: graph.m(),
        tie_break: config.tie_break,
        mode: config.mode,
        components: components.len(),
        greedy_order: trace.order().to_vec(),
        greedy_set: greedy_set.to_vec(),
        tied_pairs: pairs.pairs().to_vec(),
        forest_trees: forest.trees().len(),
        purified_set: set.to_vec(),
        sweep_removed,
        certificates,
        gamma,
        gamma_witness: oracle.map(|o| o.witness),
        report,
        notes,
        timings,
    };
    Ok(Solution {
        trace,
        pairs,
        forest,
        state: purification.state,
        result,
    })
}
