//! Bounds on the domination number and the approximation ratios of both
//! stages, evaluated for a concrete instance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const EPS: f64 = 1e-9;

/// Integer interval known to contain `γ(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBounds {
    pub lower: usize,
    pub upper: usize,
}

/// `⌈n/(Δ+1)⌉`, `⌈(d+1)/3⌉` below; `⌊n/2⌋` (no isolated vertices) and `n−Δ`
/// above.
fn interval(
    n: usize,
    max_degree: usize,
    min_degree: usize,
    diameter: Option<usize>,
) -> GammaBounds {
    let mut lower = n.div_ceil(max_degree + 1);
    if let Some(d) = diameter {
        lower = lower.max((d + 1).div_ceil(3));
    }
    let mut upper = n - max_degree.min(n);
    if min_degree >= 1 {
        upper = upper.min(n / 2);
    }
    GammaBounds { lower, upper }
}

/// Bounds for a connected graph.
pub fn gamma_bounds(graph: &Graph) -> Result<GammaBounds> {
    let stats = graph.degree_stats()?;
    Ok(interval(
        graph.n(),
        stats.max_degree,
        stats.min_degree,
        Some(stats.diameter),
    ))
}

/// Upper bound on the stage-one set size for connected graphs.
pub fn parekh_bound(n: usize, m: usize) -> f64 {
    n as f64 + 1.0 - (2.0 * m as f64 + 1.0).sqrt()
}

/// `ln(n/γ) / (γ·ln(γ/(γ−1))) + 1`, defined for `γ ≥ 2`.
pub fn chvatal_ratio(n: usize, gamma: usize) -> Option<f64> {
    (gamma >= 2).then(|| {
        let g = gamma as f64;
        (n as f64 / g).ln() / (g * (g / (g - 1.0)).ln()) + 1.0
    })
}

/// `ln(n/γ) + 1`.
pub fn log_ratio(n: usize, gamma: usize) -> f64 {
    (n as f64 / gamma as f64).ln() + 1.0
}

/// `ln(Δ+1) + 1`.
pub fn degree_log_ratio(max_degree: usize) -> f64 {
    (max_degree as f64 + 1.0).ln() + 1.0
}

/// `(Δ+1)/2`.
pub fn half_degree_ratio(max_degree: usize) -> f64 {
    (max_degree as f64 + 1.0) / 2.0
}

/// Overall ratio in invariants only: `(Δ+1)/2` when `Δ ≤ 4`, otherwise
/// `ln(Δ+1)+1`.
pub fn piecewise_degree_ratio(max_degree: usize) -> f64 {
    if max_degree <= 4 {
        half_degree_ratio(max_degree)
    } else {
        degree_log_ratio(max_degree)
    }
}

/// Overall ratio with `γ` known: `(Δ+1)/2` when `n ≥ γ·e^{(Δ−1)/2}`,
/// otherwise `ln(n/γ)+1`.
pub fn piecewise_gamma_ratio(n: usize, max_degree: usize, gamma: usize) -> f64 {
    if piecewise_gamma_selects_half(n, max_degree, gamma) {
        half_degree_ratio(max_degree)
    } else {
        log_ratio(n, gamma)
    }
}

pub fn piecewise_gamma_selects_half(n: usize, max_degree: usize, gamma: usize) -> bool {
    n as f64 >= gamma as f64 * ((max_degree as f64 - 1.0) / 2.0).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Absent for disconnected graphs.
    pub diameter: Option<usize>,
    pub connected: bool,
    pub parekh_bound: f64,
    /// Whether the stage-one size stays within `parekh_bound` (connected
    /// graphs only).
    pub within_parekh: Option<bool>,
    /// Whether `|S*| ≤ ⌊n/2⌋` (graphs without isolated vertices only).
    pub within_half: Option<bool>,
    pub gamma_lower: usize,
    pub gamma_upper: usize,
    pub greedy_size: usize,
    pub purified_size: usize,
    pub gamma: Option<usize>,
    pub eq1: Option<f64>,
    pub eq3: Option<f64>,
    pub eq4: f64,
    pub eq5: f64,
    pub piecewise_a: f64,
    pub piecewise_b: Option<f64>,
    pub realized_greedy_ratio: Option<f64>,
    pub realized_ratio: Option<f64>,
}

/// Evaluates every bound for a finished run. `gamma`, when given, must come
/// from an exact computation.
pub fn evaluate_bounds(
    graph: &Graph,
    greedy_size: usize,
    purified_size: usize,
    gamma: Option<usize>,
) -> Result<RatioReport> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(g) = gamma {
        if g == 0 || g > n {
            return Err(Error::InvalidParameter(format!(
                "gamma = {g} outside 1..={n}"
            )));
        }
    }
    let max_degree = graph.max_degree();
    let min_degree = graph.min_degree();
    let diameter = graph.diameter().ok();
    let GammaBounds { lower, upper } = interval(n, max_degree, min_degree, diameter);
    Ok(RatioReport {
        n,
        m: graph.m(),
        max_degree,
        min_degree,
        diameter,
        connected: diameter.is_some(),
        parekh_bound: parekh_bound(n, graph.m()),
        within_parekh: diameter
            .is_some()
            .then(|| greedy_size as f64 <= parekh_bound(n, graph.m()) + EPS),
        within_half: (min_degree >= 1).then_some(purified_size <= n / 2),
        gamma_lower: lower,
        gamma_upper: upper,
        greedy_size,
        purified_size,
        gamma,
        eq1: gamma.and_then(|g| chvatal_ratio(n, g)),
        eq3: gamma.map(|g| log_ratio(n, g)),
        eq4: degree_log_ratio(max_degree),
        eq5: half_degree_ratio(max_degree),
        piecewise_a: piecewise_degree_ratio(max_degree),
        piecewise_b: gamma.map(|g| piecewise_gamma_ratio(n, max_degree, g)),
        realized_greedy_ratio: gamma.map(|g| greedy_size as f64 / g as f64),
        realized_ratio: gamma.map(|g| purified_size as f64 / g as f64),
    })
}

impl RatioReport {
    /// Bounds that must hold for this run; any entry means a bug.
    ///
    /// The size bound for the stage-one set is not included: it is stated
    /// for a greedy that counts the candidate itself, and the open-neighborhood
    /// rule used here can exceed it (the 5-cycle does). `minimal_set` says
    /// whether `S*` is guaranteed minimal; only then do `|S*| ≤ n/2` and the
    /// `(Δ+1)/2` ratio follow.
    pub fn violations(&self, minimal_set: bool) -> Vec<String> {
        let mut out = Vec::new();
        if minimal_set && self.within_half == Some(false) {
            out.push(format!(
                "purified size {} exceeds n/2 = {}",
                self.purified_size,
                self.n / 2
            ));
        }
        if let Some(g) = self.gamma {
            if g < self.gamma_lower || g > self.gamma_upper {
                out.push(format!(
                    "gamma {g} outside [{}, {}]",
                    self.gamma_lower, self.gamma_upper
                ));
            }
            if self.greedy_size as f64 / g as f64 > self.eq4 + EPS {
                out.push(format!(
                    "greedy ratio {:.4} exceeds ln(D+1)+1 = {:.4}",
                    self.greedy_size as f64 / g as f64,
                    self.eq4
                ));
            }
            if minimal_set
                && self.min_degree >= 1
                && self.purified_size as f64 / g as f64 > self.eq5 + EPS
            {
                out.push(format!(
                    "overall ratio {:.4} exceeds (D+1)/2 = {:.4}",
                    self.purified_size as f64 / g as f64,
                    self.eq5
                ));
            }
        }
        out
    }
}
