//! Stage one: repeatedly add the vertex of maximum active degree until the
//! set dominates.
//!
//! The active degree of a candidate is the number of its neighbors that are
//! still uncovered, i.e. neither in the set nor adjacent to it. The candidate
//! itself does not count. Active degrees are maintained incrementally: when a
//! vertex becomes covered every neighbor loses one unit.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// How to choose among candidates of equal active degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Smallest vertex identifier wins.
    #[default]
    MinIndex,
    /// Largest vertex identifier wins.
    MaxIndex,
    /// A seeded random permutation decides.
    Random(u64),
}

impl TieBreak {
    /// `rank[v]`: lower rank wins a tie.
    fn ranks(self, n: usize) -> Vec<usize> {
        match self {
            TieBreak::MinIndex => (0..n).collect(),
            TieBreak::MaxIndex => (0..n).map(|v| n - 1 - v).collect(),
            TieBreak::Random(seed) => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                let mut rank = vec![0; n];
                for (r, v) in order.into_iter().enumerate() {
                    rank[v] = r;
                }
                rank
            }
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::MinIndex => f.write_str("min-index"),
            TieBreak::MaxIndex => f.write_str("max-index"),
            TieBreak::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for TieBreak {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-index" | "min" => Ok(TieBreak::MinIndex),
            "max-index" | "max" => Ok(TieBreak::MaxIndex),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(TieBreak::Random)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "tie-break `{s}` (expected min-index, max-index or random:SEED)"
                    ))
                }),
        }
    }
}

/// Full record of one stage-one run.
///
/// Step `h` (0-based here) selected `order[h]` and newly covered
/// `coverage[h]`. The coverage sets are pairwise disjoint and each contains
/// the vertex selected at that step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    n: usize,
    order: Vec<Vertex>,
    coverage: Vec<Vec<Vertex>>,
    covered_at: Vec<usize>,
    selected_at: Vec<usize>,
    tie_break: TieBreak,
}

const NEVER: usize = usize::MAX;

impl GreedyTrace {
    fn new(n: usize, tie_break: TieBreak) -> Self {
        Self {
            n,
            order: Vec::new(),
            coverage: Vec::new(),
            covered_at: vec![NEVER; n],
            selected_at: vec![NEVER; n],
            tie_break,
        }
    }

    /// Assembles a trace from per-step selections and coverage sets.
    ///
    /// Coverage sets must be non-empty and pairwise disjoint, and each
    /// selected vertex must be covered no later than its own step.
    pub fn from_steps(
        n: usize,
        steps: Vec<(Vertex, Vec<Vertex>)>,
        tie_break: TieBreak,
    ) -> Result<Self> {
        let mut trace = Self::new(n, tie_break);
        for (v, covered) in steps {
            let h = trace.order.len();
            for &u in covered.iter().chain(std::iter::once(&v)) {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
            }
            if trace.selected_at[v] != NEVER {
                return Err(Error::VertexInSet(v));
            }
            if covered.is_empty() {
                return Err(Error::InvalidParameter(format!("step {h} covers nothing")));
            }
            for &u in &covered {
                if trace.covered_at[u] != NEVER {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {u} covered twice (steps {} and {h})",
                        trace.covered_at[u]
                    )));
                }
                trace.covered_at[u] = h;
            }
            if trace.covered_at[v] == NEVER {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} selected at step {h} is still uncovered"
                )));
            }
            trace.selected_at[v] = h;
            trace.order.push(v);
            trace.coverage.push(covered);
        }
        Ok(trace)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Selected vertices in selection order.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Vertices newly covered at step `h`.
    pub fn coverage(&self, h: usize) -> &[Vertex] {
        &self.coverage[h]
    }

    pub fn steps(&self) -> usize {
        self.order.len()
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    /// Step at which `v` was selected, if it was.
    pub fn selection_index(&self, v: Vertex) -> Option<usize> {
        Some(self.selected_at[v]).filter(|&h| h != NEVER)
    }

    /// Step at which `v` first became covered.
    pub fn covered_at(&self, v: Vertex) -> Option<usize> {
        Some(self.covered_at[v]).filter(|&h| h != NEVER)
    }

    pub fn is_selected(&self, v: Vertex) -> bool {
        self.selected_at[v] != NEVER
    }

    pub fn final_set(&self) -> VertexSet {
        let mut set = VertexSet::new(self.n);
        for &v in &self.order {
            set.insert(v);
        }
        set
    }

    /// Every vertex has been covered.
    pub fn is_complete(&self) -> bool {
        self.covered_at.iter().all(|&h| h != NEVER)
    }

    /// Concatenates traces of vertex-disjoint pieces, mapping each piece's
    /// local identifiers back through its `mapping`.
    pub fn concat(
        n: usize,
        parts: &[(GreedyTrace, Vec<Vertex>)],
        tie_break: TieBreak,
    ) -> Result<Self> {
        let steps = parts
            .iter()
            .flat_map(|(trace, map)| {
                trace
                    .order
                    .iter()
                    .zip(&trace.coverage)
                    .map(move |(&v, cov)| (map[v], cov.iter().map(|&u| map[u]).collect()))
            })
            .collect();
        Self::from_steps(n, steps, tie_break)
    }
}

/// Number of neighbors of `v` outside `covered`.
///
/// `covered` must contain `in_set` and its neighborhood; `v` itself must not
/// be in the set.
pub fn active_degree(
    graph: &Graph,
    covered: &VertexSet,
    in_set: &VertexSet,
    v: Vertex,
) -> Result<usize> {
    graph.check_vertex(v)?;
    if in_set.contains(v) {
        return Err(Error::VertexInSet(v));
    }
    Ok(graph
        .neighbors(v)
        .iter()
        .filter(|&&u| !covered.contains(u))
        .count())
}

struct Selection<'g> {
    graph: &'g Graph,
    covered: Vec<bool>,
    in_set: Vec<bool>,
    active: Vec<usize>,
    rank: Vec<usize>,
    heap: BinaryHeap<(usize, Reverse<usize>, Vertex)>,
    remaining: usize,
    trace: GreedyTrace,
}

impl<'g> Selection<'g> {
    fn new(graph: &'g Graph, tie_break: TieBreak) -> Self {
        let n = graph.n();
        let rank = tie_break.ranks(n);
        let active: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
        let heap = graph
            .vertices()
            .map(|v| (active[v], Reverse(rank[v]), v))
            .collect();
        Self {
            graph,
            covered: vec![false; n],
            in_set: vec![false; n],
            active,
            rank,
            heap,
            remaining: n,
            trace: GreedyTrace::new(n, tie_break),
        }
    }

    /// Candidate with the largest active degree, ties by rank.
    fn best(&mut self) -> Option<(usize, Vertex)> {
        while let Some(&(d, _, v)) = self.heap.peek() {
            if self.in_set[v] || d != self.active[v] {
                self.heap.pop();
            } else {
                return Some((d, v));
            }
        }
        None
    }

    fn cover(&mut self, u: Vertex, h: usize, newly: &mut Vec<Vertex>) {
        self.covered[u] = true;
        self.trace.covered_at[u] = h;
        self.remaining -= 1;
        newly.push(u);
        for &w in self.graph.neighbors(u) {
            if !self.in_set[w] {
                self.active[w] -= 1;
                self.heap.push((self.active[w], Reverse(self.rank[w]), w));
            }
        }
    }

    fn select(&mut self, v: Vertex) {
        let h = self.trace.order.len();
        self.in_set[v] = true;
        let mut newly = Vec::new();
        if !self.covered[v] {
            self.cover(v, h, &mut newly);
        }
        for &u in self.graph.neighbors(v) {
            if !self.covered[u] {
                self.cover(u, h, &mut newly);
            }
        }
        self.trace.selected_at[v] = h;
        self.trace.order.push(v);
        self.trace.coverage.push(newly);
    }
}

/// Runs stage one on `graph`.
///
/// Once no candidate has positive active degree, every vertex still uncovered
/// is appended as its own step (in tie-break order).
pub fn greedy_dominating_set(graph: &Graph, tie_break: TieBreak) -> GreedyTrace {
    let mut run = Selection::new(graph, tie_break);
    while run.remaining > 0 {
        match run.best() {
            Some((d, v)) if d > 0 => run.select(v),
            _ => {
                let mut rest: Vec<Vertex> = graph.vertices().filter(|&u| !run.covered[u]).collect();
                rest.sort_unstable_by_key(|&u| run.rank[u]);
                for u in rest {
                    if !run.covered[u] {
                        run.select(u);
                    }
                }
            }
        }
    }
    run.trace
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// At most two vertices were selected.
    SizeAtMostTwo,
    /// The closed neighborhoods of the selected vertices partition `V`.
    IndependentPartition,
    None,
}

/// A cheap proof that the stage-one set is already minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub detail: String,
}

impl Certificate {
    pub fn is_granted(&self) -> bool {
        self.kind != CertificateKind::None
    }

    fn denied(detail: impl Into<String>) -> Self {
        Self {
            kind: CertificateKind::None,
            detail: detail.into(),
        }
    }
}

/// A dominating set found by stage one with at most two vertices is minimum:
/// one vertex is trivially optimal, and if no single vertex dominates then two
/// is the best possible.
pub fn certify_size_two(trace: &GreedyTrace) -> Certificate {
    let size = trace.steps();
    if size <= 2 {
        Certificate {
            kind: CertificateKind::SizeAtMostTwo,
            detail: format!("|S| = {size}"),
        }
    } else {
        Certificate::denied(format!("|S| = {size} > 2"))
    }
}

/// Grants a certificate when `S` is independent and no outside vertex sees two
/// members of `S`. Then the closed neighborhoods of `S` partition the vertex
/// set and any dominating set needs a vertex in each part.
pub fn certify_independent_partition(graph: &Graph, trace: &GreedyTrace) -> Certificate {
    let set = trace.final_set();
    if let Some((u, v)) = set.iter().find_map(|v| {
        graph
            .neighbors(v)
            .iter()
            .find(|&&u| set.contains(u))
            .map(|&u| (v, u))
    }) {
        return Certificate::denied(format!("S not independent: edge ({u}, {v})"));
    }
    for x in graph.vertices().filter(|&x| !set.contains(x)) {
        let seen = graph
            .neighbors(x)
            .iter()
            .filter(|&&u| set.contains(u))
            .count();
        if seen >= 2 {
            return Certificate::denied(format!("vertex {x} is adjacent to {seen} members of S"));
        }
    }
    Certificate {
        kind: CertificateKind::IndependentPartition,
        detail: format!("closed neighborhoods of {} vertices partition V", set.len()),
    }
}

/// Whether the run produced no tied pair.
pub fn tied_pair_emptiness(graph: &Graph, trace: &GreedyTrace) -> bool {
    crate::forest::tied_pairs(graph, trace).is_empty()
}
