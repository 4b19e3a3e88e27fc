//! Stage two: purification of the cluster forest.
//!
//! Every forest vertex starts `Pending` and ends either `Firm` (kept) or
//! `Purified` (dropped). A vertex outside the forest is a *semi-private*
//! neighbor of a forest vertex `v` when `v` is its only forest neighbor that
//! has not been purified yet; such a `v` must stay.
//!
//! Per tree, leaves are decided first. Then, repeatedly: every pending vertex
//! with a semi-private neighbor becomes firm, the anchor (deepest, then
//! leftmost, firm vertex with a pending parent) is located, and the chain
//! above it is purified by the quadruple or trio rule.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{ClusterForest, Tree};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::greedy::GreedyTrace;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PurifyMode {
    /// The procedure exactly as published: a pending root above a firm
    /// anchor is never touched.
    Strict,
    /// Additionally purifies a pending root whose firm child is the anchor.
    #[default]
    Extended,
}

impl fmt::Display for PurifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PurifyMode::Strict => "strict",
            PurifyMode::Extended => "extended",
        })
    }
}

impl FromStr for PurifyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(PurifyMode::Strict),
            "extended" => Ok(PurifyMode::Extended),
            _ => Err(Error::InvalidParameter(format!(
                "purify mode `{s}` (expected strict or extended)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pending,
    Firm,
    Purified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusChange {
    pub vertex: Vertex,
    pub from: Status,
    pub to: Status,
}

/// Which rule fired at one purification iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Quadruple,
    Trio,
    Root,
}

#[derive(Clone, Debug)]
pub struct PurifyState {
    status: Vec<Option<Status>>,
    /// For each vertex outside the forest: its forest neighbors not yet
    /// purified.
    remaining: Vec<Option<BTreeSet<Vertex>>>,
    mode: PurifyMode,
    log: Vec<StatusChange>,
    rules: Vec<(Rule, Vertex)>,
    emptied: Vec<Vertex>,
}

impl PurifyState {
    pub fn new(
        graph: &Graph,
        forest: &ClusterForest,
        trace: &GreedyTrace,
        mode: PurifyMode,
    ) -> Self {
        let status = graph
            .vertices()
            .map(|v| forest.contains(v).then_some(Status::Pending))
            .collect();
        let outside_set = |v: Vertex| trace.is_selected(v) && !forest.contains(v);
        let watched = |x: Vertex| {
            !forest.contains(x)
                && (mode == PurifyMode::Strict
                    || !(outside_set(x) || graph.neighbors(x).iter().any(|&u| outside_set(u))))
        };
        let remaining = graph
            .vertices()
            .map(|x| {
                watched(x).then(|| {
                    graph
                        .neighbors(x)
                        .iter()
                        .copied()
                        .filter(|&u| forest.contains(u))
                        .collect()
                })
            })
            .collect();
        Self {
            status,
            remaining,
            mode,
            log: Vec::new(),
            rules: Vec::new(),
            emptied: Vec::new(),
        }
    }

    pub fn mode(&self) -> PurifyMode {
        self.mode
    }

    /// `None` for vertices outside the forest.
    pub fn status(&self, v: Vertex) -> Option<Status> {
        self.status[v]
    }

    fn is(&self, v: Vertex, s: Status) -> bool {
        self.status[v] == Some(s)
    }

    /// Forest neighbors of `x` that have not been purified; `None` when `x`
    /// is itself a forest vertex.
    pub fn remaining_neighbors(&self, x: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.remaining[x].as_ref()
    }

    /// Every status transition, in order.
    pub fn log(&self) -> &[StatusChange] {
        &self.log
    }

    /// Rule applications with the anchor that triggered them.
    pub fn rules(&self) -> &[(Rule, Vertex)] {
        &self.rules
    }

    /// Outside vertices whose remaining forest neighborhood was emptied.
    pub fn emptied(&self) -> &[Vertex] {
        &self.emptied
    }

    /// Whether some vertex outside the forest has `v` as its only remaining
    /// forest neighbor.
    pub fn has_semi_private_neighbor(&self, v: Vertex, graph: &Graph) -> bool {
        graph.neighbors(v).iter().any(|&x| {
            self.remaining[x]
                .as_ref()
                .is_some_and(|rest| rest.len() == 1 && rest.contains(&v))
        })
    }

    fn transition(&mut self, vertex: Vertex, to: Status) {
        let from = self.status[vertex].expect("forest vertex");
        self.status[vertex] = Some(to);
        self.log.push(StatusChange { vertex, from, to });
    }

    /// Pending becomes firm, firm stays firm; purified vertices can never be
    /// made firm again.
    pub fn set_firm(&mut self, v: Vertex) -> Result<()> {
        match self.status[v] {
            Some(Status::Pending) => {
                self.transition(v, Status::Firm);
                Ok(())
            }
            Some(Status::Firm) => Ok(()),
            Some(Status::Purified) => Err(Error::Internal(format!(
                "purified vertex {v} proposed as firm"
            ))),
            None => Err(Error::Internal(format!("vertex {v} is not in the forest"))),
        }
    }

    pub fn purify(&mut self, v: Vertex, graph: &Graph) -> Result<()> {
        if !self.is(v, Status::Pending) {
            return Err(Error::Internal(format!(
                "only pending vertices can be purified, {v} is {:?}",
                self.status[v]
            )));
        }
        self.transition(v, Status::Purified);
        for &x in graph.neighbors(v) {
            if let Some(rest) = self.remaining[x].as_mut() {
                rest.remove(&v);
                if rest.is_empty() {
                    self.emptied.push(x);
                }
            }
        }
        Ok(())
    }

    fn kept(&self, v: Vertex) -> bool {
        !self.is(v, Status::Purified)
    }
}

/// The deepest firm vertex of `tree` whose parent is pending; among equally
/// deep candidates the leftmost in pre-order.
pub fn find_anchor(tree: &Tree, forest: &ClusterForest, state: &PurifyState) -> Option<Vertex> {
    tree.vertices
        .iter()
        .copied()
        .filter(|&v| {
            state.is(v, Status::Firm)
                && forest
                    .parent(v)
                    .is_some_and(|p| state.is(p, Status::Pending))
        })
        .min_by_key(|&v| (std::cmp::Reverse(forest.level(v)), forest.position(v)))
}

/// Purifies one tree in place.
pub fn purify_tree(
    tree: &Tree,
    forest: &ClusterForest,
    state: &mut PurifyState,
    graph: &Graph,
) -> Result<()> {
    // leaves, left to right; each decision sees the previous purifications
    for &leaf in tree.vertices.iter().filter(|&&v| forest.is_leaf(v)) {
        if state.has_semi_private_neighbor(leaf, graph) {
            state.set_firm(leaf)?;
        } else {
            state.purify(leaf, graph)?;
            if let Some(p) = forest.parent(leaf) {
                state.set_firm(p)?;
            }
        }
    }

    loop {
        for &v in &tree.vertices {
            if state.is(v, Status::Pending) && state.has_semi_private_neighbor(v, graph) {
                state.set_firm(v)?;
            }
        }
        let Some(anchor) = find_anchor(tree, forest, state) else {
            return Ok(());
        };
        let b = forest.parent(anchor).expect("anchor has a parent");
        let c = forest.parent(b);
        let d = c.and_then(|c| forest.parent(c));
        match (c, d) {
            (Some(c), Some(d)) if state.is(c, Status::Pending) => {
                state.purify(b, graph)?;
                state.purify(c, graph)?;
                if state.is(d, Status::Pending) {
                    state.set_firm(d)?;
                }
                state.rules.push((Rule::Quadruple, anchor));
            }
            (Some(_), _) => {
                state.purify(b, graph)?;
                state.rules.push((Rule::Trio, anchor));
            }
            (None, _) if state.mode == PurifyMode::Extended => {
                state.purify(b, graph)?;
                state.rules.push((Rule::Root, anchor));
            }
            (None, _) => return Ok(()),
        }
    }
}

/// Outcome of purifying every tree of a forest.
#[derive(Clone, Debug)]
pub struct Purification {
    /// The purified dominating set `S*`.
    pub set: VertexSet,
    pub state: PurifyState,
}

/// Purifies the trees in order of their roots' selection and assembles
/// `S* = (S ∖ forest) ∪ {forest vertices not purified}`.
pub fn purify_all(
    graph: &Graph,
    trace: &GreedyTrace,
    forest: &ClusterForest,
    mode: PurifyMode,
) -> Result<Purification> {
    let mut state = PurifyState::new(graph, forest, trace, mode);
    for tree in forest.trees() {
        purify_tree(tree, forest, &mut state, graph)?;
    }
    let mut set = trace.final_set();
    for v in forest.vertices().iter() {
        if !state.kept(v) {
            set.remove(v);
        }
    }
    if !graph.is_dominating(&set) {
        return Err(Error::Internal(
            "purified set is no longer dominating".into(),
        ));
    }
    Ok(Purification { set, state })
}

/// Every purified vertex keeps a parent or a child in the final set.
pub fn verify_purified_coverage(forest: &ClusterForest, state: &PurifyState) -> bool {
    forest
        .vertices()
        .iter()
        .filter(|&v| state.is(v, Status::Purified))
        .all(|v| {
            forest.parent(v).is_some_and(|p| state.kept(p))
                || forest.children(v).iter().any(|&c| state.kept(c))
        })
}

/// Drops redundant vertices of a dominating set, smallest identifier first,
/// until it is minimal.
pub fn ensure_minimal(graph: &Graph, set: &VertexSet) -> Result<VertexSet> {
    if !graph.is_dominating(set) {
        return Err(Error::NotDominating);
    }
    let mut set = set.clone();
    let mut hits = graph.closed_hits(&set);
    // removals only lower hit counts, so one ascending sweep reaches the
    // same fixed point as repeatedly removing the smallest redundant vertex
    for v in set.to_vec() {
        if graph.is_redundant(v, &set, &hits) {
            set.remove(v);
            hits[v] -= 1;
            for &u in graph.neighbors(v) {
                hits[u] -= 1;
            }
        }
    }
    Ok(set)
}
