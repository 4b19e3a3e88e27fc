//! Tied pairs and the rooted cluster forest they induce.
//!
//! A tied pair `(v_h, v)` records that a later-selected vertex `v` was first
//! covered by `v_h`. Since every vertex is covered exactly once, each vertex
//! has at most one incoming pair, and since parents are always selected
//! strictly earlier, the pairs form a forest whose roots are the
//! earliest-selected vertex of each tree.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::greedy::GreedyTrace;

/// Ordered pairs `(parent, child)`, in the order the children were covered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TiedPairSet {
    pairs: Vec<(Vertex, Vertex)>,
}

impl TiedPairSet {
    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, parent: Vertex, child: Vertex) -> bool {
        self.pairs.contains(&(parent, child))
    }

    /// The unique pair whose second element is `child`.
    pub fn parent_of(&self, child: Vertex) -> Option<Vertex> {
        self.pairs
            .iter()
            .find(|&&(_, c)| c == child)
            .map(|&(p, _)| p)
    }
}

/// Collects `(v_h, v)` for every selected `v ≠ v_h` first covered at step `h`.
pub fn tied_pairs(graph: &Graph, trace: &GreedyTrace) -> TiedPairSet {
    let mut pairs = Vec::new();
    for (h, &selected) in trace.order().iter().enumerate() {
        for &v in trace.coverage(h) {
            if v != selected && trace.is_selected(v) {
                debug_assert!(graph.has_edge(selected, v));
                pairs.push((selected, v));
            }
        }
    }
    TiedPairSet { pairs }
}

/// One rooted tree of the forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    pub root: Vertex,
    /// Pre-order, children visited in ascending selection order.
    pub vertices: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterForest {
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    level: Vec<usize>,
    /// Position of each forest vertex in its tree's pre-order.
    position: Vec<usize>,
    members: VertexSet,
    trees: Vec<Tree>,
    edges: usize,
}

impl ClusterForest {
    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    /// Children in ascending selection order; the first is the leftmost.
    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    /// Depth below the root (roots are level 0).
    pub fn level(&self, v: Vertex) -> usize {
        self.level[v]
    }

    /// Pre-order rank within the vertex's tree; smaller is further left.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.members
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.contains(v) && self.children[v].is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// Materializes the rooted forest of `pairs`.
///
/// Trees are ordered by the selection index of their roots.
pub fn build_forest(
    graph: &Graph,
    pairs: &TiedPairSet,
    trace: &GreedyTrace,
) -> Result<ClusterForest> {
    let n = graph.n();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut members = VertexSet::new(n);

    for &(p, c) in pairs.pairs() {
        let (Some(hp), Some(hc)) = (trace.selection_index(p), trace.selection_index(c)) else {
            return Err(Error::Internal(format!(
                "tied pair ({p}, {c}) involves an unselected vertex"
            )));
        };
        if hp >= hc {
            return Err(Error::Internal(format!(
                "tied pair ({p}, {c}) does not respect selection order"
            )));
        }
        if !graph.has_edge(p, c) {
            return Err(Error::Internal(format!(
                "tied pair ({p}, {c}) is not an edge"
            )));
        }
        if parent[c].replace(p).is_some() {
            return Err(Error::Internal(format!("vertex {c} has two parents")));
        }
        children[p].push(c);
        members.insert(p);
        members.insert(c);
    }

    let order_key = |v: &Vertex| trace.selection_index(*v).unwrap_or(usize::MAX);
    for list in &mut children {
        list.sort_unstable_by_key(order_key);
    }
    let mut roots: Vec<Vertex> = members.iter().filter(|&v| parent[v].is_none()).collect();
    roots.sort_unstable_by_key(order_key);

    let mut level = vec![0; n];
    let mut position = vec![0; n];
    let mut trees = Vec::with_capacity(roots.len());
    let mut reached = 0;
    for root in roots {
        let mut vertices = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            position[v] = vertices.len();
            vertices.push(v);
            for &c in children[v].iter().rev() {
                level[c] = level[v] + 1;
                stack.push(c);
            }
        }
        reached += vertices.len();
        trees.push(Tree { root, vertices });
    }
    if reached != members.len() {
        return Err(Error::Internal("tied pairs contain a cycle".into()));
    }

    Ok(ClusterForest {
        parent,
        children,
        level,
        position,
        members,
        trees,
        edges: pairs.len(),
    })
}

/// Checks that every edge `(v_b, v_c)` between selected vertices, `b < c`, is
/// either itself a tied pair or `v_c` was tied to an even earlier `v_a`.
pub fn verify_proposition_1(graph: &Graph, trace: &GreedyTrace, pairs: &TiedPairSet) -> bool {
    let parent_step: Vec<Option<usize>> = graph
        .vertices()
        .map(|v| pairs.parent_of(v).and_then(|p| trace.selection_index(p)))
        .collect();
    graph.edges().all(|(u, v)| {
        let (Some(hu), Some(hv)) = (trace.selection_index(u), trace.selection_index(v)) else {
            return true;
        };
        let (b, c, hb) = if hu < hv { (u, v, hu) } else { (v, u, hv) };
        pairs.contains(b, c) || parent_step[c].is_some_and(|ha| ha < hb)
    })
}

/// Selected vertices outside the forest are pairwise non-adjacent, and each
/// one with any neighbor at all has a neighbor outside the selected set.
pub fn verify_outside_forest(graph: &Graph, trace: &GreedyTrace, forest: &ClusterForest) -> bool {
    let selected = trace.final_set();
    let outside: Vec<Vertex> = selected.iter().filter(|&v| !forest.contains(v)).collect();
    outside.iter().all(|&v| {
        let nbrs = graph.neighbors(v);
        let independent = nbrs
            .iter()
            .all(|&u| !(selected.contains(u) && !forest.contains(u)));
        let has_outer = nbrs.is_empty() || nbrs.iter().any(|&u| !selected.contains(u));
        independent && has_outer
    })
}
