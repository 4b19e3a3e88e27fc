//! Simple undirected graphs and the vertex-set predicates used throughout the
//! solver.
//!
//! Vertices are dense identifiers `0..n`. A [`Graph`] is immutable once built;
//! adjacency is kept as sorted neighbor lists so neighborhood scans are linear
//! in the degree and edge lookups are a binary search.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Membership bit set over the vertices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from vertex identifiers, rejecting identifiers `>= n`.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Number of vertices of the underlying graph (not the set size).
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let present = self.bits.contains(v);
        self.bits.set(v, false);
        present
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Vertices of the universe that are not members.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }
}

/// Degree and distance statistics of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a simple graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self {
            adjacency,
            m: m / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// True iff every vertex outside `set` has a neighbor in `set`.
    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        self.vertices()
            .all(|v| set.contains(v) || self.neighbors(v).iter().any(|&u| set.contains(u)))
    }

    /// True iff `set` dominates and no single member can be dropped.
    pub fn is_minimal_dominating(&self, set: &VertexSet) -> bool {
        if !self.is_dominating(set) {
            return false;
        }
        // closed-neighborhood hit counts
        let hits = self.closed_hits(set);
        set.iter().all(|v| !self.is_redundant(v, set, &hits))
    }

    /// No edge joins two members of `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| self.neighbors(v).iter().all(|&u| !set.contains(u)))
    }

    /// `hits[v] = |N[v] ∩ set|`.
    pub(crate) fn closed_hits(&self, set: &VertexSet) -> Vec<usize> {
        self.vertices()
            .map(|v| {
                usize::from(set.contains(v))
                    + self
                        .neighbors(v)
                        .iter()
                        .filter(|&&u| set.contains(u))
                        .count()
            })
            .collect()
    }

    /// Whether `v ∈ set` can be removed while keeping `set` dominating, given
    /// the current closed-neighborhood hit counts.
    pub(crate) fn is_redundant(&self, v: Vertex, set: &VertexSet, hits: &[usize]) -> bool {
        hits[v] >= 2
            && self
                .neighbors(v)
                .iter()
                .all(|&u| set.contains(u) || hits[u] >= 2)
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Longest shortest path, by a breadth-first search from every vertex.
    pub fn diameter(&self) -> Result<usize> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut diameter = 0;
        for v in self.vertices() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => diameter = diameter.max(d),
                    None => {
                        return Err(Error::Disconnected {
                            components: self.connected_components().len(),
                        })
                    }
                }
            }
        }
        Ok(diameter)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        Ok(DegreeStats {
            diameter: self.diameter()?,
            max_degree: self.max_degree(),
            min_degree: self.min_degree(),
        })
    }

    /// Subgraph induced by `vertices` (relabelled `0..k` in the given order),
    /// together with the map from new to original identifiers.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| local[u] != usize::MAX)
                    .map(|&u| local[u])
                    .collect();
                list.sort_unstable();
                list
            })
            .collect::<Vec<_>>();
        let m = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adjacency, m }, vertices.to_vec())
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&u| u + offset).collect()),
        );
        Graph {
            adjacency,
            m: self.m + other.m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn builds_path_and_dedups() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.m(), 3);
        assert_eq!(p4.neighbors(1), &[0, 2]);
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn domination_predicates() {
        let p4 = path(4);
        assert!(p4.is_dominating(&set(4, &[1, 2])));
        assert!(!p4.is_dominating(&set(4, &[0])));
        assert!(p4.is_dominating(&VertexSet::full(4)));

        let p5 = path(5);
        assert!(!p5.is_minimal_dominating(&set(5, &[1, 2, 3])));
        assert!(p5.is_minimal_dominating(&set(5, &[1, 3])));

        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(star.is_minimal_dominating(&set(5, &[1, 2, 3, 4])));
    }

    #[test]
    fn independence() {
        let p4 = path(4);
        assert!(p4.is_independent(&set(4, &[0, 2])));
        assert!(!p4.is_independent(&set(4, &[1, 2])));
        assert!(p4.is_independent(&VertexSet::new(4)));
    }

    #[test]
    fn components() {
        assert_eq!(path(4).connected_components(), vec![vec![0, 1, 2, 3]]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(Graph::empty(1).connected_components(), vec![vec![0]]);
    }

    #[test]
    fn degree_statistics() {
        let s = path(5).degree_stats().unwrap();
        assert_eq!((s.max_degree, s.min_degree, s.diameter), (2, 1, 4));
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let s = star.degree_stats().unwrap();
        assert_eq!((s.max_degree, s.min_degree, s.diameter), (4, 1, 2));
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = c4.degree_stats().unwrap();
        assert_eq!((s.max_degree, s.min_degree, s.diameter), (2, 2, 2));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            two.diameter(),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p5 = path(5);
        let (sub, map) = p5.induced_subgraph(&[2, 3, 4]);
        assert_eq!(sub.m(), 2);
        assert_eq!(map, vec![2, 3, 4]);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2));
    }
}
