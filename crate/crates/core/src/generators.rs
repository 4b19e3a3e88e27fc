//! Graph families and the labeled fixtures used in tests and benchmarks.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("valid clique")
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
}

/// Edgeless graph on `n` vertices.
pub fn null(n: usize) -> Graph {
    Graph::empty(n)
}

/// Parameters of a random connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
}

impl RandomSpec {
    pub fn validate(&self) -> Result<()> {
        let max = self.n * self.n.saturating_sub(1) / 2;
        let min = self.n.saturating_sub(1);
        if self.m < min || self.m > max {
            return Err(Error::InvalidParameter(format!(
                "no connected simple graph with n = {} and m = {} (need {min} <= m <= {max})",
                self.n, self.m
            )));
        }
        Ok(())
    }
}

/// Connected simple graph with exactly `n` vertices and `m` edges.
///
/// A uniformly random recursive tree over a shuffled vertex order is laid
/// down first; the remaining `m − (n−1)` edges are drawn uniformly from the
/// non-edges. The stream is ChaCha8 seeded with `spec.seed`.
pub fn random_connected_graph(spec: RandomSpec) -> Result<Graph> {
    spec.validate()?;
    let RandomSpec { n, m, seed } = spec;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);

    let key = |u: Vertex, v: Vertex| if u < v { (u, v) } else { (v, u) };
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut present: HashSet<(Vertex, Vertex)> = HashSet::with_capacity(m);
    for i in 1..n {
        let e = key(order[i], order[rng.gen_range(0..i)]);
        present.insert(e);
        edges.push(e);
    }

    let extra = m - edges.len();
    let free = n * n.saturating_sub(1) / 2 - edges.len();
    if extra * 2 <= free {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(key(u, v)) {
                edges.push(key(u, v));
            }
        }
    } else {
        let candidates: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        for i in index::sample(&mut rng, candidates.len(), extra) {
            edges.push(candidates[i]);
        }
    }
    Graph::from_edges(n, edges)
}

/// `G1 ⊙ G2`: vertex `i` of `G1` is joined to every vertex of the `i`-th copy
/// of `G2`. Copy `i` occupies `n1 + i·n2 .. n1 + (i+1)·n2`.
pub fn corona(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges: Vec<(Vertex, Vertex)> = g1.edges().collect();
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(g2.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((0..n2).map(|u| (i, base + u)));
    }
    Graph::from_edges(n1 * (1 + n2), edges).expect("valid corona")
}

/// Replaces edge `uv` by `k` disjoint paths `u – w1i – w2i – v`. New vertices
/// are appended in the order `w11, w21, w12, w22, …`.
pub fn double_subdivision_inflate(
    graph: &Graph,
    edge: (Vertex, Vertex),
    k: usize,
) -> Result<Graph> {
    let (u, v) = edge;
    if !graph.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "inflation size must be at least 1".into(),
        ));
    }
    let n = graph.n();
    let mut edges: Vec<(Vertex, Vertex)> = graph
        .edges()
        .filter(|&e| e != (u.min(v), u.max(v)))
        .collect();
    for i in 0..k {
        let (w1, w2) = (n + 2 * i, n + 2 * i + 1);
        edges.extend([(u, w1), (w1, w2), (w2, v)]);
    }
    Graph::from_edges(n + 2 * k, edges)
}

/// Attaches `t` new degree-one vertices to `v`.
pub fn add_pendants(graph: &Graph, v: Vertex, t: usize) -> Result<Graph> {
    graph.check_vertex(v)?;
    let n = graph.n();
    let edges = graph.edges().chain((0..t).map(|i| (v, n + i)));
    Graph::from_edges(n + t, edges)
}

/// Double subdivision with inflation `k_per_edge[i]` on the `i`-th edge of
/// `h` (edges in lexicographic order), then `t_per_vertex[v]` pendants on
/// every original vertex.
pub fn w_family(h: &Graph, k_per_edge: &[usize], t_per_vertex: &[usize]) -> Result<Graph> {
    let original: Vec<(Vertex, Vertex)> = h.edges().collect();
    if k_per_edge.len() != original.len() {
        return Err(Error::InvalidParameter(format!(
            "{} inflation sizes for {} edges",
            k_per_edge.len(),
            original.len()
        )));
    }
    if t_per_vertex.len() != h.n() {
        return Err(Error::InvalidParameter(format!(
            "{} pendant counts for {} vertices",
            t_per_vertex.len(),
            h.n()
        )));
    }
    let mut g = h.clone();
    for (&e, &k) in original.iter().zip(k_per_edge) {
        g = double_subdivision_inflate(&g, e, k)?;
    }
    for (v, &t) in t_per_vertex.iter().enumerate() {
        g = add_pendants(&g, v, t)?;
    }
    Ok(g)
}

/// Appends, for every vertex `v < base_n`, a path `v – u – w` on two new
/// vertices.
fn with_tails(graph: &Graph, base_n: usize) -> Graph {
    let n = graph.n();
    let edges = graph
        .edges()
        .chain((0..base_n).flat_map(|v| [(v, n + 2 * v), (n + 2 * v, n + 2 * v + 1)]));
    Graph::from_edges(n + 2 * base_n, edges).expect("valid tails")
}

/// `𝒯(G, H)`: the corona `G ⊙ H` with a two-vertex tail on each `G` vertex.
pub fn t_family(g: &Graph, h: &Graph) -> Graph {
    with_tails(&corona(g, h), g.n())
}

/// `𝒯′(G, N_p)`: every `G` vertex joined to all `p` vertices of an edgeless
/// graph, plus a two-vertex tail on each `G` vertex. Requires `p > n(G)`.
pub fn t_prime_family(g: &Graph, p: usize) -> Result<Graph> {
    let n = g.n();
    if p <= n {
        return Err(Error::InvalidParameter(format!(
            "null graph order p = {p} must exceed n(G) = {n}"
        )));
    }
    let edges = g
        .edges()
        .chain((0..n).flat_map(|v| (0..p).map(move |j| (v, n + j))));
    let joined = Graph::from_edges(n + p, edges)?;
    Ok(with_tails(&joined, n))
}

/// A labeled graph transcribed from a figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    /// Display label of every vertex.
    pub labels: Vec<String>,
}

impl Fixture {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    /// Vertex ids for the given labels; panics on an unknown label.
    pub fn ids(&self, labels: &[&str]) -> Vec<Vertex> {
        let mut ids: Vec<Vertex> = labels
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l)
                    .unwrap_or_else(|| panic!("no vertex labeled {l} in {}", self.name))
            })
            .collect();
        ids.sort_unstable();
        ids
    }

    pub fn labels_of(&self, vertices: impl IntoIterator<Item = Vertex>) -> Vec<String> {
        vertices
            .into_iter()
            .map(|v| self.labels[v].clone())
            .collect()
    }
}

pub const FIXTURES: [&str; 6] = [
    "fig1-spider",
    "fig2-w22c3",
    "fig3-counter",
    "fig5a-ring",
    "fig7-mwds",
    "c5-corona-k1",
];

fn named(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// Looks up one of [`FIXTURES`].
pub fn fixture(name: &str) -> Result<Fixture> {
    let (name, graph, labels) = match name {
        // hub x1 = 0, mids q1..q4 = 1..4, stems p1..p8 = 5..12, pendants r1..r8 = 13..20
        "fig1-spider" => {
            let mut edges = Vec::new();
            for q in 1..=4 {
                edges.push((0, q));
                edges.push((q, 4 + 2 * q - 1));
                edges.push((q, 4 + 2 * q));
            }
            edges.extend((5..=12).map(|p| (p, p + 8)));
            let mut labels = vec!["x1".to_string()];
            labels.extend(named("q", 1..=4));
            labels.extend(named("p", 1..=8));
            labels.extend(named("r", 1..=8));
            ("fig1-spider", Graph::from_edges(21, edges)?, labels)
        }
        // H = C3 on u = 0, v = 1, w = 2; two chains per edge; pendants: u 2, v 2, w 0
        "fig2-w22c3" => {
            let g = w_family(&complete(3), &[2, 2, 2], &[2, 2, 0])?;
            let mut labels = vec!["u".to_string(), "v".to_string(), "w".to_string()];
            labels.extend(named("s", 1..=12));
            labels.extend(named("l", 1..=4));
            ("fig2-w22c3", g, labels)
        }
        // labeled vertices 1..6 = 0..5, unlabeled t1..t6 = 6..11
        "fig3-counter" => {
            let t = |i: usize| 5 + i;
            let edges = [
                (3, 4),
                (4, 5),
                (3, 0),
                (0, 4),
                (5, 1),
                (1, 4),
                (0, t(1)),
                (t(1), 2),
                (2, t(6)),
                (0, t(2)),
                (t(2), 2),
                (0, t(3)),
                (t(3), 2),
                (1, t(3)),
                (0, t(4)),
                (t(4), 2),
                (1, t(4)),
                (t(5), 2),
                (1, t(5)),
            ];
            let mut labels = named("", 1..=6);
            labels.extend(named("t", 1..=6));
            ("fig3-counter", Graph::from_edges(12, edges)?, labels)
        }
        // ring s2..s7 = 0..5, their pendants l2..l7 = 6..11, s1 = 12, s8 = 13, s9 = 14
        "fig5a-ring" => {
            let mut edges: Vec<(Vertex, Vertex)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
            edges.extend((0..6).map(|i| (i, i + 6)));
            for (hub, ring) in [(12, [0, 2, 3, 5]), (13, [0, 1, 4, 5]), (14, [1, 2, 3, 4])] {
                edges.extend(ring.iter().map(|&r| (hub, r)));
            }
            let mut labels = named("s", 2..=7);
            labels.extend(named("l", 2..=7));
            labels.extend(["s1", "s8", "s9"].map(String::from));
            ("fig5a-ring", Graph::from_edges(15, edges)?, labels)
        }
        // triangle 1, 2, 3 = 0, 1, 2; bottom row t1..t5 = 3..7
        "fig7-mwds" => {
            let edges = [
                (0, 1),
                (1, 2),
                (2, 0),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (2, 6),
                (2, 7),
                (0, 4),
                (0, 5),
                (0, 6),
                (3, 4),
                (6, 7),
            ];
            let mut labels = named("", 1..=3);
            labels.extend(named("t", 1..=5));
            ("fig7-mwds", Graph::from_edges(8, edges)?, labels)
        }
        "c5-corona-k1" => {
            let g = corona(&cycle(5)?, &complete(1));
            let mut labels = named("c", 0..=4);
            labels.extend(named("k", 0..=4));
            ("c5-corona-k1", g, labels)
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(Fixture {
        name,
        graph,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_extremes() {
        for seed in [1, 2, 3] {
            let tree = random_connected_graph(RandomSpec { n: 10, m: 9, seed }).unwrap();
            assert_eq!(tree.m(), 9);
            assert!(tree.is_connected());
            let k10 = random_connected_graph(RandomSpec { n: 10, m: 45, seed }).unwrap();
            assert_eq!(k10, complete(10));
        }
        assert!(random_connected_graph(RandomSpec {
            n: 10,
            m: 8,
            seed: 0
        })
        .is_err());
        assert!(random_connected_graph(RandomSpec {
            n: 10,
            m: 46,
            seed: 0
        })
        .is_err());
        assert_eq!(
            random_connected_graph(RandomSpec {
                n: 1,
                m: 0,
                seed: 0
            })
            .unwrap()
            .n(),
            1
        );
    }

    #[test]
    fn random_is_deterministic() {
        let spec = RandomSpec {
            n: 50,
            m: 80,
            seed: 42,
        };
        assert_eq!(
            random_connected_graph(spec).unwrap(),
            random_connected_graph(spec).unwrap()
        );
        let other = RandomSpec { seed: 43, ..spec };
        assert_ne!(
            random_connected_graph(spec).unwrap(),
            random_connected_graph(other).unwrap()
        );
    }

    #[test]
    fn corona_examples() {
        let g = corona(&cycle(5).unwrap(), &complete(1));
        assert_eq!((g.n(), g.m()), (10, 10));
        assert_eq!(corona(&complete(1), &complete(1)), path(2));
        let g = corona(&path(2), &path(4));
        assert_eq!((g.n(), g.m()), (10, 1 + 2 * 3 + 2 * 4));
    }

    #[test]
    fn subdivision_examples() {
        let g = double_subdivision_inflate(&path(2), (0, 1), 1).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 3) && g.has_edge(3, 1) && !g.has_edge(0, 1));
        let g = double_subdivision_inflate(&path(2), (1, 0), 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(double_subdivision_inflate(&path(2), (0, 1), 0).is_err());
        assert!(matches!(
            double_subdivision_inflate(&path(3), (0, 2), 1),
            Err(Error::MissingEdge(0, 2))
        ));
    }

    #[test]
    fn pendant_examples() {
        assert_eq!(add_pendants(&Graph::empty(1), 0, 4).unwrap(), star(4));
        assert_eq!(add_pendants(&path(3), 1, 0).unwrap(), path(3));
        let mut g = cycle(5).unwrap();
        for v in 0..5 {
            g = add_pendants(&g, v, 1).unwrap();
        }
        assert_eq!(g, corona(&cycle(5).unwrap(), &complete(1)));
        assert!(add_pendants(&path(2), 2, 1).is_err());
    }

    #[test]
    fn w_family_examples() {
        let g = w_family(&complete(3), &[2, 2, 2], &[2, 2, 0]).unwrap();
        assert_eq!((g.n(), g.m()), (19, 22));
        assert_eq!(w_family(&path(2), &[1], &[0, 0]).unwrap(), {
            // 0 - 2 - 3 - 1
            Graph::from_edges(4, [(0, 2), (2, 3), (3, 1)]).unwrap()
        });
        let g = w_family(&path(2), &[1], &[1, 1]).unwrap();
        assert_eq!((g.n(), g.m()), (6, 5));
        assert!(w_family(&path(2), &[1, 1], &[0, 0]).is_err());
        assert!(w_family(&path(2), &[1], &[0]).is_err());
    }

    #[test]
    fn t_families() {
        let a = t_family(&path(2), &path(4));
        assert_eq!(a.n(), 14);
        let b = t_prime_family(&path(2), 4).unwrap();
        assert_eq!(b.n(), 10);
        assert_eq!(b.m(), 1 + 8 + 4);
        assert!(t_prime_family(&path(2), 2).is_err());
    }

    #[test]
    fn fixtures_have_documented_shapes() {
        let f = fixture("fig1-spider").unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (21, 20));
        let f = fixture("fig3-counter").unwrap();
        assert_eq!(f.graph.n(), 12);
        let f = fixture("fig5a-ring").unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (15, 24));
        let f = fixture("fig2-w22c3").unwrap();
        assert_eq!(f.graph.n(), 19);
        for name in FIXTURES {
            let f = fixture(name).unwrap();
            assert!(f.graph.is_connected(), "{name}");
            assert_eq!(f.labels.len(), f.graph.n());
        }
        assert!(matches!(fixture("fig9"), Err(Error::UnknownFixture(_))));
    }
}
