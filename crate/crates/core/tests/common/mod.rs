//! Test-side oracles written against plain adjacency lists, independent of
//! the library's bit-set predicates and matching code.

#![allow(dead_code)]

use domset::generators::{random_connected_graph, RandomSpec};
use domset::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
}

pub fn dominates(adj: &[Vec<usize>], set: &[usize]) -> bool {
    let mut member = vec![false; adj.len()];
    for &v in set {
        member[v] = true;
    }
    (0..adj.len()).all(|v| member[v] || adj[v].iter().any(|&u| member[u]))
}

/// Dominating, and dropping any single member breaks domination.
pub fn minimal(adj: &[Vec<usize>], set: &[usize]) -> bool {
    dominates(adj, set)
        && (0..set.len()).all(|i| {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            !dominates(adj, &rest)
        })
}

pub fn independent(adj: &[Vec<usize>], set: &[usize]) -> bool {
    set.iter().all(|&v| adj[v].iter().all(|u| !set.contains(u)))
}

/// Kuhn's depth-first augmenting paths: can every member of `a` get its own
/// neighbor in `b`?
pub fn representatives(adj: &[Vec<usize>], a: &[usize], b: &[usize]) -> bool {
    fn augment(
        x: usize,
        adj: &[Vec<usize>],
        in_b: &[bool],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &y in &adj[x] {
            if in_b[y] && !seen[y] {
                seen[y] = true;
                if owner[y].is_none_or(|o| augment(o, adj, in_b, seen, owner)) {
                    owner[y] = Some(x);
                    return true;
                }
            }
        }
        false
    }
    let n = adj.len();
    let mut in_b = vec![false; n];
    for &y in b {
        in_b[y] = true;
    }
    let mut owner = vec![None; n];
    a.iter()
        .all(|&x| augment(x, adj, &in_b, &mut vec![false; n], &mut owner))
}

/// Domination number by enumerating every subset; only for small `n`.
pub fn brute_gamma(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    assert!(n <= 24);
    let closed: Vec<u32> = (0..n)
        .map(|v| adj[v].iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;
    (0u32..=full)
        .filter(|&mask| {
            let mut covered = 0u32;
            for (v, c) in closed.iter().enumerate() {
                if mask >> v & 1 == 1 {
                    covered |= c;
                }
            }
            covered == full
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Largest vertex degree, from the raw lists.
pub fn max_degree(adj: &[Vec<usize>]) -> usize {
    adj.iter().map(Vec::len).max().unwrap_or(0)
}

/// Greatest shortest-path distance, by breadth-first search from every vertex.
pub fn diameter(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        best = best.max(*dist.iter().max().unwrap());
    }
    best
}

pub const DENSITIES: [f64; 3] = [1.0, 1.3, 2.0];

/// Instance `i` of the seeded small-graph suite: `n` cycles through 4..=18,
/// density through [`DENSITIES`]; `m` is capped at the complete graph.
pub fn suite_instance(i: usize) -> (RandomSpec, Graph) {
    let n = 4 + i % 15;
    let density = DENSITIES[(i / 15) % DENSITIES.len()];
    let m = ((density * n as f64).round() as usize).min(n * (n - 1) / 2);
    let spec = RandomSpec {
        n,
        m,
        seed: 0x5eed_0000 + i as u64,
    };
    (
        spec,
        random_connected_graph(spec).expect("feasible suite instance"),
    )
}
