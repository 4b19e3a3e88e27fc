//! Exact domination number for small graphs and a bipartite matching check
//! for systems of representatives.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bounds::gamma_bounds;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const DEFAULT_LIMIT: usize = 25;
const MASK_BITS: usize = u64::BITS as usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub gamma: usize,
    /// One minimum dominating set, ascending.
    pub witness: Vec<Vertex>,
    /// Search nodes visited.
    pub explored: u64,
}

struct Search {
    closed: Vec<u64>,
    full: u64,
    max_closed: u32,
    explored: u64,
    chosen: Vec<Vertex>,
}

impl Search {
    /// Tries to complete `dominated` with at most `budget` more vertices.
    /// Some closed neighborhood must contain the lowest undominated vertex,
    /// so branching over that neighborhood is exhaustive.
    fn extend(&mut self, dominated: u64, budget: usize, graph: &Graph) -> bool {
        self.explored += 1;
        let open = self.full & !dominated;
        if open == 0 {
            return true;
        }
        if budget == 0 || (open.count_ones() as usize) > budget * self.max_closed as usize {
            return false;
        }
        let u = open.trailing_zeros() as usize;
        let mut options: Vec<Vertex> = std::iter::once(u)
            .chain(graph.neighbors(u).iter().copied())
            .collect();
        options.sort_by_key(|&w| std::cmp::Reverse((self.closed[w] & open).count_ones()));
        for w in options {
            self.chosen.push(w);
            if self.extend(dominated | self.closed[w], budget - 1, graph) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Computes `γ(G)` by searching dominating sets of increasing size, starting
/// from the best cheap lower bound. Refuses graphs with more than `limit`
/// vertices.
pub fn exact_gamma(graph: &Graph, limit: usize) -> Result<OracleResult> {
    let n = graph.n();
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if n > MASK_BITS {
        return Err(Error::InvalidParameter(format!(
            "exact search supports at most {MASK_BITS} vertices"
        )));
    }
    if n == 0 {
        return Ok(OracleResult {
            gamma: 0,
            witness: Vec::new(),
            explored: 0,
        });
    }
    let closed: Vec<u64> = graph
        .vertices()
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .fold(1u64 << v, |mask, &u| mask | (1u64 << u))
        })
        .collect();
    let start = match gamma_bounds(graph) {
        Ok(bounds) => bounds.lower,
        Err(_) => n.div_ceil(graph.max_degree() + 1),
    };
    let mut search = Search {
        max_closed: closed.iter().map(|m| m.count_ones()).max().unwrap_or(1),
        full: if n == MASK_BITS {
            u64::MAX
        } else {
            (1u64 << n) - 1
        },
        closed,
        explored: 0,
        chosen: Vec::new(),
    };
    for k in start.max(1)..=n {
        if search.extend(0, k, graph) {
            let mut witness = std::mem::take(&mut search.chosen);
            witness.sort_unstable();
            return Ok(OracleResult {
                gamma: k,
                witness,
                explored: search.explored,
            });
        }
    }
    Err(Error::Internal("no dominating set found".into()))
}

/// A matching that assigns every member of `a` a distinct neighbor in `b`,
/// as `(a_i, b_i)` pairs, or `None` if Hall's condition fails.
pub fn system_of_representatives(
    graph: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    if let Some(v) = a.iter().find(|&v| b.contains(v)) {
        return Err(Error::SetOverlap(v));
    }
    let n = graph.n();
    let mut mate_of_b: Vec<Option<Vertex>> = vec![None; n];
    let mut mate_of_a: Vec<Option<Vertex>> = vec![None; n];

    for root in a.iter() {
        // breadth-first search for an augmenting path from `root`
        let mut came_from: Vec<Option<Vertex>> = vec![None; n];
        let mut visited_b = vec![false; n];
        let mut queue = VecDeque::from([root]);
        let mut free_end = None;
        'search: while let Some(x) = queue.pop_front() {
            for &y in graph.neighbors(x) {
                if !b.contains(y) || visited_b[y] {
                    continue;
                }
                visited_b[y] = true;
                came_from[y] = Some(x);
                match mate_of_b[y] {
                    None => {
                        free_end = Some(y);
                        break 'search;
                    }
                    Some(next) => queue.push_back(next),
                }
            }
        }
        let Some(mut y) = free_end else {
            return Ok(None);
        };
        loop {
            let x = came_from[y].expect("path predecessor");
            let previous = mate_of_a[x].replace(y);
            mate_of_b[y] = Some(x);
            match previous {
                Some(prev_y) if x != root => y = prev_y,
                _ => break,
            }
        }
    }
    Ok(Some(
        a.iter()
            .map(|x| (x, mate_of_a[x].expect("matched")))
            .collect(),
    ))
}

pub fn has_system_of_representatives(graph: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    Ok(system_of_representatives(graph, a, b)?.is_some())
}
