//! Seeded random graph generation for test instances.

use rand::seq::SliceRandom;
use rand::Rng;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// How a connected instance was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectMethod {
    /// Uniform sampling happened to be connected on this attempt (1-based).
    Uniform { attempts: u32 },
    /// Uniform sampling kept coming out disconnected; the graph is a random
    /// spanning tree plus uniformly chosen extra edges.
    SpanningTreeFill,
}

impl fmt::Display for ConnectMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectMethod::Uniform { attempts } => write!(f, "uniform (attempt {attempts})"),
            ConnectMethod::SpanningTreeFill => write!(f, "spanning tree + fill"),
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn check_edge_budget(n: usize, m: usize) -> Result<usize> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(Error::Invalid(format!(
            "{m} edges do not fit in a simple graph on {n} vertices (max {max})"
        )));
    }
    Ok(max)
}

/// Uniform random simple graph: `m` distinct edges over `n` vertices.
pub fn random_graph(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph> {
    check_edge_budget(n, m)?;
    let pairs = all_pairs(n);
    let edges: Vec<(usize, usize)> = pairs.choose_multiple(rng, m).copied().collect();
    Graph::new(n, edges)
}

/// Random connected graph with exactly `m` edges: tries uniform sampling a
/// few times, then falls back to a random spanning tree filled with extra
/// uniform edges. Requires m >= n-1.
pub fn random_connected_graph(
    n: usize,
    m: usize,
    rng: &mut impl Rng,
) -> Result<(Graph, ConnectMethod)> {
    check_edge_budget(n, m)?;
    if n >= 1 && m < n - 1 {
        return Err(Error::Invalid(format!(
            "a connected graph on {n} vertices needs at least {} edges, got {m}",
            n - 1
        )));
    }

    const UNIFORM_ATTEMPTS: u32 = 32;
    for attempt in 1..=UNIFORM_ATTEMPTS {
        let g = random_graph(n, m, rng)?;
        if g.is_connected() {
            return Ok((g, ConnectMethod::Uniform { attempts: attempt }));
        }
    }

    // Random spanning tree: attach each vertex (in random order) to a
    // uniformly chosen earlier one.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            (order[j].min(order[i]), order[j].max(order[i]))
        })
        .collect();
    let tree: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let remaining: Vec<(usize, usize)> = all_pairs(n)
        .into_iter()
        .filter(|p| !tree.contains(p))
        .collect();
    edges.extend(remaining.choose_multiple(rng, m - (n - 1)).copied());
    let g = Graph::new(n, edges)?;
    assert!(g.is_connected());
    Ok((g, ConnectMethod::SpanningTreeFill))
}
