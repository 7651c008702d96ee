//! Graph data model: general undirected graphs, Tanner graphs, and
//! parity-check matrices, with conversions between them.
//!
//! A [`Graph`] keeps its edge list in canonical order (each pair stored as
//! `(min, max)`, list sorted lexicographically). Every construction that
//! consumes a graph — most importantly the vertex-edge incidence graph and
//! the cover gadget — inherits its determinism from that order.

mod alist;
mod text;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use text::ParsedGraph;

/// An undirected simple graph: `n` vertices, canonical edge list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter; duplicates (as unordered pairs) are collapsed. Self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            let hi = u.max(v);
            if hi >= n {
                return Err(Error::OutOfRange {
                    name: "vertex index",
                    value: hi,
                    min: 0,
                    max: n.saturating_sub(1),
                });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Graph { n, edges: canon })
    }

    /// Parses the edge-list text format. See [`text`] for the grammar.
    pub fn parse(input: &str) -> Result<ParsedGraph> {
        text::parse_graph(input)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order. Index `j` in this slice is the identity of
    /// edge `e_j` everywhere downstream.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor lists, ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True iff the graph has a single connected component. The empty graph
    /// and the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Canonical edge-list text form; `Graph::parse` inverts it.
    pub fn to_edge_list(&self) -> String {
        text::emit_graph(self)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// A bipartite Tanner graph: variables on the left, checks on the right.
///
/// Both adjacency views are stored and kept consistent; neighbor lists are
/// sorted ascending and duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TannerGraph {
    n_vars: usize,
    check_adj: Vec<Vec<usize>>,
    var_adj: Vec<Vec<usize>>,
}

impl TannerGraph {
    /// Builds a Tanner graph from per-check neighbor lists. Lists are
    /// sorted; duplicate edges and out-of-range variables are rejected.
    pub fn new(n_vars: usize, check_adj: Vec<Vec<usize>>) -> Result<Self> {
        let mut var_adj = vec![Vec::new(); n_vars];
        let mut check_adj = check_adj;
        for (c, vars) in check_adj.iter_mut().enumerate() {
            vars.sort_unstable();
            for w in vars.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::Invalid(format!(
                        "duplicate edge between check {c} and variable {}",
                        w[0]
                    )));
                }
            }
            for &v in vars.iter() {
                if v >= n_vars {
                    return Err(Error::OutOfRange {
                        name: "variable index",
                        value: v,
                        min: 0,
                        max: n_vars.saturating_sub(1),
                    });
                }
                var_adj[v].push(c);
            }
        }
        // check_adj was processed in ascending check order, so var_adj is
        // already sorted.
        Ok(TannerGraph {
            n_vars,
            check_adj,
            var_adj,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.check_adj.iter().map(Vec::len).sum()
    }

    /// Variables adjacent to check `c`, ascending.
    pub fn check_neighbors(&self, c: usize) -> &[usize] {
        &self.check_adj[c]
    }

    /// Checks adjacent to variable `v`, ascending.
    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    /// Converts a parity-check matrix: column `i` becomes variable `x_i`,
    /// row `j` becomes check `c_j`, with an edge wherever the entry is 1.
    pub fn from_matrix(h: &ParityCheckMatrix) -> Self {
        let check_adj = (0..h.rows())
            .map(|r| (0..h.cols()).filter(|&c| h.get(r, c)).collect())
            .collect();
        TannerGraph::new(h.cols(), check_adj).expect("matrix adjacency is always well-formed")
    }
}

/// The vertex-edge incidence graph of `g`: variables are the vertices of
/// `g`, checks are its edges (in canonical order), and the check for edge
/// `(u, v)` is adjacent to exactly `{u, v}`.
pub fn incidence_graph(g: &Graph) -> TannerGraph {
    let check_adj = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    TannerGraph::new(g.n(), check_adj).expect("edge endpoints are in range")
}

/// A dense binary parity-check matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>, // row-major
}

impl std::fmt::Debug for ParityCheckMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ParityCheckMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl ParityCheckMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ParityCheckMatrix {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.bits[r * self.cols + c] = value;
    }

    /// Inverse of [`TannerGraph::from_matrix`].
    pub fn from_tanner(t: &TannerGraph) -> Self {
        let mut h = Self::zeros(t.n_checks(), t.n_vars());
        for c in 0..t.n_checks() {
            for &v in t.check_neighbors(c) {
                h.set(c, v, true);
            }
        }
        h
    }

    /// Parses the alist interchange format. See [`alist`] for details.
    pub fn parse_alist(input: &str) -> Result<Self> {
        alist::parse_alist(input)
    }

    /// Emits the alist form: index lists zero-padded to the maximum degree,
    /// as in the original MacKay files. `parse_alist` inverts it.
    pub fn to_alist(&self) -> String {
        alist::emit_alist(self)
    }

    /// Parses the dense text format: header `rows cols`, then rows of
    /// space-separated 0/1 bits.
    pub fn parse_dense(input: &str) -> Result<Self> {
        text::parse_dense(input)
    }

    pub fn to_dense(&self) -> String {
        text::emit_dense(self)
    }
}
