//! Exact stopping-set search: depth-first branch-and-bound over three-valued
//! variable states with unit propagation.
//!
//! A check is *violated* while it has exactly one neighbor decided in. A
//! violated check with no undecided neighbors kills the branch; with one
//! undecided neighbor it forces that neighbor in. Branching picks the
//! most-constrained violated check (fewest undecided neighbors, then lowest
//! index) and tries its lowest undecided neighbor in before out.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::TannerGraph;
use crate::stopping::{is_stopping_set, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    NoneWithinBudget,
}

/// Result of a distance or fixed-size query.
///
/// For `found`, `size` is the witness size; otherwise it is the size bound
/// the search exhausted. `exhaustive` is true when the outcome settles the
/// unrestricted question: a found witness is proven minimal for distance
/// queries, and a `none-within-budget` with `exhaustive` means no nonempty
/// stopping set exists at all, not merely none under the budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VarSet>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

/// Size and witness of the smallest nonempty stopping set, searching sizes
/// up to `budget` (up to n_vars when absent).
pub fn stopping_distance(g: &TannerGraph, budget: Option<usize>) -> SearchOutcome {
    let cap = budget.unwrap_or(g.n_vars()).min(g.n_vars());
    let mut s = Searcher::new(g);
    let mut best: Option<Vec<usize>> = None;
    let mut bound = cap + 1;
    s.dfs_min(&mut bound, &mut best);
    finish(g, s.nodes, best, cap, budget.is_none() || cap == g.n_vars())
}

/// Whether a stopping set of exactly `size` members exists. Not monotone in
/// `size`: supersets of stopping sets need not be stopping sets.
pub fn has_stopping_set_of_size(g: &TannerGraph, size: usize) -> Result<SearchOutcome> {
    check_size(g, size)?;
    if size == 0 {
        return Ok(SearchOutcome {
            status: SearchStatus::Found,
            size: 0,
            witness: Some(VarSet::empty(g.n_vars())),
            nodes_explored: 0,
            exhaustive: true,
        });
    }
    let mut s = Searcher::new(g);
    let mut found: Option<Vec<usize>> = None;
    s.dfs_exact(size, BranchRule::MostConstrained, &mut found);
    Ok(finish(g, s.nodes, found, size, true))
}

/// Lexicographically smallest stopping set of exactly `size` members, if any.
pub fn lex_min_stopping_set_of_size(g: &TannerGraph, size: usize) -> Result<Option<VarSet>> {
    check_size(g, size)?;
    if size == 0 {
        return Ok(Some(VarSet::empty(g.n_vars())));
    }
    let mut s = Searcher::new(g);
    let mut found: Option<Vec<usize>> = None;
    s.dfs_exact(size, BranchRule::LowestVariable, &mut found);
    Ok(found.map(|vars| {
        let w = VarSet::from_indices(g.n_vars(), vars).expect("witness indices in range");
        assert!(is_stopping_set(g, &w), "witness failed re-verification");
        w
    }))
}

fn check_size(g: &TannerGraph, size: usize) -> Result<()> {
    if size > g.n_vars() {
        return Err(Error::OutOfRange {
            name: "size",
            value: size,
            min: 0,
            max: g.n_vars(),
        });
    }
    Ok(())
}

fn finish(
    g: &TannerGraph,
    nodes: u64,
    witness: Option<Vec<usize>>,
    none_size: usize,
    none_exhaustive: bool,
) -> SearchOutcome {
    match witness {
        Some(vars) => {
            let size = vars.len();
            let w = VarSet::from_indices(g.n_vars(), vars).expect("witness indices in range");
            assert!(is_stopping_set(g, &w), "witness failed re-verification");
            SearchOutcome {
                status: SearchStatus::Found,
                size,
                witness: Some(w),
                nodes_explored: nodes,
                exhaustive: true,
            }
        }
        None => SearchOutcome {
            status: SearchStatus::NoneWithinBudget,
            size: none_size,
            witness: None,
            nodes_explored: nodes,
            exhaustive: none_exhaustive,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tri {
    Undecided,
    In,
    Out,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BranchRule {
    /// Lowest undecided neighbor of the most-constrained violated check.
    MostConstrained,
    /// Always the lowest undecided variable; with in-before-out this visits
    /// witnesses in lexicographic order, so the first hit is the lex minimum.
    LowestVariable,
}

struct Searcher<'a> {
    g: &'a TannerGraph,
    state: Vec<Tri>,
    n_in: Vec<u32>,
    n_undec: Vec<u32>,
    count_in: usize,
    count_undec: usize,
    trail: Vec<usize>,
    nodes: u64,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a TannerGraph) -> Self {
        let n_undec = (0..g.n_checks())
            .map(|c| g.check_neighbors(c).len() as u32)
            .collect();
        Searcher {
            g,
            state: vec![Tri::Undecided; g.n_vars()],
            n_in: vec![0; g.n_checks()],
            n_undec,
            count_in: 0,
            count_undec: g.n_vars(),
            trail: Vec::new(),
            nodes: 0,
        }
    }

    fn assign(&mut self, v: usize, s: Tri) {
        debug_assert_eq!(self.state[v], Tri::Undecided);
        self.state[v] = s;
        self.count_undec -= 1;
        if s == Tri::In {
            self.count_in += 1;
        }
        for &c in self.g.var_neighbors(v) {
            self.n_undec[c] -= 1;
            if s == Tri::In {
                self.n_in[c] += 1;
            }
        }
        self.trail.push(v);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let s = self.state[v];
            self.state[v] = Tri::Undecided;
            self.count_undec += 1;
            if s == Tri::In {
                self.count_in -= 1;
            }
            for &c in self.g.var_neighbors(v) {
                self.n_undec[c] += 1;
                if s == Tri::In {
                    self.n_in[c] -= 1;
                }
            }
        }
    }

    /// Runs unit propagation with at most `cap` variables in. Returns false
    /// on a dead branch: a violated check that can no longer be repaired, or
    /// a forced assignment that would exceed the cap.
    fn propagate(&mut self, cap: usize) -> bool {
        loop {
            let mut forced = None;
            for c in 0..self.g.n_checks() {
                if self.n_in[c] != 1 {
                    continue;
                }
                match self.n_undec[c] {
                    0 => return false,
                    1 => {
                        forced = Some(c);
                        break;
                    }
                    _ => {}
                }
            }
            let Some(c) = forced else { return true };
            if self.count_in == cap {
                return false;
            }
            let v = self
                .g
                .check_neighbors(c)
                .iter()
                .copied()
                .find(|&v| self.state[v] == Tri::Undecided)
                .expect("check with n_undec=1 has an undecided neighbor");
            self.assign(v, Tri::In);
        }
    }

    /// Most-constrained violated check: fewest undecided neighbors, lowest
    /// index on ties. After propagation every violated check has >= 2.
    fn violated_check(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for c in 0..self.g.n_checks() {
            if self.n_in[c] == 1 && best.is_none_or(|(u, _)| self.n_undec[c] < u) {
                best = Some((self.n_undec[c], c));
            }
        }
        best.map(|(_, c)| c)
    }

    fn branch_var(&self, rule: BranchRule) -> Option<usize> {
        if rule == BranchRule::MostConstrained {
            if let Some(c) = self.violated_check() {
                return self
                    .g
                    .check_neighbors(c)
                    .iter()
                    .copied()
                    .find(|&v| self.state[v] == Tri::Undecided);
            }
        }
        (0..self.g.n_vars()).find(|&v| self.state[v] == Tri::Undecided)
    }

    fn in_set(&self) -> Vec<usize> {
        (0..self.g.n_vars())
            .filter(|&v| self.state[v] == Tri::In)
            .collect()
    }

    fn has_violated(&self) -> bool {
        self.n_in.contains(&1)
    }

    /// Minimization: keeps the incumbent in `bound` (strict improvement), so
    /// the final witness is the first minimum-size set met in branch order.
    fn dfs_min(&mut self, bound: &mut usize, best: &mut Option<Vec<usize>>) {
        self.nodes += 1;
        if self.count_in >= *bound || !self.propagate(*bound - 1) {
            return;
        }
        let pending = self.has_violated();
        if pending && self.count_in + 1 >= *bound {
            return;
        }
        if !pending && self.count_in >= 1 {
            debug_assert!(self.count_in < *bound);
            *bound = self.count_in;
            *best = Some(self.in_set());
            return;
        }
        let Some(v) = self.branch_var(BranchRule::MostConstrained) else {
            return;
        };
        for s in [Tri::In, Tri::Out] {
            let mark = self.trail.len();
            self.assign(v, s);
            self.dfs_min(bound, best);
            self.undo_to(mark);
        }
    }

    /// Exact-size search; returns true once a witness is found.
    fn dfs_exact(
        &mut self,
        target: usize,
        rule: BranchRule,
        found: &mut Option<Vec<usize>>,
    ) -> bool {
        self.nodes += 1;
        if !self.propagate(target) {
            return false;
        }
        if self.count_in + self.count_undec < target {
            return false;
        }
        let pending = self.has_violated();
        if !pending && self.count_in == target {
            *found = Some(self.in_set());
            return true;
        }
        if pending && self.count_in == target {
            return false;
        }
        let Some(v) = self.branch_var(rule) else {
            return false;
        };
        for s in [Tri::In, Tri::Out] {
            let mark = self.trail.len();
            self.assign(v, s);
            if self.dfs_exact(target, rule, found) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}
