//! Stopping sets of Tanner graphs.
//!
//! A set `S` of variable nodes is a stopping set when every check node
//! adjacent to `S` has at least two neighbors inside `S`. The empty set is
//! vacuously a stopping set; the stopping distance is the size of the
//! smallest nonempty one.

mod enumerate;
mod search;
mod varset;

pub use enumerate::{enumerate_stopping_sets, StoppingSets};
pub use search::{
    has_stopping_set_of_size, lex_min_stopping_set_of_size, stopping_distance, SearchOutcome,
    SearchStatus,
};
pub use varset::VarSet;

pub(crate) use varset::fmt_indices;

use crate::graphs::TannerGraph;

/// Check nodes adjacent to at least one variable in `s`, ascending.
pub fn neighborhood(g: &TannerGraph, s: &VarSet) -> Vec<usize> {
    assert_eq!(s.universe(), g.n_vars(), "set universe must match graph");
    let mut seen = vec![false; g.n_checks()];
    for v in s.iter() {
        for &c in g.var_neighbors(v) {
            seen[c] = true;
        }
    }
    (0..g.n_checks()).filter(|&c| seen[c]).collect()
}

/// Whether every check adjacent to `s` sees at least two members of `s`.
pub fn is_stopping_set(g: &TannerGraph, s: &VarSet) -> bool {
    first_violated_check(g, s).is_none()
}

/// Lowest-indexed check with exactly one neighbor in `s`, if any.
pub(crate) fn first_violated_check(g: &TannerGraph, s: &VarSet) -> Option<usize> {
    assert_eq!(s.universe(), g.n_vars(), "set universe must match graph");
    let mut count = vec![0usize; g.n_checks()];
    for v in s.iter() {
        for &c in g.var_neighbors(v) {
            count[c] += 1;
        }
    }
    count.iter().position(|&k| k == 1)
}
