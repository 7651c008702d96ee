//! Brute-force enumeration of stopping sets, used as the oracle that the
//! branch-and-bound solver is tested against. Exponential in n_vars; intended
//! for n_vars up to roughly 24.

use crate::combi::Combinations;
use crate::graphs::TannerGraph;
use crate::stopping::VarSet;

/// Yields every nonempty stopping set of size at most `max_size`, each
/// exactly once, ordered by size and lexicographically within a size.
pub fn enumerate_stopping_sets(g: &TannerGraph, max_size: usize) -> StoppingSets<'_> {
    let cap = max_size.min(g.n_vars());
    StoppingSets {
        g,
        size: 1,
        max_size: cap,
        combos: Combinations::new(g.n_vars(), 1),
        count: vec![0; g.n_checks()],
        stamp: vec![0; g.n_checks()],
        version: 0,
    }
}

pub struct StoppingSets<'a> {
    g: &'a TannerGraph,
    size: usize,
    max_size: usize,
    combos: Combinations,
    count: Vec<u32>,
    stamp: Vec<u32>,
    version: u32,
}

impl StoppingSets<'_> {
    fn is_stopping(&mut self, vars: &[usize]) -> bool {
        self.version += 1;
        let mut ok = true;
        for &v in vars {
            for &c in self.g.var_neighbors(v) {
                if self.stamp[c] != self.version {
                    self.stamp[c] = self.version;
                    self.count[c] = 1;
                } else {
                    self.count[c] += 1;
                }
            }
        }
        for &v in vars {
            for &c in self.g.var_neighbors(v) {
                if self.count[c] == 1 {
                    ok = false;
                }
            }
        }
        ok
    }
}

impl Iterator for StoppingSets<'_> {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        loop {
            while let Some(vars) = self.combos.next() {
                if self.is_stopping(&vars) {
                    let set = VarSet::from_indices(self.g.n_vars(), vars)
                        .expect("enumerated indices are in range");
                    return Some(set);
                }
            }
            self.size += 1;
            if self.size > self.max_size {
                return None;
            }
            self.combos = Combinations::new(self.g.n_vars(), self.size);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_graph() {
        let g = TannerGraph::new(2, vec![vec![0, 1]]).unwrap();
        let all: Vec<VarSet> = enumerate_stopping_sets(&g, 2).collect();
        assert_eq!(all, vec![VarSet::full(2)]);
    }

    #[test]
    fn triangle_incidence_has_only_full_set() {
        // Vertex-edge incidence of the triangle: 3 edge-variables, one check
        // per vertex adjacent to its two incident edges.
        let g = TannerGraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let all: Vec<VarSet> = enumerate_stopping_sets(&g, 3).collect();
        assert_eq!(all, vec![VarSet::full(3)]);
    }

    #[test]
    fn isolated_variable_appears() {
        // Variable 2 has no checks.
        let g = TannerGraph::new(3, vec![vec![0, 1]]).unwrap();
        let all: Vec<VarSet> = enumerate_stopping_sets(&g, 3).collect();
        let expect = vec![
            VarSet::from_indices(3, [2]).unwrap(),
            VarSet::from_indices(3, [0, 1]).unwrap(),
            VarSet::full(3),
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn size_then_lex_order() {
        // Two disjoint checked pairs: stopping sets {0,1}, {2,3}, {0,1,2,3}.
        let g = TannerGraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let all: Vec<Vec<usize>> = enumerate_stopping_sets(&g, 4)
            .map(|s| s.members())
            .collect();
        assert_eq!(all, vec![vec![0, 1], vec![2, 3], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn max_size_truncates() {
        let g = TannerGraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(enumerate_stopping_sets(&g, 2).count(), 2);
        assert_eq!(enumerate_stopping_sets(&g, 1).count(), 0);
    }

    #[test]
    fn every_yielded_set_verifies() {
        let g =
            TannerGraph::new(5, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![0, 4]]).unwrap();
        let mut n = 0;
        for s in enumerate_stopping_sets(&g, 5) {
            assert!(crate::stopping::is_stopping_set(&g, &s));
            n += 1;
        }
        assert!(n > 0);
    }
}
