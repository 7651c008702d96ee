//! Iterative erasure decoding by peeling, and a Monte Carlo harness for
//! failure-rate estimation.
//!
//! The decoder tracks erasure positions only: any check with exactly one
//! erased neighbor resolves that neighbor, repeated to a fixpoint. The
//! residual at the fixpoint is the unique maximal stopping set inside the
//! erasure pattern, so decoding fails exactly when the erasures contain a
//! nonempty stopping set.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::TannerGraph;
use crate::stopping::{is_stopping_set, VarSet};

/// Erasure positions over a Tanner graph's variables.
pub type ErasureSet = VarSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelResult {
    /// Variables still erased at the fixpoint; always a stopping set.
    pub residual: VarSet,
    /// Number of variables the decoder resolved.
    pub rounds: usize,
    /// True iff the residual is empty.
    pub success: bool,
}

/// Runs the peeling decoder to its fixpoint. Checks become solvable in FIFO
/// order; the fixpoint itself is order-independent.
pub fn peel(g: &TannerGraph, erased: &ErasureSet) -> Result<PeelResult> {
    if erased.universe() != g.n_vars() {
        return Err(Error::UniverseMismatch {
            set_universe: erased.universe(),
            n_vars: g.n_vars(),
        });
    }
    let mut is_erased = vec![false; g.n_vars()];
    for v in erased.iter() {
        is_erased[v] = true;
    }
    let mut count: Vec<u32> = (0..g.n_checks())
        .map(|c| {
            g.check_neighbors(c)
                .iter()
                .filter(|&&v| is_erased[v])
                .count() as u32
        })
        .collect();
    let mut queue: VecDeque<usize> = (0..g.n_checks()).filter(|&c| count[c] == 1).collect();
    let mut rounds = 0;
    while let Some(c) = queue.pop_front() {
        if count[c] != 1 {
            continue; // stale: the neighbor was resolved through another check
        }
        let v = g
            .check_neighbors(c)
            .iter()
            .copied()
            .find(|&v| is_erased[v])
            .expect("count 1 means one erased neighbor");
        is_erased[v] = false;
        rounds += 1;
        for &c2 in g.var_neighbors(v) {
            count[c2] -= 1;
            if count[c2] == 1 {
                queue.push_back(c2);
            }
        }
    }
    let residual = VarSet::from_indices(g.n_vars(), (0..g.n_vars()).filter(|&v| is_erased[v]))
        .expect("residual indices are in range");
    assert!(
        is_stopping_set(g, &residual),
        "peel fixpoint is not a stopping set"
    );
    Ok(PeelResult {
        success: residual.is_empty(),
        residual,
        rounds,
    })
}

/// Monte Carlo failure-rate estimate: erase each variable independently
/// with probability `epsilon`, peel, count failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McReport {
    pub epsilon: f64,
    pub trials: u64,
    pub seed: u64,
    /// Trials are split across this many independently seeded shards;
    /// results are reproducible for a fixed (seed, shards) pair.
    pub shards: u64,
    pub failures: u64,
    pub rate: f64,
}

/// Estimates the decoding failure rate at erasure probability `epsilon`.
/// Shard `s` draws from stream `s` of a ChaCha8 generator keyed by `seed`,
/// so the result depends on (epsilon, trials, seed, shards) and nothing
/// else; shards may run in parallel.
pub fn mc_failure_rate(
    g: &TannerGraph,
    epsilon: f64,
    trials: u64,
    seed: u64,
    shards: u64,
) -> Result<McReport> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidProbability(epsilon));
    }
    if trials == 0 {
        return Err(Error::Invalid("trials must be at least 1".into()));
    }
    if shards == 0 {
        return Err(Error::Invalid("shards must be at least 1".into()));
    }
    let shards = shards.min(trials);
    let failures: u64 = (0..shards)
        .into_par_iter()
        .map(|s| {
            let shard_trials = trials / shards + u64::from(s < trials % shards);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s);
            let mut failed = 0;
            let mut erased = Vec::with_capacity(g.n_vars());
            for _ in 0..shard_trials {
                erased.clear();
                for v in 0..g.n_vars() {
                    if rng.gen::<f64>() < epsilon {
                        erased.push(v);
                    }
                }
                let e = VarSet::from_indices(g.n_vars(), erased.iter().copied())
                    .expect("erasure indices are in range");
                if !peel(g, &e).expect("universe matches").success {
                    failed += 1;
                }
            }
            failed
        })
        .sum();
    Ok(McReport {
        epsilon,
        trials,
        seed,
        shards,
        failures,
        rate: failures as f64 / trials as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stopping::enumerate_stopping_sets;
    use rand::seq::SliceRandom;

    fn pair() -> TannerGraph {
        TannerGraph::new(2, vec![vec![0, 1]]).unwrap()
    }

    fn triangle_incidence() -> TannerGraph {
        TannerGraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    /// Peeling with checks resolved in an arbitrary order instead of FIFO;
    /// used to demonstrate the fixpoint is order-independent.
    fn peel_random_order(g: &TannerGraph, erased: &ErasureSet, rng: &mut ChaCha8Rng) -> VarSet {
        let mut is_erased = vec![false; g.n_vars()];
        for v in erased.iter() {
            is_erased[v] = true;
        }
        loop {
            let solvable: Vec<usize> = (0..g.n_checks())
                .filter(|&c| {
                    g.check_neighbors(c)
                        .iter()
                        .filter(|&&v| is_erased[v])
                        .count()
                        == 1
                })
                .collect();
            let Some(&c) = solvable.choose(rng) else {
                break;
            };
            let v = g
                .check_neighbors(c)
                .iter()
                .copied()
                .find(|&v| is_erased[v])
                .unwrap();
            is_erased[v] = false;
        }
        VarSet::from_indices(g.n_vars(), (0..g.n_vars()).filter(|&v| is_erased[v])).unwrap()
    }

    fn random_tanner(rng: &mut ChaCha8Rng) -> TannerGraph {
        let n = rng.gen_range(3..=10);
        let checks = rng.gen_range(1..=6);
        let adj = (0..checks)
            .map(|_| {
                let deg = rng.gen_range(2..=3.min(n));
                let mut vars: Vec<usize> = (0..n).collect();
                vars.shuffle(rng);
                vars.truncate(deg);
                vars
            })
            .collect();
        TannerGraph::new(n, adj).unwrap()
    }

    fn random_erasure(rng: &mut ChaCha8Rng, n: usize) -> ErasureSet {
        VarSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap()
    }

    #[test]
    fn empty_erasure_succeeds() {
        let out = peel(&pair(), &VarSet::empty(2)).unwrap();
        assert!(out.success);
        assert_eq!(out.rounds, 0);
        assert!(out.residual.is_empty());
    }

    #[test]
    fn single_erasure_resolves() {
        let out = peel(&pair(), &VarSet::from_indices(2, [0]).unwrap()).unwrap();
        assert!(out.success);
        assert_eq!(out.rounds, 1);
    }

    #[test]
    fn stopping_set_blocks_decoding() {
        let out = peel(&pair(), &VarSet::full(2)).unwrap();
        assert!(!out.success);
        assert_eq!(out.residual, VarSet::full(2));
        assert_eq!(out.rounds, 0);
    }

    #[test]
    fn cascade_resolves_chain() {
        // Checks {0,1} and {1,2}: erasing {0,1} peels 1 (via the second
        // check) and then 0.
        let g = TannerGraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let out = peel(&g, &VarSet::from_indices(3, [0, 1]).unwrap()).unwrap();
        assert!(out.success);
        assert_eq!(out.rounds, 2);
    }

    #[test]
    fn universe_mismatch_rejected() {
        assert!(matches!(
            peel(&pair(), &VarSet::empty(3)),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn residual_is_maximal_stopping_subset() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let g = random_tanner(&mut rng);
            let e = random_erasure(&mut rng, g.n_vars());
            let out = peel(&g, &e).unwrap();
            assert!(out.residual.is_subset(&e));
            // Failure iff the erasures contain a nonempty stopping set, and
            // the residual is the union of all contained stopping sets.
            let contained: Vec<VarSet> = enumerate_stopping_sets(&g, g.n_vars())
                .filter(|s| s.is_subset(&e))
                .collect();
            assert_eq!(out.success, contained.is_empty());
            let union = contained
                .iter()
                .fold(VarSet::empty(g.n_vars()), |acc, s| acc.union(s));
            assert_eq!(out.residual, union);
        }
    }

    #[test]
    fn confluence_under_random_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..500 {
            let g = random_tanner(&mut rng);
            let e = random_erasure(&mut rng, g.n_vars());
            let fifo = peel(&g, &e).unwrap().residual;
            let random = peel_random_order(&g, &e, &mut rng);
            assert_eq!(fifo, random);
        }
    }

    #[test]
    fn mc_extremes_are_exact() {
        let g = triangle_incidence();
        let zero = mc_failure_rate(&g, 0.0, 300, 1, 4).unwrap();
        assert_eq!(zero.failures, 0);
        assert_eq!(zero.rate, 0.0);
        let one = mc_failure_rate(&g, 1.0, 300, 1, 4).unwrap();
        assert_eq!(one.failures, 300);
        assert_eq!(one.rate, 1.0);
    }

    #[test]
    fn mc_matches_exact_probability() {
        // Failure iff all three variables are erased: 0.5^3 = 0.125.
        let g = triangle_incidence();
        let report = mc_failure_rate(&g, 0.5, 10_000, 42, 8).unwrap();
        assert!((report.rate - 0.125).abs() < 0.02, "rate {}", report.rate);
    }

    #[test]
    fn mc_is_reproducible() {
        let g = triangle_incidence();
        let a = mc_failure_rate(&g, 0.3, 2_000, 7, 8).unwrap();
        let b = mc_failure_rate(&g, 0.3, 2_000, 7, 8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mc_rejects_bad_epsilon() {
        let g = pair();
        assert!(matches!(
            mc_failure_rate(&g, -0.1, 10, 0, 1),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            mc_failure_rate(&g, 1.5, 10, 0, 1),
            Err(Error::InvalidProbability(_))
        ));
        assert!(mc_failure_rate(&g, 0.5, 0, 0, 1).is_err());
    }
}
