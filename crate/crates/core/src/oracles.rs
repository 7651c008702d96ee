//! Brute-force vertex cover solvers.
//!
//! These are the ground truth the reduction verifier measures against, so
//! two independent implementations ship side by side: an edge-branching
//! search and a plain subset enumeration. Tests cross-check them; nothing
//! here is tuned beyond what n ≤ ~20 inputs need.

use serde::Serialize;

use crate::combi::Combinations;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::stopping::fmt_indices;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverStatus {
    Found,
    None,
}

/// Result of a vertex cover query. Mirrors the stopping-set outcome shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverOutcome {
    pub status: CoverStatus,
    pub size: usize,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "ser_witness"
    )]
    pub witness: Option<Vec<usize>>,
    pub exhaustive: bool,
}

fn ser_witness<S: serde::Serializer>(
    w: &Option<Vec<usize>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let w = w.as_ref().expect("skipped when none");
    s.serialize_str(&fmt_indices(w.iter().copied()))
}

impl CoverOutcome {
    pub fn found(&self) -> bool {
        self.status == CoverStatus::Found
    }
}

/// Whether every edge of `g` has at least one endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> Result<bool> {
    let mut member = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(Error::OutOfRange {
                name: "vertex",
                value: v,
                min: 0,
                max: g.n().saturating_sub(1),
            });
        }
        member[v] = true;
    }
    Ok(g.edges().iter().all(|&(u, v)| member[u] || member[v]))
}

/// Minimum vertex cover by edge branching: every cover contains an endpoint
/// of every edge, so branching on the two endpoints of the first uncovered
/// edge is complete. With `canonical` the witness is the lexicographically
/// smallest minimum cover (found by a size-tau enumeration pass); otherwise
/// it is the first minimum found in branch order.
pub fn min_vertex_cover(g: &Graph, canonical: bool) -> CoverOutcome {
    let mut in_cover = vec![false; g.n()];
    let mut best: Option<Vec<usize>> = None;
    branch(g, &mut in_cover, 0, &mut best);
    let mut witness = best.expect("the full vertex set is always a cover");
    if canonical {
        witness =
            lex_min_cover_of_size(g, witness.len()).expect("a cover of the minimum size exists");
    }
    CoverOutcome {
        status: CoverStatus::Found,
        size: witness.len(),
        witness: Some(witness),
        exhaustive: true,
    }
}

fn branch(g: &Graph, in_cover: &mut Vec<bool>, count: usize, best: &mut Option<Vec<usize>>) {
    if let Some(bound) = best.as_ref().map(Vec::len) {
        if count >= bound {
            return;
        }
    }
    let uncovered = g
        .edges()
        .iter()
        .find(|&&(u, v)| !in_cover[u] && !in_cover[v]);
    let Some(&(u, v)) = uncovered else {
        *best = Some((0..g.n()).filter(|&x| in_cover[x]).collect());
        return;
    };
    for x in [u, v] {
        in_cover[x] = true;
        branch(g, in_cover, count + 1, best);
        in_cover[x] = false;
    }
}

fn lex_min_cover_of_size(g: &Graph, k: usize) -> Option<Vec<usize>> {
    Combinations::new(g.n(), k)
        .find(|s| is_vertex_cover(g, s).expect("enumerated vertices are in range"))
}

/// Minimum vertex cover by subset enumeration in (size, lex) order, so the
/// witness is always the lexicographically smallest minimum cover.
/// Exponential; the cross-check oracle for [`min_vertex_cover`].
pub fn min_vertex_cover_exhaustive(g: &Graph) -> CoverOutcome {
    for k in 0..=g.n() {
        if let Some(witness) = lex_min_cover_of_size(g, k) {
            return CoverOutcome {
                status: CoverStatus::Found,
                size: k,
                witness: Some(witness),
                exhaustive: true,
            };
        }
    }
    unreachable!("the full vertex set is always a cover");
}

/// Whether a vertex cover of exactly `t` vertices exists: true iff tau <= t,
/// because any cover stays a cover under padding with extra vertices.
pub fn has_vertex_cover_of_size(g: &Graph, t: usize) -> Result<CoverOutcome> {
    if t > g.n() {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 0,
            max: g.n(),
        });
    }
    let min = min_vertex_cover(g, false);
    if t < min.size {
        return Ok(CoverOutcome {
            status: CoverStatus::None,
            size: t,
            witness: None,
            exhaustive: true,
        });
    }
    let mut witness = min.witness.expect("minimum cover carries a witness");
    let pad: Vec<usize> = (0..g.n()).filter(|v| !witness.contains(v)).collect();
    witness.extend(pad.into_iter().take(t - witness.len()));
    witness.sort_unstable();
    debug_assert!(is_vertex_cover(g, &witness)?);
    Ok(CoverOutcome {
        status: CoverStatus::Found,
        size: t,
        witness: Some(witness),
        exhaustive: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn is_cover_basics() {
        let g = triangle();
        assert!(is_vertex_cover(&g, &[0, 1]).unwrap());
        assert!(!is_vertex_cover(&g, &[0]).unwrap());
        assert!(is_vertex_cover(&g, &[0, 1, 2]).unwrap());
        assert!(is_vertex_cover(&Graph::new(3, []).unwrap(), &[]).unwrap());
        assert!(is_vertex_cover(&g, &[7]).is_err());
    }

    #[test]
    fn single_edge_and_star() {
        let e = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(min_vertex_cover(&e, false).size, 1);
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let out = min_vertex_cover(&star, true);
        assert_eq!(out.size, 1);
        assert_eq!(out.witness, Some(vec![0]));
    }

    #[test]
    fn triangle_cover_two() {
        let out = min_vertex_cover(&triangle(), false);
        assert_eq!(out.size, 2);
        assert_eq!(out.witness, Some(vec![0, 1]));
        assert_eq!(min_vertex_cover_exhaustive(&triangle()), out);
    }

    #[test]
    fn exact_size_padding() {
        let g = triangle();
        assert!(!has_vertex_cover_of_size(&g, 1).unwrap().found());
        assert!(has_vertex_cover_of_size(&g, 2).unwrap().found());
        let padded = has_vertex_cover_of_size(&g, 3).unwrap();
        assert_eq!(padded.witness, Some(vec![0, 1, 2]));
        let e = Graph::new(2, [(0, 1)]).unwrap();
        assert!(!has_vertex_cover_of_size(&e, 0).unwrap().found());
        assert!(has_vertex_cover_of_size(&e, 3).is_err());
    }

    #[test]
    fn edgeless_cover_is_empty() {
        let g = Graph::new(4, []).unwrap();
        let out = min_vertex_cover(&g, true);
        assert_eq!(out.size, 0);
        assert_eq!(out.witness, Some(vec![]));
        assert!(has_vertex_cover_of_size(&g, 0).unwrap().found());
    }

    /// Both solvers agree on every graph over 4 vertices and on a random
    /// sample over 8.
    #[test]
    fn solvers_agree() {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(4, edges).unwrap();
            let a = min_vertex_cover(&g, true);
            let b = min_vertex_cover_exhaustive(&g);
            assert_eq!(a, b, "graphs disagree for mask {mask}");
        }
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let edges: Vec<(usize, usize)> = (0..8)
                .flat_map(|u| (u + 1..8).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = Graph::new(8, edges).unwrap();
            assert_eq!(min_vertex_cover(&g, true), min_vertex_cover_exhaustive(&g));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // Adding any vertex to a cover leaves it a cover.
            #[test]
            fn padding_preserves_covers(
                raw in prop::collection::vec((0usize..7, 0usize..7), 1..12),
                picks in prop::collection::vec(any::<bool>(), 7),
            ) {
                let edges: Vec<(usize, usize)> =
                    raw.into_iter().filter(|(u, v)| u != v).collect();
                prop_assume!(!edges.is_empty());
                let g = Graph::new(7, edges).unwrap();
                // Repair an arbitrary subset into a cover.
                let mut s: Vec<usize> = (0..7).filter(|&v| picks[v]).collect();
                for &(u, v) in g.edges() {
                    if !s.contains(&u) && !s.contains(&v) {
                        s.push(u);
                    }
                }
                prop_assert!(is_vertex_cover(&g, &s).unwrap());
                for v in 0..7 {
                    let mut padded = s.clone();
                    padded.push(v);
                    prop_assert!(is_vertex_cover(&g, &padded).unwrap());
                }
            }
        }
    }
}
