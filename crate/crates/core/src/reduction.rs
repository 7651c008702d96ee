//! The vertex cover gadget: a connected graph `g` with `n` vertices and `m`
//! edges becomes a Tanner graph `G''` whose stopping sets of size under
//! `n(m+1)` correspond exactly to vertex covers of `g`, with a cover of size
//! `t` matching a stopping set of size `t(m+1) + m`.
//!
//! Variables live in layers `L_0..L_{m+1}`: `L_0` holds one variable per
//! edge, the other layers one per vertex. Checks live in `R_0..R_{m+1}`:
//! `R_0` chains the `L_0` edge variables together (z_1..z_{m-1}), `R_1`
//! holds one check per edge, and `R_2..R_{m+1}` one per vertex. The five
//! edge families:
//!
//!   1. `u@L_i - u@R_i` for 2 <= i <= m+1
//!   2. `u@L_i - u@R_{i+1}` for 1 <= i <= m
//!   3. `e@R_1 - u@L_1` and `e@R_1 - v@L_1` for each edge e = (u, v)
//!   4. `e@L_0 - e@R_1`
//!   5. `z_i - e_i@L_0` and `z_i - e_{i+1}@L_0` (1-based edge positions)
//!
//! Indexing is layer-major with canonical order inside each layer, so every
//! build is byte-for-byte reproducible.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{Graph, TannerGraph};
use crate::oracles::{has_vertex_cover_of_size, is_vertex_cover, min_vertex_cover};
use crate::stopping::{
    first_violated_check, has_stopping_set_of_size, is_stopping_set, stopping_distance, VarSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// What a gadget node stands for: a vertex layer copy, an edge slot, or a
/// chain check z_i (chain indices are 1-based, matching their z_1..z_{m-1}
/// names; vertex and edge tags are the usual 0-based ids).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Vertex(usize),
    Edge(usize),
    Chain(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayerLabel {
    pub side: Side,
    pub layer: usize,
    pub tag: Tag,
}

/// A built gadget: the source graph, the product Tanner graph, and the
/// label bijection for both sides.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    source: Graph,
    product: TannerGraph,
    var_labels: Vec<LayerLabel>,
    check_labels: Vec<LayerLabel>,
    n: usize,
    m: usize,
}

/// Builds `G''` from a connected graph with at least one edge.
pub fn build_reduction(g: &Graph) -> Result<ReductionInstance> {
    let n = g.n();
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Invalid(
            "reduction requires a graph with at least one edge".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let ix = Indexer { n, m };
    let mut check_adj = vec![Vec::new(); ix.n_checks()];
    for i in 1..m {
        check_adj[ix.chain(i)] = vec![ix.edge_var(i - 1), ix.edge_var(i)];
    }
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        check_adj[ix.edge_check(j)] =
            vec![ix.edge_var(j), ix.vertex_var(1, u), ix.vertex_var(1, v)];
    }
    for layer in 2..=m + 1 {
        for u in 0..n {
            check_adj[ix.vertex_check(layer, u)] =
                vec![ix.vertex_var(layer - 1, u), ix.vertex_var(layer, u)];
        }
    }
    let product = TannerGraph::new(ix.n_vars(), check_adj)?;
    debug_assert!((0..product.n_vars()).all(|v| !product.var_neighbors(v).is_empty()));

    let mut var_labels = Vec::with_capacity(ix.n_vars());
    for j in 0..m {
        var_labels.push(LayerLabel {
            side: Side::Left,
            layer: 0,
            tag: Tag::Edge(j),
        });
    }
    for layer in 1..=m + 1 {
        for u in 0..n {
            var_labels.push(LayerLabel {
                side: Side::Left,
                layer,
                tag: Tag::Vertex(u),
            });
        }
    }
    let mut check_labels = Vec::with_capacity(ix.n_checks());
    for i in 1..m {
        check_labels.push(LayerLabel {
            side: Side::Right,
            layer: 0,
            tag: Tag::Chain(i),
        });
    }
    for j in 0..m {
        check_labels.push(LayerLabel {
            side: Side::Right,
            layer: 1,
            tag: Tag::Edge(j),
        });
    }
    for layer in 2..=m + 1 {
        for u in 0..n {
            check_labels.push(LayerLabel {
                side: Side::Right,
                layer,
                tag: Tag::Vertex(u),
            });
        }
    }

    Ok(ReductionInstance {
        source: g.clone(),
        product,
        var_labels,
        check_labels,
        n,
        m,
    })
}

/// Layer-major index arithmetic for `G''`.
#[derive(Clone, Copy)]
struct Indexer {
    n: usize,
    m: usize,
}

impl Indexer {
    fn n_vars(self) -> usize {
        self.n * (self.m + 1) + self.m
    }

    fn n_checks(self) -> usize {
        self.n * self.m + 2 * self.m - 1
    }

    /// Variable for edge j in L_0.
    fn edge_var(self, j: usize) -> usize {
        j
    }

    /// Variable for vertex u in L_layer, layer in 1..=m+1.
    fn vertex_var(self, layer: usize, u: usize) -> usize {
        self.m + (layer - 1) * self.n + u
    }

    /// Check z_i in R_0, i in 1..=m-1.
    fn chain(self, i: usize) -> usize {
        i - 1
    }

    /// Check for edge j in R_1.
    fn edge_check(self, j: usize) -> usize {
        (self.m - 1) + j
    }

    /// Check for vertex u in R_layer, layer in 2..=m+1.
    fn vertex_check(self, layer: usize, u: usize) -> usize {
        (self.m - 1) + self.m + (layer - 2) * self.n + u
    }
}

impl ReductionInstance {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn product(&self) -> &TannerGraph {
        &self.product
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn var_label(&self, v: usize) -> LayerLabel {
        self.var_labels[v]
    }

    pub fn check_label(&self, c: usize) -> LayerLabel {
        self.check_labels[c]
    }

    /// All labels, variables first (left side), then checks (right side).
    /// `index` counts within each side.
    pub fn labels(&self) -> Vec<IndexedLabel> {
        let vars = self.var_labels.iter().enumerate();
        let checks = self.check_labels.iter().enumerate();
        vars.chain(checks)
            .map(|(index, &label)| IndexedLabel { index, label })
            .collect()
    }

    fn ix(&self) -> Indexer {
        Indexer {
            n: self.n,
            m: self.m,
        }
    }

    /// Size of the stopping set matching a cover of size `t`: t(m+1) + m.
    pub fn target_size(&self, t: usize) -> Result<usize> {
        if t < 1 || t > self.n - 1 {
            return Err(Error::OutOfRange {
                name: "t",
                value: t,
                min: 1,
                max: self.n - 1,
            });
        }
        Ok(t * (self.m + 1) + self.m)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct IndexedLabel {
    pub index: usize,
    #[serde(flatten)]
    pub label: LayerLabel,
}

/// Maps a vertex cover to the stopping set `L_0 ∪ {u@L_i : u in cover}`.
/// The image has size |cover|(m+1) + m and is re-verified before return.
pub fn cover_to_stopping_set(inst: &ReductionInstance, cover: &[usize]) -> Result<VarSet> {
    let g = inst.source();
    let mut members: Vec<usize> = cover.to_vec();
    members.sort_unstable();
    members.dedup();
    if let Some(&v) = members.iter().find(|&&v| v >= inst.n) {
        return Err(Error::OutOfRange {
            name: "vertex",
            value: v,
            min: 0,
            max: inst.n - 1,
        });
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| !members.contains(&u) && !members.contains(&v))
    {
        return Err(Error::NotVertexCover { u, v });
    }
    let t = members.len();
    if t < 1 || t > inst.n - 1 {
        return Err(Error::OutOfRange {
            name: "|cover|",
            value: t,
            min: 1,
            max: inst.n - 1,
        });
    }

    let ix = inst.ix();
    let mut s = VarSet::empty(inst.product.n_vars());
    for j in 0..inst.m {
        s.insert(ix.edge_var(j));
    }
    for &u in &members {
        for layer in 1..=inst.m + 1 {
            s.insert(ix.vertex_var(layer, u));
        }
    }
    assert_eq!(s.len(), t * (inst.m + 1) + inst.m);
    assert!(
        is_stopping_set(&inst.product, &s),
        "cover image failed the stopping-set check"
    );
    Ok(s)
}

/// Extracts the cover `{u : u@L_i in s for some i}` from a stopping set of
/// size under n(m+1). Both the precondition and the postcondition are
/// verified at runtime; a postcondition failure means the construction
/// itself is broken.
pub fn stopping_set_to_cover(inst: &ReductionInstance, s: &VarSet) -> Result<Vec<usize>> {
    if s.universe() != inst.product.n_vars() {
        return Err(Error::UniverseMismatch {
            set_universe: s.universe(),
            n_vars: inst.product.n_vars(),
        });
    }
    if s.is_empty() {
        return Err(Error::Invalid("the empty set has no cover preimage".into()));
    }
    if let Some(check) = first_violated_check(&inst.product, s) {
        return Err(Error::NotStoppingSet { check });
    }
    let bound = inst.n * (inst.m + 1);
    if s.len() >= bound {
        return Err(Error::Invalid(format!(
            "stopping set of size {} is outside the structural bound (size < n(m+1) = {bound})",
            s.len()
        )));
    }

    let ix = inst.ix();
    let cover: Vec<usize> = (0..inst.n)
        .filter(|&u| (1..=inst.m + 1).any(|layer| s.contains(ix.vertex_var(layer, u))))
        .collect();
    let t = cover.len();
    if t < 1 || t > inst.n - 1 || s.len() != t * (inst.m + 1) + inst.m {
        return Err(Error::Invariant(format!(
            "stopping set of size {} yielded {t} vertices, not a t(m+1)+m match",
            s.len()
        )));
    }
    if !is_vertex_cover(inst.source(), &cover)? {
        return Err(Error::Invariant(
            "extracted vertex set is not a cover".into(),
        ));
    }
    Ok(cover)
}

/// Structural facts about a stopping set of `G''`: `L_0` is all-in or
/// all-out, each vertex column is all-in or all-out across `L_1..L_{m+1}`,
/// and the per-layer counts above `L_0` agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub l0_contained: bool,
    pub l0_all_or_nothing: bool,
    pub columns_consistent: bool,
    pub layer_counts: Vec<usize>,
    pub layers_uniform: bool,
    pub ok: bool,
}

pub fn check_structure(inst: &ReductionInstance, s: &VarSet) -> Result<StructureReport> {
    if s.universe() != inst.product.n_vars() {
        return Err(Error::UniverseMismatch {
            set_universe: s.universe(),
            n_vars: inst.product.n_vars(),
        });
    }
    if let Some(check) = first_violated_check(&inst.product, s) {
        return Err(Error::NotStoppingSet { check });
    }
    let ix = inst.ix();
    let l0_in = (0..inst.m).filter(|&j| s.contains(ix.edge_var(j))).count();
    let l0_contained = l0_in == inst.m;
    let l0_all_or_nothing = l0_in == 0 || l0_contained;
    let columns_consistent = (0..inst.n).all(|u| {
        let picks = (1..=inst.m + 1)
            .filter(|&layer| s.contains(ix.vertex_var(layer, u)))
            .count();
        picks == 0 || picks == inst.m + 1
    });
    let layer_counts: Vec<usize> = (1..=inst.m + 1)
        .map(|layer| {
            (0..inst.n)
                .filter(|&u| s.contains(ix.vertex_var(layer, u)))
                .count()
        })
        .collect();
    let layers_uniform = layer_counts.windows(2).all(|w| w[0] == w[1]);
    Ok(StructureReport {
        l0_contained,
        l0_all_or_nothing,
        columns_consistent,
        layer_counts,
        layers_uniform,
        ok: l0_all_or_nothing && columns_consistent && layers_uniform,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub t: usize,
    /// Oracle route: has_vertex_cover_of_size on the source graph.
    pub cover_exists: bool,
    /// Solver route: has_stopping_set_of_size(t(m+1)+m) on the gadget.
    pub stopping_set_exists: bool,
    pub equivalent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tau: usize,
    pub distance: usize,
    pub expected_distance: usize,
    pub rows: Vec<VerificationRow>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Graph>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks the cover/stopping-set correspondence on a concrete graph: for
/// every t in [1, n-1] the cover oracle and the stopping-set solver must
/// agree, and the gadget's stopping distance must equal tau(m+1) + m. The two routes never share
/// code: covers come from brute force on `g`, stopping sets from
/// branch-and-bound on `G''`.
pub fn verify_corollaries(g: &Graph) -> Result<VerificationReport> {
    let inst = build_reduction(g)?;
    let tau = min_vertex_cover(g, false).size;
    let outcome = stopping_distance(inst.product(), None);
    assert!(outcome.found(), "G'' always has a stopping set (all of L)");
    let distance = outcome.size;
    let expected_distance = tau * (inst.m + 1) + inst.m;

    let rows: Vec<VerificationRow> = (1..inst.n)
        .into_par_iter()
        .map(|t| -> Result<VerificationRow> {
            let cover_exists = has_vertex_cover_of_size(g, t)?.found();
            let size = t * (inst.m + 1) + inst.m;
            let stopping_set_exists = has_stopping_set_of_size(inst.product(), size)?.found();
            Ok(VerificationRow {
                t,
                cover_exists,
                stopping_set_exists,
                equivalent: cover_exists == stopping_set_exists,
            })
        })
        .collect::<Result<_>>()?;

    let pass = distance == expected_distance && rows.iter().all(|r| r.equivalent);
    Ok(VerificationReport {
        tau,
        distance,
        expected_distance,
        rows,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        counterexample: (!pass).then(|| g.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::incidence_graph;
    use crate::stopping::enumerate_stopping_sets;

    fn single_edge() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn single_edge_golden_adjacency() {
        let inst = build_reduction(&single_edge()).unwrap();
        let t = inst.product();
        assert_eq!(t.n_vars(), 5);
        assert_eq!(t.n_checks(), 3);
        assert_eq!(t.edge_count(), 7);
        // R_0 empty; check 0 is the R_1 edge check, checks 1..2 are R_2.
        assert_eq!(t.check_neighbors(0), &[0, 1, 2]);
        assert_eq!(t.check_neighbors(1), &[1, 3]);
        assert_eq!(t.check_neighbors(2), &[2, 4]);
        assert_eq!(
            inst.var_label(0),
            LayerLabel {
                side: Side::Left,
                layer: 0,
                tag: Tag::Edge(0)
            }
        );
        assert_eq!(
            inst.var_label(4),
            LayerLabel {
                side: Side::Left,
                layer: 2,
                tag: Tag::Vertex(1)
            }
        );
        assert_eq!(
            inst.check_label(0),
            LayerLabel {
                side: Side::Right,
                layer: 1,
                tag: Tag::Edge(0)
            }
        );
    }

    #[test]
    fn size_formulas() {
        for g in [single_edge(), triangle(), path4(), star5()] {
            let inst = build_reduction(&g).unwrap();
            let (n, m) = (g.n(), g.edge_count());
            assert_eq!(inst.product().n_vars(), n * (m + 1) + m);
            assert_eq!(inst.product().n_checks(), n * m + 2 * m - 1);
            assert_eq!(inst.product().edge_count(), 2 * n * m + 5 * m - 2);
            for v in 0..inst.product().n_vars() {
                assert!(!inst.product().var_neighbors(v).is_empty());
            }
        }
    }

    fn star5() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn triangle_measures() {
        let inst = build_reduction(&triangle()).unwrap();
        assert_eq!(inst.product().n_vars(), 15);
        assert_eq!(inst.product().n_checks(), 14);
        assert_eq!(inst.product().edge_count(), 31);
    }

    #[test]
    fn chain_checks_link_consecutive_edges() {
        let inst = build_reduction(&path4()).unwrap();
        // m = 3: chains z_1, z_2 at check indices 0, 1.
        assert_eq!(inst.product().check_neighbors(0), &[0, 1]);
        assert_eq!(inst.product().check_neighbors(1), &[1, 2]);
        assert_eq!(
            inst.check_label(0),
            LayerLabel {
                side: Side::Right,
                layer: 0,
                tag: Tag::Chain(1)
            }
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            build_reduction(&disconnected),
            Err(Error::Disconnected)
        ));
        let edgeless = Graph::new(3, []).unwrap();
        assert!(build_reduction(&edgeless).is_err());
    }

    #[test]
    fn target_sizes() {
        let inst = build_reduction(&path4()).unwrap();
        assert_eq!(inst.target_size(2).unwrap(), 11);
        assert_eq!(inst.target_size(3).unwrap(), 15);
        assert!(inst.target_size(0).is_err());
        assert!(inst.target_size(4).is_err());
        let edge = build_reduction(&single_edge()).unwrap();
        assert_eq!(edge.target_size(1).unwrap(), 3);
    }

    #[test]
    fn cover_maps_to_stopping_set() {
        let inst = build_reduction(&single_edge()).unwrap();
        let s = cover_to_stopping_set(&inst, &[0]).unwrap();
        assert_eq!(s.members(), vec![0, 1, 3]);

        let tri = build_reduction(&triangle()).unwrap();
        let s = cover_to_stopping_set(&tri, &[0, 1]).unwrap();
        assert_eq!(s.len(), 11);
        assert!(is_stopping_set(tri.product(), &s));
    }

    #[test]
    fn non_cover_rejected() {
        let tri = build_reduction(&triangle()).unwrap();
        match cover_to_stopping_set(&tri, &[0]) {
            Err(Error::NotVertexCover { u, v }) => assert_eq!((u, v), (1, 2)),
            other => panic!("expected NotVertexCover, got {other:?}"),
        }
        // Full vertex set is a cover but outside the 1..=n-1 size range.
        assert!(cover_to_stopping_set(&tri, &[0, 1, 2]).is_err());
    }

    #[test]
    fn stopping_set_maps_back() {
        let inst = build_reduction(&single_edge()).unwrap();
        let s = VarSet::from_indices(5, [0, 1, 3]).unwrap();
        assert_eq!(stopping_set_to_cover(&inst, &s).unwrap(), vec![0]);

        // L_0 alone is not a stopping set: the R_1 check sees one neighbor.
        let l0 = VarSet::from_indices(5, [0]).unwrap();
        assert!(matches!(
            stopping_set_to_cover(&inst, &l0),
            Err(Error::NotStoppingSet { .. })
        ));

        // All of L is a stopping set but outside the structural bound.
        let full = VarSet::full(5);
        assert!(is_stopping_set(inst.product(), &full));
        assert!(matches!(
            stopping_set_to_cover(&inst, &full),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn round_trip_on_triangle_covers() {
        let tri = build_reduction(&triangle()).unwrap();
        for cover in [vec![0, 1], vec![0, 2], vec![1, 2]] {
            let s = cover_to_stopping_set(&tri, &cover).unwrap();
            assert_eq!(stopping_set_to_cover(&tri, &s).unwrap(), cover);
        }
    }

    #[test]
    fn structure_of_cover_image() {
        let tri = build_reduction(&triangle()).unwrap();
        let s = cover_to_stopping_set(&tri, &[0, 1]).unwrap();
        let report = check_structure(&tri, &s).unwrap();
        assert!(report.ok);
        assert!(report.l0_contained);
        assert_eq!(report.layer_counts, vec![2, 2, 2, 2]);
    }

    #[test]
    fn structure_of_vertex_layers_without_l0() {
        let tri = build_reduction(&triangle()).unwrap();
        let ix = tri.ix();
        let mut s = VarSet::empty(tri.product().n_vars());
        for layer in 1..=tri.m() + 1 {
            for u in 0..tri.n() {
                s.insert(ix.vertex_var(layer, u));
            }
        }
        let report = check_structure(&tri, &s).unwrap();
        assert!(report.ok);
        assert!(!report.l0_contained);
        assert_eq!(report.layer_counts, vec![3, 3, 3, 3]);
    }

    #[test]
    fn structure_rejects_non_stopping_sets() {
        let tri = build_reduction(&triangle()).unwrap();
        let mut s = cover_to_stopping_set(&tri, &[0, 1]).unwrap();
        let ix = tri.ix();
        s.remove(ix.vertex_var(3, 0));
        assert!(matches!(
            check_structure(&tri, &s),
            Err(Error::NotStoppingSet { .. })
        ));
    }

    #[test]
    fn verify_single_edge() {
        let report = verify_corollaries(&single_edge()).unwrap();
        assert!(report.passed());
        assert_eq!(report.tau, 1);
        assert_eq!(report.distance, 3);
        assert_eq!(report.rows.len(), 1);
        assert!(report.rows[0].cover_exists);
    }

    #[test]
    fn verify_triangle() {
        let report = verify_corollaries(&triangle()).unwrap();
        assert!(report.passed());
        assert_eq!(report.tau, 2);
        assert_eq!(report.distance, 11);
        let flags: Vec<(bool, bool)> = report
            .rows
            .iter()
            .map(|r| (r.cover_exists, r.stopping_set_exists))
            .collect();
        assert_eq!(flags, vec![(false, false), (true, true)]);
    }

    #[test]
    fn verify_path4() {
        let report = verify_corollaries(&path4()).unwrap();
        assert!(report.passed());
        assert_eq!(report.tau, 2);
        assert_eq!(report.distance, 11);
    }

    #[test]
    fn incidence_graphs_have_unique_stopping_set() {
        for g in [single_edge(), triangle(), path4(), star5()] {
            let inc = incidence_graph(&g);
            let all: Vec<VarSet> = enumerate_stopping_sets(&inc, inc.n_vars()).collect();
            assert_eq!(all, vec![VarSet::full(inc.n_vars())], "graph {g:?}");
        }
    }

    /// Every enumerated stopping set of the triangle gadget below the
    /// n(m+1) structural bound has size t(m+1)+m, contains L_0, and
    /// extracts to a t-cover.
    #[test]
    fn below_bound_sets_extract_to_covers() {
        let tri = build_reduction(&triangle()).unwrap();
        let bound = tri.n() * (tri.m() + 1);
        let mut seen = 0;
        for s in enumerate_stopping_sets(tri.product(), bound - 1) {
            seen += 1;
            let t = (s.len() - tri.m()) / (tri.m() + 1);
            assert_eq!(s.len(), t * (tri.m() + 1) + tri.m());
            for j in 0..tri.m() {
                assert!(s.contains(j), "L_0 member {j} missing from {s:?}");
            }
            let cover = stopping_set_to_cover(&tri, &s).unwrap();
            assert_eq!(cover.len(), t);
        }
        assert!(seen > 0);
    }

    mod props {
        use super::*;
        use crate::gen::random_connected_graph;
        use proptest::prelude::*;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        proptest! {
            // stopping_set_to_cover inverts cover_to_stopping_set for any
            // cover of size 1..=n-1.
            #[test]
            fn cover_round_trip(
                seed in any::<u64>(),
                n in 2usize..7,
                picks in prop::collection::vec(any::<bool>(), 7),
            ) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
                let (g, _) = random_connected_graph(n, m, &mut rng).unwrap();
                let inst = build_reduction(&g).unwrap();
                // Repair an arbitrary subset into a cover, then shrink full
                // covers by one vertex (V minus any vertex still covers).
                let mut cover: Vec<usize> = (0..n).filter(|&v| picks[v]).collect();
                for &(u, v) in g.edges() {
                    if !cover.contains(&u) && !cover.contains(&v) {
                        cover.push(u);
                    }
                }
                cover.sort_unstable();
                if cover.len() == n {
                    cover.pop();
                }
                prop_assume!(!cover.is_empty());
                let s = cover_to_stopping_set(&inst, &cover).unwrap();
                prop_assert_eq!(stopping_set_to_cover(&inst, &s).unwrap(), cover);
            }
        }
    }
}
