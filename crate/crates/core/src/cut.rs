//! Clique cuts, chordal cuts, and the search for a `(hole, edge)` pair whose
//! `G[V(U_{C,e}) ∪ X_{C,e}]` is chordal.

use serde::Serialize;
use thiserror::Error;

use crate::chordality::{find_peo, Peo};
use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::holes::{analyze_pair, check_preconditions, Hole, HoleContext, HoleSet, PreconditionViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(#[from] PreconditionViolation),
}

/// `x` is a clique and `G - x` has more components than `G`.
pub fn is_clique_cut(g: &Graph, x: &VertexSet) -> Result<bool, GraphError> {
    if !g.is_clique(x)? {
        return Ok(false);
    }
    Ok(g.remove_vertices(x)?.component_count() > g.component_count())
}

/// Union of all components `K` of `G - x` with `G[K ∪ x]` chordal, when `x`
/// is a clique cut and that union is nonempty.
///
/// Components only meet through the clique `x`, so `G[U ∪ x]` for a union
/// `U` is a clique-sum of the per-component pieces and is chordal exactly
/// when every piece is.
pub fn chordal_cut_witness(g: &Graph, x: &VertexSet) -> Result<Option<VertexSet>, GraphError> {
    if !is_clique_cut(g, x)? {
        return Ok(None);
    }
    let mut witness = VertexSet::new();
    for comp in g.remove_vertices(x)?.connected_components() {
        let side: VertexSet = comp.union(x).cloned().collect();
        if find_peo(&g.induced_subgraph(&side)?).is_some() {
            witness.extend(comp);
        }
    }
    Ok((!witness.is_empty()).then_some(witness))
}

pub fn is_chordal_cut(g: &Graph, x: &VertexSet) -> Result<bool, GraphError> {
    Ok(chordal_cut_witness(g, x)?.is_some())
}

/// A `(hole, edge)` pair together with the chordal side it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordalCutCertificate {
    pub hole: Hole,
    pub edge: Edge,
    pub x_ce: VertexSet,
    pub u_ce: VertexSet,
    /// Perfect elimination ordering of `G[u_ce ∪ x_ce]`.
    pub peo: Peo,
}

impl ChordalCutCertificate {
    /// Independent re-check against `g`: `x_ce` is a clique cut, `u_ce` is a
    /// nonempty union of components of `G - x_ce`, and `peo` is a perfect
    /// elimination ordering of the chordal side.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(true) = is_clique_cut(g, &self.x_ce) else {
            return false;
        };
        if self.u_ce.is_empty() {
            return false;
        }
        let Ok(rest) = g.remove_vertices(&self.x_ce) else {
            return false;
        };
        let is_union = rest
            .connected_components()
            .iter()
            .all(|k| k.is_subset(&self.u_ce) || k.is_disjoint(&self.u_ce));
        if !is_union || !self.u_ce.is_subset(&rest.vertex_set()) {
            return false;
        }
        let side: VertexSet = self.u_ce.union(&self.x_ce).cloned().collect();
        match g.induced_subgraph(&side) {
            Ok(h) => self.peo.is_valid_for(&h),
            Err(_) => false,
        }
    }

    pub fn chordal_side(&self) -> VertexSet {
        self.u_ce.union(&self.x_ce).cloned().collect()
    }
}

/// Scans `(hole, edge)` pairs with nonempty `T_{C,e}` in canonical order and
/// returns the first whose chordal side is chordal. Inputs outside the
/// graph class are rejected.
///
/// When every pair has a nonempty `S_{C,e}` a certificate always exists; a
/// `None` in that situation signals a bug.
pub fn find_chordal_cut(g: &Graph) -> Result<Option<ChordalCutCertificate>, CutError> {
    let holes = check_preconditions(g)?;
    Ok(scan_for_chordal_cut(g, &holes))
}

pub(crate) fn scan_for_chordal_cut(g: &Graph, holes: &HoleSet) -> Option<ChordalCutCertificate> {
    for hole in holes {
        let ctx = HoleContext::new(g, hole).expect("enumerated hole");
        for e in hole.edges() {
            let (u, v) = g.edge_indices(&e).expect("hole edge");
            if ctx.t_set(u, v).is_empty() {
                continue;
            }
            let a = analyze_pair(&ctx, hole, &e, u, v, 0);
            let side: VertexSet = a.u_ce.union(&a.x_ce).cloned().collect();
            let h = g.induced_subgraph(&side).expect("subset of V(G)");
            if let Some(peo) = find_peo(&h) {
                return Some(ChordalCutCertificate { hole: hole.clone(), edge: e, x_ce: a.x_ce, u_ce: a.u_ce, peo });
            }
        }
    }
    None
}

/// Whether `S_{C,e}` is nonempty for every hole `C` and every edge `e` of `C`.
pub fn every_hole_edge_has_avoiding_path(g: &Graph) -> Result<bool, CutError> {
    let holes = check_preconditions(g)?;
    let ok = holes.iter().all(|hole| {
        let ctx = HoleContext::new(g, hole).expect("enumerated hole");
        hole.edges().iter().all(|e| {
            let (u, v) = g.edge_indices(e).expect("hole edge");
            ctx.s_nonempty(u, v)
        })
    });
    Ok(ok)
}

/// Number of edges `e` of `hole` with `S_{C,e}` nonempty.
pub fn avoidable_edge_count(g: &Graph, hole: &Hole) -> Result<usize, crate::holes::AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    Ok(hole
        .edges()
        .iter()
        .filter(|e| {
            let (u, v) = g.edge_indices(e).expect("hole edge");
            ctx.s_nonempty(u, v)
        })
        .count())
}

/// First hole (canonical order) on which at least `h(G)` edges have a
/// nonempty `S_{C,e}`. Such a hole guarantees a chordal cut.
pub fn find_count_condition_hole(g: &Graph) -> Result<Option<Hole>, CutError> {
    let holes = check_preconditions(g)?;
    let h = holes.count();
    let found = holes
        .iter()
        .find(|hole| avoidable_edge_count(g, hole).expect("enumerated hole") >= h)
        .cloned();
    Ok(found)
}
