//! Competition graphs of acyclic digraphs and certificates for the bound
//! `k(G) <= h(G) + 1` on K_{2,2,2}-free hole-edge-disjoint graphs.
//!
//! A [`CompetitionCertificate`] is an acyclic digraph on `V(G)` plus a list
//! of added vertices, claiming that its competition graph is `G` with the
//! added vertices isolated. [`build_bounded_digraph`] produces one with
//! exactly `h(G) + 1` added vertices by recursing on the number of holes:
//!
//! * no holes: the chordal construction of [`roberts_chordal_digraph`];
//! * some hole edge `e` with empty `T_{C,e}`: recurse on `G - e`, then give
//!   the endpoints of `e` a fresh common prey;
//! * otherwise: a chordal cut `X_{C,e}` splits off the chordal side
//!   `G[U ∪ X]`; recurse on the rest minus `e` and glue the chordal side
//!   back with one more fresh prey.
//!
//! Every glue step is re-verified from scratch.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::chordality::{find_peo, peo_ending_with_clique, ChordalityError};
use crate::cut::scan_for_chordal_cut;
use crate::graph::{Digraph, Edge, Graph, GraphError, VertexId, VertexSet};
use crate::holes::{check_preconditions, enumerate_holes, HoleContext, HoleSet, PreconditionViolation};

/// Largest graph the exact competition-number search accepts.
pub const EXACT_VERTEX_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(#[from] PreconditionViolation),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("glue set is not a clique of the chordal part")]
    NotAClique,
    #[error("glue precondition violated: {0}")]
    GlueMismatch(String),
    #[error("chordal part has no vertices outside the glue clique")]
    NothingToGlue,
    #[error("soundness failure: {0}")]
    Soundness(String),
}

impl From<ChordalityError> for BuildError {
    fn from(e: ChordalityError) -> Self {
        match e {
            ChordalityError::Graph(g) => BuildError::Graph(g),
            ChordalityError::NotChordal => BuildError::NotChordal,
            ChordalityError::NotAClique => BuildError::NotAClique,
        }
    }
}

/// Issues vertex names `_z0`, `_z1`, ... skipping every name already taken.
#[derive(Debug, Clone, Default)]
pub struct FreshNames {
    taken: BTreeSet<VertexId>,
    next: usize,
}

impl FreshNames {
    pub fn new<'a>(taken: impl IntoIterator<Item = &'a VertexId>) -> Self {
        FreshNames { taken: taken.into_iter().cloned().collect(), next: 0 }
    }

    pub fn reserve<'a>(&mut self, names: impl IntoIterator<Item = &'a VertexId>) {
        self.taken.extend(names.into_iter().cloned());
    }

    pub fn fresh(&mut self) -> VertexId {
        loop {
            let candidate = VertexId::new(format!("_z{}", self.next));
            self.next += 1;
            if self.taken.insert(candidate.clone()) {
                return candidate;
            }
        }
    }
}

/// Acyclic digraph `D` with `C(D) = G ∪ I_k`, where `I_k` are the added vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompetitionCertificate {
    pub digraph: Digraph,
    pub base_vertices: VertexSet,
    pub added_vertices: Vec<VertexId>,
}

impl CompetitionCertificate {
    pub fn claimed_k(&self) -> usize {
        self.added_vertices.len()
    }

    fn names(&self) -> FreshNames {
        let mut names = FreshNames::new(self.digraph.vertices());
        names.reserve(&self.base_vertices);
        names
    }

    /// Adds `count` fresh vertices with no arcs.
    pub fn padded(&self, count: usize) -> CompetitionCertificate {
        pad(self.clone(), count, &mut self.names())
    }
}

fn pad(mut cert: CompetitionCertificate, count: usize, names: &mut FreshNames) -> CompetitionCertificate {
    for _ in 0..count {
        let z = names.fresh();
        cert.digraph = cert.digraph.with_vertex(z.clone()).expect("fresh name");
        cert.added_vertices.push(z);
    }
    cert
}

/// `C(D)`: `uv` is an edge iff `u` and `v` share an out-neighbor.
pub fn competition_graph(d: &Digraph) -> Graph {
    let labels: Vec<VertexId> = d.vertices().cloned().collect();
    let index: BTreeMap<&VertexId, usize> = labels.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); labels.len()];
    for preds in d.in_neighborhoods().values() {
        for (p, a) in preds.iter().enumerate() {
            for b in &preds[p + 1..] {
                let (i, j) = (index[a], index[b]);
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Graph::from_index_adjacency(labels, adj)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Acyclicity {
    /// Topological order: every arc goes from an earlier to a later vertex.
    Acyclic(Vec<VertexId>),
    /// A directed cycle `c0 -> c1 -> ... -> c0`, rotated to start at its
    /// smallest vertex.
    Cyclic(Vec<VertexId>),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic(_))
    }
}

pub fn is_acyclic(d: &Digraph) -> Acyclicity {
    let ins = d.in_neighborhoods();
    let mut indegree: BTreeMap<&VertexId, usize> = ins.iter().map(|(v, p)| (*v, p.len())).collect();
    let mut ready: BTreeSet<&VertexId> = indegree.iter().filter(|(_, &k)| k == 0).map(|(v, _)| *v).collect();
    let mut order = Vec::with_capacity(d.vertex_count());
    while let Some(v) = ready.pop_first() {
        order.push(v.clone());
        for w in d.out_neighbors(v).expect("vertex") {
            let k = indegree.get_mut(w).expect("vertex");
            *k -= 1;
            if *k == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() == d.vertex_count() {
        return Acyclicity::Acyclic(order);
    }
    // Every leftover vertex has a leftover in-neighbor; walk backwards until
    // a vertex repeats.
    let leftover: BTreeSet<&VertexId> = indegree.iter().filter(|(_, &k)| k > 0).map(|(v, _)| *v).collect();
    let mut walk: Vec<&VertexId> = vec![leftover.first().copied().expect("leftover vertex")];
    let mut seen: BTreeMap<&VertexId, usize> = BTreeMap::from([(walk[0], 0)]);
    loop {
        let tip = *walk.last().expect("nonempty");
        let prev = *ins[tip].iter().find(|p| leftover.contains(*p)).expect("leftover in-neighbor");
        if let Some(&at) = seen.get(prev) {
            let mut cycle: Vec<VertexId> = walk[at..].iter().rev().map(|v| (*v).clone()).collect();
            let start = cycle.iter().enumerate().min_by_key(|(_, v)| *v).map(|(i, _)| i).unwrap_or(0);
            cycle.rotate_left(start);
            return Acyclicity::Cyclic(cycle);
        }
        seen.insert(prev, walk.len());
        walk.push(prev);
    }
}

/// Certificate with one added vertex for a chordal graph.
///
/// With a perfect elimination ordering `v1 .. vn` and cliques
/// `F_i = {v_i} ∪ (later neighbors of v_i)`, the clique `F_1` preys on a new
/// vertex `z` and each `F_i` (`i >= 2`) preys on `v_{i-1}`. Every arc points
/// down the order `z < v1 < ... < vn`.
pub fn roberts_chordal_digraph(g: &Graph) -> Result<CompetitionCertificate, BuildError> {
    roberts_with(g, &mut FreshNames::new(g.vertices()))
}

fn roberts_with(g: &Graph, names: &mut FreshNames) -> Result<CompetitionCertificate, BuildError> {
    let peo = find_peo(g).ok_or(BuildError::NotChordal)?;
    let z = names.fresh();
    let order = peo.order();
    let mut arcs = Vec::new();
    for i in 0..order.len() {
        let prey = if i == 0 { &z } else { &order[i - 1] };
        arcs.push((order[i].clone(), prey.clone()));
        for w in peo.later_neighbors(g, i) {
            arcs.push((w, prey.clone()));
        }
    }
    let digraph = Digraph::new(g.vertices().cloned().chain([z.clone()]), arcs)?;
    Ok(CompetitionCertificate { digraph, base_vertices: g.vertex_set(), added_vertices: vec![z] })
}

/// Given a certificate for `G - e`, certifies `G` by giving both endpoints of
/// `e` a fresh common prey.
pub fn extend_after_edge_deletion(cert: &CompetitionCertificate, e: &Edge) -> Result<CompetitionCertificate, BuildError> {
    extend_with(cert, e, &mut cert.names())
}

fn extend_with(cert: &CompetitionCertificate, e: &Edge, names: &mut FreshNames) -> Result<CompetitionCertificate, BuildError> {
    let (u, v) = e.endpoints();
    for end in [u, v] {
        if !cert.base_vertices.contains(end) {
            return Err(GraphError::UnknownVertex(end.clone()).into());
        }
    }
    names.reserve(cert.digraph.vertices());
    let z = names.fresh();
    let digraph = cert
        .digraph
        .with_vertex(z.clone())?
        .with_arcs([(u.clone(), z.clone()), (v.clone(), z.clone())])?;
    let mut added_vertices = cert.added_vertices.clone();
    added_vertices.push(z);
    Ok(CompetitionCertificate { digraph, base_vertices: cert.base_vertices.clone(), added_vertices })
}

/// Glues a chordal graph `g2` onto the graph certified by `cert1` along the
/// clique `x = V(G1) ∩ V(G2)`, spending one more added vertex.
///
/// Take a perfect elimination ordering `u1 .. um` of `g2` ending in `x`,
/// let `r = m - |x|`, `F_i = {u_i} ∪ (later g2-neighbors of u_i)` for
/// `i <= r` and `F_0 = x`. Then `F_1` preys on a fresh `z'`, `F_i` on
/// `u_{i-1}` and `F_0` on `u_r`. All new prey are new vertices, so the
/// competition graph gains exactly the edges of `g2`; the order
/// `z' < u1 < ... < ur < (old digraph)` keeps everything acyclic.
///
/// At most one edge of `g2` inside `x` may be absent from `G1`.
pub fn glue_chordal_part(
    cert1: &CompetitionCertificate,
    g2: &Graph,
    x: &VertexSet,
) -> Result<CompetitionCertificate, BuildError> {
    glue_with(cert1, g2, x, &mut cert1.names())
}

fn glue_with(
    cert1: &CompetitionCertificate,
    g2: &Graph,
    x: &VertexSet,
    names: &mut FreshNames,
) -> Result<CompetitionCertificate, BuildError> {
    let overlap: VertexSet = cert1.base_vertices.intersection(&g2.vertex_set()).cloned().collect();
    if &overlap != x {
        return Err(BuildError::GlueMismatch("glue set differs from V(G1) ∩ V(G2)".into()));
    }
    let peo = peo_ending_with_clique(g2, x)?;
    let r = peo.len() - x.len();
    if r == 0 {
        return Err(BuildError::NothingToGlue);
    }
    let order = peo.order();
    if let Some(clash) = order[..r].iter().find(|u| cert1.digraph.contains(u)) {
        return Err(BuildError::GlueMismatch(format!("{clash} already belongs to the certified digraph")));
    }
    let g1 = competition_graph(&cert1.digraph).induced_subgraph(&cert1.base_vertices)?;
    let missing = g2.edges().filter(|e| x.contains(e.a()) && x.contains(e.b()) && !g1.has_edge(e.a(), e.b())).count();
    if missing > 1 {
        return Err(BuildError::GlueMismatch(format!("{missing} clique edges missing from G1")));
    }

    names.reserve(cert1.digraph.vertices());
    names.reserve(g2.vertices());
    let z = names.fresh();
    let mut arcs = Vec::new();
    for i in 0..r {
        let prey = if i == 0 { &z } else { &order[i - 1] };
        arcs.push((order[i].clone(), prey.clone()));
        for w in peo.later_neighbors(g2, i) {
            arcs.push((w, prey.clone()));
        }
    }
    for w in x {
        arcs.push((w.clone(), order[r - 1].clone()));
    }
    let mut digraph = cert1.digraph.with_vertex(z.clone())?;
    for u in &order[..r] {
        digraph = digraph.with_vertex(u.clone())?;
    }
    let digraph = digraph.with_arcs(arcs)?;
    let mut base_vertices = cert1.base_vertices.clone();
    base_vertices.extend(order[..r].iter().cloned());
    let mut added_vertices = cert1.added_vertices.clone();
    added_vertices.push(z);
    Ok(CompetitionCertificate { digraph, base_vertices, added_vertices })
}

/// Certificate with exactly `h(G) + 1` added vertices for a K_{2,2,2}-free
/// hole-edge-disjoint graph.
pub fn build_bounded_digraph(g: &Graph) -> Result<CompetitionCertificate, BuildError> {
    let holes = check_preconditions(g)?;
    let mut names = FreshNames::new(g.vertices());
    let cert = build_rec(g, holes, &mut names)?;
    verify_certificate(g, &cert).map_err(|d| BuildError::Soundness(format!("final certificate rejected: {d}")))?;
    Ok(cert)
}

fn build_rec(g: &Graph, holes: HoleSet, names: &mut FreshNames) -> Result<CompetitionCertificate, BuildError> {
    let h = holes.count();
    if h == 0 {
        return roberts_with(g, names);
    }

    for hole in &holes {
        let ctx = HoleContext::new(g, hole).expect("enumerated hole");
        for e in hole.edges() {
            let (u, v) = g.edge_indices(&e)?;
            if !ctx.t_set(u, v).is_empty() {
                continue;
            }
            let smaller = g.delete_edge(&e)?;
            let sub_holes = enumerate_holes(&smaller);
            if sub_holes.count() >= h {
                return Err(BuildError::Soundness(format!(
                    "deleting {e} left {} holes, expected at most {}",
                    sub_holes.count(),
                    h - 1
                )));
            }
            let sub = build_rec(&smaller, sub_holes, names)?;
            let short = h - sub.claimed_k();
            return extend_with(&pad(sub, short, names), &e, names);
        }
    }

    let cut = scan_for_chordal_cut(g, &holes).ok_or_else(|| {
        BuildError::Soundness("every T_Ce is nonempty but no (hole, edge) pair has a chordal side".into())
    })?;
    let g2 = g.induced_subgraph(&cut.chordal_side())?;
    let rest: VertexSet = g.vertex_set().difference(&cut.u_ce).cloned().collect();
    let g1 = g.induced_subgraph(&rest)?.delete_edge(&cut.edge)?;
    let sub_holes = enumerate_holes(&g1);
    if sub_holes.count() >= h {
        return Err(BuildError::Soundness(format!(
            "remainder after cutting at {} has {} holes, expected at most {}",
            cut.edge,
            sub_holes.count(),
            h - 1
        )));
    }
    let sub = build_rec(&g1, sub_holes, names)?;
    let short = h - sub.claimed_k();
    let cert = glue_with(&pad(sub, short, names), &g2, &cut.x_ce, names)?;
    verify_certificate(g, &cert).map_err(|d| BuildError::Soundness(format!("glued certificate rejected: {d}")))?;
    Ok(cert)
}

/// First violated condition found while checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum CertificateDefect {
    #[error("base vertices differ from the graph's vertex set")]
    BaseVertexMismatch,
    #[error("vertex set mismatch: {0}")]
    VertexSetMismatch(String),
    #[error("cycle found: {}", .0.iter().map(VertexId::as_str).collect::<Vec<_>>().join(" -> "))]
    Cycle(Vec<VertexId>),
    #[error("missing competition edge {0}")]
    MissingEdge(Edge),
    #[error("spurious competition edge {0}")]
    SpuriousEdge(Edge),
    #[error("added vertex {vertex} is not isolated (adjacent to {neighbor})")]
    AddedVertexNotIsolated { vertex: VertexId, neighbor: VertexId },
}

/// Re-checks a certificate from scratch, in this order: vertex sets,
/// acyclicity, missing edges, spurious edges among base vertices, isolation
/// of the added vertices.
pub fn verify_certificate(g: &Graph, cert: &CompetitionCertificate) -> Result<(), CertificateDefect> {
    if cert.base_vertices != g.vertex_set() {
        return Err(CertificateDefect::BaseVertexMismatch);
    }
    let added: VertexSet = cert.added_vertices.iter().cloned().collect();
    if added.len() != cert.added_vertices.len() {
        return Err(CertificateDefect::VertexSetMismatch("added vertex listed twice".into()));
    }
    if let Some(v) = added.intersection(&cert.base_vertices).next() {
        return Err(CertificateDefect::VertexSetMismatch(format!("{v} is both a base and an added vertex")));
    }
    let expected: VertexSet = cert.base_vertices.union(&added).cloned().collect();
    let actual: VertexSet = cert.digraph.vertices().cloned().collect();
    if expected != actual {
        let odd = expected.symmetric_difference(&actual).next().expect("sets differ");
        return Err(CertificateDefect::VertexSetMismatch(format!("{odd} is not accounted for")));
    }
    if let Acyclicity::Cyclic(cycle) = is_acyclic(&cert.digraph) {
        return Err(CertificateDefect::Cycle(cycle));
    }
    let cg = competition_graph(&cert.digraph);
    if let Some(e) = g.edges().find(|e| !cg.has_edge(e.a(), e.b())) {
        return Err(CertificateDefect::MissingEdge(e));
    }
    if let Some(e) = cg
        .edges()
        .find(|e| cert.base_vertices.contains(e.a()) && cert.base_vertices.contains(e.b()) && !g.has_edge(e.a(), e.b()))
    {
        return Err(CertificateDefect::SpuriousEdge(e));
    }
    for z in &cert.added_vertices {
        if let Some(w) = cg.neighbors(z).expect("added vertex in digraph").next() {
            return Err(CertificateDefect::AddedVertexNotIsolated { vertex: z.clone(), neighbor: w.clone() });
        }
    }
    Ok(())
}

/// Exact competition number for graphs with at most [`EXACT_VERTEX_LIMIT`]
/// vertices; `None` when the graph is larger or `k(G) > kmax`.
///
/// Orient every arc from predator to prey and list vertices prey-first. The
/// in-neighborhood of the vertex at position `j` is a clique drawn from
/// positions after `j`, and added vertices (isolated in `C(D)`) go first so
/// any clique may prey on them. `G ∪ I_k` is realizable iff some ordering of
/// `V(G)` plus `k` unrestricted cliques covers `E(G)`. For a fixed ordering
/// each slot may take a maximal clique of its suffix without loss.
pub fn exact_competition_number(g: &Graph, kmax: usize) -> Option<usize> {
    let n = g.vertex_count();
    if n > EXACT_VERTEX_LIMIT {
        return None;
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| g.adj(i).iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
        .collect();
    if edges.is_empty() {
        return Some(0);
    }
    let edge_mask_of = |vertices: u32| -> u32 {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| vertices & (1 << a) != 0 && vertices & (1 << b) != 0)
            .fold(0, |m, (k, _)| m | (1 << k))
    };
    // Edge masks of maximal cliques of G[subset], for every subset.
    let nbr: Vec<u32> = (0..n).map(|i| g.adj(i).iter().fold(0, |m, &j| m | (1 << j))).collect();
    let cliques_in: Vec<Vec<u32>> = (0..1u32 << n)
        .map(|subset| {
            let mut found = Vec::new();
            bron_kerbosch(0, subset, 0, &nbr, &mut found);
            let mut masks: Vec<u32> = found.into_iter().map(edge_mask_of).filter(|&m| m != 0).collect();
            masks.sort_unstable();
            masks.dedup();
            masks
        })
        .collect();
    let full = (1u32 << edges.len()) - 1;
    let all = (1u32 << n) - 1;

    // A graph with an edge needs at least one added vertex: the earliest
    // non-isolated vertex needs an earlier, hence isolated, common prey.
    let lower_bound = 1;
    let mut best = usize::MAX;
    let mut order: Vec<usize> = (0..n).collect();
    permutations(&mut order, 0, &mut |perm| {
        let mut slots = Vec::with_capacity(n);
        let mut suffix = all;
        for &v in perm {
            suffix &= !(1 << v);
            slots.push(&cliques_in[suffix as usize][..]);
        }
        let free = &cliques_in[all as usize][..];
        let need = min_free_slots(0, full, &slots, &mut vec![false; n], free, 0, best);
        best = best.min(need);
        best > lower_bound
    });
    (best <= kmax).then_some(best)
}

fn bron_kerbosch(r: u32, mut p: u32, mut x: u32, nbr: &[u32], out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        bron_kerbosch(r | (1 << v), p & nbr[v], x & nbr[v], nbr, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Recursive permutation walk; `visit` returns `false` to stop.
fn permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        let go_on = permutations(items, k + 1, visit);
        items.swap(k, i);
        if !go_on {
            return false;
        }
    }
    true
}

/// Fewest unrestricted cliques needed, together with at most one clique per
/// positional slot, to cover `full`. Returns `bound` when it cannot beat it.
fn min_free_slots(
    covered: u32,
    full: u32,
    slots: &[&[u32]],
    used: &mut [bool],
    free: &[u32],
    free_used: usize,
    bound: usize,
) -> usize {
    if covered == full {
        return free_used;
    }
    if free_used >= bound {
        return bound;
    }
    let missing = (!covered & full).trailing_zeros();
    let bit = 1u32 << missing;
    let mut best = bound;
    for s in 0..slots.len() {
        if used[s] {
            continue;
        }
        for &c in slots[s].iter().filter(|&&c| c & bit != 0) {
            used[s] = true;
            best = best.min(min_free_slots(covered | c, full, slots, used, free, free_used, best));
            used[s] = false;
        }
    }
    for &c in free.iter().filter(|&&c| c & bit != 0) {
        best = best.min(min_free_slots(covered | c, full, slots, used, free, free_used + 1, best));
    }
    best
}

impl fmt::Display for CompetitionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices, {} arcs, {} added",
            self.digraph.vertex_count(),
            self.digraph.arc_count(),
            self.claimed_k()
        )
    }
}
