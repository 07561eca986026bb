//! Holes (chordless cycles of length at least four) and the per-hole cut
//! machinery: the hub set `X_C`, C-avoiding paths, and the sets
//! `X_{C,e}`, `S_{C,e}`, `T_{C,e}`, `Q_{C,e}`, `U_{C,e}` for a hole edge.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{sorted_intersection, Edge, Graph, GraphError, VertexId, VertexSet};

/// Vertex-count bound above which exhaustive path enumeration refuses to run.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a hole: {0}")]
    NotAHole(String),
    #[error("edge {edge} is not on hole {hole}")]
    EdgeNotOnHole { edge: Edge, hole: Hole },
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("graph has {vertices} vertices, exhaustive enumeration is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

/// The input lies outside the class of K_{2,2,2}-free hole-edge-disjoint graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionViolation {
    #[error("graph contains an induced K_{{2,2,2}} on {}", join(.0))]
    InducedOctahedron(Vec<VertexId>),
    #[error("holes {first} and {second} share edge {edge}")]
    SharedHoleEdge { first: Hole, second: Hole, edge: Edge },
}

fn join(vs: &[VertexId]) -> String {
    vs.iter().map(VertexId::as_str).collect::<Vec<_>>().join(" ")
}

/// A chordless cycle of length at least 4, stored as the lexicographically
/// least of its rotations and reflections.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Hole {
    cycle: Vec<VertexId>,
}

impl Hole {
    /// Validates `sequence` as a hole of `g` and canonicalizes it.
    pub fn new(g: &Graph, sequence: &[VertexId]) -> Result<Self, AnalysisError> {
        let idx = g.indices_of(sequence)?;
        check_hole_indices(g, &idx)?;
        Ok(Hole { cycle: canonical_rotation(sequence.to_vec()) })
    }

    pub(crate) fn from_indices(g: &Graph, idx: &[usize]) -> Self {
        Hole { cycle: canonical_rotation(idx.iter().map(|&i| g.label(i).clone()).collect()) }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().cloned().collect()
    }

    /// Hole edges in cycle order starting from the canonical rotation.
    pub fn edges(&self) -> Vec<Edge> {
        let l = self.cycle.len();
        (0..l)
            .map(|i| Edge::new(self.cycle[i].clone(), self.cycle[(i + 1) % l].clone()).expect("distinct"))
            .collect()
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        let l = self.cycle.len();
        (0..l).any(|i| {
            let (x, y) = (&self.cycle[i], &self.cycle[(i + 1) % l]);
            (x == e.a() && y == e.b()) || (x == e.b() && y == e.a())
        })
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.cycle))
    }
}

fn canonical_rotation<T: Ord + Clone>(seq: Vec<T>) -> Vec<T> {
    let l = seq.len();
    let mut best: Option<Vec<T>> = None;
    let mut rev = seq.clone();
    rev.reverse();
    for base in [&seq, &rev] {
        for r in 0..l {
            let cand: Vec<T> = base[r..].iter().chain(&base[..r]).cloned().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn check_hole_indices(g: &Graph, idx: &[usize]) -> Result<(), AnalysisError> {
    let l = idx.len();
    if l < 4 {
        return Err(AnalysisError::NotAHole(format!("length {l} < 4")));
    }
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != l {
        return Err(AnalysisError::NotAHole("repeated vertex".into()));
    }
    for i in 0..l {
        for j in i + 1..l {
            let consecutive = j == i + 1 || (i == 0 && j == l - 1);
            let adjacent = g.adjacent(idx[i], idx[j]);
            if consecutive && !adjacent {
                return Err(AnalysisError::NotAHole(format!(
                    "{} and {} are not adjacent",
                    g.label(idx[i]),
                    g.label(idx[j])
                )));
            }
            if !consecutive && adjacent {
                return Err(AnalysisError::NotAHole(format!(
                    "chord {}-{}",
                    g.label(idx[i]),
                    g.label(idx[j])
                )));
            }
        }
    }
    Ok(())
}

/// All holes of a graph, in canonical lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct HoleSet {
    holes: Vec<Hole>,
}

impl HoleSet {
    /// `h(G)`.
    pub fn count(&self) -> usize {
        self.holes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.holes.is_empty()
    }

    pub fn holes(&self) -> &[Hole] {
        &self.holes
    }

    pub fn iter(&self) -> impl Iterator<Item = &Hole> + '_ {
        self.holes.iter()
    }
}

impl<'a> IntoIterator for &'a HoleSet {
    type Item = &'a Hole;
    type IntoIter = std::slice::Iter<'a, Hole>;
    fn into_iter(self) -> Self::IntoIter {
        self.holes.iter()
    }
}

/// Enumerates holes by growing chordless paths from their smallest vertex.
///
/// A path `s p1 .. pk` only holds vertices greater than `s`, every vertex
/// but the tip is non-adjacent to the candidate extension, and `s` is
/// non-adjacent to everything past `p1`. A candidate adjacent to `s` closes
/// a hole; requiring `p1 < w` keeps one of the two traversal directions.
pub fn enumerate_holes(g: &Graph) -> HoleSet {
    let mut found = Vec::new();
    let n = g.vertex_count();
    let mut in_path = vec![false; n];
    for s in 0..n {
        for &p1 in g.adj(s).iter().filter(|&&p| p > s) {
            let mut path = vec![s, p1];
            in_path[s] = true;
            in_path[p1] = true;
            grow(g, &mut path, &mut in_path, &mut found);
            in_path[s] = false;
            in_path[p1] = false;
        }
    }
    let mut holes: Vec<Hole> = found.into_iter().map(|idx| Hole::from_indices(g, &idx)).collect();
    holes.sort();
    HoleSet { holes }
}

fn grow(g: &Graph, path: &mut Vec<usize>, in_path: &mut [bool], found: &mut Vec<Vec<usize>>) {
    let s = path[0];
    let tip = *path.last().expect("nonempty path");
    for &w in g.adj(tip) {
        if w <= s || in_path[w] {
            continue;
        }
        if path[1..path.len() - 1].iter().any(|&p| g.adjacent(p, w)) {
            continue;
        }
        if g.adjacent(s, w) {
            if path.len() >= 3 && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                found.push(cycle);
            }
            continue;
        }
        path.push(w);
        in_path[w] = true;
        grow(g, path, in_path, found);
        in_path[w] = false;
        path.pop();
    }
}

/// First pair of holes sharing an edge, if any.
pub fn shared_hole_edge(holes: &HoleSet) -> Option<(Hole, Hole, Edge)> {
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (k, hole) in holes.iter().enumerate() {
        for e in hole.edges() {
            if let Some(&first) = owner.get(&e) {
                return Some((holes.holes[first].clone(), hole.clone(), e));
            }
            owner.insert(e, k);
        }
    }
    None
}

pub fn is_hole_edge_disjoint(g: &Graph) -> bool {
    shared_hole_edge(&enumerate_holes(g)).is_none()
}

/// Six vertices inducing K_{2,2,2}, if any.
///
/// Walks increasing 6-subsets, pruning as soon as some chosen vertex has
/// two non-neighbors in the subset. A complete subset qualifies when its
/// complement is a perfect matching.
pub fn find_induced_octahedron(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut chosen = Vec::with_capacity(6);
    let mut misses = vec![0u8; n];
    if octahedron_search(g, 0, &mut chosen, &mut misses) {
        Some(chosen.iter().map(|&i| g.label(i).clone()).collect())
    } else {
        None
    }
}

fn octahedron_search(g: &Graph, start: usize, chosen: &mut Vec<usize>, misses: &mut [u8]) -> bool {
    if chosen.len() == 6 {
        return chosen.iter().all(|&c| misses[c] == 1);
    }
    let n = g.vertex_count();
    for v in start..n {
        if n - v < 6 - chosen.len() {
            break;
        }
        // Degree bound inside K_{2,2,2}.
        if g.adj(v).len() < 4 {
            continue;
        }
        let non_nbrs: Vec<usize> = chosen.iter().copied().filter(|&c| !g.adjacent(c, v)).collect();
        if non_nbrs.len() > 1 || non_nbrs.iter().any(|&c| misses[c] > 0) {
            continue;
        }
        for &c in &non_nbrs {
            misses[c] += 1;
        }
        misses[v] = non_nbrs.len() as u8;
        chosen.push(v);
        if octahedron_search(g, v + 1, chosen, misses) {
            return true;
        }
        chosen.pop();
        misses[v] = 0;
        for &c in &non_nbrs {
            misses[c] -= 1;
        }
    }
    false
}

pub fn is_k222_free(g: &Graph) -> bool {
    find_induced_octahedron(g).is_none()
}

/// Checks both class preconditions, returning the holes on success.
pub fn check_preconditions(g: &Graph) -> Result<HoleSet, PreconditionViolation> {
    if let Some(w) = find_induced_octahedron(g) {
        return Err(PreconditionViolation::InducedOctahedron(w));
    }
    let holes = enumerate_holes(g);
    if let Some((first, second, edge)) = shared_hole_edge(&holes) {
        return Err(PreconditionViolation::SharedHoleEdge { first, second, edge });
    }
    Ok(holes)
}

/// Index-level view of a hole inside its graph.
pub(crate) struct HoleContext<'g> {
    pub g: &'g Graph,
    pub cycle: Vec<usize>,
    pub on_cycle: Vec<bool>,
    pub hub: Vec<bool>,
}

impl<'g> HoleContext<'g> {
    pub fn new(g: &'g Graph, hole: &Hole) -> Result<Self, AnalysisError> {
        let cycle = g.indices_of(hole.vertices())?;
        check_hole_indices(g, &cycle)?;
        Ok(Self::new_unchecked(g, cycle))
    }

    pub fn new_unchecked(g: &'g Graph, cycle: Vec<usize>) -> Self {
        let n = g.vertex_count();
        let mut on_cycle = vec![false; n];
        for &c in &cycle {
            on_cycle[c] = true;
        }
        let hub = (0..n)
            .map(|v| cycle.iter().all(|&c| g.adjacent(c, v)))
            .collect();
        HoleContext { g, cycle, on_cycle, hub }
    }

    /// `V(C) ∪ X_C`.
    pub fn blocked(&self, v: usize) -> bool {
        self.on_cycle[v] || self.hub[v]
    }

    pub fn edge(&self, hole: &Hole, e: &Edge) -> Result<(usize, usize), AnalysisError> {
        if !hole.has_edge(e) {
            return Err(AnalysisError::EdgeNotOnHole { edge: e.clone(), hole: hole.clone() });
        }
        Ok(self.g.edge_indices(e)?)
    }

    pub fn hub_indices(&self) -> Vec<usize> {
        (0..self.g.vertex_count()).filter(|&v| self.hub[v]).collect()
    }

    pub fn t_set(&self, u: usize, v: usize) -> Vec<usize> {
        sorted_intersection(self.g.adj(u), self.g.adj(v))
            .into_iter()
            .filter(|&w| !self.blocked(w))
            .collect()
    }

    /// Some component of `G - (V(C) ∪ X_C)` meets both `N(u)` and `N(v)`.
    pub fn s_nonempty(&self, u: usize, v: usize) -> bool {
        let n = self.g.vertex_count();
        let blocked: Vec<bool> = (0..n).map(|x| self.blocked(x)).collect();
        let mut comp = vec![usize::MAX; n];
        for (k, block) in self.g.component_indices(&blocked).into_iter().enumerate() {
            for x in block {
                comp[x] = k;
            }
        }
        let touch = |a: usize| -> Vec<usize> {
            let mut ks: Vec<usize> = self.g.adj(a).iter().filter(|&&x| !blocked[x]).map(|&x| comp[x]).collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        };
        !sorted_intersection(&touch(u), &touch(v)).is_empty()
    }

    pub fn is_avoiding_path(&self, path: &[usize]) -> bool {
        let l = path.len();
        if l < 2 {
            return false;
        }
        if path[1..l - 1].iter().any(|&x| self.blocked(x)) {
            return false;
        }
        if l == 2 && self.blocked(path[0]) && self.blocked(path[1]) {
            return false;
        }
        true
    }

    /// Calls `visit` on every C-avoiding simple `(a, b)`-path. Stops when
    /// `visit` returns `false`.
    pub fn for_each_avoiding_path(&self, a: usize, b: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let mut path = vec![a];
        let mut used = vec![false; self.g.vertex_count()];
        used[a] = true;
        self.dfs(b, &mut path, &mut used, visit);
    }

    fn dfs(&self, target: usize, path: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let tip = *path.last().expect("nonempty");
        for &w in self.g.adj(tip) {
            if used[w] {
                continue;
            }
            if w == target {
                path.push(w);
                let keep_going = !self.is_avoiding_path(path) || visit(path);
                path.pop();
                if !keep_going {
                    return false;
                }
                continue;
            }
            // Internal vertices must avoid V(C) ∪ X_C; every extension of a
            // violating prefix violates too.
            if self.blocked(w) {
                continue;
            }
            used[w] = true;
            path.push(w);
            let keep_going = self.dfs(target, path, used, visit);
            path.pop();
            used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// `X_C`: vertices adjacent to every vertex of the hole.
pub fn x_c(g: &Graph, hole: &Hole) -> Result<VertexSet, AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    Ok(g.set_of(ctx.hub_indices()))
}

pub fn is_c_avoiding_path(g: &Graph, hole: &Hole, path: &[VertexId]) -> Result<bool, AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    let idx = g.indices_of(path)?;
    if idx.is_empty() {
        return Err(AnalysisError::NotAPath("empty sequence".into()));
    }
    let mut seen = vec![false; g.vertex_count()];
    for (k, &i) in idx.iter().enumerate() {
        if std::mem::replace(&mut seen[i], true) {
            return Err(AnalysisError::NotAPath(format!("{} repeats", g.label(i))));
        }
        if k > 0 && !g.adjacent(idx[k - 1], i) {
            return Err(AnalysisError::NotAPath(format!(
                "{} and {} are not adjacent",
                g.label(idx[k - 1]),
                g.label(i)
            )));
        }
    }
    Ok(ctx.is_avoiding_path(&idx))
}

/// `T_{C,e}`: middle vertices of C-avoiding paths of length two between the
/// endpoints of `e`.
pub fn t_ce(g: &Graph, hole: &Hole, e: &Edge) -> Result<VertexSet, AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    let (u, v) = ctx.edge(hole, e)?;
    Ok(g.set_of(ctx.t_set(u, v)))
}

/// Whether `S_{C,e}` is nonempty, decided by components of `G - (V(C) ∪ X_C)`.
pub fn s_nonempty(g: &Graph, hole: &Hole, e: &Edge) -> Result<bool, AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    let (u, v) = ctx.edge(hole, e)?;
    Ok(ctx.s_nonempty(u, v))
}

/// Exact `S_{C,e}` by enumerating every simple `(u, v)`-path. Exponential.
pub fn s_ce_exhaustive(g: &Graph, hole: &Hole, e: &Edge, limit: usize) -> Result<VertexSet, AnalysisError> {
    if g.vertex_count() > limit {
        return Err(AnalysisError::TooLarge { vertices: g.vertex_count(), limit });
    }
    let ctx = HoleContext::new(g, hole)?;
    let (u, v) = ctx.edge(hole, e)?;
    Ok(g.set_of(exhaustive_s(&ctx, u, v)))
}

fn exhaustive_s(ctx: &HoleContext<'_>, u: usize, v: usize) -> Vec<usize> {
    let mut on_some = vec![false; ctx.g.vertex_count()];
    ctx.for_each_avoiding_path(u, v, &mut |p| {
        for &x in &p[1..p.len() - 1] {
            on_some[x] = true;
        }
        true
    });
    (0..on_some.len()).filter(|&x| on_some[x]).collect()
}

/// Whether any C-avoiding path joins `a` and `b`, by exhaustive search.
pub fn c_avoiding_path_exists(
    g: &Graph,
    hole: &Hole,
    a: &VertexId,
    b: &VertexId,
    limit: usize,
) -> Result<bool, AnalysisError> {
    if g.vertex_count() > limit {
        return Err(AnalysisError::TooLarge { vertices: g.vertex_count(), limit });
    }
    let ctx = HoleContext::new(g, hole)?;
    let (a, b) = (g.require(a)?, g.require(b)?);
    let mut found = false;
    ctx.for_each_avoiding_path(a, b, &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Everything derived from one `(hole, edge)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutAnalysis {
    pub hole: Hole,
    pub edge: Edge,
    pub x_c: VertexSet,
    pub x_ce: VertexSet,
    pub t_ce: VertexSet,
    pub s_nonempty: bool,
    /// Exact `S_{C,e}`, present only when the graph is small enough for
    /// exhaustive path enumeration.
    pub s_ce: Option<VertexSet>,
    pub q_ce: VertexSet,
    pub u_ce: VertexSet,
}

pub fn cut_analysis(g: &Graph, hole: &Hole, e: &Edge) -> Result<CutAnalysis, AnalysisError> {
    cut_analysis_with_limit(g, hole, e, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// Like [`cut_analysis`]; `s_ce` is filled only when `|V(G)| <= exhaustive_limit`.
pub fn cut_analysis_with_limit(
    g: &Graph,
    hole: &Hole,
    e: &Edge,
    exhaustive_limit: usize,
) -> Result<CutAnalysis, AnalysisError> {
    let ctx = HoleContext::new(g, hole)?;
    let (u, v) = ctx.edge(hole, e)?;
    Ok(analyze_pair(&ctx, hole, e, u, v, exhaustive_limit))
}

pub(crate) fn analyze_pair(
    ctx: &HoleContext<'_>,
    hole: &Hole,
    e: &Edge,
    u: usize,
    v: usize,
    exhaustive_limit: usize,
) -> CutAnalysis {
    let g = ctx.g;
    let n = g.vertex_count();
    let hubs = ctx.hub_indices();
    let t = ctx.t_set(u, v);

    let mut in_x = vec![false; n];
    for &x in hubs.iter().chain([&u, &v]) {
        in_x[x] = true;
    }
    let comps = g.component_indices(&in_x);
    let mut comp_of = vec![usize::MAX; n];
    for (k, block) in comps.iter().enumerate() {
        for &x in block {
            comp_of[x] = k;
        }
    }
    let rest: Vec<usize> = ctx.cycle.iter().copied().filter(|&c| c != u && c != v).collect();
    let q = comp_of[rest[0]];
    assert!(
        rest.iter().all(|&c| comp_of[c] == q),
        "hole remainder split across components of G - X_Ce"
    );
    let mut u_blocks: Vec<usize> = t.iter().map(|&w| comp_of[w]).filter(|&k| k != q).collect();
    u_blocks.sort_unstable();
    u_blocks.dedup();

    let s_ce = (n <= exhaustive_limit).then(|| g.set_of(exhaustive_s(ctx, u, v)));
    let x_c = g.set_of(hubs);
    let mut x_ce = x_c.clone();
    x_ce.insert(g.label(u).clone());
    x_ce.insert(g.label(v).clone());
    CutAnalysis {
        hole: hole.clone(),
        edge: e.clone(),
        x_c,
        x_ce,
        t_ce: g.set_of(t),
        s_nonempty: ctx.s_nonempty(u, v),
        s_ce,
        q_ce: g.set_of(comps[q].iter().copied()),
        u_ce: g.set_of(u_blocks.iter().flat_map(|&k| comps[k].iter().copied())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(items: &[&str]) -> Vec<VertexId> {
        items.iter().map(|&s| VertexId::from(s)).collect()
    }

    fn set(items: &[&str]) -> VertexSet {
        ids(items).into_iter().collect()
    }

    fn edge(a: &str, b: &str) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap()
    }

    fn house() -> Graph {
        Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"), ("w", "u"), ("w", "v")]).unwrap()
    }

    fn w4() -> Graph {
        Graph::from_edges([
            ("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"),
            ("x", "u"), ("x", "v"), ("x", "a"), ("x", "b"),
        ])
        .unwrap()
    }

    fn only_hole(g: &Graph) -> Hole {
        let hs = enumerate_holes(g);
        assert_eq!(hs.count(), 1);
        hs.holes()[0].clone()
    }

    #[test]
    fn canonical_form() {
        let g = c4();
        let h = Hole::new(&g, &ids(&["u", "v", "a", "b"])).unwrap();
        assert_eq!(h.vertices(), ids(&["a", "b", "u", "v"]).as_slice());
        assert_eq!(h, Hole::new(&g, &ids(&["b", "a", "v", "u"])).unwrap());
        assert!(Hole::new(&g, &ids(&["u", "v", "a"])).is_err());
        assert!(Hole::new(&house(), &ids(&["u", "v", "w"])).is_err());
    }

    #[test]
    fn enumerate_small() {
        let tri = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(enumerate_holes(&tri).is_empty());
        assert_eq!(only_hole(&c4()).vertex_set(), set(&["u", "v", "a", "b"]));
        // Two 4-cycles sharing only u.
        let two = Graph::from_edges([
            ("u", "a"), ("a", "b"), ("b", "c"), ("c", "u"),
            ("u", "d"), ("d", "e"), ("e", "f"), ("f", "u"),
        ])
        .unwrap();
        assert_eq!(enumerate_holes(&two).count(), 2);
        assert!(is_hole_edge_disjoint(&two));
    }

    #[test]
    fn hole_edge_disjointness() {
        // C5 with a chord: one C4 plus a triangle.
        let c5 = Graph::from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("4", "0"), ("0", "2")]).unwrap();
        assert_eq!(enumerate_holes(&c5).count(), 1);
        assert!(is_hole_edge_disjoint(&c5));
        // C6 with a long chord: two C4s sharing that chord.
        let c6 = Graph::from_edges([
            ("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "0"), ("0", "3"),
        ])
        .unwrap();
        let hs = enumerate_holes(&c6);
        assert_eq!(hs.count(), 2);
        let (_, _, shared) = shared_hole_edge(&hs).unwrap();
        assert_eq!(shared, edge("0", "3"));
        assert!(!is_hole_edge_disjoint(&c6));
    }

    #[test]
    fn octahedron_detection() {
        let pairs = [("a", "a2"), ("b", "b2"), ("c", "c2")];
        let verts = ["a", "a2", "b", "b2", "c", "c2"];
        let mut edges = Vec::new();
        for (i, x) in verts.iter().enumerate() {
            for y in &verts[i + 1..] {
                if !pairs.contains(&(*x, *y)) {
                    edges.push((*x, *y));
                }
            }
        }
        let oct = Graph::from_edges(edges.clone()).unwrap();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(find_induced_octahedron(&oct).unwrap().len(), 6);
        assert!(is_k222_free(&house()));
        edges.push(("a", "p"));
        assert!(!is_k222_free(&Graph::from_edges(edges).unwrap()));
        assert!(matches!(
            check_preconditions(&oct),
            Err(PreconditionViolation::InducedOctahedron(_))
        ));
    }

    #[test]
    fn hub_sets() {
        assert!(x_c(&c4(), &only_hole(&c4())).unwrap().is_empty());
        assert_eq!(x_c(&w4(), &only_hole(&w4())).unwrap(), set(&["x"]));
        assert!(x_c(&house(), &only_hole(&house())).unwrap().is_empty());
        let fake = Hole { cycle: ids(&["u", "v", "w", "a"]) };
        assert!(x_c(&house(), &fake).is_err());
    }

    #[test]
    fn avoiding_paths() {
        let h = house();
        let hole = only_hole(&h);
        assert!(is_c_avoiding_path(&h, &hole, &ids(&["u", "w", "v"])).unwrap());
        assert!(!is_c_avoiding_path(&c4(), &only_hole(&c4()), &ids(&["u", "v"])).unwrap());
        assert!(!is_c_avoiding_path(&w4(), &only_hole(&w4()), &ids(&["u", "x", "v"])).unwrap());
        assert!(is_c_avoiding_path(&h, &hole, &ids(&["u", "w"])).unwrap());
        assert!(matches!(
            is_c_avoiding_path(&h, &hole, &ids(&["u", "a"])),
            Err(AnalysisError::NotAPath(_))
        ));
    }

    #[test]
    fn t_and_s() {
        let h = house();
        let hole = only_hole(&h);
        assert_eq!(t_ce(&h, &hole, &edge("u", "v")).unwrap(), set(&["w"]));
        assert!(t_ce(&h, &hole, &edge("v", "a")).unwrap().is_empty());
        assert!(s_nonempty(&h, &hole, &edge("u", "v")).unwrap());
        assert!(!s_nonempty(&h, &hole, &edge("v", "a")).unwrap());
        assert!(matches!(
            t_ce(&h, &hole, &edge("u", "w")),
            Err(AnalysisError::EdgeNotOnHole { .. })
        ));
        let c = c4();
        let ch = only_hole(&c);
        for e in ch.edges() {
            assert!(t_ce(&c, &ch, &e).unwrap().is_empty());
            assert!(!s_nonempty(&c, &ch, &e).unwrap());
        }
        let w = w4();
        let wh = only_hole(&w);
        for e in wh.edges() {
            assert!(!s_nonempty(&w, &wh, &e).unwrap());
        }
    }

    #[test]
    fn exhaustive_s() {
        let h = house();
        let hole = only_hole(&h);
        assert_eq!(s_ce_exhaustive(&h, &hole, &edge("u", "v"), 16).unwrap(), set(&["w"]));
        let c = c4();
        assert!(s_ce_exhaustive(&c, &only_hole(&c), &edge("u", "v"), 16).unwrap().is_empty());
        assert!(matches!(
            s_ce_exhaustive(&h, &hole, &edge("u", "v"), 4),
            Err(AnalysisError::TooLarge { .. })
        ));
    }

    // Worked by hand: y is adjacent to u and w, so u-y-w-v is a C-avoiding
    // path and S = {w, y}; T stays {w} since y is not adjacent to v.
    #[test]
    fn exhaustive_s_with_pendant_detour() {
        let g = Graph::from_edges([
            ("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"), ("w", "u"), ("w", "v"), ("y", "w"), ("y", "u"),
        ])
        .unwrap();
        let hole = only_hole(&g);
        let e = edge("u", "v");
        assert_eq!(s_ce_exhaustive(&g, &hole, &e, 16).unwrap(), set(&["w", "y"]));
        assert_eq!(t_ce(&g, &hole, &e).unwrap(), set(&["w"]));
    }

    #[test]
    fn analysis_fixtures() {
        let h = house();
        let a = cut_analysis(&h, &only_hole(&h), &edge("u", "v")).unwrap();
        assert_eq!(a.x_ce, set(&["u", "v"]));
        assert_eq!(a.q_ce, set(&["a", "b"]));
        assert_eq!(a.t_ce, set(&["w"]));
        assert_eq!(a.u_ce, set(&["w"]));
        assert_eq!(a.s_ce, Some(set(&["w"])));

        let c = c4();
        let a = cut_analysis(&c, &only_hole(&c), &edge("u", "v")).unwrap();
        assert_eq!((a.x_ce, a.q_ce), (set(&["u", "v"]), set(&["a", "b"])));
        assert!(a.t_ce.is_empty() && a.u_ce.is_empty());

        let w = w4();
        let a = cut_analysis(&w, &only_hole(&w), &edge("u", "v")).unwrap();
        assert_eq!((a.x_ce, a.q_ce), (set(&["x", "u", "v"]), set(&["a", "b"])));
        assert!(a.t_ce.is_empty() && a.u_ce.is_empty());
    }
}
