//! Immutable simple graphs and digraphs keyed by vertex labels.
//!
//! Vertices are stored sorted by label, so vertex index order and label
//! order coincide. Every traversal in the crate iterates in that order,
//! which keeps all derived artifacts (holes, cuts, certificates)
//! deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Stable vertex label. Ordering is plain string ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

impl From<&VertexId> for VertexId {
    fn from(v: &VertexId) -> Self {
        v.clone()
    }
}

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("{0} is not an edge")]
    NotAnEdge(Edge),
    #[error("arc ({0}, {1}) is not present")]
    NotAnArc(VertexId, VertexId),
    #[error("vertex {0} already present")]
    DuplicateVertex(VertexId),
}

/// Unordered vertex pair with distinct endpoints, stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    pub fn new(u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<Self, GraphError> {
        let (u, v) = (u.into(), v.into());
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { a: u, b: v }),
            std::cmp::Ordering::Greater => Ok(Edge { a: v, b: u }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    /// Smaller endpoint.
    pub fn a(&self) -> &VertexId {
        &self.a
    }

    /// Larger endpoint.
    pub fn b(&self) -> &VertexId {
        &self.b
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.a, &self.b)
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.a == v || &self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph. Duplicate vertices and duplicate edges (in either
    /// orientation) collapse.
    pub fn new<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, GraphError>
    where
        V: Into<VertexId>,
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let vertex_set: VertexSet = vertices.into_iter().map(Into::into).collect();
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            let e = Edge::new(u, v)?;
            for end in [&e.a, &e.b] {
                if !vertex_set.contains(end) {
                    return Err(GraphError::UnknownVertex(end.clone()));
                }
            }
            edge_set.insert(e);
        }
        Ok(Self::from_parts(vertex_set, edge_set))
    }

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    pub fn from_edges<A, B>(edges: impl IntoIterator<Item = (A, B)>) -> Result<Self, GraphError>
    where
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let pairs: Vec<(VertexId, VertexId)> =
            edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        let vertices: VertexSet = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        Self::new(vertices, pairs)
    }

    fn from_parts(vertices: VertexSet, edges: BTreeSet<Edge>) -> Self {
        let labels: Vec<VertexId> = vertices.into_iter().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for e in &edges {
            let i = labels.binary_search(&e.a).expect("endpoint checked");
            let j = labels.binary_search(&e.b).expect("endpoint checked");
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, adj }
    }

    /// Builds a graph on `labels` (already sorted and unique) from index adjacency.
    pub(crate) fn from_index_adjacency(labels: Vec<VertexId>, mut adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { labels, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.labels.iter()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().cloned().collect()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter().filter(move |&&j| j > i).map(move |&j| Edge {
                a: self.labels[i].clone(),
                b: self.labels[j].clone(),
            })
        })
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: &VertexId) -> Result<impl Iterator<Item = &VertexId> + '_, GraphError> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(move |&j| &self.labels[j]))
    }

    pub fn degree(&self, v: &VertexId) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(v)?].len())
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.component_indices(&vec![false; self.vertex_count()])
            .into_iter()
            .map(|block| block.into_iter().map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_indices(&vec![false; self.vertex_count()]).len()
    }

    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph, GraphError> {
        let mut mask = vec![false; self.vertex_count()];
        for v in keep {
            mask[self.require(v)?] = true;
        }
        Ok(self.induced_by_mask(&mask))
    }

    /// `G - S`: the subgraph induced by the complement of `removed`.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Result<Graph, GraphError> {
        let mut mask = vec![true; self.vertex_count()];
        for v in removed {
            mask[self.require(v)?] = false;
        }
        Ok(self.induced_by_mask(&mask))
    }

    pub fn delete_edge(&self, e: &Edge) -> Result<Graph, GraphError> {
        let (i, j) = self.edge_indices(e)?;
        if !self.adjacent(i, j) {
            return Err(GraphError::NotAnEdge(e.clone()));
        }
        let mut adj = self.adj.clone();
        adj[i].retain(|&x| x != j);
        adj[j].retain(|&x| x != i);
        Ok(Graph { labels: self.labels.clone(), adj })
    }

    /// Adds `e` (both endpoints must already be vertices). Adding an
    /// existing edge is a no-op.
    pub fn add_edge(&self, e: &Edge) -> Result<Graph, GraphError> {
        let (i, j) = self.edge_indices(e)?;
        let mut adj = self.adj.clone();
        if !self.adjacent(i, j) {
            adj[i].push(j);
            adj[j].push(i);
            adj[i].sort_unstable();
            adj[j].sort_unstable();
        }
        Ok(Graph { labels: self.labels.clone(), adj })
    }

    pub fn is_clique(&self, set: &VertexSet) -> Result<bool, GraphError> {
        let idx = self.indices_of(set)?;
        Ok(self.is_clique_idx(&idx))
    }

    pub fn common_neighbors(&self, u: &VertexId, v: &VertexId) -> Result<VertexSet, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        if i == j {
            return Err(GraphError::SelfLoop(u.clone()));
        }
        Ok(sorted_intersection(&self.adj[i], &self.adj[j])
            .into_iter()
            .map(|k| self.labels[k].clone())
            .collect())
    }

    // ---- index-level helpers shared by the analysis modules ----

    pub(crate) fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.labels.binary_search(v).ok()
    }

    pub(crate) fn require(&self, v: &VertexId) -> Result<usize, GraphError> {
        self.index_of(v).ok_or_else(|| GraphError::UnknownVertex(v.clone()))
    }

    pub(crate) fn indices_of<'a>(
        &self,
        set: impl IntoIterator<Item = &'a VertexId>,
    ) -> Result<Vec<usize>, GraphError> {
        set.into_iter().map(|v| self.require(v)).collect()
    }

    pub(crate) fn edge_indices(&self, e: &Edge) -> Result<(usize, usize), GraphError> {
        Ok((self.require(&e.a)?, self.require(&e.b)?))
    }

    pub(crate) fn label(&self, i: usize) -> &VertexId {
        &self.labels[i]
    }

    pub(crate) fn adj(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub(crate) fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub(crate) fn is_clique_idx(&self, idx: &[usize]) -> bool {
        idx.iter()
            .enumerate()
            .all(|(p, &i)| idx[p + 1..].iter().all(|&j| i == j || self.adjacent(i, j)))
    }

    pub(crate) fn set_of(&self, idx: impl IntoIterator<Item = usize>) -> VertexSet {
        idx.into_iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Components of the subgraph induced on vertices with `blocked[i] == false`,
    /// each sorted, ordered by smallest member.
    pub(crate) fn component_indices(&self, blocked: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = blocked.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut block = Vec::new();
            while let Some(x) = queue.pop_front() {
                block.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub(crate) fn induced_by_mask(&self, mask: &[bool]) -> Graph {
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for (i, &keep) in mask.iter().enumerate() {
            if keep {
                remap[i] = labels.len();
                labels.push(self.labels[i].clone());
            }
        }
        let adj = mask
            .iter()
            .enumerate()
            .filter(|(_, &keep)| keep)
            .map(|(i, _)| {
                self.adj[i]
                    .iter()
                    .filter(|&&j| mask[j])
                    .map(|&j| remap[j])
                    .collect()
            })
            .collect();
        Graph { labels, adj }
    }
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Finite simple directed graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    out: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Digraph {
    pub fn new<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        arcs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, GraphError>
    where
        V: Into<VertexId>,
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let mut out: BTreeMap<VertexId, BTreeSet<VertexId>> =
            vertices.into_iter().map(|v| (v.into(), BTreeSet::new())).collect();
        for (a, b) in arcs {
            let (a, b) = (a.into(), b.into());
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !out.contains_key(&b) {
                return Err(GraphError::UnknownVertex(b));
            }
            out.get_mut(&a).ok_or(GraphError::UnknownVertex(a.clone()))?.insert(b);
        }
        Ok(Digraph { out })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.values().map(BTreeSet::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.out.keys()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.out.contains_key(v)
    }

    /// Arcs in sorted `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.out.iter().flat_map(|(a, heads)| heads.iter().map(move |b| (a, b)))
    }

    pub fn has_arc(&self, a: &VertexId, b: &VertexId) -> bool {
        self.out.get(a).is_some_and(|h| h.contains(b))
    }

    pub fn out_neighbors(&self, v: &VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.out.get(v).ok_or_else(|| GraphError::UnknownVertex(v.clone()))
    }

    /// In-neighborhoods of every vertex.
    pub fn in_neighborhoods(&self) -> BTreeMap<&VertexId, Vec<&VertexId>> {
        let mut ins: BTreeMap<&VertexId, Vec<&VertexId>> =
            self.out.keys().map(|v| (v, Vec::new())).collect();
        for (a, b) in self.arcs() {
            ins.get_mut(b).expect("head is a vertex").push(a);
        }
        ins
    }

    pub fn with_vertex(&self, v: impl Into<VertexId>) -> Result<Digraph, GraphError> {
        let v = v.into();
        if self.out.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        let mut out = self.out.clone();
        out.insert(v, BTreeSet::new());
        Ok(Digraph { out })
    }

    /// Adds arcs; both endpoints must exist.
    pub fn with_arcs<A, B>(&self, arcs: impl IntoIterator<Item = (A, B)>) -> Result<Digraph, GraphError>
    where
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let mut next = self.clone();
        for (a, b) in arcs {
            let (a, b) = (a.into(), b.into());
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !next.out.contains_key(&b) {
                return Err(GraphError::UnknownVertex(b));
            }
            next.out.get_mut(&a).ok_or(GraphError::UnknownVertex(a.clone()))?.insert(b);
        }
        Ok(next)
    }

    pub fn without_arc(&self, a: &VertexId, b: &VertexId) -> Result<Digraph, GraphError> {
        if !self.has_arc(a, b) {
            return Err(GraphError::NotAnArc(a.clone(), b.clone()));
        }
        let mut next = self.clone();
        next.out.get_mut(a).expect("arc present").remove(b);
        Ok(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(["u", "v", "a", "b"], [("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap()
    }

    fn set(items: &[&str]) -> VertexSet {
        items.iter().map(|&s| VertexId::from(s)).collect()
    }

    #[test]
    fn make_graph_normalizes() {
        let g = Graph::new(["u", "v"], [("u", "v"), ("v", "u"), ("u", "v")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(c4().edge_count(), 4);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(["u"], [("u", "u")]),
            Err(GraphError::SelfLoop("u".into()))
        );
        assert_eq!(
            Graph::new(["u"], [("u", "q")]),
            Err(GraphError::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn components() {
        assert_eq!(c4().connected_components(), vec![set(&["a", "b", "u", "v"])]);
        let rest = c4().remove_vertices(&set(&["u", "v"])).unwrap();
        assert_eq!(rest.connected_components(), vec![set(&["a", "b"])]);
        let edgeless = Graph::new(["c", "a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(
            edgeless.connected_components(),
            vec![set(&["a"]), set(&["b"]), set(&["c"])]
        );
    }

    #[test]
    fn induced() {
        let g = c4();
        let uv = g.induced_subgraph(&set(&["u", "v"])).unwrap();
        assert_eq!(uv.edge_count(), 1);
        let ua = g.induced_subgraph(&set(&["u", "a"])).unwrap();
        assert_eq!((ua.vertex_count(), ua.edge_count()), (2, 0));
        assert_eq!(g.induced_subgraph(&g.vertex_set()).unwrap(), g);
        assert!(g.induced_subgraph(&set(&["zz"])).is_err());
    }

    #[test]
    fn delete_edge_cases() {
        let g = c4();
        let p = g.delete_edge(&Edge::new("u", "v").unwrap()).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert!(!p.has_edge(&"u".into(), &"v".into()));
        assert!(p.has_edge(&"u".into(), &"b".into()));
        let single = Graph::from_edges([("u", "v")]).unwrap();
        let iso = single.delete_edge(&Edge::new("u", "v").unwrap()).unwrap();
        assert_eq!((iso.vertex_count(), iso.edge_count()), (2, 0));
        assert!(matches!(
            g.delete_edge(&Edge::new("u", "a").unwrap()),
            Err(GraphError::NotAnEdge(_))
        ));
    }

    #[test]
    fn clique_checks() {
        let g = c4();
        assert!(g.is_clique(&set(&["u", "v"])).unwrap());
        assert!(!g.is_clique(&set(&["u", "a"])).unwrap());
        assert!(g.is_clique(&VertexSet::new()).unwrap());
        assert!(g.is_clique(&set(&["a"])).unwrap());
        assert!(g.is_clique(&set(&["nope"])).is_err());
    }

    #[test]
    fn common_neighbor_cases() {
        let house = Graph::from_edges([
            ("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"), ("w", "u"), ("w", "v"),
        ])
        .unwrap();
        assert_eq!(house.common_neighbors(&"u".into(), &"v".into()).unwrap(), set(&["w"]));
        let g = c4();
        assert!(g.common_neighbors(&"u".into(), &"v".into()).unwrap().is_empty());
        assert_eq!(g.common_neighbors(&"u".into(), &"a".into()).unwrap(), set(&["b", "v"]));
        assert!(g.common_neighbors(&"u".into(), &"u".into()).is_err());
    }

    #[test]
    fn digraph_basics() {
        let d = Digraph::new(["u", "v", "z"], [("u", "z"), ("v", "z")]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(&"u".into(), &"z".into()));
        assert!(Digraph::new(["u"], [("u", "u")]).is_err());
        assert!(Digraph::new(["u"], [("u", "q")]).is_err());
        let d2 = d.without_arc(&"u".into(), &"z".into()).unwrap();
        assert_eq!(d2.arc_count(), 1);
        assert_eq!(d.arc_count(), 2);
        assert!(d.with_vertex("u").is_err());
    }
}
