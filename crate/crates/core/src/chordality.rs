//! Chordality recognition via maximum cardinality search, and perfect
//! elimination orderings constrained to end in a given clique.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("vertex set is not a clique")]
    NotAClique,
}

/// Perfect elimination ordering: the later neighbors of every vertex form
/// a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Peo {
    order: Vec<VertexId>,
}

impl Peo {
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Later neighbors of `order[i]` in `g`.
    pub fn later_neighbors(&self, g: &Graph, i: usize) -> Vec<VertexId> {
        self.order[i + 1..]
            .iter()
            .filter(|w| g.has_edge(&self.order[i], w))
            .cloned()
            .collect()
    }

    /// Re-checks the ordering against `g` from scratch.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        match g.indices_of(&self.order) {
            Ok(idx) => is_perfect_elimination_order(g, &idx),
            Err(_) => false,
        }
    }
}

/// For each vertex, its earliest later neighbor must be adjacent to all of
/// its other later neighbors.
fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        if pos[v] != usize::MAX {
            return false;
        }
        pos[v] = p;
    }
    for &v in order {
        let later: Vec<usize> = g.adj(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.adjacent(parent, w)) {
            return false;
        }
    }
    true
}

/// Maximum cardinality search; ties go to the smallest vertex. Returns the
/// visit order.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &w in g.adj(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// A verified perfect elimination ordering, or `None` when `g` is not chordal.
pub fn find_peo(g: &Graph) -> Option<Peo> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then(|| Peo {
        order: order.into_iter().map(|i| g.label(i).clone()).collect(),
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    find_peo(g).is_some()
}

/// A perfect elimination ordering whose last `|clique|` entries are exactly
/// `clique`, built by repeatedly eliminating the smallest simplicial vertex
/// outside it.
pub fn peo_ending_with_clique(g: &Graph, clique: &VertexSet) -> Result<Peo, ChordalityError> {
    let tail = g.indices_of(clique)?;
    if !g.is_clique_idx(&tail) {
        return Err(ChordalityError::NotAClique);
    }
    if !is_chordal(g) {
        return Err(ChordalityError::NotChordal);
    }
    let n = g.vertex_count();
    let mut in_tail = vec![false; n];
    for &x in &tail {
        in_tail[x] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n - tail.len() {
        let v = (0..n)
            .find(|&v| alive[v] && !in_tail[v] && is_simplicial(g, v, &alive))
            .ok_or(ChordalityError::NotChordal)?;
        alive[v] = false;
        order.push(v);
    }
    order.extend(&tail);
    debug_assert!(is_perfect_elimination_order(g, &order));
    Ok(Peo { order: order.into_iter().map(|i| g.label(i).clone()).collect() })
}

fn is_simplicial(g: &Graph, v: usize, alive: &[bool]) -> bool {
    let nbrs: Vec<usize> = g.adj(v).iter().copied().filter(|&w| alive[w]).collect();
    g.is_clique_idx(&nbrs)
}
