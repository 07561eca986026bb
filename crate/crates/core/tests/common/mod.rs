//! Brute-force oracles and corpora shared by the integration tests. Nothing
//! here calls into the library's algorithms; it only reads graphs through
//! the public accessors.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use chordcut::{generate, Edge, GenParams, Graph, Style, VertexId, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bitmask view of a graph with at most 32 vertices.
pub struct Bits {
    pub labels: Vec<VertexId>,
    pub adj: Vec<u32>,
}

impl Bits {
    pub fn new(g: &Graph) -> Self {
        let labels: Vec<VertexId> = g.vertices().cloned().collect();
        assert!(labels.len() <= 32);
        let adj = labels
            .iter()
            .map(|a| {
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| g.has_edge(a, b))
                    .fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Bits { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn index(&self, v: &VertexId) -> usize {
        self.labels.iter().position(|l| l == v).expect("vertex")
    }

    pub fn set(&self, mask: u32) -> VertexSet {
        (0..self.n()).filter(|&i| mask >> i & 1 == 1).map(|i| self.labels[i].clone()).collect()
    }

    pub fn mask(&self, set: &VertexSet) -> u32 {
        set.iter().fold(0, |m, v| m | 1 << self.index(v))
    }

    pub fn is_clique(&self, mask: u32) -> bool {
        (0..self.n()).filter(|&i| mask >> i & 1 == 1).all(|i| (mask & !(1 << i)) & !self.adj[i] == 0)
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub fn reach(&self, start: usize, allowed: u32) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = self.adj[i] & allowed & !seen;
            seen |= next;
            frontier |= next;
        }
        seen
    }

    pub fn components(&self, allowed: u32) -> Vec<u32> {
        let mut left = allowed;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, allowed);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// `mask` induces a cycle: connected and 2-regular.
    pub fn is_induced_cycle(&self, mask: u32) -> bool {
        mask.count_ones() >= 3
            && (0..self.n()).filter(|&i| mask >> i & 1 == 1).all(|i| (self.adj[i] & mask).count_ones() == 2)
            && self.reach(mask.trailing_zeros() as usize, mask) == mask
    }
}

/// Vertex sets of all holes, by checking every subset.
pub fn brute_hole_sets(g: &Graph) -> BTreeSet<VertexSet> {
    let b = Bits::new(g);
    assert!(b.n() <= 16, "subset oracle is for small graphs");
    (0u32..1 << b.n())
        .filter(|m| m.count_ones() >= 4 && b.is_induced_cycle(*m))
        .map(|m| b.set(m))
        .collect()
}

pub fn brute_is_chordal(g: &Graph) -> bool {
    brute_hole_sets(g).is_empty()
}

/// All 6-vertex sets inducing the octahedron (every vertex has exactly one
/// non-neighbor inside the set).
pub fn brute_octahedra(g: &Graph) -> Vec<VertexSet> {
    let b = Bits::new(g);
    let n = b.n();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(6);
    fn rec(b: &Bits, n: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if pick.len() == 6 {
            let m = pick.iter().fold(0u32, |m, &i| m | 1 << i);
            if pick.iter().all(|&i| (b.adj[i] & m).count_ones() == 4) {
                out.push(b.set(m));
            }
            return;
        }
        for i in from..n {
            pick.push(i);
            rec(b, n, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(&b, n, 0, &mut pick, &mut out);
    out
}

/// Edges shared by two distinct holes, from the brute hole sets.
pub fn brute_hole_edge_disjoint(g: &Graph) -> bool {
    let holes = brute_hole_sets(g);
    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    for h in &holes {
        for a in h {
            for b in h {
                if a < b && g.has_edge(a, b) && !seen.insert(Edge::new(a.clone(), b.clone()).unwrap()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every vertex's later neighbors are pairwise adjacent, and the order is a
/// permutation of `V(G)`.
pub fn peo_pairwise_ok(g: &Graph, order: &[VertexId]) -> bool {
    let set: VertexSet = order.iter().cloned().collect();
    if set.len() != order.len() || set != g.vertex_set() {
        return false;
    }
    (0..order.len()).all(|i| {
        let later: Vec<&VertexId> = order[i + 1..].iter().filter(|w| g.has_edge(&order[i], w)).collect();
        later.iter().enumerate().all(|(p, a)| later[p + 1..].iter().all(|b| g.has_edge(a, b)))
    })
}

/// Vertices adjacent to every vertex of `hole`.
pub fn oracle_x_c(g: &Graph, hole: &VertexSet) -> VertexSet {
    g.vertices()
        .filter(|v| !hole.contains(*v) && hole.iter().all(|c| g.has_edge(v, c)))
        .cloned()
        .collect()
}

/// Internal vertices of all simple `a`-`b` paths of length at least two whose
/// internal vertices avoid `blocked`, by explicit path enumeration.
pub fn oracle_path_interiors(g: &Graph, a: &VertexId, b: &VertexId, blocked: &VertexSet) -> VertexSet {
    let bits = Bits::new(g);
    let (a, b) = (bits.index(a), bits.index(b));
    let allowed = !bits.mask(blocked) & ((1u64 << bits.n()) - 1) as u32 & !(1 << a) & !(1 << b);
    let mut found = 0u32;
    let mut stack = Vec::new();
    fn dfs(bits: &Bits, at: usize, b: usize, allowed: u32, used: u32, path: &mut Vec<usize>, found: &mut u32) {
        if bits.adj[at] >> b & 1 == 1 && !path.is_empty() {
            for &x in path.iter() {
                *found |= 1 << x;
            }
        }
        let mut next = bits.adj[at] & allowed & !used;
        while next != 0 {
            let x = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(x);
            dfs(bits, x, b, allowed, used | 1 << x, path, found);
            path.pop();
        }
    }
    dfs(&bits, a, b, allowed, 1 << a, &mut stack, &mut found);
    bits.set(found)
}

/// Whether some path of length at least two joins `a` and `b` through
/// vertices outside `blocked`.
pub fn oracle_path_exists(g: &Graph, a: &VertexId, b: &VertexId, blocked: &VertexSet) -> bool {
    !oracle_path_interiors(g, a, b, blocked).is_empty()
}

/// `x` is a clique cut and some nonempty union of components `U` of `G - x`
/// makes `G[U ∪ x]` chordal; tries every union.
pub fn brute_chordal_cut(g: &Graph, x: &VertexSet) -> bool {
    let b = Bits::new(g);
    let all = ((1u64 << b.n()) - 1) as u32;
    let xm = b.mask(x);
    if !b.is_clique(xm) || b.components(all & !xm).len() <= b.components(all).len() {
        return false;
    }
    let comps = b.components(all & !xm);
    (1u32..1 << comps.len()).any(|pick| {
        let u = (0..comps.len()).filter(|&i| pick >> i & 1 == 1).fold(0, |m, i| m | comps[i]);
        let side = g.induced_subgraph(&b.set(u | xm)).unwrap();
        brute_is_chordal(&side)
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
    }
    Graph::new(vs.iter().cloned(), edges).unwrap()
}

/// Parameters of the main corpus: hole counts cycle through 0..=4 and the
/// style rotates where the vertex budget allows it.
pub fn corpus_params(seed: u64) -> GenParams {
    let holes = (seed % 5) as usize;
    let style = match seed % 3 {
        0 if holes <= 2 => Style::HolesGlued,
        2 if holes == 0 => Style::Chordal,
        _ => Style::Mixed,
    };
    GenParams::new(seed, 8..=20, holes, style)
}

pub const CORPUS_SIZE: u64 = 600;

/// Generated graphs with 8 to 20 vertices and 0 to 4 holes.
pub fn corpus() -> &'static [(GenParams, Graph)] {
    static CORPUS: OnceLock<Vec<(GenParams, Graph)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (0..CORPUS_SIZE)
            .map(|seed| {
                let p = corpus_params(seed);
                let g = generate(&p).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
                (p, g)
            })
            .collect()
    })
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len()).map(move |m| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| m >> k & 1 == 1)
            .map(|(_, &(i, j))| (vs[i].clone(), vs[j].clone()));
        Graph::new(vs.iter().cloned(), edges).unwrap()
    })
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges((0..n).map(|i| (format!("c{i}"), format!("c{}", (i + 1) % n)))).unwrap()
}

pub fn house() -> Graph {
    Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"), ("w", "u"), ("w", "v")]).unwrap()
}

pub fn c4() -> Graph {
    Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap()
}

pub fn octahedron() -> Graph {
    let vs = ["a1", "a2", "b1", "b2", "c1", "c2"];
    let mut edges = Vec::new();
    for (i, x) in vs.iter().enumerate() {
        for y in &vs[i + 1..] {
            if x[..1] != y[..1] {
                edges.push((*x, *y));
            }
        }
    }
    Graph::from_edges(edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn set(items: &[&str]) -> VertexSet {
    items.iter().map(|&s| VertexId::from(s)).collect()
}
