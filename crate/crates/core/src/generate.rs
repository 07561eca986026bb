//! Seeded random graphs inside the K_{2,2,2}-free hole-edge-disjoint class.
//!
//! Graphs are grown from operations that keep the class closed:
//!
//! * a new vertex adjacent to a nonempty clique (it is simplicial, so it
//!   lies on no hole and in no induced K_{2,2,2});
//! * a new cycle of length 4 to 7 sharing exactly one vertex with the graph
//!   (the shared vertex separates it, so it adds exactly one hole);
//! * in the mixed style, occasionally a hub adjacent to every vertex of a
//!   freshly glued cycle.
//!
//! Each candidate is re-checked against both preconditions and the target
//! hole count before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::holes::check_preconditions;

const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Style {
    /// No holes at all.
    Chordal,
    /// Every hole edge gets an ear, so every `S_{C,e}` is nonempty.
    HolesGlued,
    /// Optional ears and hubs.
    Mixed,
}

impl std::str::FromStr for Style {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chordal" => Ok(Style::Chordal),
            "holes-glued" => Ok(Style::HolesGlued),
            "mixed" => Ok(Style::Mixed),
            other => Err(format!("unknown style `{other}` (expected chordal, holes-glued or mixed)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenParams {
    pub seed: u64,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub n_holes: usize,
    pub style: Style,
}

impl GenParams {
    pub fn new(seed: u64, vertices: std::ops::RangeInclusive<usize>, n_holes: usize, style: Style) -> Self {
        GenParams { seed, min_vertices: *vertices.start(), max_vertices: *vertices.end(), n_holes, style }
    }

    /// Fewest vertices any output can have.
    pub fn minimum_vertices(&self) -> usize {
        match self.style {
            Style::Chordal => 1,
            Style::Mixed => 1 + 3 * self.n_holes,
            Style::HolesGlued => 1 + 7 * self.n_holes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no valid graph after {0} attempts")]
    RetriesExhausted(usize),
}

pub fn generate(params: &GenParams) -> Result<Graph, GenError> {
    if params.min_vertices > params.max_vertices {
        return Err(GenError::Infeasible("empty vertex range".into()));
    }
    if params.style == Style::Chordal && params.n_holes > 0 {
        return Err(GenError::Infeasible("chordal style cannot have holes".into()));
    }
    let needed = params.minimum_vertices();
    if needed > params.max_vertices {
        return Err(GenError::Infeasible(format!(
            "{} holes need at least {needed} vertices in this style",
            params.n_holes
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.gen_range(params.min_vertices.max(needed)..=params.max_vertices);
        let g = Builder::new(&mut rng, n).run(params);
        match check_preconditions(&g) {
            Ok(holes) if holes.count() == params.n_holes => return Ok(g),
            _ => continue,
        }
    }
    Err(GenError::RetriesExhausted(MAX_ATTEMPTS))
}

struct Builder<'r> {
    rng: &'r mut ChaCha8Rng,
    target: usize,
    adj: Vec<Vec<usize>>,
    hole_edges: Vec<(usize, usize)>,
    hubbed_edges: Vec<(usize, usize, usize)>,
}

impl<'r> Builder<'r> {
    fn new(rng: &'r mut ChaCha8Rng, target: usize) -> Self {
        Builder { rng, target, adj: vec![Vec::new()], hole_edges: Vec::new(), hubbed_edges: Vec::new() }
    }

    fn add_vertex(&mut self, nbrs: &[usize]) -> usize {
        let v = self.adj.len();
        self.adj.push(nbrs.to_vec());
        for &w in nbrs {
            self.adj[w].push(v);
        }
        v
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Random nonempty clique of at most four vertices around a random vertex.
    fn random_clique(&mut self) -> Vec<usize> {
        let x = self.rng.gen_range(0..self.adj.len());
        let mut nbrs = self.adj[x].clone();
        nbrs.shuffle(self.rng);
        let mut clique = vec![x];
        for y in nbrs {
            if clique.len() >= 4 || !self.rng.gen_bool(0.6) {
                break;
            }
            if clique.iter().all(|&c| self.adjacent(c, y)) {
                clique.push(y);
            }
        }
        clique
    }

    fn run(mut self, params: &GenParams) -> Graph {
        let lengths = self.hole_lengths(params);
        let costs: Vec<usize> = lengths
            .iter()
            .map(|&l| if params.style == Style::HolesGlued { 2 * l - 1 } else { l - 1 })
            .collect();
        let hole_cost: usize = costs.iter().sum();
        let spare = self.target - 1 - hole_cost;
        let base = if params.style == Style::Chordal { spare } else { self.rng.gen_range(0..=spare) };
        for _ in 0..base {
            let k = self.random_clique();
            self.add_vertex(&k);
        }
        for (i, &len) in lengths.iter().enumerate() {
            let reserved: usize = costs[i + 1..].iter().sum();
            self.glue_cycle(len, params.style, reserved);
        }
        while self.adj.len() < self.target {
            let k = self.attachment_clique(params.style);
            self.add_vertex(&k);
        }
        let labels: Vec<VertexId> = (0..self.adj.len()).map(|i| VertexId::new(format!("v{i:02}"))).collect();
        let edges: Vec<(VertexId, VertexId)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
            .collect();
        Graph::new(labels.iter().cloned(), edges).expect("labels are consistent")
    }

    fn hole_lengths(&mut self, params: &GenParams) -> Vec<usize> {
        let per_extra = if params.style == Style::HolesGlued { 2 } else { 1 };
        let mut budget = self.target - params.minimum_vertices();
        (0..params.n_holes)
            .map(|_| {
                let grow = self.rng.gen_range(0..=3).min(budget / per_extra);
                budget -= grow * per_extra;
                4 + grow
            })
            .collect()
    }

    /// `reserved` vertices must stay available for the holes still to come.
    fn glue_cycle(&mut self, len: usize, style: Style, reserved: usize) {
        let anchor = self.rng.gen_range(0..self.adj.len());
        let mut cycle = vec![anchor];
        for _ in 1..len {
            let prev = *cycle.last().expect("nonempty");
            cycle.push(self.add_vertex(&[prev]));
        }
        let last = *cycle.last().expect("nonempty");
        self.adj[last].push(anchor);
        self.adj[anchor].push(last);
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (cycle[i], cycle[(i + 1) % len])).collect();
        match style {
            Style::HolesGlued => {
                for &(a, b) in &edges {
                    self.add_vertex(&[a, b]);
                }
            }
            Style::Mixed if self.adj.len() + reserved < self.target && self.rng.gen_bool(0.25) => {
                let hub = self.add_vertex(&cycle);
                self.hubbed_edges.extend(edges.iter().map(|&(a, b)| (a, b, hub)));
            }
            _ => {}
        }
        self.hole_edges.extend(edges);
    }

    fn attachment_clique(&mut self, style: Style) -> Vec<usize> {
        if style != Style::Chordal && !self.hole_edges.is_empty() && self.rng.gen_bool(0.5) {
            if !self.hubbed_edges.is_empty() && self.rng.gen_bool(0.3) {
                let (a, b, h) = self.hubbed_edges[self.rng.gen_range(0..self.hubbed_edges.len())];
                return vec![a, b, h];
            }
            let (a, b) = self.hole_edges[self.rng.gen_range(0..self.hole_edges.len())];
            return vec![a, b];
        }
        self.random_clique()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::is_chordal;
    use crate::holes::enumerate_holes;

    #[test]
    fn chordal_style() {
        let g = generate(&GenParams::new(1, 8..=20, 0, Style::Chordal)).unwrap();
        assert!(is_chordal(&g));
        assert!((8..=20).contains(&g.vertex_count()));
    }

    #[test]
    fn hole_targets() {
        for style in [Style::Mixed, Style::HolesGlued] {
            let g = generate(&GenParams::new(2, 8..=20, 2, style)).unwrap();
            assert_eq!(enumerate_holes(&g).count(), 2);
            assert!(check_preconditions(&g).is_ok());
        }
    }

    #[test]
    fn deterministic() {
        let p = GenParams::new(7, 8..=20, 3, Style::Mixed);
        assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
    }

    #[test]
    fn infeasible() {
        assert!(matches!(
            generate(&GenParams::new(1, 4..=6, 2, Style::Mixed)),
            Err(GenError::Infeasible(_))
        ));
        assert!(generate(&GenParams::new(1, 8..=8, 1, Style::Chordal)).is_err());
    }
}
