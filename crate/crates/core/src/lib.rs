//! Hole analysis, chordal cuts and competition-number certificates for
//! graphs that are K_{2,2,2}-free and hole-edge-disjoint.
//!
//! A *hole* is a chordless cycle of length at least four. For graphs in the
//! class above, [`build_bounded_digraph`] produces an acyclic digraph whose
//! competition graph is the input plus at most `h(G) + 1` isolated vertices,
//! where `h(G)` is the number of holes.

pub mod chordality;
pub mod competition;
pub mod cut;
pub mod format;
pub mod generate;
pub mod graph;
pub mod holes;

pub use chordality::{find_peo, is_chordal, peo_ending_with_clique, ChordalityError, Peo};
pub use competition::{
    build_bounded_digraph, competition_graph, exact_competition_number, extend_after_edge_deletion,
    glue_chordal_part, is_acyclic, roberts_chordal_digraph, verify_certificate, Acyclicity, BuildError,
    CertificateDefect, CompetitionCertificate, FreshNames, EXACT_VERTEX_LIMIT,
};
pub use cut::{
    avoidable_edge_count, chordal_cut_witness, every_hole_edge_has_avoiding_path, find_chordal_cut,
    find_count_condition_hole, is_chordal_cut, is_clique_cut, ChordalCutCertificate, CutError,
};
pub use format::{parse_graph, serialize_graph, DigraphDocument, GraphDocument, ParseError};
pub use generate::{generate, GenError, GenParams, Style};
pub use graph::{Digraph, Edge, Graph, GraphError, VertexId, VertexSet};
pub use holes::{
    c_avoiding_path_exists, check_preconditions, cut_analysis, cut_analysis_with_limit, enumerate_holes,
    find_induced_octahedron, is_c_avoiding_path, is_hole_edge_disjoint, is_k222_free, s_ce_exhaustive,
    s_nonempty, shared_hole_edge, t_ce, x_c, AnalysisError, CutAnalysis, Hole, HoleSet, PreconditionViolation,
    DEFAULT_EXHAUSTIVE_LIMIT,
};
