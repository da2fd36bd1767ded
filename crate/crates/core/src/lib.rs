//! Recognition, certificates, and forbidden-subgraph catalogs for chordal
//! signed graphs and chordal signed bigraphs.
//!
//! A signed graph carries one sign per edge. A vertex is signed simplicial
//! when its neighbourhood induces a positive clique; an edge of a bigraph is
//! signed simplicial when the union of its endpoints' neighbourhoods (minus
//! the endpoints) induces a positive biclique. The chordal signed classes
//! are the ones admitting full simplicial elimination orderings: of
//! vertices in the general case, of edges (vertices retained) in the
//! bipartite case.
//!
//! The library recognizes both classes by greedy elimination and certifies
//! every answer: a replayable ordering when the input is chordal, and an
//! embedded minimal forbidden induced subgraph when it is not. Independent
//! definitional oracles and exhaustive small-scale enumeration suites keep
//! the structural facts the recognizers rely on machine-checked.

pub mod catalog;
pub mod cli;
pub mod elimination;
pub mod fileformat;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod structure;

pub use catalog::{
    find_induced_member, generate, join_of_tadpoles, membership, minimal_non_chordal_witness,
    sum_of_tadpoles, CatalogEntry, CatalogError, FamilyTag, ForbiddenWitness, GeneratorCaps,
    JoinOptions, Tadpole, TadpoleShape,
};
pub use elimination::{
    digraph_to_signed_graph, is_chordal_bigraph, is_chordal_graph, is_signed_simplicial_edge,
    is_signed_simplicial_vertex, is_strict_chordal_digraph, recognize_chordal_signed_bigraph,
    recognize_chordal_signed_graph, verify_certificate, EliminationCertificate,
};
pub use graph::{Bipartition, Digraph, GraphError, PatternGraph, Side, Sign, SignedGraph};
pub use iso::{are_isomorphic, pattern_embedding, sign_isomorphism, underlying_isomorphism};
pub use oracle::{
    enumerate_signed_bigraphs, oracle_chordal_bigraph, oracle_chordal_signed_graph,
    oracle_no_bad_subgraph, run_suite, verify_catalog, verify_lemma, verify_theorem, OracleError,
    Suite, SuiteConfig, VerificationReport, WorkerSlice,
};
pub use structure::{
    canonical_ordering, check_complete_adjacency, check_nonsep_properties,
    find_minimal_separation, find_tadpole_at, is_separable, AdjacencyClass, CanonicalOrdering,
    NonSepReport, SeparationCertificate, StructureError, TadpoleDescriptor, TadpoleKind,
};
