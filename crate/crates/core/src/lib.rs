//! Balanced bipartite digraphs: degree conditions, complete matchings,
//! matching-compatible paths and cycles, hamiltonian cycle construction
//! with an exact oracle, and the extremal families around them.

pub mod compat;
pub mod conditions;
pub mod digraph;
pub mod error;
pub mod generators;
pub mod hamilton;
pub mod io;
pub mod matching;

pub use compat::{
    compatible_path, compatible_reach_set, contract, extension_search, longest_compatible_cycle, ArcKind,
    ContractedDigraph, CycleCertificate, PathCertificate, SearchMode,
};
pub use conditions::{
    check_condition_a, check_condition_m, check_half_degrees, check_min_degree, check_woodall_bipartite,
    ConditionReport, DegreeKind, Witness,
};
pub use digraph::{BipartiteDigraph, DegreeProfile, Direction, Subdigraph, VertexSet, MAX_CLASS_SIZE};
pub use error::{Error, Result};
pub use matching::{check_expansion, find_complete_matching, ExpansionReport, HallViolator, MatchDirection, Matching};
pub use hamilton::{
    decompose, find_bridge_path, find_hamiltonian_cycle, oracle_hamiltonian, splice, verify_cycle, Decomposition,
    HamiltonCertificate, HamiltonOptions, MergePlan, Verdict,
};
pub use generators::{gen_dak, gen_dprime, gen_random, gen_random_m, gen_tak, FamilySpec};
