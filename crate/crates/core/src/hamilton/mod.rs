//! Hamiltonian cycles: decomposition into disjoint compatible cycles,
//! bridge paths and splices that merge them, the driver that combines
//! these, and an independent exact oracle.

mod decomposition;
mod driver;
mod merge;
mod oracle;

pub use decomposition::{decompose, decompose_from, decompose_with, DecomposeError, Decomposition, Remainder, Stage, StageRule};
pub use driver::{find_hamiltonian_cycle, HamiltonCertificate, HamiltonOptions, Method, StageSummary, Verdict};
pub use merge::{
    apply as apply_splice, find_bridge_path, splice, BridgeOutcome, BridgeReport, Component, Link, MergePlan,
    SpliceForm, BRIDGE_BUDGET,
};
pub use oracle::{oracle_hamiltonian, verify_cycle, ORACLE_CAP};
