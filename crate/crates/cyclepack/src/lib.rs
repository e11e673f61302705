//! Maximum 8-cycle packings of complete graphs with inside-cycle
//! certificates: construction for every order, verification, and an
//! exhaustive decision search for the certificate-selection property.

pub mod builder;
pub mod catalog;
pub mod cycle;
pub mod edgeset;
pub mod format;
pub mod inside;
pub mod packing;
pub mod solver;
pub mod verify;

pub use builder::{build, BadWitness, BuildError, Built, Variant};
pub use catalog::{CatalogEntry, CatalogError, CatalogKey};
pub use cycle::{CycleError, Edge, OctCycle, Vertex, CYCLE_LEN};
pub use edgeset::EdgeSet;
pub use format::{parse, serialize, ParseError};
pub use inside::{count_inside, enumerate_inside, InsideCycleSet};
pub use packing::{
    admissible_system_order, leave_spec, A2PCertificate, CertMode, LeaveKind, LeaveSpec,
    OrderError, Packing,
};
pub use solver::{decide_a2p, find_bad_subpacking, A2pOutcome, Budget, SearchStats, SolverError};
pub use verify::{verify_certificate, verify_packing, Clause, VerificationReport};
