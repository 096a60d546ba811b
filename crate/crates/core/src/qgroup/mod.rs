//! Explicit `sl(3)_q` modules and R-matrices.
//!
//! Modules carry their six generator matrices on a fixed basis of weight
//! vectors. Weights are recorded as the exponents of `a` in the diagonal
//! matrices `K1`, `K2`; for a highest weight vector these are its Dynkin
//! labels. Tensor bases are row-major with the left factor slowest.

pub mod cache;
pub mod cupcap;
pub mod module;
pub mod persist;
pub mod rmatrix;
pub mod split;
pub mod tower;

pub use cupcap::{solve_cup_cap, CupCap};
pub use module::{verify_module_axioms, AxiomReport, Generator, QModule, Weight};
pub use rmatrix::RMatrix;
pub use split::{full_twist_split, InjProj};
pub use tower::Tower;
pub use cache::{cached_tower, Cache};
