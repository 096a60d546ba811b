//! Partitions and Schur-function computations: Littlewood–Richardson
//! products, plethysm with `p2`, symmetric and exterior squares, and the
//! multiplicity scans built on them.

pub mod character;
pub mod dims;
pub mod expansion;
pub mod expect;
pub mod lr;
pub mod mixed;
pub mod partition;
pub mod plethysm;
pub mod scan;

pub use dims::{sl_dim, syt_count};
pub use expansion::SchurExpansion;
pub use lr::lr_mult;
pub use mixed::{mixed_sl3_decomp, mixed_square_exceptions};
pub use partition::Partition;
pub use plethysm::{plethysm_p2, square_split};
pub use scan::{hook_scan, multiplicity_scan, ScanEntry, SquarePart};
