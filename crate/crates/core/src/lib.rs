//! Exact computations behind satellite invariants of mutant knots.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: rationals, Laurent polynomials and rational functions in the
//!   quarter parameter `a` (with `s = a^2`, `q = a^4`), prime-field
//!   specialisations, sparse matrices and exact elimination.
//! * [`symfunc`]: partitions, Littlewood–Richardson products, plethysm with
//!   `p_2`, symmetric/exterior squares of Schur functions and the scans built
//!   on them.
//! * [`qgroup`]: explicit `sl(3)_q` modules and R-matrices, from the
//!   fundamental module up to `V_(4,2)` and its 729×729 R-matrix.
//! * [`tangle`]: highest-weight spaces, partial-trace closure of 3-braids and
//!   the certification of the trace difference.

pub mod arith;
pub mod error;
pub mod qgroup;
pub mod symfunc;
pub mod tangle;

pub use error::{Error, Result};
