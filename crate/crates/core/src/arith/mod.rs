//! Exact scalars and linear algebra.
//!
//! Every computation is generic over [`Scalar`], with three realizations:
//! [`RationalFunction`] (symbolic in `a`), [`Rational`] (a fixed rational
//! sample value of `a`) and [`Fp`] (a sample value in a prime field, used for
//! the large evaluation runs and recombined by CRT).

pub mod crt;
pub mod fp;
pub mod interp;
pub mod laurent;
pub mod linalg;
pub mod ratfunc;
pub mod rational;
pub mod recon;
pub mod scalar;
pub mod sparse;

pub use fp::{Fp, P0, P1, P2, P3, P4, P5};
pub use laurent::LaurentPoly;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use scalar::{Params, Scalar};
pub use sparse::SparseMatrix;
