//! Closed-tangle endomorphisms of `M ⊗ M` restricted to highest weight
//! spaces, and certification of the mutant trace difference.

pub mod block;
pub mod braid;
pub mod certify;
pub mod weight;

pub use block::{block_restrict, trace_difference, word_trace_difference, BlockMatrix2, Letter};
pub use braid::{BraidWord, ClosedTangle, LazyOperator};
pub use weight::{highest_weight_space, twist_eigensplit, TwistSplit, WeightSpace};
