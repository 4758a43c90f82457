//! Exact scalar arithmetic (Q and F_p) and dense exact linear algebra.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values can be shared freely across threads.

mod matrix;
mod scalar;

pub use matrix::Matrix;
pub(crate) use matrix::bareiss_rank;
pub use scalar::{Field, Scalar};
