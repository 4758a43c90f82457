//! Exact-arithmetic computations in the full, orthogonal and symplectic
//! matrix monoids: membership and similitude factors, idempotents of the
//! diagonal torus closure, G x G orbit classification with exact witnesses,
//! the weight monoid of the torus closure with its dominance-order
//! combinatorics, induced-module dimensions, and a randomized (but exactly
//! verified) rank oracle for the graded dimensions of the coordinate ring.
//!
//! Everything is computed over the rationals or a prime field; there is no
//! floating point anywhere. See the `examples/` directory for one runnable
//! walkthrough per capability, and the `redmonoid` binary for a JSON
//! command-line front end.

pub mod cli;
pub mod coordring;
mod error;
pub mod exact;
pub mod forms;
pub mod monoid;
pub mod repdim;
pub mod weights;

pub use error::{Error, Result};
