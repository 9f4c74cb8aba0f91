//! Exact computational algebra: the Cayley–Dickson tower up to the octonions,
//! matrix Lie algebras built from octonion multiplication, root systems of all
//! simple types, and exact character arithmetic (Freudenthal multiplicities,
//! exterior and tensor powers, branching, decomposition).
//!
//! Nothing here uses floating point. Scalars are big rationals, dimensions and
//! group orders are big integers, and weights are integer vectors in a scaled
//! orthogonal coordinate system.

pub mod composition;
pub mod error;
pub mod exact;
pub mod lie;
pub mod roots;

pub use error::{Error, Result};
pub use exact::{BigCount, ExactMatrix, Scalar};

/// Version string reported by the verifier.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
