//! Exact computations with finite-dimensional algebras given by quivers
//! with relations: structure constants, idempotents and blocks, the
//! gentle one-cycle criterion for derived-discreteness, split and
//! separable extensions with certificates, and bounded complexes of
//! projective modules.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod extension;
pub mod field;
pub mod gentle;
pub mod linalg;
pub mod poly;
pub mod quiver;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator behind every randomized step, seeded explicitly.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
