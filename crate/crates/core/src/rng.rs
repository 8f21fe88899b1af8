//! Seeded randomness. Every sampling operation in the crate draws from this
//! generator so that reports and certificates are reproducible.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Name of the generator, recorded in reports next to the seed.
pub const RNG_NAME: &str = "chacha8";

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x51_10_2b;

/// Construct the crate-wide generator from a seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
