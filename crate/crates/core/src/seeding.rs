//! Deterministic seed derivation.
//!
//! Every randomized operation takes an explicit `u64` seed. A run owns a
//! single root seed and derives independent sub-seeds with [`mix_seed`], so
//! trials, descent iterations, and inner solver calls can run in any order
//! (including in parallel) without changing results.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derives a child seed from `(base, stream)`.
///
/// This is the SplitMix64 finalizer applied to the base xored with a
/// golden-ratio multiple of the stream index. Distinct streams give
/// statistically independent child seeds, and the mapping is fixed forever:
/// changing it would silently change every seeded result.
pub fn mix_seed(base: u64, stream: u64) -> u64 {
    let mut z = base ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The stream cipher RNG used throughout the crate.
///
/// ChaCha8 is fast, portable, and produces an identical stream for a given
/// seed on every platform.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix_is_deterministic_and_stream_sensitive() {
        assert_eq!(mix_seed(42, 0), mix_seed(42, 0));
        assert_ne!(mix_seed(42, 0), mix_seed(42, 1));
        assert_ne!(mix_seed(42, 0), mix_seed(43, 0));
    }

    #[test]
    fn rng_streams_are_reproducible() {
        use rand::Rng;
        let a: f64 = rng_from_seed(7).random();
        let b: f64 = rng_from_seed(7).random();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
