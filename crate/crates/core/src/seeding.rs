//! Splittable counter-based seed derivation.
//!
//! Every Monte Carlo work item derives its RNG purely from
//! (master seed, realization index, stream tag), so an estimate is
//! bit-identical no matter how the index range is partitioned across
//! workers.

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

/// SplitMix64 finalizer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and a counter.
pub fn derive(parent: u64, counter: u64) -> u64 {
    splitmix64(parent ^ counter.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Stream tags separating the RNG consumers inside one realization.
pub mod stream {
    pub const NETWORK: u64 = 1;
    pub const CHANNEL: u64 = 2;
}

/// RNG for one (realization, stream) pair.
pub fn realization_rng(master_seed: u64, realization: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(derive(master_seed, realization), stream))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn derivation_is_deterministic_and_spreads() {
        assert_eq!(derive(42, 7), derive(42, 7));
        assert_ne!(derive(42, 7), derive(42, 8));
        assert_ne!(derive(42, 7), derive(43, 7));
        let mut a = realization_rng(1, 0, stream::NETWORK);
        let mut b = realization_rng(1, 0, stream::CHANNEL);
        assert_ne!(a.next_u64(), b.next_u64());
    }
}
