//! Deterministic seed derivation.
//!
//! Every random stream in the crate is a ChaCha generator keyed by a
//! master seed plus a label and a few context integers, so independent
//! stages (data generation, shuffling, bootstrap resampling) never share
//! or race a stream and runs replay bit-for-bit.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Mix a label and context values into a master seed (splitmix64 rounds).
pub fn derive_seed(master: u64, label: &str, context: &[u64]) -> u64 {
    let mut state = master ^ 0x9e37_79b9_7f4a_7c15;
    let mut absorb = |v: u64| {
        state = state.wrapping_add(v).wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        state = z ^ (z >> 31);
    };
    for b in label.as_bytes() {
        absorb(*b as u64);
    }
    for v in context {
        absorb(*v);
    }
    state
}

/// A ChaCha stream keyed by `derive_seed`.
pub fn stream(master: u64, label: &str, context: &[u64]) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(derive_seed(master, label, context))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derivation_is_stable_and_label_sensitive() {
        assert_eq!(derive_seed(7, "a", &[1]), derive_seed(7, "a", &[1]));
        assert_ne!(derive_seed(7, "a", &[1]), derive_seed(7, "b", &[1]));
        assert_ne!(derive_seed(7, "a", &[1]), derive_seed(7, "a", &[2]));
        assert_ne!(derive_seed(7, "a", &[1]), derive_seed(8, "a", &[1]));
    }

    #[test]
    fn streams_replay() {
        let a: Vec<u64> = stream(3, "x", &[]).random_iter().take(4).collect();
        let b: Vec<u64> = stream(3, "x", &[]).random_iter().take(4).collect();
        assert_eq!(a, b);
    }
}
