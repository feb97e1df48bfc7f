//! Deterministic pseudo-random numbers for instance generation.
//!
//! Every generator in this crate draws from [`SplitMix64`], a fixed 64-bit
//! state-advance PRNG, so a `(family, n, seed)` triple produces the same
//! instance bytes on every platform and in every port of this toolkit.
//! OS randomness is never consulted.
//!
//! The algorithm, spelled out so other implementations can match it exactly:
//!
//! ```text
//! state <- state + 0x9E3779B97F4A7C15            (wrapping, per draw)
//! z <- state
//! z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9    (wrapping)
//! z <- (z xor (z >> 27)) * 0x94D049BB133111EB    (wrapping)
//! output <- z xor (z >> 31)
//! ```
//!
//! Bounded draws use rejection sampling on `output mod bound` (rejecting
//! draws at or above the largest multiple of `bound` below 2^64), so they
//! are exactly uniform and consume a deterministic prefix of the stream.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 generator seeded directly with the user-supplied seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` via rejection sampling.
    ///
    /// `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be nonzero");
        // Largest multiple of `bound` representable below 2^64; draws at or
        // above it would bias the modulus and are rejected.
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let r = self.next_u64();
            if r < zone {
                return r % bound;
            }
        }
    }
}
