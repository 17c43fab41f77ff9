//! Deterministic random streams.
//!
//! One fixed algorithm is used everywhere so that experiments reproduce
//! exactly from a seed, independent of platform and build features:
//!
//! ```text
//! splitmix64:  state_k  = seed + k * 0x9E3779B97F4A7C15   (wrapping)
//!              output_k = mix(state_k)
//! ```
//!
//! where `mix` is the usual xor-shift/multiply finalizer. Because the k-th
//! output depends only on `(seed, k)`, a stream is fully described by its
//! seed and position counter, and advancing is O(1) from any position.
//!
//! Derived quantities consume a documented number of draws:
//! - `next_f64`: 1 draw, uniform on [0,1) with 53 random bits;
//! - `next_gauss`: exactly 2 draws (Box-Muller, cosine branch, no caching);
//! - `next_index(n)`: 1 draw;
//! - `next_bool(p)`: 1 draw.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Name of the fixed generator behind every [`RngStream`].
pub const ALGORITHM: &str = "splitmix64";

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A seeded, positioned splitmix64 stream.
///
/// Identical `(seed, position)` always yields the identical next value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    position: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream { seed, position: 0 }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of `u64` draws consumed so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    /// Deterministically derive an independent child seed from a parent seed
    /// and a salt: `mix(seed + mix(salt + GOLDEN))`. Used to give sub-tasks
    /// (embedding generation, training, per-run jobs) their own streams.
    pub fn derive(seed: u64, salt: u64) -> u64 {
        mix(seed.wrapping_add(mix(salt.wrapping_add(GOLDEN))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.position = self.position.wrapping_add(1);
        mix(self.seed.wrapping_add(self.position.wrapping_mul(GOLDEN)))
    }

    /// Uniform on [0,1), 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller. Always consumes two draws; nothing is
    /// cached, so the (seed, position) contract stays exact.
    pub fn next_gauss(&mut self) -> f64 {
        let u1 = self.next_f64().max(f64::MIN_POSITIVE);
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Uniform index in `0..n`. `n` must be nonzero.
    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        let i = (self.next_f64() * n as f64) as usize;
        i.min(n - 1)
    }

    /// Bernoulli draw with success probability `p`.
    pub fn next_bool(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }
}
