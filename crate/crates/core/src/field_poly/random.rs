use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::Monomial;
use super::poly::{MPoly, Ring};

/// Seed for every generic choice made by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Default for Seed {
    fn default() -> Self {
        Seed(42)
    }
}

/// Deterministic random source: ChaCha8 keyed by the seed, one independent
/// 64-bit stream per label.
///
/// `RandomSource::new(seed).split(k)` always yields the same sequence for
/// the same `(seed, k)`, whatever else has been drawn elsewhere, which is
/// what lets trials and subsets run concurrently and still reproduce.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: Seed,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: Seed) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed.0),
        }
    }

    pub fn seed(&self) -> Seed {
        self.seed
    }

    /// Independent sub-stream; does not consume from `self`.
    pub fn split(&self, stream: u64) -> RandomSource {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.0);
        rng.set_stream(stream);
        RandomSource { seed: self.seed, rng }
    }

    /// Uniform in `0..modulus`.
    pub fn field_element(&mut self, modulus: u64) -> u64 {
        self.rng.gen_range(0..modulus)
    }

    /// Uniform in `1..modulus`.
    pub fn nonzero_element(&mut self, modulus: u64) -> u64 {
        self.rng.gen_range(1..modulus)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

/// Stream label from a list of small integers (trial, subset, index, ...).
pub fn stream_label(parts: &[u64]) -> u64 {
    // FNV-1a over the little-endian bytes
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for p in parts {
        for b in p.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Homogeneous linear form with uniform coefficients, redrawn until nonzero.
pub fn random_linear_form(rng: &mut RandomSource, ring: Ring) -> MPoly {
    let p = ring.field().modulus();
    loop {
        let terms = (0..ring.n_vars())
            .map(|i| (rng.field_element(p), Monomial::var(i)))
            .collect();
        let f = MPoly::from_terms(ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}
