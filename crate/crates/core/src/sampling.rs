//! Seeded, replayable random sampling.
//!
//! PRNG spec (echoed into every report as `chacha8-v1`): the generator is
//! ChaCha8 as in the `rand_chacha` crate, keyed with
//! `ChaCha8Rng::seed_from_u64(seed)` and moved to stream `index` via
//! `set_stream`, one stream per sample. Integers in [-range, range] are
//! drawn from successive `next_u64` values by unbiased rejection: with
//! m = 2*range+1, a draw v is rejected while v >= floor(2^64 / m) * m and
//! otherwise maps to (v mod m) - range. Coordinates are drawn per vertex in
//! declaration order, axes x, y, z.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const PRNG_SPEC: &str = "chacha8-v1";

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    /// Uniform integer in [-range, range], rejection-sampled.
    pub fn int_in(&mut self, range: i64) -> i64 {
        assert!(range >= 0);
        let m = 2 * range as u64 + 1;
        let limit = (u64::MAX / m) * m;
        loop {
            let v = self.rng.next_u64();
            if v < limit {
                return (v % m) as i64 - range;
            }
        }
    }

    /// Uniform index in [0, n).
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0);
        let m = n as u64;
        let limit = (u64::MAX / m) * m;
        loop {
            let v = self.rng.next_u64();
            if v < limit {
                return (v % m) as usize;
            }
        }
    }
}
