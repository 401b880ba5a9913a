use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;

/// Seeded source of small nonzero rationals `±p/q` with `1 <= p, q <= 99`.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

const HEIGHT: i64 = 99;

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(1..=HEIGHT);
        let den = self.rng.gen_range(1..=HEIGHT);
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Rational::frac(sign * num, den)
    }

    pub fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }
}
