//! Randomized exact identity testing.
//!
//! Both sides are evaluated at pseudo-random rational points. For
//! polynomial identities of total degree at most `d`, agreement at a point
//! whose coordinates are drawn from a set of size `S` fails to detect a
//! nonzero difference with probability at most `d / S`. Coordinates here are
//! `n / m` with `|n| <= H`, `1 <= m <= H` and `H = 16 (d + 1)`, so a single
//! trial has `S > 2H`, the per-trial miss probability is below `1/32`, and
//! 20 independent trials push it under `10^-30`. Rational-function
//! identities are covered by clearing denominators (the degree bound must
//! then count the cleared degree).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::par;
use crate::rational::Rational;

/// Height bound used for the sample coordinates.
pub fn sample_height(degree_bound: u32) -> i64 {
    16 * (i64::from(degree_bound) + 1)
}

fn sample_point(rng: &mut ChaCha8Rng, vars: usize, h: i64) -> Vec<Rational> {
    (0..vars)
        .map(|_| Rational::frac(rng.gen_range(-h..=h), rng.gen_range(1..=h)))
        .collect()
}

/// Checks `lhs == rhs` at `trials` points in `vars` variables. An evaluator
/// returns `None` at a pole; such points are resampled, up to `16 * trials`
/// draws in total.
pub fn identity_check<L, R>(
    vars: usize,
    lhs: L,
    rhs: R,
    degree_bound: u32,
    trials: usize,
    seed: u64,
) -> Result<bool>
where
    L: Fn(&[Rational]) -> Option<Rational> + Sync + Send,
    R: Fn(&[Rational]) -> Option<Rational> + Sync + Send,
{
    if trials == 0 {
        return Err(Error::DegenerateIdentity("at least one trial is required".into()));
    }
    let h = sample_height(degree_bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 16 * trials;
    let mut drawn = 0;
    let mut agreed = 0;
    while agreed < trials {
        let want = trials - agreed;
        if drawn + want > budget {
            return Err(Error::DegenerateIdentity(format!(
                "{drawn} points drawn but only {agreed} avoided a pole"
            )));
        }
        drawn += want;
        let points: Vec<_> = (0..want).map(|_| sample_point(&mut rng, vars, h)).collect();
        let outcomes = par::map(&points, |pt| match (lhs(pt), rhs(pt)) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        });
        for outcome in outcomes.into_iter().flatten() {
            if !outcome {
                return Ok(false);
            }
            agreed += 1;
        }
    }
    Ok(true)
}
