use super::{
    collect_orbit, finish, params, require_count, with_resampling, Provenance, Sampler, Solution,
    SolutionSet, SolveConfig, SymmetricSystem, SAMPLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::polyalg::UniPoly;
use crate::quartic::{ModelPoint, QuarticModel};
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

/// `k` tuples with `σ_1 = a` and `σ_n = b`.
///
/// The last `n - 4` entries are `free` (sampled when absent) and the first
/// four solve `σ_1 = a - Σ free`, `σ_4 = b / ∏ free`. For those, the
/// substitution `x_2 = -4 B t^2 x_1` reduces the system to a quadratic in
/// `x_3` whose discriminant is a square exactly on the quartic model
///
/// ```text
/// S^2 = t^2 e^2 P^4 + 2 A t^2 e P^3 + A^2 t^2 P^2 + 1,   e = 4 B t^2 - 1,
/// ```
///
/// so each multiple `m >= 2` of the image of `(0, -1)` gives a tuple
/// `(P, -4 B t^2 P, Q, A - P + 4 B t^2 P - Q)` with
/// `Q = (t P (A + e P) ± S) / (2 t P)`.
pub fn solve_sum_product(
    a: &Rational,
    b: &Rational,
    n: usize,
    free: Option<&[Rational]>,
    t: Option<&Rational>,
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    require_count(count)?;
    if n < 4 {
        return Err(Error::InvalidSystem(format!("n = {n}; the sum-product solver needs n >= 4")));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("sum and product targets must satisfy a·b ≠ 0".into()));
    }
    if let Some(f) = free {
        if f.len() != n - 4 {
            return Err(Error::LengthMismatch { expected: n - 4, got: f.len() });
        }
        if f.iter().any(Rational::is_zero) {
            return Err(Error::Degenerate("free entries must be nonzero".into()));
        }
    }
    let system = SymmetricSystem::new(n, vec![(1, a.clone()), (n, b.clone())])?;
    let mut sampler = Sampler::new(cfg.seed);
    let sampled = free.is_none() || t.is_none();
    with_resampling(SAMPLE_BUDGET, sampled, || {
        let fr = free.map_or_else(|| sampler.rationals(n - 4), <[Rational]>::to_vec);
        let tt = t.cloned().unwrap_or_else(|| sampler.rational());
        attempt(&system, a, b, &fr, &tt, count, cfg)
    })
}

fn attempt(
    system: &SymmetricSystem,
    a: &Rational,
    b: &Rational,
    free: &[Rational],
    t: &Rational,
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    let sum: Rational = free.iter().sum();
    let prod: Rational = free.iter().product();
    let reduced_a = a - &sum;
    if reduced_a.is_zero() {
        return Err(Error::Degenerate("free entries already sum to the σ_1 target".into()));
    }
    let reduced_b = b / &prod;
    let (found, skipped) = four_entry_orbit(&reduced_a, &reduced_b, t, count, cfg)?;
    let solutions = found
        .into_iter()
        .map(|(m, mut values)| {
            values.extend_from_slice(free);
            Solution {
                values,
                provenance: Provenance {
                    multiple: Some(m),
                    branch: Some(cfg.branch),
                    params: params(&[("free", free.to_vec()), ("t", vec![t.clone()])]),
                    seed: Some(cfg.seed),
                    note: None,
                },
            }
        })
        .collect();
    finish(system.clone(), solutions, skipped, cfg.exec, true)
}

type Orbit = (Vec<(u32, Vec<Rational>)>, Vec<super::Skipped>);

fn four_entry_orbit(a: &Rational, b: &Rational, t: &Rational, count: usize, cfg: &SolveConfig) -> Result<Orbit> {
    if t.is_zero() {
        return Err(Error::Degenerate("t = 0 collapses the substitution".into()));
    }
    let t2 = t.square();
    let e = k(4) * b * &t2 - k(1);
    if e.is_zero() {
        return Err(Error::Degenerate("4·b·t^2 = 1 collapses the substitution".into()));
    }
    let q = UniPoly::new(vec![
        k(1),
        Rational::zero(),
        a.square() * &t2,
        k(2) * a * &t2 * &e,
        &t2 * e.square(),
    ]);
    let model = QuarticModel::new(q, ModelPoint::new(Rational::zero(), k(1)))?;
    let map = model.to_weierstrass()?;
    let g = map.forward(&ModelPoint::new(Rational::zero(), k(-1)))?;
    if map.target().is_torsion(&g)? {
        return Err(Error::TorsionPoint);
    }
    let start = map.target().scalar_mul(2, &g)?;
    let sign = cfg.branch.sign();
    let x2_factor = -(k(4) * b * &t2);
    collect_orbit(&map, &start, &g, 2, count, cfg.exec, |pt| {
        let p = &pt.r;
        if p.is_zero() {
            return Err("pull-back has P = 0".into());
        }
        let tp = t * p;
        let q = (&tp * (a + &e * p) + &sign * &pt.s) / (k(2) * &tp);
        let x2 = &x2_factor * p;
        let x4 = a - p - &x2 - &q;
        Ok(vec![p.clone(), x2, q, x4])
    })
}
