use super::{
    collect_orbit, finish, params, reduce_reciprocal, require_count, solve_sum_product, with_resampling,
    Provenance, Sampler, Solution, SolutionSet, SolveConfig, SymmetricSystem, SAMPLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::polyalg::{sigma_expand3, UniPoly};
use crate::quartic::{ModelPoint, QuarticModel};
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

/// `k` tuples with `σ_i = a` and `σ_n = b`, for `2 <= i < n`.
///
/// For `2i <= n` the first `n - 3` entries are `free` (sampled when absent)
/// and the last three `(P, R, Q)` satisfy
/// `u·PQR + v(PQ+QR+RP) + w(P+Q+R) + t = a`, `m·PQR = b` with
/// `(u, v, w, t) = (σ_{i-3}, σ_{i-2}, σ_{i-1}, σ_i)` and `m = σ_{n-3}` of
/// the free entries. Eliminating `P` leaves a quadratic in `Q` whose
/// discriminant is a square on
///
/// ```text
/// S^2 = (m w R^2 + (m (t - a) + b u) R + b v)^2 - 4 b m R (R v + w)^2,
/// ```
///
/// and multiples `m >= 2` of the image of `(0, -bv)` supply `R`.
///
/// For `2i > n` the request is answered through the reciprocal map from
/// `σ_{n-i} = a/b`, `σ_n = 1/b`; `free` then parametrizes that reduced
/// solver, whose last free slot is the `t` parameter when `n - i = 1`.
pub fn solve_sigma_i_product(
    i: usize,
    a: &Rational,
    b: &Rational,
    n: usize,
    free: Option<&[Rational]>,
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    require_count(count)?;
    if n < 4 {
        return Err(Error::InvalidSystem(format!("n = {n}; this solver needs n >= 4")));
    }
    if i < 2 || i >= n {
        return Err(Error::InvalidSystem(format!("index i = {i} must satisfy 2 <= i < n = {n}")));
    }
    if b.is_zero() {
        return Err(Error::Degenerate("the product target b must be nonzero".into()));
    }
    if let Some(f) = free {
        if f.len() != n - 3 {
            return Err(Error::LengthMismatch { expected: n - 3, got: f.len() });
        }
    }
    let system = SymmetricSystem::new(n, vec![(i, a.clone()), (n, b.clone())])?;
    if 2 * i > n {
        return via_reciprocal(system, i, a, b, free, count, cfg);
    }
    let mut sampler = Sampler::new(cfg.seed);
    with_resampling(SAMPLE_BUDGET, free.is_none(), || {
        let fr = free.map_or_else(|| sampler.rationals(n - 3), <[Rational]>::to_vec);
        attempt(&system, i, a, b, &fr, count, cfg)
    })
}

fn via_reciprocal(
    system: SymmetricSystem,
    i: usize,
    a: &Rational,
    b: &Rational,
    free: Option<&[Rational]>,
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    let n = system.n();
    let j = n - i;
    let inner_a = a / b;
    let inner_b = b.recip()?;
    let inner = if j == 1 {
        if a.is_zero() {
            return Err(Error::Degenerate(format!(
                "σ_{i} = 0 with i = n - 1 reduces to a zero sum target; a·b ≠ 0 is needed"
            )));
        }
        let (fr, t) = match free {
            Some(f) => (Some(&f[..n - 4]), Some(&f[n - 4])),
            None => (None, None),
        };
        solve_sum_product(&inner_a, &inner_b, n, fr, t, count, cfg)?
    } else {
        solve_sigma_i_product(j, &inner_a, &inner_b, n, free, count, cfg)?
    };
    let note = format!("entry-wise reciprocal of a solution of σ_{j} = {inner_a}, σ_{n} = {inner_b}");
    let solutions = inner
        .solutions
        .into_iter()
        .map(|sol| {
            Ok(Solution {
                values: reduce_reciprocal(&sol.values)?,
                provenance: Provenance { note: Some(note.clone()), ..sol.provenance },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    finish(system, solutions, inner.skipped, cfg.exec, true)
}

fn attempt(
    system: &SymmetricSystem,
    i: usize,
    a: &Rational,
    b: &Rational,
    free: &[Rational],
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    let (u, v, w, t) = sigma_expand3(free, i as i64);
    let m: Rational = free.iter().product();
    if m.is_zero() {
        return Err(Error::Degenerate(
            "the free entries have product 0, so m·PQR = b has no solution".into(),
        ));
    }
    let bv = b * &v;
    if bv.is_zero() {
        return Err(Error::Degenerate(format!("σ_{} of the free entries vanishes", i - 2)));
    }
    let quad_term = UniPoly::new(vec![bv.clone(), &m * (&t - a) + b * &u, &m * &w]);
    let rv_w = UniPoly::new(vec![w.clone(), v.clone()]);
    let q = &quad_term.pow(2) - &(&UniPoly::x() * &rv_w.pow(2)).scale(&(k(4) * b * &m));
    let model = QuarticModel::new(q, ModelPoint::new(Rational::zero(), bv.clone()))?;
    let map = model.to_weierstrass()?;
    let g = map.forward(&ModelPoint::new(Rational::zero(), -&bv))?;
    if map.target().is_torsion(&g)? {
        return Err(Error::TorsionPoint);
    }
    let start = map.target().scalar_mul(2, &g)?;
    let sign = cfg.branch.sign();
    let (found, skipped) = collect_orbit(&map, &start, &g, 2, count, cfg.exec, |pt| {
        let r = &pt.r;
        let lead = &m * r * rv_w.eval(r);
        if lead.is_zero() {
            return Err("leading coefficient m·R·(R·v + w) vanishes".into());
        }
        let q = (-quad_term.eval(r) + &sign * &pt.s) / (k(2) * lead);
        if q.is_zero() {
            return Err("root Q = 0".into());
        }
        let p = b / (&m * &q * r);
        let mut values = free.to_vec();
        values.extend([p, r.clone(), q]);
        Ok(values)
    })?;
    let solutions = found
        .into_iter()
        .map(|(mult, values)| Solution {
            values,
            provenance: Provenance {
                multiple: Some(mult),
                branch: Some(cfg.branch),
                params: params(&[("free", free.to_vec())]),
                seed: Some(cfg.seed),
                note: None,
            },
        })
        .collect();
    finish(system.clone(), solutions, skipped, cfg.exec, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::elem_sym;
    use crate::systems::{sigma_i_product_closed_form, solve_sum_product};
    use crate::verify::check_solution;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn golden_tuple() {
        let cfg = SolveConfig::default();
        let set = solve_sigma_i_product(2, &r(3), &r(2), 4, Some(&[r(1)]), 1, &cfg).unwrap();
        let x = &set.solutions[0].values;
        assert_eq!(x, &vec![r(1), q(1, 7), q(-7, 4), r(-8)]);
        assert_eq!(elem_sym(x, 2), r(3));
        assert_eq!(elem_sym(x, 4), r(2));
    }

    #[test]
    fn pipeline_matches_closed_form() {
        let cfg = SolveConfig::default();
        let cases: [(usize, Rational, Rational, Vec<Rational>); 3] = [
            (2, q(5, 3), q(-7, 2), vec![q(2, 5), r(3)]),
            (3, r(4), q(1, 9), vec![q(2, 3), r(-5), q(7, 2)]),
            (2, q(-1, 6), r(5), vec![r(2), q(-3, 7), q(1, 4), r(6)]),
        ];
        for (i, a, b, free) in cases {
            let n = free.len() + 3;
            let set = solve_sigma_i_product(i, &a, &b, n, Some(&free), 1, &cfg).unwrap();
            assert_eq!(
                set.solutions[0].values,
                sigma_i_product_closed_form(i, &a, &b, &free).unwrap(),
                "i = {i}, n = {n}"
            );
        }
    }

    #[test]
    fn reciprocal_dispatch_to_sum_product() {
        let cfg = SolveConfig::default();
        let set = solve_sigma_i_product(3, &r(2), &r(1), 4, None, 3, &cfg).unwrap();
        let inner = solve_sum_product(&r(2), &r(1), 4, None, None, 3, &cfg).unwrap();
        for (sol, base) in set.solutions.iter().zip(&inner.solutions) {
            assert_eq!(sol.values, reduce_reciprocal(&base.values).unwrap());
            assert!(check_solution(&set.system, &sol.values).unwrap().overall);
            assert!(sol.provenance.note.is_some());
        }
    }

    #[test]
    fn reciprocal_dispatch_to_lower_index() {
        let cfg = SolveConfig::default();
        let set = solve_sigma_i_product(5, &q(3, 4), &q(-2, 3), 7, None, 2, &cfg).unwrap();
        for sol in &set.solutions {
            assert_eq!(elem_sym(&sol.values, 5), q(3, 4));
            assert_eq!(elem_sym(&sol.values, 7), q(-2, 3));
        }
    }

    #[test]
    fn degenerate_inputs() {
        let cfg = SolveConfig::default();
        assert!(matches!(
            solve_sigma_i_product(2, &r(3), &r(0), 4, None, 1, &cfg),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            solve_sigma_i_product(2, &r(3), &r(2), 4, Some(&[r(0)]), 1, &cfg),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            solve_sigma_i_product(3, &r(0), &r(2), 4, None, 1, &cfg),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            solve_sigma_i_product(4, &r(1), &r(2), 4, None, 1, &cfg),
            Err(Error::InvalidSystem(_))
        ));
    }

    #[test]
    fn sampled_free_entries_satisfy_every_index() {
        let cfg = SolveConfig::with_seed(3);
        for n in 4..=7 {
            for i in 2..n {
                let set = solve_sigma_i_product(i, &q(5, 2), &q(-3, 7), n, None, 2, &cfg).unwrap();
                for sol in &set.solutions {
                    assert!(check_solution(&set.system, &sol.values).unwrap().overall);
                }
            }
        }
    }
}
