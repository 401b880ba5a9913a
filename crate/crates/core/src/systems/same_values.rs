use super::{collect_orbit, finish, params, require_count, Provenance, Skipped, Solution, SolutionSet, SolveConfig, SymmetricSystem};
use crate::error::{Error, Result};
use crate::polyalg::{elem_sym_all, sigma_expand3, UniPoly};
use crate::quartic::{ModelPoint, QuarticModel};
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

/// A request for tuples sharing `σ_i` and `σ_j` with a reference tuple
/// `(t_1, ..., t_{n-3}, p, q, r)`. The first `n - 3` entries of every
/// solution equal the reference; the last three vary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameValueParams {
    n: usize,
    i: usize,
    j: usize,
    reference: Vec<Rational>,
}

/// `(u, v, w)` for one index: the coefficients of `PQR`, `PQ+QR+RP` and
/// `P+Q+R` in `σ_index` of the full tuple.
type Coefficients = (Rational, Rational, Rational);

impl SameValueParams {
    pub fn new(n: usize, i: usize, j: usize, reference: Vec<Rational>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSystem(format!("n = {n}; at least 3 variables are required")));
        }
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::InvalidSystem(format!("indices must satisfy 1 <= i < j <= n, got ({i}, {j})")));
        }
        if reference.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: reference.len() });
        }
        Ok(SameValueParams { n, i, j, reference })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn reference(&self) -> &[Rational] {
        &self.reference
    }

    pub fn fixed(&self) -> &[Rational] {
        &self.reference[..self.n - 3]
    }

    pub fn varying(&self) -> (&Rational, &Rational, &Rational) {
        let t = &self.reference[self.n - 3..];
        (&t[0], &t[1], &t[2])
    }

    pub fn system(&self) -> Result<SymmetricSystem> {
        let sig = elem_sym_all(&self.reference);
        SymmetricSystem::new(self.n, vec![(self.i, sig.get(self.i as i64)), (self.j, sig.get(self.j as i64))])
    }

    fn coefficients(&self, index: usize) -> Coefficients {
        let (u, v, w, _) = sigma_expand3(self.fixed(), index as i64);
        (u, v, w)
    }

    /// Coefficients for `σ_i` and `σ_j`, recomputed from the reference.
    pub fn coefficient_pair(&self) -> (Coefficients, Coefficients) {
        (self.coefficients(self.i), self.coefficients(self.j))
    }

    /// The right-hand sides `u pqr + v(pq+qr+rp) + w(p+q+r)` for `σ_i`, `σ_j`.
    pub fn right_hand_sides(&self) -> (Rational, Rational) {
        let (p, q, r) = self.varying();
        let tail = [p.clone(), q.clone(), r.clone()];
        let s = elem_sym_all(&tail);
        let rhs = |(u, v, w): &Coefficients| u * s.get(3) + v * s.get(2) + w * s.get(1);
        let (c1, c2) = self.coefficient_pair();
        (rhs(&c1), rhs(&c2))
    }

    /// `(a(R), b(R), c(R))` with `a Q^2 + b Q + c = 0` after eliminating `P`.
    pub fn quadratic_in_q(&self) -> [UniPoly; 3] {
        let ((u1, v1, w1), (u2, v2, w2)) = self.coefficient_pair();
        let (a, b) = self.right_hand_sides();
        let qa = UniPoly::new(vec![&v1 * &w2 - &v2 * &w1, &u1 * &w2 - &u2 * &w1, &u1 * &v2 - &u2 * &v1]);
        let qb = UniPoly::new(vec![
            &a * &v2 - &b * &v1,
            &a * &u2 - &b * &u1 - &v2 * &w1 + &v1 * &w2,
            &u1 * &w2 - &u2 * &w1,
        ]);
        let qc = UniPoly::new(vec![&a * &w2 - &b * &w1, &a * &v2 - &b * &v1, &v1 * &w2 - &v2 * &w1]);
        [qa, qb, qc]
    }

    /// The point `W` over `R = r` that the reference solution lies above.
    pub fn base_point(&self) -> ModelPoint {
        let ((u1, v1, w1), (u2, v2, w2)) = self.coefficient_pair();
        let (p, q, r) = self.varying();
        let s = (p - q)
            * (r.square() * (&u2 * &v1 - &u1 * &v2) + r * (&u2 * &w1 - &u1 * &w2) + &v2 * &w1 - &v1 * &w2);
        ModelPoint::new(r.clone(), s)
    }

    /// `S^2 = b(R)^2 - 4 a(R) c(R)` based at `W`.
    pub fn model(&self) -> Result<QuarticModel> {
        let [qa, qb, qc] = self.quadratic_in_q();
        let quartic = &qb.pow(2) - &(&qa * &qc).scale(&k(4));
        let base = self.base_point();
        if base.s.is_zero() {
            return Err(Error::Degenerate(
                "the base point has S = 0 (for instance p = q); permute the last three reference entries".into(),
            ));
        }
        QuarticModel::new(quartic, base).map_err(|e| match e {
            Error::NotOnCurve => Error::Internal("reference point is not on its own curve".into()),
            other => other,
        })
    }
}

/// The genus-zero family for `(i, j) = (1, 2)` at parameter `u`.
pub fn same_values_genus0(reference: &[Rational], u: &Rational) -> Result<Vec<Rational>> {
    let n = reference.len();
    if n < 3 {
        return Err(Error::LengthMismatch { expected: 3, got: n });
    }
    let (p, q, r) = (&reference[n - 3], &reference[n - 2], &reference[n - 1]);
    let u2 = u.square();
    let den = &u2 + k(3);
    let two = k(2);
    let big_p = (p * &u2 + &two * (r - q) * u + &two * q + &two * r - p) / &den;
    let big_q = (q * &u2 + &two * (p - r) * u + &two * p - q + &two * r) / &den;
    let big_r = (r * &u2 + &two * (q - p) * u + &two * p + &two * q - r) / &den;
    let mut out = reference[..n - 3].to_vec();
    out.extend([big_p, big_q, big_r]);
    Ok(out)
}

fn sorted(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.sort();
    v
}

/// `k` tuples sharing `σ_i` and `σ_j` with the reference.
///
/// For `(i, j) = (1, 2)` this samples the rational parametrization at
/// `u = 2, 3, ...` (`u = 1` returns the reference itself). Otherwise it
/// walks the curve `S^2 = b(R)^2 - 4 a(R) c(R)` from its base point `W`:
/// the multiples are pulled back from `G + (m - 1) h` for `m >= 2`, where
/// `G` is the image of `(r, -s_W)` and `h` satisfies
/// `G + h = image of the tangent-parabola residual at W`. The solution is
/// `(t_1, ..., t_{n-3}, Q, P, R)` with `Q` the chosen root of the quadratic.
pub fn solve_same_sigma_pair(params_in: &SameValueParams, count: usize, cfg: &SolveConfig) -> Result<SolutionSet> {
    require_count(count)?;
    let system = params_in.system()?;
    if params_in.indices() == (1, 2) {
        return genus0_family(params_in, system, count, cfg);
    }
    let model = params_in.model()?;
    let map = model.to_weierstrass()?;
    let curve = map.target();
    let w = model.base();
    let g = map.forward(&w.opposite())?;
    let residual = match model.double_via_parabola(w) {
        Ok(d) => map.forward(&d)?,
        Err(Error::DegenerateDoubling(_)) if model.degree() == 4 => curve.scalar_mul(2, &g)?,
        Err(e) => return Err(e),
    };
    let step = curve.add(&residual, &g.neg())?;
    if model.degree() == 4 && step != g {
        return Err(Error::Internal("tangent-parabola residual disagrees with [2]G".into()));
    }
    if curve.is_torsion(&step)? {
        return Err(Error::TorsionPoint);
    }

    let ((u1, v1, w1), _) = params_in.coefficient_pair();
    let (rhs_a, _) = params_in.right_hand_sides();
    let [qa, qb, _] = params_in.quadratic_in_q();
    let sign = cfg.branch.sign();
    let fixed = params_in.fixed();
    let (found, skipped) = collect_orbit(&map, &residual, &step, 2, count, cfg.exec, |pt| {
        let r = &pt.r;
        let lead = qa.eval(r);
        if lead.is_zero() {
            return Err("quadratic in Q degenerates (a(R) = 0)".into());
        }
        let q = (-qb.eval(r) + &sign * &pt.s) / (k(2) * lead);
        let qr = &q * r;
        let q_plus_r = &q + r;
        let den = &u1 * &qr + &v1 * &q_plus_r + &w1;
        if den.is_zero() {
            return Err("P is undetermined (its coefficient vanishes)".into());
        }
        let p = (&rhs_a - &v1 * &qr - &w1 * &q_plus_r) / den;
        let mut values = fixed.to_vec();
        values.extend([q, p, r.clone()]);
        Ok(values)
    })?;
    let solutions = found
        .into_iter()
        .map(|(m, values)| Solution {
            values,
            provenance: Provenance {
                multiple: Some(m),
                branch: Some(cfg.branch),
                params: params(&[("reference", params_in.reference().to_vec())]),
                seed: None,
                note: None,
            },
        })
        .collect();
    finish(system, solutions, skipped, cfg.exec, true)
}

fn genus0_family(
    params_in: &SameValueParams,
    system: SymmetricSystem,
    count: usize,
    cfg: &SolveConfig,
) -> Result<SolutionSet> {
    let reference_multiset = sorted(params_in.reference());
    let mut solutions = Vec::with_capacity(count);
    let mut skipped = Vec::new();
    let mut u = 2i64;
    while solutions.len() < count {
        if skipped.len() > count + super::SKIP_ALLOWANCE as usize {
            return Err(Error::Degenerate("the parametrization only returns the reference tuple".into()));
        }
        let values = same_values_genus0(params_in.reference(), &k(u))?;
        if sorted(&values) == reference_multiset {
            skipped.push(Skipped {
                multiple: u as u32,
                reason: "parameter value reproduces the reference tuple".into(),
            });
        } else {
            solutions.push(Solution {
                values,
                provenance: Provenance {
                    multiple: None,
                    branch: None,
                    params: params(&[("reference", params_in.reference().to_vec()), ("u", vec![k(u)])]),
                    seed: None,
                    note: None,
                },
            });
        }
        u += 1;
    }
    finish(system, solutions, skipped, cfg.exec, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::elem_sym;
    use crate::systems::{same_values_cubic_closed_form, same_values_quartic_closed_form, Branch};

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn genus0_example() {
        let x = same_values_genus0(&[r(1), r(2), r(3)], &r(2)).unwrap();
        assert_eq!(x, vec![q(17, 7), q(6, 7), q(19, 7)]);
        assert_eq!(elem_sym(&x, 1), r(6));
        assert_eq!(elem_sym(&x, 2), r(11));
        let p = SameValueParams::new(3, 1, 2, vec![r(1), r(2), r(3)]).unwrap();
        let set = solve_same_sigma_pair(&p, 3, &SolveConfig::default()).unwrap();
        assert_eq!(set.solutions[0].values, x);
        assert_eq!(set.solutions[0].provenance.params["u"], vec![r(2)]);
    }

    #[test]
    fn genus0_with_fixed_prefix() {
        let p = SameValueParams::new(5, 1, 2, vec![q(1, 2), r(-3), r(1), r(2), r(4)]).unwrap();
        let set = solve_same_sigma_pair(&p, 4, &SolveConfig::default()).unwrap();
        assert_eq!(set.solutions.len(), 4);
    }

    #[test]
    fn cubic_example() {
        for t in [r(1), q(-2, 3), r(7)] {
            let p = SameValueParams::new(4, 3, 4, vec![t.clone(), r(2), r(3), r(5)]).unwrap();
            assert_eq!(p.model().unwrap().degree(), 3);
            let set = solve_same_sigma_pair(&p, 3, &SolveConfig::default()).unwrap();
            let mut want = vec![t.clone()];
            want.extend(same_values_cubic_closed_form(&r(2), &r(3), &r(5)).unwrap());
            assert_eq!(set.solutions[0].values, want);
        }
    }

    #[test]
    fn cubic_example_model_and_base() {
        let p = SameValueParams::new(4, 3, 4, vec![r(1), r(2), r(3), r(5)]).unwrap();
        let m = p.model().unwrap();
        assert_eq!(m.q(), &UniPoly::from_ints(&[900, -1860, 961, -120]));
        assert_eq!(m.base(), &ModelPoint::new(r(5), r(-25)));
        let d = m.double_via_parabola(m.base()).unwrap();
        assert_eq!(d.r, q(-36, 5));
    }

    #[test]
    fn quartic_example() {
        let p = SameValueParams::new(5, 3, 4, vec![r(1), r(1), r(1), r(2), r(3)]).unwrap();
        let m = p.model().unwrap();
        assert_eq!(m.q(), &UniPoly::from_ints(&[52, -1288, 1608, -328, -8]));
        assert_eq!(m.base().s.abs(), r(34));
        let set = solve_same_sigma_pair(&p, 2, &SolveConfig::default()).unwrap();
        assert_eq!(set.solutions[0].values, same_values_quartic_closed_form(&r(3)).unwrap());
    }

    #[test]
    fn both_branches_give_the_same_multisets() {
        let p = SameValueParams::new(5, 2, 4, vec![q(1, 3), r(2), r(-1), r(4), r(5)]).unwrap();
        let plus = solve_same_sigma_pair(&p, 3, &SolveConfig::default()).unwrap();
        let minus = solve_same_sigma_pair(&p, 3, &SolveConfig { branch: Branch::Minus, ..SolveConfig::default() }).unwrap();
        for (a, b) in plus.solutions.iter().zip(&minus.solutions) {
            assert_eq!(sorted(&a.values), sorted(&b.values));
        }
    }

    #[test]
    fn index_pairs_across_sizes() {
        let cfg = SolveConfig::default();
        let refs = [q(1, 2), r(-3), q(5, 7), r(2), r(4), q(-9, 5)];
        for n in 3..=6 {
            for i in 1..n {
                for j in (i + 1)..=n {
                    if (i, j) == (1, 2) {
                        continue;
                    }
                    let p = SameValueParams::new(n, i, j, refs[..n].to_vec()).unwrap();
                    match solve_same_sigma_pair(&p, 2, &cfg) {
                        Ok(set) => assert_eq!(set.solutions.len(), 2),
                        Err(e) => assert!(
                            matches!(e, Error::NotGenusOne(_) | Error::Singular(_) | Error::Degenerate(_) | Error::TorsionPoint),
                            "({n}, {i}, {j}): {e}"
                        ),
                    }
                }
            }
        }
    }

    #[test]
    fn reference_entries_are_roots_of_the_quadratic() {
        let refs = [q(1, 2), r(-3), q(5, 7), r(2), r(4), q(-9, 5), r(3)];
        for n in 3..=7 {
            for i in 1..n {
                for j in (i + 1)..=n {
                    let p = SameValueParams::new(n, i, j, refs[..n].to_vec()).unwrap();
                    let [qa, qb, qc] = p.quadratic_in_q();
                    let (x, y, rr) = p.varying();
                    for root in [x, y] {
                        let val = qa.eval(rr) * root.square() + qb.eval(rr) * root + qc.eval(rr);
                        assert!(val.is_zero(), "({n}, {i}, {j})");
                    }
                }
            }
        }
    }

    #[test]
    fn coincident_entries_are_rejected() {
        let p = SameValueParams::new(4, 3, 4, vec![r(1), r(2), r(2), r(5)]).unwrap();
        assert!(matches!(solve_same_sigma_pair(&p, 1, &SolveConfig::default()), Err(Error::Degenerate(_))));
        assert!(SameValueParams::new(4, 3, 3, vec![r(1); 4]).is_err());
        assert!(SameValueParams::new(4, 3, 4, vec![r(1); 3]).is_err());
    }
}
