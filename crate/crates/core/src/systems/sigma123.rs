use super::{finish, params, require_count, Provenance, Solution, SolutionSet, SolveConfig, SymmetricSystem};
use crate::error::{Error, Result};
use crate::polyalg::elem_sym_all;
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

fn check_reference(n: usize, reference: &[Rational]) -> Result<()> {
    if n < 5 {
        return Err(Error::InvalidSystem(format!("n = {n}; this family needs n >= 5")));
    }
    if reference.len() != n - 1 {
        return Err(Error::LengthMismatch { expected: n - 1, got: reference.len() });
    }
    Ok(())
}

/// The reference tuple extended by `t_1 + t_2 - t_{n-1}`; its `σ_1..σ_3`
/// are the targets.
fn extended_reference(reference: &[Rational]) -> Vec<Rational> {
    let mut ext = reference.to_vec();
    ext.push(&reference[0] + &reference[1] - reference.last().expect("nonempty reference"));
    ext
}

/// `(P, Q, t_1 + t_2 - Q, t_1 + t_2 - P, t_3, ..., t_{n-2})` with
///
/// ```text
/// P = (t_1 u^2 + (t_1 + t_2 - 2 t_{n-1}) u + t_2) / (u^2 + 1)
/// Q = ((t_1 + t_2 - t_{n-1}) u^2 + (t_2 - t_1) u + t_{n-1}) / (u^2 + 1)
/// ```
pub fn sigma123_tuple(reference: &[Rational], u: &Rational) -> Result<Vec<Rational>> {
    check_reference(reference.len() + 1, reference)?;
    let (t1, t2) = (&reference[0], &reference[1]);
    let last = &reference[reference.len() - 1];
    let s = t1 + t2;
    let u2 = u.square();
    let den = &u2 + k(1);
    let p = (t1 * &u2 + (&s - k(2) * last) * u + t2) / &den;
    let q = ((&s - last) * &u2 + (t2 - t1) * u + last) / &den;
    let mut out = vec![p.clone(), q.clone(), &s - &q, &s - &p];
    out.extend_from_slice(&reference[2..reference.len() - 1]);
    Ok(out)
}

/// One tuple per `u` with the `σ_1`, `σ_2`, `σ_3` values of
/// `(t_1, ..., t_{n-1}, t_1 + t_2 - t_{n-1})`.
pub fn solve_sigma123(n: usize, reference: &[Rational], us: &[Rational], cfg: &SolveConfig) -> Result<SolutionSet> {
    require_count(us.len())?;
    check_reference(n, reference)?;
    let sig = elem_sym_all(&extended_reference(reference));
    let system = SymmetricSystem::new(n, (1..=3).map(|i| (i, sig.get(i as i64))).collect())?;
    let solutions = us
        .iter()
        .map(|u| {
            Ok(Solution {
                values: sigma123_tuple(reference, u)?,
                provenance: Provenance {
                    params: params(&[("reference", reference.to_vec()), ("u", vec![u.clone()])]),
                    ..Provenance::default()
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    finish(system, solutions, Vec::new(), cfg.exec, false)
}
