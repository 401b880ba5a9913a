use super::{collect_orbit, finish, params, require_count, Provenance, Solution, SolutionSet, SolveConfig, SymmetricSystem};
use crate::ellcurve::{rescale_point, CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::polyalg::UniPoly;
use crate::quartic::{BirationalMap, ModelPoint, QuarticModel};
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

/// Quadruples with `σ_1 = a`, `σ_2 = (3a^2 - d^2)/8`, `σ_3 = a(a^2 - d^2)/16`,
/// one per parameter value `t`:
///
/// ```text
/// P = (a - d + 2dt + (a + d) t^2) / (4(1 + t^2))
/// Q = (a - d - 2dt + (a + d) t^2) / (4(1 + t^2))
/// R = (a + d - 2dt + (a - d) t^2) / (4(1 + t^2))
/// S = (a + d + 2dt + (a - d) t^2) / (4(1 + t^2))
/// ```
pub fn solve_triple_123(a: &Rational, d: &Rational, ts: &[Rational], cfg: &SolveConfig) -> Result<SolutionSet> {
    require_count(ts.len())?;
    let gap = a.square() - d.square();
    if (a * &gap).is_zero() {
        return Err(Error::Degenerate("a·(a^2 - d^2) must be nonzero".into()));
    }
    let system = SymmetricSystem::new(
        4,
        vec![
            (1, a.clone()),
            (2, (k(3) * a.square() - d.square()) / k(8)),
            (3, a * &gap / k(16)),
        ],
    )?;
    let (lo, hi) = (a - d, a + d);
    let solutions = ts
        .iter()
        .map(|t| {
            let t2 = t.square();
            let den = k(4) * (k(1) + &t2);
            let dt = k(2) * d * t;
            let values = vec![
                (&lo + &dt + &hi * &t2) / &den,
                (&lo - &dt + &hi * &t2) / &den,
                (&hi - &dt + &lo * &t2) / &den,
                (&hi + &dt + &lo * &t2) / &den,
            ];
            Solution {
                values,
                provenance: Provenance {
                    params: params(&[("a", vec![a.clone()]), ("d", vec![d.clone()]), ("t", vec![t.clone()])]),
                    ..Provenance::default()
                },
            }
        })
        .collect();
    finish(system, solutions, Vec::new(), cfg.exec, false)
}

/// The curve behind the `(σ_1, σ_3, σ_4)` family at given `(a, d)`.
#[derive(Debug, Clone)]
pub struct Triple134Curve {
    /// `b = -(a^4 - d^2)^2 / (16 a d^2)`; the targets are `(a, b, b^2/a^2)`.
    pub b: Rational,
    /// `V^2 = (a R^2 - a^2 R + b)^2 - 4 a b R^2` based at `(0, b)`.
    pub model: QuarticModel,
    pub map: BirationalMap,
    /// `(-(a^2 - d)^2 / (4 a d), (a^2 - d)^3 (a^2 + d) / (8 a d^2))`.
    pub seed: ModelPoint,
    /// The invariant model rescaled by `2d`:
    /// `A = -27 (a^16 + 12 a^12 d^2 - 10 a^8 d^4 + 12 a^4 d^6 + d^8)` and
    /// `B = -54 (a^8 + d^4)(a^16 - 36 a^12 d^2 + 38 a^8 d^4 - 36 a^4 d^6 + d^8)`.
    pub scaled_curve: WeierstrassCurve,
    /// Image of the seed on `scaled_curve`.
    pub scaled_seed: CurvePoint,
}

pub fn triple_134_curve(a: &Rational, d: &Rational) -> Result<Triple134Curve> {
    if a.is_zero() || d.is_zero() {
        return Err(Error::Degenerate("a and d must be nonzero".into()));
    }
    let a2 = a.square();
    let d2 = d.square();
    let gap = a2.square() - &d2;
    if gap.is_zero() {
        return Err(Error::Degenerate("a^4 = d^2 gives b = 0".into()));
    }
    let b = -(gap.square() / (k(16) * a * &d2));
    let inner = UniPoly::new(vec![b.clone(), -a2.clone(), a.clone()]);
    let q = &inner.pow(2) - &UniPoly::new(vec![k(0), k(0), k(4) * a * &b]);
    let model = QuarticModel::new(q, ModelPoint::new(Rational::zero(), b.clone()))?;
    let map = model.to_weierstrass()?;
    let minus = &a2 - d;
    let seed = ModelPoint::new(
        -(minus.square() / (k(4) * a * d)),
        minus.pow(3) * (&a2 + d) / (k(8) * a * &d2),
    );
    let image = map.forward(&seed)?;
    let lambda = k(2) * d;
    Ok(Triple134Curve {
        scaled_curve: map.target().rescaled(&lambda)?,
        scaled_seed: rescale_point(&image, &lambda),
        b,
        model,
        map,
        seed,
    })
}

/// `k` quadruples with `σ_1 = a`, `σ_3 = b`, `σ_4 = b^2/a^2` where
/// `b = -(a^4 - d^2)^2 / (16 a d^2)`. Each multiple `m >= 1` of the seed
/// image pulls back to `(R, V)`, and then
/// `Q = (V - b + a^2 R - a R^2) / (2 a R)`,
/// `P = (-b + (a^2 - a Q) R - a R^2) / (a R)`, `S = b / (a R)`.
pub fn solve_triple_134(a: &Rational, d: &Rational, count: usize, cfg: &SolveConfig) -> Result<SolutionSet> {
    require_count(count)?;
    let curve = triple_134_curve(a, d)?;
    let b = curve.b.clone();
    let system = SymmetricSystem::new(4, vec![(1, a.clone()), (3, b.clone()), (4, b.square() / a.square())])?;
    let g = curve.map.forward(&curve.seed)?;
    if curve.map.target().is_torsion(&g)? {
        return Err(Error::TorsionPoint);
    }
    let sign = cfg.branch.sign();
    let a2 = a.square();
    let (found, skipped) = collect_orbit(&curve.map, &g, &g, 1, count, cfg.exec, |pt| {
        let r = &pt.r;
        if r.is_zero() {
            return Err("pull-back has R = 0".into());
        }
        let ar = a * r;
        let q = (&sign * &pt.s - &b + &a2 * r - &ar * r) / (k(2) * &ar);
        let p = (-&b + (&a2 - a * &q) * r - &ar * r) / &ar;
        let s = &b / &ar;
        Ok(vec![p, q, r.clone(), s])
    })?;
    let solutions = found
        .into_iter()
        .map(|(m, values)| Solution {
            values,
            provenance: Provenance {
                multiple: Some(m),
                branch: Some(cfg.branch),
                params: params(&[("a", vec![a.clone()]), ("d", vec![d.clone()])]),
                seed: None,
                note: None,
            },
        })
        .collect();
    finish(system, solutions, skipped, cfg.exec, true)
}
