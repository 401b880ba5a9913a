//! Genus-one models `S^2 = q(R)` with a rational base point, and their
//! birational maps to short Weierstrass form.
//!
//! For a base point `(r0, e)` with `e != 0`, write `q(r0 + u) = a u^4 + b u^3
//! + c u^2 + d u + e^2`. The substitution
//!
//! ```text
//! x = (2e(v + e) + d u) / u^2
//! y = (4e^2 (v + e) + 2e(d u + c u^2) - d^2 u^2 / (2e)) / u^3
//! ```
//!
//! lands on `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with `a1 = d/e`,
//! `a2 = c - d^2/(4e^2)`, `a3 = 2eb`, `a4 = -4e^2 a`, `a6 = a2 a4`, and sends
//! `(0, e)` to the point at infinity. Completing the square and cube, then
//! scaling by 2, gives exactly `Y^2 = X^3 - 27 I X - 27 J` where `(I, J)` are
//! the invariants of `q` (for this model `c4 = 16 I` and `c6 = 32 J`):
//!
//! ```text
//! X = 9x + 3 b2 / 4,   Y = 27 (2y + a1 x + a3) / 2,   b2 = a1^2 + 4 a2.
//! ```

use crate::ellcurve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::polyalg::{quartic_discriminant, quartic_invariants, UniPoly};
use crate::rational::Rational;

/// An affine point `(R, S)` on a quartic model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelPoint {
    pub r: Rational,
    pub s: Rational,
}

impl ModelPoint {
    pub fn new(r: Rational, s: Rational) -> Self {
        ModelPoint { r, s }
    }

    /// The image under `S -> -S`.
    pub fn opposite(&self) -> Self {
        ModelPoint::new(self.r.clone(), -&self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel {
    q: UniPoly,
    base: ModelPoint,
}

fn k(n: i64) -> Rational {
    Rational::from(n)
}

impl QuarticModel {
    /// Validates degree 3 or 4, a nonzero discriminant and `s0^2 = q(r0)`.
    pub fn new(q: UniPoly, base: ModelPoint) -> Result<Self> {
        if quartic_discriminant(&q)?.is_zero() {
            return Err(Error::Singular(format!("S^2 = {q:?} has a repeated root")));
        }
        let model = QuarticModel { q, base };
        if !model.contains(&model.base) {
            return Err(Error::NotOnCurve);
        }
        Ok(model)
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    pub fn base(&self) -> &ModelPoint {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.q.degree().unwrap_or(0)
    }

    pub fn contains(&self, p: &ModelPoint) -> bool {
        p.s.square() == self.q.eval(&p.r)
    }

    fn ensure_contains(&self, p: &ModelPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// The same curve in the coordinate `R - r0`, so the base point sits at
    /// `R = 0`.
    pub fn translate_base(&self) -> QuarticModel {
        QuarticModel {
            q: self.q.shift(&self.base.r),
            base: ModelPoint::new(Rational::zero(), self.base.s.clone()),
        }
    }

    /// Birational map to `Y^2 = X^3 - 27 I X - 27 J` sending the base point
    /// to the identity. The map works in the original `R` coordinate; the
    /// translation to a base at `R = 0` happens internally.
    pub fn to_weierstrass(&self) -> Result<BirationalMap> {
        let e = self.base.s.clone();
        if e.is_zero() {
            return Err(Error::ZeroBaseOrdinate);
        }
        let (i, j) = quartic_invariants(&self.q)?;
        let target = WeierstrassCurve::new(k(-27) * i, k(-27) * j)?;
        let shifted = self.q.shift(&self.base.r);
        let (c, d, b) = (shifted.coeff(2), shifted.coeff(1), shifted.coeff(3));
        let a1 = &d / &e;
        let a2 = &c - d.square() / (k(4) * e.square());
        let a3 = k(2) * &e * &b;
        let b2 = a1.square() + k(4) * &a2;
        Ok(BirationalMap {
            model: self.clone(),
            target,
            e,
            c,
            d,
            a1,
            a2,
            a3,
            b2,
        })
    }

    /// Residual intersection of the model with the parabola `S = f(R)` that
    /// meets it at `p` with multiplicity three (a tangent line, multiplicity
    /// two, when `deg q = 3`).
    ///
    /// With the base point `O` as origin and `ι(R, S) = (R, -S)`, the result
    /// `D` satisfies `[D] = 2[ιO] - 3[p]` for quartics, so `D(O)` is the
    /// pull-back of `[2]·forward(ιO)`. For cubics `2[p] + [D] = 3[∞]` with
    /// `∞` the rational point at infinity, and `[ιO] = 2[∞]`.
    pub fn double_via_parabola(&self, p: &ModelPoint) -> Result<ModelPoint> {
        self.ensure_contains(p)?;
        if p.s.is_zero() {
            return Err(Error::DegenerateDoubling("vertical tangent at a point with S = 0"));
        }
        let local = self.q.shift(&p.r);
        let two_s = k(2) * &p.s;
        let f1 = local.coeff(1) / &two_s;
        let quartic = self.degree() == 4;
        let f2 = if quartic {
            (local.coeff(2) - f1.square()) / &two_s
        } else {
            Rational::zero()
        };
        let f = UniPoly::new(vec![p.s.clone(), f1, f2]);
        let residual = &local - &f.pow(2);
        let contact = if quartic { 3 } else { 2 };
        if (0..contact).any(|i| !residual.coeff(i).is_zero()) {
            return Err(Error::Internal("tangent fit lost contact order".into()));
        }
        let (low, high) = (residual.coeff(contact), residual.coeff(contact + 1));
        if high.is_zero() {
            return Err(Error::DegenerateDoubling(
                "leading coefficients cancel; no fourth intersection",
            ));
        }
        let x = -low / high;
        let s = f.eval(&x);
        Ok(ModelPoint::new(&p.r + &x, s))
    }

    /// `inverse([m]·forward(seed))` for `m = 1..=count`; `None` marks a
    /// multiple that hits an exceptional point of the inverse map.
    pub fn multiples(&self, seed: &ModelPoint, count: u32) -> Result<Vec<(u32, Option<ModelPoint>)>> {
        let map = self.to_weierstrass()?;
        let g = map.forward(seed)?;
        if map.target().is_torsion(&g)? {
            return Err(Error::TorsionPoint);
        }
        let pts = map.pull_back_orbit(&g, &g, count, Exec::default())?;
        Ok((1..=count).zip(pts).collect())
    }
}

/// Mutually inverse rational maps between a [`QuarticModel`] and its
/// Weierstrass model, away from finitely many exceptional points.
#[derive(Debug, Clone)]
pub struct BirationalMap {
    model: QuarticModel,
    target: WeierstrassCurve,
    e: Rational,
    c: Rational,
    d: Rational,
    a1: Rational,
    a2: Rational,
    a3: Rational,
    b2: Rational,
}

impl BirationalMap {
    pub fn model(&self) -> &QuarticModel {
        &self.model
    }

    pub fn target(&self) -> &WeierstrassCurve {
        &self.target
    }

    fn to_short(&self, x: Rational, y: Rational) -> CurvePoint {
        let cap_x = k(9) * &x + k(3) * &self.b2 / k(4);
        let cap_y = k(27) * (k(2) * y + &self.a1 * &x + &self.a3) / k(2);
        CurvePoint::affine(cap_x, cap_y)
    }

    pub fn forward(&self, p: &ModelPoint) -> Result<CurvePoint> {
        self.model.ensure_contains(p)?;
        let e = &self.e;
        let u = &p.r - &self.model.base.r;
        let v = &p.s;
        if u.is_zero() {
            if v == e {
                return Ok(CurvePoint::Identity);
            }
            let x = -&self.a2;
            let y = &self.a1 * &self.a2 - &self.a3;
            return Ok(self.to_short(x, y));
        }
        let ve = v + e;
        let x = (k(2) * e * &ve + &self.d * &u) / u.square();
        let y = (k(4) * e.square() * &ve + k(2) * e * (&self.d * &u + &self.c * u.square())
            - self.d.square() * u.square() / (k(2) * e))
            / u.pow(3);
        Ok(self.to_short(x, y))
    }

    /// `Ok(None)` at the exceptional points where the inverse is undefined.
    pub fn inverse(&self, p: &CurvePoint) -> Result<Option<ModelPoint>> {
        if !self.target.on_curve(p) {
            return Err(Error::NotOnCurve);
        }
        let (cap_x, cap_y) = match p {
            CurvePoint::Identity => return Ok(Some(self.model.base.clone())),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let e = &self.e;
        let x = (cap_x - k(3) * &self.b2 / k(4)) / k(9);
        let y = (k(2) * cap_y / k(27) - &self.a1 * &x - &self.a3) / k(2);
        if y.is_zero() {
            return Ok(None);
        }
        let u = (k(2) * e * (&x + &self.c) - self.d.square() / (k(2) * e)) / &y;
        let v = -e + &u * (&u * &x - &self.d) / (k(2) * e);
        let pt = ModelPoint::new(u + &self.model.base.r, v);
        Ok(self.model.contains(&pt).then_some(pt))
    }

    /// Pull-backs of `start + (m - 1)·step` for `m = 1..=count`. The curve
    /// points are accumulated sequentially; the inversions run under `exec`.
    pub fn pull_back_orbit(
        &self,
        start: &CurvePoint,
        step: &CurvePoint,
        count: u32,
        exec: Exec,
    ) -> Result<Vec<Option<ModelPoint>>> {
        let mut pts = Vec::with_capacity(count as usize);
        let mut cur = start.clone();
        for m in 0..count {
            if m > 0 {
                cur = self.target.add(&cur, step)?;
            }
            pts.push(cur.clone());
        }
        par::map_with(exec, &pts, |p| self.inverse(p)).into_iter().collect()
    }
}
