//! Short Weierstrass curves `Y^2 = X^3 + AX + B` over the rationals.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest possible order of a rational torsion point (Mazur).
pub const MAX_TORSION_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Identity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Identity => None,
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Identity => None,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    a: Rational,
    b: Rational,
}

/// `-16 (4A^3 + 27B^2)`.
pub fn discriminant_of(a: &Rational, b: &Rational) -> Rational {
    Rational::from(-16) * (Rational::from(4) * a.pow(3) + Rational::from(27) * b.square())
}

impl WeierstrassCurve {
    /// Rejects singular models.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if discriminant_of(&a, &b).is_zero() {
            return Err(Error::Singular(format!("Y^2 = X^3 + ({a})X + ({b}) has zero discriminant")));
        }
        Ok(WeierstrassCurve { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn discriminant(&self) -> Rational {
        discriminant_of(&self.a, &self.b)
    }

    pub fn on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => y.square() == x.pow(3) + &self.a * x + &self.b,
        }
    }

    fn ensure_on_curve(&self, p: &CurvePoint) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.ensure_on_curve(p)?;
        self.ensure_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Identity, _) => return q.clone(),
            (_, CurvePoint::Identity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Identity;
            }
            (Rational::from(3) * x1.square() + &self.a) / (Rational::from(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = slope.square() - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        CurvePoint::affine(x3, y3)
    }

    /// `[k]P` by double-and-add; negative `k` negates.
    pub fn scalar_mul(&self, k: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.ensure_on_curve(p)?;
        let mut base = if k < 0 { p.neg() } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = CurvePoint::Identity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Order of `p` if it is at most [`MAX_TORSION_ORDER`], else `None`.
    /// Over the rationals this decides torsion completely.
    ///
    /// Only `p, [2]p, ..., [6]p` are formed: a point of order `N <= 12`
    /// has `[ceil(N/2)]p = ±[floor(N/2)]p`, so every such order shows up
    /// as a coincidence of x-coordinates among these multiples, without
    /// building the much taller points `[7]p, ..., [12]p`.
    pub fn torsion_order(&self, p: &CurvePoint) -> Result<Option<u32>> {
        self.ensure_on_curve(p)?;
        let half = MAX_TORSION_ORDER / 2;
        let mut multiples = vec![CurvePoint::Identity, p.clone()];
        for _ in 2..=half {
            let next = self.add_unchecked(multiples.last().expect("nonempty"), p);
            multiples.push(next);
        }
        let mut order: Option<u32> = None;
        let mut note = |n: u32| {
            if n > 0 && order.map_or(true, |o| n < o) {
                order = Some(n);
            }
        };
        for k in 1..=half as usize {
            for j in 0..=k {
                let (pk, pj) = (&multiples[k], &multiples[j]);
                if pk == pj && j < k {
                    note((k - j) as u32);
                }
                if *pk == pj.neg() {
                    note((k + j) as u32);
                }
            }
        }
        Ok(order)
    }

    pub fn is_torsion(&self, p: &CurvePoint) -> Result<bool> {
        Ok(self.torsion_order(p)?.is_some())
    }

    /// The isomorphic model `Y^2 = X^3 + λ^4 A X + λ^6 B`.
    pub fn rescaled(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        WeierstrassCurve::new(&self.a * lambda.pow(4), &self.b * lambda.pow(6))
    }
}

/// Image of `p` under `(X, Y) -> (λ^2 X, λ^3 Y)`, the isomorphism onto
/// [`WeierstrassCurve::rescaled`].
pub fn rescale_point(p: &CurvePoint, lambda: &Rational) -> CurvePoint {
    match p {
        CurvePoint::Identity => CurvePoint::Identity,
        CurvePoint::Affine { x, y } => CurvePoint::affine(x * lambda.pow(2), y * lambda.pow(3)),
    }
}
