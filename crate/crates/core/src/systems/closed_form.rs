//! Closed forms of the second-multiple solutions. The curve pipelines must
//! reproduce these entry for entry at multiple 2 with the "+" branch.

use crate::error::{Error, Result};
use crate::polyalg::{sigma_expand3, UniPoly};
use crate::rational::Rational;

fn k(n: i64) -> Rational {
    Rational::from(n)
}

fn div(num: Rational, den: Rational) -> Result<Rational> {
    num.checked_div(&den)
        .map_err(|_| Error::Degenerate("closed form has a vanishing denominator here".into()))
}

/// Four entries with sum `a` and product `b` for the parameter `t`.
pub fn sum_product_closed_form(a: &Rational, b: &Rational, t: &Rational) -> Result<Vec<Rational>> {
    let t2 = t.square();
    let e = k(4) * b * &t2 - k(1);
    let den = -(k(64) * b.square() * t2.square()) + (a.pow(4) + k(32) * b) * &t2 - k(4);
    let x1 = div(k(8) * a * &e, den)?;
    let x2 = -(k(4) * b * &t2 * &x1);
    let a2t = a.square() * t;
    let x3 = div(
        (&a2t + k(8) * b * &t2 - k(2)).pow(3),
        k(16) * a * t * &e * (&a2t - k(8) * b * &t2 + k(2)),
    )?;
    let x4 = a - &x1 - &x2 - &x3;
    Ok(vec![x1, x2, x3, x4])
}

/// `(free, P, Q, R)` solving `σ_i = a`, `σ_n = b` with `n = free.len() + 3`.
pub fn sigma_i_product_closed_form(
    i: usize,
    a: &Rational,
    b: &Rational,
    free: &[Rational],
) -> Result<Vec<Rational>> {
    let (u, v, w, t) = sigma_expand3(free, i as i64);
    let m: Rational = free.iter().product();
    let shift = (a - &t) * &m - b * &u;
    let bv3 = b * v.pow(3);
    let mw3 = &m * w.pow(3);
    let vw = &shift * &v * &w;
    let d1 = &bv3 + &vw + k(2) * &mw3;
    let d2 = k(2) * &bv3 + &vw + &mw3;
    let d3 = &bv3 - &mw3;
    let p = div(&w * &d3, &v * &d1)?;
    let q = div(-(b * v.square() * &d1), &m * w.square() * &d2)?;
    let r = div(-(&w * &d2), &v * &d3)?;
    let mut out = free.to_vec();
    out.extend([p, q, r]);
    Ok(out)
}

/// The three non-fixed entries for `σ_3`, `σ_4` of `(t, p, q, r)`.
pub fn same_values_cubic_closed_form(p: &Rational, q: &Rational, r: &Rational) -> Result<Vec<Rational>> {
    Ok(vec![
        div(p * r * (p - q) * (q - r), q * (p - r).square())?,
        div(q * r * (q - p) * (p - r), p * (q - r).square())?,
        div(p * q * (p - r) * (r - q), r * (p - q).square())?,
    ])
}

/// `(1, 1, P, Q, R)` with the `σ_3`, `σ_4` values of `(1, 1, 1, 2, r)`.
pub fn same_values_quartic_closed_form(r: &Rational) -> Result<Vec<Rational>> {
    let ratio = |num: &[i64], den: &[i64]| div(UniPoly::from_ints(num).eval(r), UniPoly::from_ints(den).eval(r));
    Ok(vec![
        k(1),
        k(1),
        ratio(&[32, -73, 79, -43, 11], &[81, -192, 188, -88, 17])?,
        ratio(&[98, -254, 271, -138, 29], &[33, -66, 61, -28, 6])?,
        ratio(&[65, 456, -1164, 1138, -525, 102], &[449, -1200, 1356, -740, 171])?,
    ])
}
