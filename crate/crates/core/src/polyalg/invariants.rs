use crate::error::{Error, Result};
use crate::polyalg::UniPoly;
use crate::rational::Rational;

fn genus_one_degree(q: &UniPoly) -> Result<usize> {
    match q.degree() {
        Some(d @ (3 | 4)) => Ok(d),
        other => Err(Error::NotGenusOne(other.unwrap_or(0))),
    }
}

/// Classical invariants `(I, J)` of `q4 x^4 + q3 x^3 + q2 x^2 + q1 x + q0`.
/// A cubic is treated as a quartic with `q4 = 0`.
pub fn quartic_invariants(q: &UniPoly) -> Result<(Rational, Rational)> {
    genus_one_degree(q)?;
    let [q0, q1, q2, q3, q4] = [0, 1, 2, 3, 4].map(|i| q.coeff(i));
    let k = |n: i64| Rational::from(n);
    let i = k(12) * &q4 * &q0 - k(3) * &q3 * &q1 + q2.square();
    let j = k(72) * &q4 * &q2 * &q0 + k(9) * &q3 * &q2 * &q1
        - k(27) * &q4 * q1.square()
        - k(27) * &q0 * q3.square()
        - k(2) * q2.pow(3);
    Ok((i, j))
}

/// Polynomial discriminant of a cubic or quartic (resultant convention).
pub fn quartic_discriminant(q: &UniPoly) -> Result<Rational> {
    genus_one_degree(q)?;
    Ok(q.discriminant())
}
