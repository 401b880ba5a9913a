use crate::rational::Rational;

/// All elementary symmetric values `σ_0..σ_n` of one tuple.
///
/// Indexing follows the usual convention: `σ_m = 0` for `m < 0` or `m > n`
/// and `σ_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaVector {
    values: Vec<Rational>,
}

impl SigmaVector {
    /// Number of variables `n`.
    pub fn arity(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, m: i64) -> Rational {
        usize::try_from(m)
            .ok()
            .and_then(|i| self.values.get(i))
            .cloned()
            .unwrap_or_default()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.values
    }
}

/// Coefficients of `∏ (X + x_i)`, accumulated one factor at a time.
pub fn elem_sym_all(values: &[Rational]) -> SigmaVector {
    let mut sig = Vec::with_capacity(values.len() + 1);
    sig.push(Rational::one());
    for x in values {
        sig.push(Rational::zero());
        for k in (1..sig.len()).rev() {
            let t = &sig[k - 1] * x;
            sig[k] += &t;
        }
    }
    SigmaVector { values: sig }
}

pub fn elem_sym(values: &[Rational], m: i64) -> Rational {
    elem_sym_all(values).get(m)
}

/// The coefficients `(u, v, w, t) = (σ_{i-3}, σ_{i-2}, σ_{i-1}, σ_i)` of `x`
/// such that `σ_i(x, P, Q, R) = u·PQR + v(PQ+QR+RP) + w(P+Q+R) + t`.
pub fn sigma_expand3(x: &[Rational], i: i64) -> (Rational, Rational, Rational, Rational) {
    let s = elem_sym_all(x);
    (s.get(i - 3), s.get(i - 2), s.get(i - 1), s.get(i))
}
