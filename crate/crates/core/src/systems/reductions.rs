use crate::error::{Error, Result};
use crate::rational::Rational;

/// Divides every entry by `d`. A solution of `σ_i = A·d^i, σ_n = B·d^n`
/// becomes a solution of `σ_i = A, σ_n = B`.
pub fn reduce_scale(values: &[Rational], d: &Rational) -> Result<Vec<Rational>> {
    let inv = d.recip()?;
    Ok(values.iter().map(|x| x * &inv).collect())
}

/// Entry-wise reciprocal. Since `σ_{n-i}(1/x) = σ_i(x) / σ_n(x)`, a solution
/// of `σ_i = A/B, σ_n = 1/B` becomes a solution of `σ_{n-i} = A, σ_n = B`.
pub fn reduce_reciprocal(values: &[Rational]) -> Result<Vec<Rational>> {
    values
        .iter()
        .map(|x| x.recip().map_err(|_| Error::Degenerate("a zero entry has no reciprocal".into())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::elem_sym;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn arb_nonzero() -> impl Strategy<Value = Rational> {
        (1i64..500, 1i64..500, any::<bool>())
            .prop_map(|(n, d, neg)| Rational::frac(if neg { -n } else { n }, d))
    }

    #[test]
    fn scale_example() {
        let got = reduce_scale(&[r(2), r(4)], &r(2)).unwrap();
        assert_eq!(got, vec![r(1), r(2)]);
        assert_eq!(elem_sym(&got, 2), elem_sym(&[r(2), r(4)], 2) / r(4));
        assert_eq!(reduce_scale(&[r(1)], &r(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn reciprocal_example() {
        let x = [r(2), r(3), r(4)];
        assert_eq!((elem_sym(&x, 1), elem_sym(&x, 3)), (r(9), r(24)));
        let y = reduce_reciprocal(&x).unwrap();
        assert_eq!(y, vec![Rational::frac(1, 2), Rational::frac(1, 3), Rational::frac(1, 4)]);
        assert_eq!(elem_sym(&y, 2), Rational::frac(3, 8));
        assert_eq!(elem_sym(&y, 3), Rational::frac(1, 24));
        assert!(reduce_reciprocal(&[r(1), r(0)]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn scaling_round_trip_and_homogeneity(
            xs in prop::collection::vec(arb_nonzero(), 1..7),
            d in arb_nonzero(),
            i in 0usize..7,
        ) {
            let scaled: Vec<_> = xs.iter().map(|x| x * &d).collect();
            prop_assert_eq!(reduce_scale(&scaled, &d).unwrap(), xs.clone());
            let back = reduce_scale(&xs, &d).unwrap();
            let i = i.min(xs.len()) as i64;
            prop_assert_eq!(elem_sym(&back, i) * d.pow(i as i32), elem_sym(&xs, i));
        }

        #[test]
        fn reciprocal_identity_and_involution(
            xs in prop::collection::vec(arb_nonzero(), 1..7),
            i in 0usize..7,
        ) {
            let n = xs.len() as i64;
            let i = (i as i64).min(n);
            let ys = reduce_reciprocal(&xs).unwrap();
            prop_assert_eq!(elem_sym(&ys, n - i), elem_sym(&xs, i) / elem_sym(&xs, n));
            prop_assert_eq!(reduce_reciprocal(&ys).unwrap(), xs);
        }
    }
}
