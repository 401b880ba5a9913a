//! Independent exact checks of candidate solutions, plus the integer and
//! polynomial views of a solution set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyalg::{elem_sym_all, UniPoly};
use crate::rational::Rational;
use crate::systems::SymmetricSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintCheck {
    pub index: usize,
    pub expected: Rational,
    pub actual: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub system: SymmetricSystem,
    pub checks: Vec<ConstraintCheck>,
    pub overall: bool,
}

/// Recomputes every constrained `σ_i` of `values` from scratch.
pub fn check_solution(system: &SymmetricSystem, values: &[Rational]) -> Result<VerificationReport> {
    if values.len() != system.n() {
        return Err(Error::LengthMismatch { expected: system.n(), got: values.len() });
    }
    let sig = elem_sym_all(values);
    let checks: Vec<_> = system
        .constraints()
        .iter()
        .map(|c| {
            let actual = sig.get(c.index as i64);
            ConstraintCheck {
                index: c.index,
                pass: actual == c.target,
                expected: c.target.clone(),
                actual,
            }
        })
        .collect();
    Ok(VerificationReport {
        system: system.clone(),
        overall: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// True iff no two tuples agree up to a permutation of entries.
pub fn distinct_multisets<T: AsRef<[Rational]>>(tuples: &[T]) -> bool {
    let mut sorted: Vec<Vec<Rational>> = tuples
        .iter()
        .map(|t| {
            let mut v = t.as_ref().to_vec();
            v.sort();
            v
        })
        .collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Integer tuples `d·x` over one shared denominator `d`, and the system
/// they satisfy (`σ_i` targets scaled by `d^i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveSet {
    pub d: BigInt,
    pub tuples: Vec<Vec<BigInt>>,
    pub system: SymmetricSystem,
}

pub fn make_primitive<T: AsRef<[Rational]>>(system: &SymmetricSystem, tuples: &[T]) -> Result<PrimitiveSet> {
    for t in tuples {
        if t.as_ref().len() != system.n() {
            return Err(Error::LengthMismatch { expected: system.n(), got: t.as_ref().len() });
        }
    }
    let mut d = Rational::common_denominator(tuples.iter().flat_map(|t| t.as_ref()));
    let mut ints: Vec<Vec<BigInt>> = tuples
        .iter()
        .map(|t| {
            t.as_ref()
                .iter()
                .map(|x| x.numer() * (&d / x.denom()))
                .collect()
        })
        .collect();
    let content = ints.iter().flatten().fold(d.clone(), |g, y| g.gcd(y));
    if !content.is_one() {
        d /= &content;
        for y in ints.iter_mut().flatten() {
            *y /= &content;
        }
    }
    let scale = Rational::from(d.clone());
    let constraints = system
        .constraints()
        .iter()
        .map(|c| (c.index, &c.target * scale.pow(c.index as i32)))
        .collect();
    Ok(PrimitiveSet {
        d,
        tuples: ints,
        system: SymmetricSystem::new(system.n(), constraints)?,
    })
}

/// `∏ (X - x_i)`, whose `X^{n-i}` coefficient is `(-1)^i σ_i`.
pub fn to_monic_polynomial(values: &[Rational]) -> UniPoly {
    let sig = elem_sym_all(values);
    let n = values.len();
    let coeffs = (0..=n)
        .map(|power| {
            let i = n - power;
            let s = sig.get(i as i64);
            if i % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    UniPoly::new(coeffs)
}

fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// The rational with the smallest denominator in `[lo, hi]`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_zero() || lo.is_negative() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = Rational::from(floor(lo));
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip().expect("hi > floor(lo)"), &(lo - &fl).recip().expect("lo > floor(lo)"));
    fl + inner.recip().expect("inner value is positive")
}

fn sturm_chain(p: &UniPoly) -> Result<Vec<UniPoly>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return Ok(chain);
        }
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1])?;
        chain.push(-&rem);
    }
}

fn sign_changes(chain: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.eval(x).signum()).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Finds one rational root of the square-free `g`, if any.
fn find_rational_root(g: &UniPoly) -> Result<Option<Rational>> {
    let monic = g.monic();
    let lead = Rational::from(Rational::common_denominator(monic.coeffs()));
    let width = (Rational::from(2) * lead.square()).recip()?;
    let bound = monic.coeffs().iter().map(Rational::abs).max().unwrap_or_default() + Rational::from(2);
    let chain = sturm_chain(&monic)?;
    let mut stack = vec![(-&bound, bound)];
    while let Some((lo, hi)) = stack.pop() {
        let roots_inside = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if roots_inside == 0 {
            continue;
        }
        if roots_inside == 1 && &hi - &lo < width {
            // a root p/q has q dividing `lead`, and two such fractions are
            // at least 1/lead^2 apart
            let cand = simplest_between(&lo, &hi);
            if monic.eval(&cand).is_zero() {
                return Ok(Some(cand));
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from(2);
        if monic.eval(&mid).is_zero() {
            return Ok(Some(mid));
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    Ok(None)
}

/// All rational roots of `p`, with multiplicity, in ascending order.
/// Real roots are isolated exactly with a Sturm chain and each isolating
/// interval is narrowed until it holds at most one candidate fraction.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::DegenerateEquation);
    }
    let mut distinct = Vec::new();
    let mut g = p.div_rem(&p.gcd(&p.derivative()))?.0;
    while g.degree().is_some_and(|d| d > 0) {
        let Some(root) = find_rational_root(&g)? else { break };
        g = g.div_rem(&UniPoly::linear_factor(&root))?.0;
        distinct.push(root);
    }
    let mut roots = Vec::new();
    for root in distinct {
        let factor = UniPoly::linear_factor(&root);
        let mut rest = p.clone();
        loop {
            let (quot, rem) = rest.div_rem(&factor)?;
            if !rem.is_zero() {
                break;
            }
            roots.push(root.clone());
            rest = quot;
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{solve_sigma123, solve_sum_product, SolveConfig};
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn sys(n: usize, c: &[(usize, Rational)]) -> SymmetricSystem {
        SymmetricSystem::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn check_solution_examples() {
        let s1 = sys(4, &[(1, r(1)), (4, r(1))]);
        let x1 = [q(-24, 35), q(96, 35), q(-343, 240), q(125, 336)];
        assert!(check_solution(&s1, &x1).unwrap().overall);
        let s2 = sys(4, &[(2, r(3)), (4, r(2))]);
        assert!(check_solution(&s2, &[r(1), q(1, 7), q(-7, 4), r(-8)]).unwrap().overall);
        let s3 = sys(3, &[(1, r(5))]);
        let rep = check_solution(&s3, &[r(1), r(2), r(3)]).unwrap();
        assert!(!rep.overall);
        assert_eq!(rep.checks[0].actual, r(6));
        assert_eq!(
            check_solution(&s3, &[r(1)]),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn multiset_distinctness() {
        assert!(!distinct_multisets(&[vec![r(1), r(2)], vec![r(2), r(1)]]));
        assert!(distinct_multisets(&[vec![r(1), r(2)], vec![r(1), r(3)]]));
        assert!(distinct_multisets::<Vec<Rational>>(&[]));
        let set = solve_sum_product(&q(3, 5), &r(-2), 4, None, None, 5, &SolveConfig::default()).unwrap();
        assert!(distinct_multisets(&set.solutions));
    }

    #[test]
    fn primitive_examples() {
        let s = sys(4, &[(2, r(3)), (4, r(2))]);
        let p = make_primitive(&s, &[vec![r(1), q(1, 7), q(-7, 4), r(-8)]]).unwrap();
        assert_eq!(p.d, BigInt::from(28));
        let want: Vec<BigInt> = [28, 4, -49, -224].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(p.tuples[0], want);
        assert_eq!(p.system.target(2), Some(&r(2352)));
        assert_eq!(p.system.target(4), Some(&r(1_229_312)));
        let as_rat: Vec<Rational> = p.tuples[0].iter().cloned().map(Rational::from).collect();
        assert!(check_solution(&p.system, &as_rat).unwrap().overall);

        let s3 = sys(3, &[(1, r(6))]);
        let p = make_primitive(&s3, &[vec![r(1), r(2), r(3)]]).unwrap();
        assert_eq!(p.d, BigInt::from(1));
        let s2 = sys(3, &[(1, r(1))]);
        let p = make_primitive(&s2, &[vec![q(1, 2), q(1, 2), r(0)], vec![q(1, 3), q(2, 3), r(0)]]).unwrap();
        assert_eq!(p.d, BigInt::from(6));
    }

    #[test]
    fn primitive_round_trip_on_solver_output() {
        let set = solve_sum_product(&r(2), &q(-3, 4), 5, None, None, 3, &SolveConfig::default()).unwrap();
        let p = make_primitive(&set.system, &set.solutions).unwrap();
        let d = Rational::from(p.d.clone());
        for (ints, sol) in p.tuples.iter().zip(&set.solutions) {
            let back: Vec<Rational> = ints.iter().map(|y| Rational::from(y.clone()) / &d).collect();
            assert_eq!(back, sol.values);
            let scaled: Vec<Rational> = ints.iter().cloned().map(Rational::from).collect();
            assert!(check_solution(&p.system, &scaled).unwrap().overall);
        }
    }

    #[test]
    fn monic_polynomial_examples() {
        assert_eq!(to_monic_polynomial(&[r(1), r(2)]), UniPoly::from_ints(&[2, -3, 1]));
        assert_eq!(to_monic_polynomial(&[r(0), r(0), r(0)]), UniPoly::from_ints(&[0, 0, 0, 1]));
        let x = [q(1, 5), q(2, 5), q(8, 5), q(9, 5), r(1)];
        let p = to_monic_polynomial(&x);
        assert_eq!(p.coeff(4), r(-5));
        assert_eq!(p.coeff(3), r(9));
        assert_eq!(p.coeff(2), r(-7));
    }

    #[test]
    fn simplest_fractions() {
        assert_eq!(simplest_between(&q(1, 3), &q(1, 2)), q(1, 2));
        assert_eq!(simplest_between(&q(3, 10), &q(2, 5)), q(1, 3));
        assert_eq!(simplest_between(&q(-2, 5), &q(-3, 10)), q(-1, 3));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 2)), r(0));
        assert_eq!(simplest_between(&q(7, 3), &q(7, 3)), q(7, 3));
        assert_eq!(simplest_between(&q(5, 2), &q(7, 2)), r(3));
    }

    #[test]
    fn roots_of_mixed_polynomials() {
        // (x - 1/2)^2 (x + 3) (x^2 - 2)
        let p = &(&UniPoly::linear_factor(&q(1, 2)).pow(2) * &UniPoly::linear_factor(&r(-3)))
            * &UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(rational_roots(&p).unwrap(), vec![r(-3), q(1, 2), q(1, 2)]);
        assert_eq!(rational_roots(&UniPoly::from_ints(&[1, 0, 1])).unwrap(), vec![]);
        assert_eq!(rational_roots(&UniPoly::from_ints(&[0, 0, 1])).unwrap(), vec![r(0), r(0)]);
        assert_eq!(rational_roots(&UniPoly::zero()), Err(Error::DegenerateEquation));
    }

    #[test]
    fn roots_recover_solver_multisets() {
        let cfg = SolveConfig::default();
        let mut tuples = solve_sum_product(&r(1), &r(1), 4, None, Some(&r(1)), 3, &cfg).unwrap().tuples();
        tuples.extend(solve_sigma123(6, &[r(1), r(2), r(-1), q(1, 2), r(3)], &[r(2), q(1, 3)], &cfg).unwrap().tuples());
        for t in tuples {
            let mut want = t.clone();
            want.sort();
            assert_eq!(rational_roots(&to_monic_polynomial(&t)).unwrap(), want);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn roots_recover_random_multisets(
            xs in prop::collection::vec((-40i64..40, 1i64..25), 1..7)
        ) {
            let values: Vec<Rational> = xs.iter().map(|&(n, d)| Rational::frac(n, d)).collect();
            let mut want = values.clone();
            want.sort();
            prop_assert_eq!(rational_roots(&to_monic_polynomial(&values)).unwrap(), want);
        }
    }
}
