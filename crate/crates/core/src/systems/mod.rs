//! Solution generators for systems fixing two or three elementary symmetric
//! values, and the reductions between them.
//!
//! Every generator specializes its parameters to rationals, walks multiples
//! of a point of infinite order on an associated elliptic curve (or a
//! rational parametrization in the genus-zero cases), and re-verifies each
//! tuple exactly before returning it.

mod closed_form;
mod reductions;
mod same_values;
mod sampler;
mod sigma123;
mod sigma_product;
mod sum_product;
mod triples;

use std::collections::BTreeMap;
use std::fmt;

use crate::ellcurve::CurvePoint;
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::quartic::{BirationalMap, ModelPoint};
use crate::rational::Rational;
use crate::verify::{check_solution, distinct_multisets};

pub use closed_form::{
    same_values_cubic_closed_form, same_values_quartic_closed_form, sigma_i_product_closed_form,
    sum_product_closed_form,
};
pub use reductions::{reduce_reciprocal, reduce_scale};
pub use same_values::{same_values_genus0, solve_same_sigma_pair, SameValueParams};
pub use sampler::Sampler;
pub use sigma123::{sigma123_tuple, solve_sigma123};
pub use sigma_product::solve_sigma_i_product;
pub use sum_product::solve_sum_product;
pub use triples::{solve_triple_123, solve_triple_134, triple_134_curve, Triple134Curve};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// How many extra multiples may be skipped before a request for `k`
/// solutions gives up.
const SKIP_ALLOWANCE: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub index: usize,
    pub target: Rational,
}

/// `σ_i(x_1, ..., x_n) = target` for one to three indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSystem {
    n: usize,
    constraints: Vec<Constraint>,
}

impl SymmetricSystem {
    pub fn new(n: usize, constraints: Vec<(usize, Rational)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSystem(format!("n = {n}; at least 3 variables are required")));
        }
        if constraints.is_empty() || constraints.len() > 3 {
            return Err(Error::InvalidSystem(format!(
                "{} constraints given; between 1 and 3 are supported",
                constraints.len()
            )));
        }
        if constraints.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidSystem("constraint indices must be strictly increasing".into()));
        }
        for (index, target) in &constraints {
            if *index < 1 || *index > n {
                return Err(Error::InvalidSystem(format!("index {index} is outside 1..={n}")));
            }
            if *index == n && target.is_zero() {
                return Err(Error::InvalidSystem(format!(
                    "σ_{n} = 0 forces a zero entry; the product target must be nonzero"
                )));
            }
        }
        let constraints = constraints
            .into_iter()
            .map(|(index, target)| Constraint { index, target })
            .collect();
        Ok(SymmetricSystem { n, constraints })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn target(&self, index: usize) -> Option<&Rational> {
        self.constraints.iter().find(|c| c.index == index).map(|c| &c.target)
    }
}

impl fmt::Display for SymmetricSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self
            .constraints
            .iter()
            .map(|c| format!("σ_{} = {}", c.index, c.target))
            .collect();
        write!(f, "n = {}: {}", self.n, parts.join(", "))
    }
}

/// Which root of the final quadratic a solver keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> Rational {
        match self {
            Branch::Plus => Rational::one(),
            Branch::Minus => -Rational::one(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// Where a solution came from: the curve multiple, the root branch, the
/// specialized parameters and the sampler seed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Provenance {
    pub multiple: Option<u32>,
    pub branch: Option<Branch>,
    pub params: BTreeMap<String, Vec<Rational>>,
    pub seed: Option<u64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Rational>,
    pub provenance: Provenance,
}

impl AsRef<[Rational]> for Solution {
    fn as_ref(&self) -> &[Rational] {
        &self.values
    }
}

/// A multiple (or parameter index) that produced no tuple, and why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub multiple: u32,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub system: SymmetricSystem,
    pub solutions: Vec<Solution>,
    pub skipped: Vec<Skipped>,
}

impl SolutionSet {
    pub fn tuples(&self) -> Vec<Vec<Rational>> {
        self.solutions.iter().map(|s| s.values.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub branch: Branch,
    pub exec: Exec,
    pub seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            branch: Branch::Plus,
            exec: Exec::default(),
            seed: DEFAULT_SEED,
        }
    }
}

impl SolveConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolveConfig { seed, ..Self::default() }
    }
}

fn require_count(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Degenerate("at least one solution must be requested".into()))
    } else {
        Ok(())
    }
}

fn params(entries: &[(&str, Vec<Rational>)]) -> BTreeMap<String, Vec<Rational>> {
    entries.iter().map(|(k, v)| ((*k).to_string(), v.clone())).collect()
}

/// Checks every tuple exactly. With `distinct` set, repeated multisets are
/// rejected: along a curve orbit they only arise from a point of finite
/// order. Parametric families leave it unset, since caller-chosen parameter
/// values may legitimately repeat a multiset.
fn finish(
    system: SymmetricSystem,
    solutions: Vec<Solution>,
    skipped: Vec<Skipped>,
    exec: Exec,
    distinct: bool,
) -> Result<SolutionSet> {
    let reports = par::map_with(exec, &solutions, |s| check_solution(&system, &s.values));
    for (sol, report) in solutions.iter().zip(reports) {
        if !report?.overall {
            return Err(Error::Internal(format!("generated tuple {:?} fails {system}", sol.values)));
        }
    }
    if distinct && !distinct_multisets(&solutions) {
        return Err(Error::TorsionPoint);
    }
    Ok(SolutionSet { system, solutions, skipped })
}

/// Walks `start, start + step, start + 2·step, ...` (labelled from
/// `first_multiple`), pulls each point back to the model and lets `build`
/// turn it into a tuple, until `k` tuples exist. Pull-backs and builds run
/// under `exec`; the curve additions are sequential.
fn collect_orbit<F>(
    map: &BirationalMap,
    start: &CurvePoint,
    step: &CurvePoint,
    first_multiple: u32,
    k: usize,
    exec: Exec,
    build: F,
) -> Result<(Vec<(u32, Vec<Rational>)>, Vec<Skipped>)>
where
    F: Fn(&ModelPoint) -> std::result::Result<Vec<Rational>, String> + Sync + Send,
{
    let curve = map.target();
    let limit = first_multiple + k as u32 + SKIP_ALLOWANCE;
    let mut found = Vec::with_capacity(k);
    let mut skipped = Vec::new();
    let mut next = start.clone();
    let mut multiple = first_multiple;
    while found.len() < k {
        let want = (k - found.len()) as u32;
        if multiple + want > limit {
            return Err(Error::Degenerate(format!(
                "only {} of {k} multiples gave usable tuples ({} skipped)",
                found.len(),
                skipped.len()
            )));
        }
        let mut batch = Vec::with_capacity(want as usize);
        for _ in 0..want {
            batch.push((multiple, next.clone()));
            next = curve.add(&next, step)?;
            multiple += 1;
        }
        let outcomes = par::map_with(exec, &batch, |(m, pt)| {
            let tuple = match map.inverse(pt)? {
                None => Err("exceptional point of the birational map".to_string()),
                Some(mp) => build(&mp),
            };
            Ok::<_, Error>((*m, tuple))
        });
        for outcome in outcomes {
            match outcome? {
                (m, Ok(values)) => found.push((m, values)),
                (m, Err(reason)) => skipped.push(Skipped { multiple: m, reason }),
            }
        }
    }
    Ok((found, skipped))
}

/// Keeps drawing parameters until `attempt` succeeds on a setup that is not
/// degenerate, for at most `budget` draws. Errors other than degeneracies
/// propagate immediately; with nothing sampled the first failure is final.
fn with_resampling<T>(
    budget: usize,
    sampled: bool,
    mut attempt: impl FnMut() -> Result<T>,
) -> Result<T> {
    let mut last = None;
    for _ in 0..budget {
        match attempt() {
            Ok(v) => return Ok(v),
            Err(e) if sampled && is_degeneracy(&e) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!(
        "no admissible parameters after {budget} draws (last failure: {})",
        last.map_or_else(|| "none".to_string(), |e| e.to_string())
    )))
}

fn is_degeneracy(e: &Error) -> bool {
    matches!(
        e,
        Error::Singular(_)
            | Error::NotGenusOne(_)
            | Error::ZeroBaseOrdinate
            | Error::TorsionPoint
            | Error::Degenerate(_)
            | Error::DegenerateDoubling(_)
    )
}

/// Parameter draws allowed before a sampled setup is abandoned.
const SAMPLE_BUDGET: usize = 64;

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn system_validation() {
        assert!(SymmetricSystem::new(4, vec![(1, r(1)), (4, r(1))]).is_ok());
        assert!(SymmetricSystem::new(4, vec![(4, r(1)), (1, r(1))]).is_err());
        assert!(SymmetricSystem::new(4, vec![(1, r(1)), (4, r(0))]).is_err());
        assert!(SymmetricSystem::new(4, vec![(5, r(1))]).is_err());
        assert!(SymmetricSystem::new(4, vec![(0, r(1))]).is_err());
        assert!(SymmetricSystem::new(4, vec![]).is_err());
        assert!(SymmetricSystem::new(5, vec![(1, r(1)), (2, r(1)), (3, r(1)), (4, r(1))]).is_err());
        assert!(SymmetricSystem::new(2, vec![(1, r(1))]).is_err());
        let s = SymmetricSystem::new(5, vec![(1, r(5)), (2, r(9)), (3, r(7))]).unwrap();
        assert_eq!(s.target(2), Some(&r(9)));
        assert_eq!(s.target(4), None);
        assert_eq!(s.to_string(), "n = 5: σ_1 = 5, σ_2 = 9, σ_3 = 7");
    }

    #[test]
    fn branch_signs() {
        assert_eq!(Branch::default(), Branch::Plus);
        assert_eq!(Branch::Minus.sign(), r(-1));
        assert_eq!(Branch::Minus.symbol(), "-");
    }

    #[test]
    fn resampling_budget() {
        let mut calls = 0;
        let res: Result<()> = with_resampling(5, true, || {
            calls += 1;
            Err(Error::TorsionPoint)
        });
        assert!(matches!(res, Err(Error::Degenerate(_))));
        assert_eq!(calls, 5);
        let mut calls = 0;
        let res: Result<()> = with_resampling(5, false, || {
            calls += 1;
            Err(Error::TorsionPoint)
        });
        assert_eq!(res, Err(Error::TorsionPoint));
        assert_eq!(calls, 1);
        let res: Result<()> = with_resampling(5, true, || Err(Error::NotOnCurve));
        assert_eq!(res, Err(Error::NotOnCurve));
    }
}
