//! Argument parsing, dispatch and output formatting for the `sigmasol`
//! binary. [`run`] is the whole program minus process I/O, so it can be
//! driven in-process by tests.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sigmasol::systems::{
    solve_same_sigma_pair, solve_sigma123, solve_sigma_i_product, solve_sum_product, solve_triple_123,
    solve_triple_134, Branch, SameValueParams, DEFAULT_SEED,
};
use sigmasol::{check_solution, Error, Rational, SolutionSet, SolveConfig, SymmetricSystem, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sigmasol", version, about = "Exact rational solutions of systems in elementary symmetric polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Args)]
struct Solve {
    /// Number of solutions to produce.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,

    /// Root of the quadratic to keep at every step.
    #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
    branch: BranchArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// σ_1 = a and σ_n = b.
    SumProduct {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        n: usize,
        /// The n - 4 entries held fixed (sampled when omitted).
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true)]
        free: Option<Vec<Rational>>,
        /// Substitution parameter (sampled when omitted).
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        t: Option<Rational>,
        #[command(flatten)]
        solve: Solve,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// σ_i = a and σ_n = b for 2 <= i < n.
    SigmaProduct {
        #[arg(long)]
        i: usize,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        n: usize,
        /// The n - 3 entries held fixed (sampled when omitted).
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true)]
        free: Option<Vec<Rational>>,
        #[command(flatten)]
        solve: Solve,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Tuples sharing σ_i and σ_j with a reference tuple.
    SameValues {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "ref", value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        reference: Vec<Rational>,
        #[command(flatten)]
        solve: Solve,
    },
    /// Four entries with σ_1 = a, σ_2 = (3a^2 - d^2)/8, σ_3 = a(a^2 - d^2)/16.
    #[command(name = "triple-123")]
    Triple123 {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        d: Rational,
        /// One tuple per parameter value.
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        t: Vec<Rational>,
    },
    /// Four entries with σ_1 = a, σ_3 = b, σ_4 = b^2/a^2, b = -(a^4 - d^2)^2/(16 a d^2).
    #[command(name = "triple-134")]
    Triple134 {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        d: Rational,
        #[command(flatten)]
        solve: Solve,
    },
    /// n entries sharing σ_1, σ_2, σ_3 with an extended reference tuple.
    Sigma123 {
        #[arg(long)]
        n: usize,
        /// The n - 1 reference entries.
        #[arg(long = "ref", value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        reference: Vec<Rational>,
        /// One tuple per parameter value.
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        u: Vec<Rational>,
    },
    /// Check a tuple against up to three constraints σ_i = value.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = constraint, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        constraints: Vec<(usize, Rational)>,
        #[arg(long, value_parser = rational, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        tuple: Vec<Rational>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| format!("{e}"))
}

fn constraint(s: &str) -> Result<(usize, Rational), String> {
    let (i, v) = s
        .split_once('=')
        .ok_or_else(|| format!("constraint {s:?} must look like i=value, e.g. 2=9/4"))?;
    let i = i.trim().parse().map_err(|_| format!("constraint index {i:?} is not a positive integer"))?;
    Ok((i, rational(v)?))
}

/// Exit code plus the bytes destined for standard output and error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command, cli.format) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::InvalidSystem(_) | Error::LengthMismatch { .. } | Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_REJECTED,
            };
            Outcome::fail(code, format!("error: {e}\n"))
        }
    }
}

fn config(solve: &Solve, seed: u64) -> SolveConfig {
    SolveConfig {
        branch: solve.branch.into(),
        ..SolveConfig::with_seed(seed)
    }
}

fn dispatch(command: Command, format: Format) -> sigmasol::Result<Outcome> {
    let set = match command {
        Command::SumProduct { a, b, n, free, t, solve, seed } => {
            solve_sum_product(&a, &b, n, free.as_deref(), t.as_ref(), solve.count as usize, &config(&solve, seed))?
        }
        Command::SigmaProduct { i, a, b, n, free, solve, seed } => {
            solve_sigma_i_product(i, &a, &b, n, free.as_deref(), solve.count as usize, &config(&solve, seed))?
        }
        Command::SameValues { i, j, n, reference, solve } => {
            let params = SameValueParams::new(n, i, j, reference)?;
            solve_same_sigma_pair(&params, solve.count as usize, &config(&solve, DEFAULT_SEED))?
        }
        Command::Triple123 { a, d, t } => solve_triple_123(&a, &d, &t, &SolveConfig::default())?,
        Command::Triple134 { a, d, solve } => {
            solve_triple_134(&a, &d, solve.count as usize, &config(&solve, DEFAULT_SEED))?
        }
        Command::Sigma123 { n, reference, u } => solve_sigma123(n, &reference, &u, &SolveConfig::default())?,
        Command::Verify { n, constraints, tuple } => {
            let system = SymmetricSystem::new(n, constraints)?;
            let report = check_solution(&system, &tuple)?;
            return Ok(verification_outcome(&report, &tuple, format));
        }
    };
    Ok(Outcome::ok(emit(&set, format)))
}

#[derive(Serialize)]
struct SystemJson {
    n: usize,
    constraints: Vec<ConstraintJson>,
}

#[derive(Serialize)]
struct ConstraintJson {
    index: usize,
    target: String,
}

#[derive(Serialize)]
struct ProvenanceJson {
    multiple: Option<u32>,
    branch: Option<&'static str>,
    seed: Option<u64>,
    params: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct SolutionJson {
    values: Vec<String>,
    provenance: ProvenanceJson,
}

#[derive(Serialize)]
struct SkippedJson {
    multiple: u32,
    reason: String,
}

#[derive(Serialize)]
struct SetJson {
    system: SystemJson,
    solutions: Vec<SolutionJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    skipped: Vec<SkippedJson>,
}

#[derive(Serialize)]
struct CheckJson {
    index: usize,
    expected: String,
    actual: String,
    pass: bool,
}

#[derive(Serialize)]
struct ReportJson {
    system: SystemJson,
    tuple: Vec<String>,
    checks: Vec<CheckJson>,
    pass: bool,
}

fn texts(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn system_json(system: &SymmetricSystem) -> SystemJson {
    SystemJson {
        n: system.n(),
        constraints: system
            .constraints()
            .iter()
            .map(|c| ConstraintJson { index: c.index, target: c.target.to_string() })
            .collect(),
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string(doc).expect("plain data serializes");
    text.push('\n');
    text
}

/// Renders a solution set; the same set always renders to the same bytes.
pub fn emit(set: &SolutionSet, format: Format) -> String {
    match format {
        Format::Plain => set
            .solutions
            .iter()
            .map(|s| texts(&s.values).join(" ") + "\n")
            .collect(),
        Format::Json => to_json(&SetJson {
            system: system_json(&set.system),
            solutions: set
                .solutions
                .iter()
                .map(|s| SolutionJson {
                    values: texts(&s.values),
                    provenance: ProvenanceJson {
                        multiple: s.provenance.multiple,
                        branch: s.provenance.branch.map(Branch::symbol),
                        seed: s.provenance.seed,
                        params: s.provenance.params.iter().map(|(k, v)| (k.clone(), texts(v))).collect(),
                        note: s.provenance.note.clone(),
                    },
                })
                .collect(),
            skipped: set
                .skipped
                .iter()
                .map(|s| SkippedJson { multiple: s.multiple, reason: s.reason.clone() })
                .collect(),
        }),
    }
}

fn verification_outcome(report: &VerificationReport, tuple: &[Rational], format: Format) -> Outcome {
    let stdout = match format {
        Format::Plain => {
            let mut text = String::from(if report.overall { "pass\n" } else { "fail\n" });
            for c in report.checks.iter().filter(|c| !c.pass) {
                text.push_str(&format!("σ_{} = {} (expected {})\n", c.index, c.actual, c.expected));
            }
            text
        }
        Format::Json => to_json(&ReportJson {
            system: system_json(&report.system),
            tuple: texts(tuple),
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson {
                    index: c.index,
                    expected: c.expected.to_string(),
                    actual: c.actual.to_string(),
                    pass: c.pass,
                })
                .collect(),
            pass: report.overall,
        }),
    };
    Outcome {
        code: if report.overall { EXIT_OK } else { EXIT_REJECTED },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sigmasol::systems::{Provenance, Solution};

    fn set(solutions: Vec<Solution>) -> SolutionSet {
        SolutionSet {
            system: SymmetricSystem::new(3, vec![(1, Rational::from(6))]).unwrap(),
            solutions,
            skipped: Vec::new(),
        }
    }

    #[test]
    fn empty_solution_list() {
        let text = emit(&set(Vec::new()), Format::Json);
        assert_eq!(text, "{\"system\":{\"n\":3,\"constraints\":[{\"index\":1,\"target\":\"6\"}]},\"solutions\":[]}\n");
        assert_eq!(emit(&set(Vec::new()), Format::Plain), "");
    }

    #[test]
    fn integers_render_without_denominator() {
        let sol = Solution {
            values: vec![Rational::from(1), Rational::from(2), Rational::from(3)],
            provenance: Provenance::default(),
        };
        let s = set(vec![sol]);
        assert_eq!(emit(&s, Format::Plain), "1 2 3\n");
        assert!(emit(&s, Format::Json).contains(
            "\"values\":[\"1\",\"2\",\"3\"],\"provenance\":{\"multiple\":null,\"branch\":null,\"seed\":null,\"params\":{}}"
        ));
    }

    #[test]
    fn in_process_run_matches_exit_codes() {
        let ok = run(["sigmasol", "verify", "--n", "3", "--constraints", "1=6,3=6", "--tuple", "1,2,3"]);
        assert_eq!(ok.code, EXIT_OK);
        let bad = run(["sigmasol", "triple-123", "--a", "0", "--d", "1", "--t", "1"]);
        assert_eq!(bad.code, EXIT_REJECTED);
        assert!(bad.stderr.starts_with("error: "));
        let help = run(["sigmasol", "--help"]);
        assert_eq!(help.code, EXIT_OK);
        assert!(help.stdout.contains("sum-product"));
    }
}
