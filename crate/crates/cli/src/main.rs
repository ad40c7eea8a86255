use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use implicit_deriv::counting::{a_count_enum, a_counts_gf, cf_count_coefficient};
use implicit_deriv::formula::{cf_notation, cf_original_coefficient, cf_original_formula, render, Format};
use implicit_deriv::numeric::{
    derivative_table, evaluate_formula, finite_difference_check, implicit_solve, parse, EvalConfig,
};
use implicit_deriv::oracle::{compare, matches_q_prediction, oracle_expansions, ComparisonReport};
use implicit_deriv::partition::{alpha2d, enumerate_formula_partitions};
use implicit_deriv::{build_formula, Error};
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::json;

/// Closed-form higher derivatives of implicit functions.
#[derive(Debug, Parser)]
#[command(name = "implicit-deriv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Enum,
    Gf,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the expansion of d^n y/dx^n.
    Expand {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// List the partitions indexing the order-n expansion with alpha and sign.
    Partitions {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print the number of terms a(n) for n = 1..max.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
        #[arg(long, value_enum, default_value = "gf")]
        method: CountMethod,
        /// Emit a b-file with a leading comment line.
        #[arg(long)]
        bfile: bool,
        /// Truncation degree for the generating function (at least max).
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Check the expansion against repeated total differentiation.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
        /// Check the original coefficients instead, expecting them to be off
        /// by exactly the factor q.
        #[arg(long)]
        cf_mode: bool,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
        #[arg(long)]
        json: bool,
        /// Add one to the coefficient of this term of the order-max formula.
        #[arg(long, hide = true)]
        mutate_term: Option<usize>,
    },
    /// Compare corrected and original coefficients term by term.
    CompareCf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Compare the historical term count with a(n) instead.
        #[arg(long)]
        count: bool,
    },
    /// Evaluate d^n y/dx^n for a concrete F(x, y) at a point.
    Eval {
        #[arg(long = "expr")]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "solve_y")]
        y: Option<f64>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Refine y by Newton iteration from this starting value first.
        #[arg(long, allow_hyphen_values = true)]
        solve_y: Option<f64>,
        /// Also print a finite-difference estimate and the difference.
        #[arg(long)]
        fd_check: bool,
    },
}

/// A failed run: exit status plus the message for standard error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn disagreement(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularPoint { .. }
            | Error::MissingEntry { .. }
            | Error::NonConvergence { .. }
            | Error::DerivativeUnderflow { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn expand(n: u32, format: OutputFormat) -> Outcome {
    let f = build_formula(n)?;
    let format = match format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Latex => Format::Latex,
        OutputFormat::Json => Format::Json,
    };
    Ok(render(&f, format) + "\n")
}

fn partitions(n: u32, as_json: bool) -> Outcome {
    let parts = enumerate_formula_partitions(n)?;
    let mut out = String::new();
    if as_json {
        let entries = parts
            .iter()
            .map(|p| {
                let sign = if p.size() % 2 == 0 { 1 } else { -1 };
                Ok(json!({ "partition": p, "alpha": alpha2d(p)?.to_string(), "sign": sign }))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let doc = json!({ "n": n, "count": parts.len(), "partitions": entries });
        out = serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
    } else {
        for p in &parts {
            let sign = if p.size() % 2 == 0 { '+' } else { '-' };
            writeln!(out, "{p}\t{}\t{sign}", alpha2d(p)?).unwrap();
        }
    }
    Ok(out)
}

fn count(max: u32, method: CountMethod, bfile: bool, degree: Option<u32>) -> Outcome {
    let degree = degree.unwrap_or(max);
    if degree < max {
        return Err(Failure::usage(format!("--degree {degree} must be at least --max {max}")));
    }
    let gf = match method {
        CountMethod::Gf | CountMethod::Both => Some(a_counts_gf(max, degree)?),
        CountMethod::Enum => None,
    };
    let enumerated = match method {
        CountMethod::Enum | CountMethod::Both => {
            Some((1..=max).map(a_count_enum).collect::<Result<Vec<_>, _>>()?)
        }
        CountMethod::Gf => None,
    };
    if let (Some(g), Some(e)) = (&gf, &enumerated) {
        let bad: Vec<String> = g
            .iter()
            .zip(e)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| format!("n={}: gf {a}, enumeration {b}", k + 1))
            .collect();
        if !bad.is_empty() {
            return Err(Failure::disagreement(format!("count disagreement: {}", bad.join("; "))));
        }
    }
    let values = gf.or(enumerated).expect("one method ran");
    let mut out = String::new();
    if bfile {
        out.push_str("# a(n): number of terms in the n-th derivative of an implicit function\n");
    }
    for (k, a) in values.iter().enumerate() {
        writeln!(out, "{} {a}", k + 1).unwrap();
    }
    Ok(out)
}

fn verify(max: u32, cf_mode: bool, jobs: Option<u32>, as_json: bool, mutate: Option<usize>) -> Outcome {
    let expansions = oracle_expansions(max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0) as usize)
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    let reports: Vec<ComparisonReport> = pool.install(|| {
        expansions
            .par_iter()
            .enumerate()
            .map(|(k, oracle)| {
                let n = k as u32 + 1;
                let mut f = if cf_mode { cf_original_formula(n)? } else { build_formula(n)? };
                if let (Some(index), true) = (mutate, n == max) {
                    if index >= f.len() {
                        return Err(Failure::usage(format!(
                            "--mutate-term {index} is out of range: order {n} has {} terms",
                            f.len()
                        )));
                    }
                    f = f.with_perturbed_term(index, 1);
                }
                Ok(compare(&f, oracle))
            })
            .collect::<Result<Vec<_>, Failure>>()
    })?;

    let mut out = String::new();
    let mut failed = Vec::new();
    for r in &reports {
        let ok = if cf_mode { matches_q_prediction(r)? } else { r.is_equal() };
        if !ok {
            failed.push(r.n);
        }
        if !as_json {
            if cf_mode && ok {
                writeln!(
                    out,
                    "n={}: {} term(s) off by exactly q, as predicted",
                    r.n,
                    r.coefficient_mismatches.len()
                )
                .unwrap();
            } else {
                writeln!(out, "{r}").unwrap();
            }
        }
    }
    if as_json {
        let doc = serde_json::to_value(&reports).expect("reports serialize");
        out = serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
    }
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::disagreement(format!("verification failed for n = {failed:?}")))
    }
}

fn compare_cf(n: u32, count_mode: bool) -> Outcome {
    let mut out = String::new();
    if count_mode {
        let historical = cf_count_coefficient(n)?;
        let actual = a_counts_gf(n, n)?.pop().expect("n >= 1");
        let verdict = if historical == actual { "agree" } else { "differ" };
        writeln!(out, "n={n} historical={historical} a(n)={actual} {verdict}").unwrap();
        return Ok(out);
    }
    out.push_str("partition\tcorrected\toriginal\tq\n");
    for term in build_formula(n)?.terms() {
        let p = &term.partition;
        let sign = if term.coefficient.is_negative() { "-" } else { "" };
        writeln!(
            out,
            "{p}\t{}\t{sign}{}\t{}",
            term.coefficient,
            cf_original_coefficient(p)?,
            cf_notation(p).q
        )
        .unwrap();
    }
    Ok(out)
}

fn eval(expr: &str, x: f64, y: Option<f64>, n: u32, solve_y: Option<f64>, fd_check: bool) -> Outcome {
    let cfg = EvalConfig::default();
    let e = parse(expr)?;
    let y = match solve_y {
        Some(guess) => {
            let y = implicit_solve(&e, x, guess, &cfg)?;
            eprintln!("solved y = {y}");
            y
        }
        None => y.expect("clap requires --y without --solve-y"),
    };
    let table = derivative_table(&e, x, y, n, &cfg)?;
    if let Some(warning) = table.off_curve_warning() {
        eprintln!("warning: {warning}");
    }
    let value = evaluate_formula(n, &table)?;
    let mut out = format!("{value}\n");
    if fd_check {
        let r = finite_difference_check(&e, x, y, n, &cfg)?;
        writeln!(out, "fd {}", r.fd_value).unwrap();
        writeln!(out, "abs_diff {:e}", r.abs_diff).unwrap();
    }
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Expand { n, format } => expand(n, format),
        Command::Partitions { n, json } => partitions(n, json),
        Command::Count {
            max,
            method,
            bfile,
            degree,
        } => count(max, method, bfile, degree),
        Command::Verify {
            max,
            cf_mode,
            jobs,
            json,
            mutate_term,
        } => verify(max, cf_mode, jobs, json, mutate_term),
        Command::CompareCf { n, count } => compare_cf(n, count),
        Command::Eval {
            expr,
            x,
            y,
            n,
            solve_y,
            fd_check,
        } => eval(&expr, x, y, n, solve_y, fd_check),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
