//! Command-line surface: sequence tables, series and special-function
//! evaluation, the claim audit, and Goldbach scans. Single-threaded
//! orchestration; all mathematics lives in the library modules.
//!
//! Exit codes: 0 success, 1 evaluation error, 2 strict-mode claim failure,
//! 64 usage error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arithmetic::{goldbach_scan_with_guard, ArithmeticError, DEFAULT_SIEVE_GUARD};
use crate::claims::{self, ClaimsError, Overrides, Report};
use crate::dirichlet::{df_eval, DirichletError, DF_DEFAULT_TERMS};
use crate::sequences::{odd, SequenceError, SeriesEstimate};
use crate::special::{
    x_composite, zeta_with_guard, GammaCompositeVariant, SpecialError, ZetaMethod,
    ZETA_DEFAULT_TERMS,
};

/// Environment variable that overrides the sieve ceiling for the commands
/// that build large sieves (`zeta --method euler`, `goldbach`).
pub const SIEVE_GUARD_ENV: &str = "ODDLAB_SIEVE_GUARD";

const EXIT_OK: i32 = 0;
const EXIT_EVALUATION: i32 = 1;
const EXIT_STRICT_FAILS: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "oddlab",
    version,
    about = "Odd numbers, their exponential companion terms, and a numerical audit of the identities built on them"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate n, P_n = 2n-1, a_n, a_n·e^{P_n}, and 2^n.
    Seq {
        /// Largest n to tabulate (1 to 10000).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        max: u64,
    },
    /// Evaluate the Dirichlet series D_f(s) of the companion sequence.
    Df {
        /// Exponent s (any finite real; steeply negative values may not
        /// admit a certified tail).
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// Number of leading terms to sum (default 64).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Evaluate the Riemann zeta function at s > 1.
    Zeta {
        /// Exponent s > 1.
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Truncation: term count for direct, prime limit for euler
        /// (default 10000).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Evaluate the gamma composite X(s).
    Xfun {
        /// Argument s > 0.
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// Denominator reading.
        #[arg(long, value_enum, default_value_t = Variant::Printed)]
        variant: Variant,
    },
    /// Audit the claim registry.
    #[command(subcommand)]
    Claims(ClaimsCommand),
    /// Verify Goldbach decompositions for every even number up to a bound.
    Goldbach {
        /// Largest even number to check (at least 4).
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
        max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Printed,
    Shifted,
}

#[derive(Debug, Subcommand)]
enum ClaimsCommand {
    /// Run the registry (optionally filtered to specific ids) and report
    /// one verdict per claim variant.
    Verify {
        /// Audit only this claim id (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Relative tolerance for holds/fails (default 1e-9).
        #[arg(long)]
        tol: Option<f64>,
        /// Exit with code 2 if any audited claim fails.
        #[arg(long)]
        strict: bool,
        /// Also write the canonical JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Runtime configuration: flag-driven except for the sieve guard, which the
/// environment may override for reproducible resource control.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Config {
    default_terms: u64,
    tolerance: f64,
    sieve_guard: u64,
    format: Format,
}

fn sieve_guard_from(raw: Option<&str>) -> Result<u64, String> {
    match raw {
        None => Ok(DEFAULT_SIEVE_GUARD),
        Some(text) => match text.trim().parse::<u64>() {
            Ok(value) if value > 0 => Ok(value),
            _ => Err(format!(
                "{SIEVE_GUARD_ENV} must be a positive integer, got `{text}`"
            )),
        },
    }
}

/// Errors at the CLI boundary, split by which exit code they map to.
#[derive(Debug)]
enum RunError {
    Usage(String),
    Evaluation(String),
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => EXIT_USAGE,
            RunError::Evaluation(_) => EXIT_EVALUATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            RunError::Usage(m) | RunError::Evaluation(m) => m,
        }
    }
}

impl From<SequenceError> for RunError {
    fn from(e: SequenceError) -> Self {
        RunError::Evaluation(e.to_string())
    }
}

impl From<ArithmeticError> for RunError {
    fn from(e: ArithmeticError) -> Self {
        RunError::Evaluation(e.to_string())
    }
}

impl From<SpecialError> for RunError {
    fn from(e: SpecialError) -> Self {
        RunError::Evaluation(e.to_string())
    }
}

impl From<DirichletError> for RunError {
    fn from(e: DirichletError) -> Self {
        RunError::Evaluation(e.to_string())
    }
}

impl From<ClaimsError> for RunError {
    fn from(e: ClaimsError) -> Self {
        match e {
            ClaimsError::UnknownClaim { .. } | ClaimsError::InvalidOverride { .. } => {
                RunError::Usage(e.to_string())
            }
            other => RunError::Evaluation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Evaluation(e.to_string())
    }
}

/// Parses arguments and environment, runs the command, prints the report,
/// and returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{err}");
                    EXIT_USAGE
                }
            };
        }
    };
    let guard = match sieve_guard_from(std::env::var(SIEVE_GUARD_ENV).ok().as_deref()) {
        Ok(guard) => guard,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    let config = Config {
        default_terms: DF_DEFAULT_TERMS,
        tolerance: claims::DEFAULT_TOLERANCE,
        sieve_guard: guard,
        format: cli.format,
    };
    match dispatch(cli.command, &config) {
        Ok((output, code)) => {
            print!("{output}");
            code
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn dispatch(command: Command, config: &Config) -> Result<(String, i32), RunError> {
    match command {
        Command::Seq { max } => Ok((cmd_seq(max, config.format)?, EXIT_OK)),
        Command::Df { s, terms } => {
            let terms = terms.unwrap_or(config.default_terms);
            Ok((cmd_df(s, terms, config.format)?, EXIT_OK))
        }
        Command::Zeta { s, method, terms } => {
            let cutoff = terms.unwrap_or(ZETA_DEFAULT_TERMS);
            Ok((cmd_zeta(s, method, cutoff, config)?, EXIT_OK))
        }
        Command::Xfun { s, variant } => Ok((cmd_xfun(s, variant, config.format)?, EXIT_OK)),
        Command::Claims(ClaimsCommand::Verify {
            ids,
            tol,
            strict,
            json,
        }) => cmd_claims(&ids, tol, strict, json.as_deref(), config),
        Command::Goldbach { max } => Ok((cmd_goldbach(max, config)?, EXIT_OK)),
    }
}

/// A positive value carried as mantissa·10^exp10, so rows stay printable
/// far beyond f64 range (2^10000 included).
#[derive(Debug, Clone, Copy, PartialEq)]
struct SciValue {
    mantissa: f64,
    exp10: i64,
}

impl SciValue {
    /// Builds from a natural logarithm of the value.
    fn from_ln(ln: f64) -> SciValue {
        let log10 = ln / std::f64::consts::LN_10;
        let mut exp10 = log10.floor() as i64;
        let mut mantissa = 10.0_f64.powf(log10 - exp10 as f64);
        if mantissa >= 10.0 {
            mantissa /= 10.0;
            exp10 += 1;
        }
        if mantissa < 1.0 {
            mantissa *= 10.0;
            exp10 -= 1;
        }
        SciValue { mantissa, exp10 }
    }

    /// `m.dddddd e N` with `decimals` digits after the point; carries the
    /// exponent if display rounding pushes the mantissa to 10.
    fn render(&self, decimals: usize) -> String {
        let formatted = format!("{:.*}", decimals, self.mantissa);
        if formatted.starts_with("10") {
            format!("{:.*}e{}", decimals, 1.0, self.exp10 + 1)
        } else {
            format!("{formatted}e{}", self.exp10)
        }
    }

    fn text(&self) -> String {
        self.render(6)
    }

    fn json_string(&self) -> String {
        self.render(15)
    }
}

fn cmd_seq(max: u64, format: Format) -> Result<String, RunError> {
    let ln2 = std::f64::consts::LN_2;
    let mut rows = Vec::with_capacity(max as usize);
    for n in 1..=max {
        let p = odd(n)?.value;
        // Work in logarithms: a_n = 2^n e^{1-2n}, so ln a_n = n ln 2 + 1 - 2n,
        // and the identity product just adds P_n back.
        let ln_a = n as f64 * ln2 + 1.0 - 2.0 * n as f64;
        let a = SciValue::from_ln(ln_a);
        let identity = SciValue::from_ln(ln_a + p as f64);
        let pow2 = SciValue::from_ln(n as f64 * ln2);
        rows.push((n, p, a, identity, pow2));
    }
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:>6} {:>7} {:>15} {:>15} {:>15}\n",
                "n", "P_n", "a_n", "a_n*e^P_n", "2^n"
            ));
            for (n, p, a, identity, pow2) in &rows {
                out.push_str(&format!(
                    "{:>6} {:>7} {:>15} {:>15} {:>15}\n",
                    n,
                    p,
                    a.text(),
                    identity.text(),
                    pow2.text()
                ));
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, p, a, identity, pow2)| {
                    serde_json::json!({
                        "n": n,
                        "p_n": p,
                        "a_n": a.json_string(),
                        "a_exp_p": identity.json_string(),
                        "pow2": pow2.json_string(),
                    })
                })
                .collect();
            json_line(&serde_json::json!({ "max": max, "rows": rows }))
        }
    })
}

fn estimate_lines(label: &str, estimate: &SeriesEstimate) -> String {
    let [lo, hi] = estimate.value_interval();
    format!(
        "{label}\nvalue    = {:.6e}\nused     = {}\ntail     <= {:.6e}\ninterval = [{:.6e}, {:.6e}]\n",
        estimate.partial_sum, estimate.terms_used, estimate.tail_bound, lo, hi
    )
}

fn estimate_json(estimate: &SeriesEstimate) -> serde_json::Value {
    let [lo, hi] = estimate.value_interval();
    serde_json::json!({
        "value": estimate.partial_sum,
        "terms_used": estimate.terms_used,
        "tail_bound": estimate.tail_bound,
        "interval": [lo, hi],
    })
}

fn cmd_df(s: f64, terms: u64, format: Format) -> Result<String, RunError> {
    let estimate = df_eval(s, terms)?;
    Ok(match format {
        Format::Text => estimate_lines(&format!("D_f(s) at s = {s}"), &estimate),
        Format::Json => {
            let mut value = estimate_json(&estimate);
            value["s"] = serde_json::json!(s);
            value["terms"] = serde_json::json!(terms);
            json_line(&value)
        }
    })
}

fn cmd_zeta(s: f64, method: Method, cutoff: u64, config: &Config) -> Result<String, RunError> {
    let (zeta_method, method_name) = match method {
        Method::Direct => (ZetaMethod::DirectSum { terms: cutoff }, "direct"),
        Method::Euler => (
            ZetaMethod::EulerProduct {
                prime_limit: cutoff,
            },
            "euler",
        ),
    };
    let estimate = zeta_with_guard(s, zeta_method, config.sieve_guard)?;
    Ok(match config.format {
        Format::Text => estimate_lines(
            &format!("zeta(s) at s = {s}, method {method_name}, cutoff {cutoff}"),
            &estimate,
        ),
        Format::Json => {
            let mut value = estimate_json(&estimate);
            value["s"] = serde_json::json!(s);
            value["method"] = serde_json::json!(method_name);
            value["cutoff"] = serde_json::json!(cutoff);
            json_line(&value)
        }
    })
}

fn cmd_xfun(s: f64, variant: Variant, format: Format) -> Result<String, RunError> {
    let (module_variant, variant_name) = match variant {
        Variant::Printed => (GammaCompositeVariant::AsPrinted, "printed"),
        Variant::Shifted => (GammaCompositeVariant::ShiftedDenominator, "shifted"),
    };
    let value = x_composite(s, module_variant)?;
    Ok(match format {
        Format::Text => format!("X(s) at s = {s}, variant {variant_name}\nvalue = {value:.6e}\n"),
        Format::Json => json_line(&serde_json::json!({
            "s": s,
            "variant": variant_name,
            "value": value,
        })),
    })
}

fn cmd_claims(
    ids: &[String],
    tol: Option<f64>,
    strict: bool,
    json_path: Option<&std::path::Path>,
    config: &Config,
) -> Result<(String, i32), RunError> {
    let overrides = Overrides {
        tolerance: tol,
        s: None,
    };
    let report = if ids.is_empty() {
        claims::run_all(overrides)?
    } else {
        for id in ids {
            if !claims::registry().iter().any(|c| c.id == *id) {
                return Err(ClaimsError::UnknownClaim { id: id.clone() }.into());
            }
        }
        // Evaluate the requested claims in registry order, not argument order.
        let mut verdicts = Vec::new();
        for claim in claims::registry() {
            if ids.iter().any(|id| id == claim.id) {
                verdicts.extend(claims::run_claim(claim.id, overrides)?);
            }
        }
        Report {
            version: 1,
            tolerance_default: tol.unwrap_or(config.tolerance),
            verdicts,
        }
    };
    let json = claims::canonical_json(&report);
    if let Some(path) = json_path {
        std::fs::write(path, &json)?;
    }
    let output = match config.format {
        Format::Text => claims::render_text(&report),
        Format::Json => json,
    };
    let code = if strict && report.fails() > 0 {
        EXIT_STRICT_FAILS
    } else {
        EXIT_OK
    };
    Ok((output, code))
}

fn cmd_goldbach(max: u64, config: &Config) -> Result<String, RunError> {
    let report = goldbach_scan_with_guard(max, config.sieve_guard)?;
    let w = report.largest_minimal_witness;
    Ok(match config.format {
        Format::Text => {
            let mut out = format!(
                "checked evens in [4, {}]\nverified = {}\nfailures = {}\nlargest minimal witness: {} = {} + {}\n",
                report.max_even,
                report.verified,
                report.failures.len(),
                w.n,
                w.p,
                w.q
            );
            for n in &report.failures {
                out.push_str(&format!("FAILURE: no decomposition for {n}\n"));
            }
            out
        }
        Format::Json => json_line(&serde_json::json!({
            "max_even": report.max_even,
            "verified": report.verified,
            "failures": report.failures,
            "witness": { "n": w.n, "p": w.p, "q": w.q },
        })),
    })
}

/// Canonical JSON line: sorted keys, 17-significant-digit floats, trailing
/// newline. Matches the claims report serialization.
fn json_line(value: &serde_json::Value) -> String {
    let mut text = claims::canonical_value(value);
    text.push('\n');
    text
}
