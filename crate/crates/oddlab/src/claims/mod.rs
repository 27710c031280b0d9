//! The claim ledger: a fixed registry of ten numbered assertions (C1–C10),
//! each audited numerically against an independent route and reported as a
//! deterministic verdict. Failing claims are findings, not errors — only
//! evaluation impossibility (a pole, an uncertifiable tail) raises.

mod report;

pub use report::{canonical_json, canonical_value, render_text, ClaimVerdict, Report, Verdict};

use crate::arithmetic::{
    divisor_lambda_sum, lambda_by_inversion, multiplicativity_search, von_mangoldt,
    ArithmeticError, LogBase,
};
use crate::dirichlet::{df_eval, df_paper_factored, DirichletError, DF_DEFAULT_TERMS};
use crate::numeric::scaled_residual;
use crate::sequences::{assoc_value, common_ratio, odd, ratio_test, recover_odd, SequenceError};
use crate::special::{x_composite, GammaCompositeVariant, SpecialError};

/// Relative tolerance a verdict must meet to hold, unless overridden.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClaimsError {
    #[error("unknown claim id `{id}`")]
    UnknownClaim { id: String },
    #[error("invalid override: {reason}")]
    InvalidOverride { reason: String },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Dirichlet(#[from] DirichletError),
}

/// A registry entry: what is asserted, where it is asserted, and the fixed
/// parameters the audit uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub paper_location: &'static str,
    pub description: &'static str,
    pub parameters: &'static [(&'static str, &'static str)],
}

/// The ten claims, in audit order.
pub fn registry() -> &'static [Claim] {
    &[
        Claim {
            id: "C1",
            paper_location: "Eq. (1.1)",
            description: "The companion term carries the full exponential weight: a_n e^{P_n} = 2^n.",
            parameters: &[("N", "200")],
        },
        Claim {
            id: "C2",
            paper_location: "Eq. (1.2)",
            description: "The odd number is recovered from the companion term: n ln 2 - ln a_n = P_n.",
            parameters: &[("N", "200")],
        },
        Claim {
            id: "C3",
            paper_location: "§1 proof",
            description: "The term ratio a_{n+1}/a_n settles at 2/e^2 and certifies convergence of the series.",
            parameters: &[("N", "64")],
        },
        Claim {
            id: "C4",
            paper_location: "Def. 1.1 / §2",
            description: "The map n -> a_n is a multiplicative arithmetic function.",
            parameters: &[("max_n", "30")],
        },
        Claim {
            id: "C5",
            paper_location: "Eqs. (2.5)–(2.6)",
            description: "The Dirichlet series of a_n factors as zeta(s) times the coefficient sum.",
            parameters: &[("s", "2 (overridable)"), ("N", "64")],
        },
        Claim {
            id: "C6",
            paper_location: "Eqs. (2.10)–(2.11)",
            description: "The Dirichlet series at s = 2 evaluates to (1/3)(pi/e)^2.",
            parameters: &[("s", "2"), ("N", "64")],
        },
        Claim {
            id: "C7",
            paper_location: "Eq. (2.13)",
            description: "The gamma composite at s = 2 equals (1/3)(pi/e)^2.",
            parameters: &[("s", "2"), ("variant", "both")],
        },
        Claim {
            id: "C8",
            paper_location: "Eq. (2.14)",
            description: "The Dirichlet series equals the gamma composite at s = 2.",
            parameters: &[("s", "2 (overridable)"), ("N", "64"), ("variant", "both")],
        },
        Claim {
            id: "C9",
            paper_location: "Eq. (2.17)",
            description: "a_n equals log_n(10^{a_n}) times the divisor sum of von Mangoldt values.",
            parameters: &[("range", "[2, 100]"), ("base", "both")],
        },
        Claim {
            id: "C10",
            paper_location: "Eq. (2.18)",
            description: "Mobius inversion of the divisor log-sum recovers the von Mangoldt function.",
            parameters: &[("range", "[1, 10000]"), ("base", "Natural")],
        },
    ]
}

/// Optional knobs for a run. `tolerance` applies to every claim; `s`
/// applies only to the s-parametrized claims (C5, C8).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub tolerance: Option<f64>,
    pub s: Option<f64>,
}

fn validate(overrides: Overrides) -> Result<(), ClaimsError> {
    if let Some(t) = overrides.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(ClaimsError::InvalidOverride {
                reason: format!("tolerance must be a positive finite number, got {t}"),
            });
        }
    }
    if let Some(s) = overrides.s {
        if !s.is_finite() {
            return Err(ClaimsError::InvalidOverride {
                reason: format!("s must be finite, got {s}"),
            });
        }
    }
    Ok(())
}

fn takes_s(id: &str) -> bool {
    matches!(id, "C5" | "C8")
}

/// Runs one claim. Claims with variants return one verdict per variant.
/// An `s` override on a claim that has no s parameter is rejected.
pub fn run_claim(id: &str, overrides: Overrides) -> Result<Vec<ClaimVerdict>, ClaimsError> {
    validate(overrides)?;
    let claim = registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| ClaimsError::UnknownClaim { id: id.to_owned() })?;
    if overrides.s.is_some() && !takes_s(id) {
        return Err(ClaimsError::InvalidOverride {
            reason: format!("claim {id} does not take an s parameter"),
        });
    }
    let tolerance = overrides.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    evaluate(claim, overrides.s, tolerance)
}

/// Runs the whole registry in order, variants expanded (13 verdicts by
/// default). The `s` override is applied only where it is meaningful.
pub fn run_all(overrides: Overrides) -> Result<Report, ClaimsError> {
    validate(overrides)?;
    let tolerance = overrides.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let mut verdicts = Vec::new();
    for claim in registry() {
        let s = if takes_s(claim.id) { overrides.s } else { None };
        verdicts.extend(evaluate(claim, s, tolerance)?);
    }
    Ok(Report {
        version: 1,
        tolerance_default: tolerance,
        verdicts,
    })
}

fn make_verdict(
    claim: &Claim,
    variant: Option<&str>,
    lhs: f64,
    rhs: f64,
    tolerance: f64,
    notes: String,
) -> ClaimVerdict {
    let abs_residual = (lhs - rhs).abs();
    let rel_residual = scaled_residual(lhs, rhs);
    ClaimVerdict {
        claim_id: claim.id.to_owned(),
        paper_location: claim.paper_location.to_owned(),
        variant: variant.map(str::to_owned),
        lhs,
        rhs,
        abs_residual,
        rel_residual,
        tolerance,
        verdict: if rel_residual <= tolerance {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        notes,
    }
}

/// Scans a range and keeps the (n, lhs, rhs) triple with the largest
/// scaled residual — the pair the verdict then reports.
fn worst_pair(
    range: impl Iterator<Item = u64>,
    mut eval: impl FnMut(u64) -> Result<(f64, f64), ClaimsError>,
) -> Result<(u64, f64, f64), ClaimsError> {
    let mut worst: Option<(u64, f64, f64, f64)> = None;
    for n in range {
        let (lhs, rhs) = eval(n)?;
        let residual = scaled_residual(lhs, rhs);
        if worst.map_or(true, |(_, _, _, top)| residual > top) {
            worst = Some((n, lhs, rhs, residual));
        }
    }
    let (n, lhs, rhs, _) = worst.expect("ranges in the registry are nonempty");
    Ok((n, lhs, rhs))
}

fn evaluate(
    claim: &Claim,
    s: Option<f64>,
    tolerance: f64,
) -> Result<Vec<ClaimVerdict>, ClaimsError> {
    let pi_over_e = std::f64::consts::PI / std::f64::consts::E;
    let asserted_third = pi_over_e * pi_over_e / 3.0;
    match claim.id {
        "C1" => {
            let (n, lhs, rhs) = worst_pair(1..=200, |n| {
                let exponent = odd(n)?.value as f64;
                Ok((assoc_value(n) * exponent.exp(), 2.0_f64.powi(n as i32)))
            })?;
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                rhs,
                tolerance,
                format!("worst relative residual over n in [1, 200] is at n = {n}"),
            )])
        }
        "C2" => {
            let (n, lhs, rhs) =
                worst_pair(1..=200, |n| Ok((recover_odd(n)?, odd(n)?.value as f64)))?;
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                rhs,
                tolerance,
                format!("worst relative residual over n in [1, 200] is at n = {n}"),
            )])
        }
        "C3" => {
            let test = ratio_test(64)?;
            let lhs = test.limit_estimate;
            let rhs = common_ratio();
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                rhs,
                tolerance,
                format!(
                    "ratio test over 64 terms returns {:?}; the printed criterion 'L < 0' is \
                     unsatisfiable for positive terms, so convergence is audited as L < 1",
                    test.verdict
                ),
            )])
        }
        "C4" => Ok(vec![match multiplicativity_search(30) {
            Some(cx) => make_verdict(
                claim,
                None,
                cx.f_mn,
                cx.f_m_times_f_n,
                tolerance,
                format!(
                    "counterexample at the first coprime pair (m, n) = ({}, {}): \
                     f(mn) = {:.6e} but f(m)f(n) = {:.6e}",
                    cx.m, cx.n, cx.f_mn, cx.f_m_times_f_n
                ),
            ),
            None => make_verdict(
                claim,
                None,
                0.0,
                0.0,
                tolerance,
                "no counterexample among coprime pairs up to 30".to_owned(),
            ),
        }]),
        "C5" => {
            let s_val = s.unwrap_or(2.0);
            let lhs = df_eval(s_val, DF_DEFAULT_TERMS)?.partial_sum;
            let rhs = df_paper_factored(s_val)?;
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                rhs,
                tolerance,
                format!(
                    "direct series ({DF_DEFAULT_TERMS} terms) vs zeta(s) times the coefficient \
                     sum, at s = {s_val}"
                ),
            )])
        }
        "C6" => {
            let lhs = df_eval(2.0, DF_DEFAULT_TERMS)?.partial_sum;
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                asserted_third,
                tolerance,
                "asserted value substitutes the ratio limit 2/e^2 where the coefficient sum \
                 2e/(e^2 - 2) ~ 1.008816 belongs"
                    .to_owned(),
            )])
        }
        "C7" => {
            let mut out = Vec::with_capacity(2);
            for (variant, label, note) in [
                (
                    GammaCompositeVariant::AsPrinted,
                    "AsPrinted",
                    "denominator read literally as gamma(s) + 1; at s = 2 this gives (1/2)(pi/e)^2",
                ),
                (
                    GammaCompositeVariant::ShiftedDenominator,
                    "ShiftedDenominator",
                    "denominator read as gamma(s + 1) + 1; this reading reproduces the asserted \
                     value (1/3)(pi/e)^2",
                ),
            ] {
                let lhs = x_composite(2.0, variant)?;
                out.push(make_verdict(
                    claim,
                    Some(label),
                    lhs,
                    asserted_third,
                    tolerance,
                    note.to_owned(),
                ));
            }
            Ok(out)
        }
        "C8" => {
            let s_val = s.unwrap_or(2.0);
            let lhs = df_eval(s_val, DF_DEFAULT_TERMS)?.partial_sum;
            let mut out = Vec::with_capacity(2);
            for (variant, label) in [
                (GammaCompositeVariant::AsPrinted, "AsPrinted"),
                (
                    GammaCompositeVariant::ShiftedDenominator,
                    "ShiftedDenominator",
                ),
            ] {
                let rhs = x_composite(s_val, variant)?;
                out.push(make_verdict(
                    claim,
                    Some(label),
                    lhs,
                    rhs,
                    tolerance,
                    format!("direct series vs composite ({label} denominator) at s = {s_val}"),
                ));
            }
            Ok(out)
        }
        "C9" => {
            let mut out = Vec::with_capacity(2);
            for (base, label) in [(LogBase::Natural, "Natural"), (LogBase::Ten, "Ten")] {
                let (n, lhs, rhs) = worst_pair(2..=100, |n| {
                    let a = assoc_value(n);
                    let prefactor = a * std::f64::consts::LN_10 / (n as f64).ln();
                    Ok((a, prefactor * divisor_lambda_sum(n, base)?))
                })?;
                let notes = match base {
                    LogBase::Ten => format!(
                        "base-ten logs make the divisor sum log10(n), cancelling the prefactor \
                         exactly; worst n = {n}"
                    ),
                    LogBase::Natural => format!(
                        "natural logs leave the factor ln 10 ~ 2.302585 uncancelled; worst n = {n}"
                    ),
                };
                out.push(make_verdict(claim, Some(label), lhs, rhs, tolerance, notes));
            }
            Ok(out)
        }
        "C10" => {
            let (n, lhs, rhs) = worst_pair(1..=10_000, |n| {
                Ok((
                    lambda_by_inversion(n, LogBase::Natural)?,
                    von_mangoldt(n, LogBase::Natural)?,
                ))
            })?;
            Ok(vec![make_verdict(
                claim,
                None,
                lhs,
                rhs,
                tolerance,
                format!("audited in natural log over n in [1, 10000]; worst n = {n}"),
            )])
        }
        other => Err(ClaimsError::UnknownClaim {
            id: other.to_owned(),
        }),
    }
}
