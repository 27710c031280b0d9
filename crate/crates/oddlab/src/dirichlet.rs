//! Dirichlet series `D_f(s) = Σ_{n>=1} f(n) / n^s` evaluated under an
//! explicit geometric decay certificate, so every reported value comes with
//! a rigorous truncation enclosure — plus the factored form `ζ(s) · Σ a_n`
//! kept as its own route so the two can be compared rather than conflated.

use crate::numeric::compensated_sum;
use crate::sequences::{assoc_value, common_ratio, series_sum_closed, SeriesEstimate};
use crate::special::{zeta, SpecialError, ZetaMethod, ZETA_DEFAULT_TERMS};

/// Default truncation depth. With the companion sequence's ratio this
/// leaves a tail below 1e-37 for every s >= 0.
pub const DF_DEFAULT_TERMS: u64 = 64;

/// Multiplicative slack when checking terms against the certificate, so a
/// bound that is met exactly in real arithmetic is not rejected over ulps.
const CERTIFICATE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DirichletError {
    #[error("at least one term is required")]
    NoTerms,
    #[error("decay certificate needs finite scale > 0 and ratio in (0, 1), got scale {scale}, ratio {ratio}")]
    BadCertificate { scale: f64, ratio: f64 },
    #[error("term {index} has |value| {term:e} above its certified bound {bound:e}")]
    CertificateViolation { index: u64, term: f64, bound: f64 },
    #[error("tail at s = {s} is not certifiable from {terms} terms (growth outruns the decay certificate)")]
    TailNotCertifiable { s: f64, terms: u64 },
    #[error("exponent must be finite, got {s}")]
    BadExponent { s: f64 },
    #[error("factored evaluation needs a finite s > 1, got {s}")]
    FactoredDomain { s: f64 },
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Certificate that `|f(n)| <= scale · ratio^n` for all n >= 1. The tail
/// bounds below are only as honest as this promise, so every evaluated term
/// is checked against it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayCertificate {
    scale: f64,
    ratio: f64,
}

impl DecayCertificate {
    pub fn new(scale: f64, ratio: f64) -> Result<Self, DirichletError> {
        if !(scale.is_finite() && scale > 0.0 && ratio > 0.0 && ratio < 1.0) {
            return Err(DirichletError::BadCertificate { scale, ratio });
        }
        Ok(DecayCertificate { scale, ratio })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// `scale · ratio^n`; zero once the exponent leaves `i32` range, by
    /// which point the bound has long underflowed anyway.
    pub fn bound_at(&self, n: u64) -> f64 {
        match i32::try_from(n) {
            Ok(k) => self.scale * self.ratio.powi(k),
            Err(_) => 0.0,
        }
    }
}

/// Where to evaluate: the exponent and the truncation depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletPoint {
    pub s: f64,
    pub terms: u64,
}

/// Evaluates `Σ_{n=1}^{terms} f(n)/n^s` with a compensated sum, checking
/// every term against the certificate, and encloses the full series using
/// the certified geometric tail. Nonnegative terms get the tight one-sided
/// interval; mixed signs fall back to a symmetric one.
pub fn dirichlet_eval<F>(
    f: F,
    certificate: &DecayCertificate,
    point: DirichletPoint,
) -> Result<SeriesEstimate, DirichletError>
where
    F: Fn(u64) -> f64,
{
    let DirichletPoint { s, terms } = point;
    if !s.is_finite() {
        return Err(DirichletError::BadExponent { s });
    }
    if terms == 0 {
        return Err(DirichletError::NoTerms);
    }
    let mut values = Vec::with_capacity(terms.min(1 << 20) as usize);
    let mut all_nonnegative = true;
    for n in 1..=terms {
        let term = f(n);
        let bound = certificate.bound_at(n);
        if term.abs() > bound * (1.0 + CERTIFICATE_SLACK) {
            return Err(DirichletError::CertificateViolation {
                index: n,
                term,
                bound,
            });
        }
        let value = term * (n as f64).powf(-s);
        if value < 0.0 {
            all_nonnegative = false;
        }
        values.push(value);
    }
    let partial = compensated_sum(values);
    let tail = certified_tail(certificate, s, terms)?;
    Ok(if all_nonnegative {
        SeriesEstimate::truncation(partial, terms, tail)
    } else {
        SeriesEstimate::symmetric(partial, terms, tail)
    })
}

/// Bound on `Σ_{n>terms} scale·ratio^n·n^{-s}`. For s >= 0 the summand
/// ratios never exceed the certificate ratio. For s < 0 the `n^{-s}` growth
/// is absorbed into the first-step ratio, which is the largest one; if
/// even that reaches 1 the tail cannot be certified from this depth.
fn certified_tail(
    certificate: &DecayCertificate,
    s: f64,
    terms: u64,
) -> Result<f64, DirichletError> {
    let next = terms.saturating_add(1);
    let first = certificate.bound_at(next) * (next as f64).powf(-s);
    let rho = if s >= 0.0 {
        certificate.ratio()
    } else {
        certificate.ratio() * ((next as f64 + 1.0) / next as f64).powf(-s)
    };
    if rho >= 1.0 {
        return Err(DirichletError::TailNotCertifiable { s, terms });
    }
    Ok(first / (1.0 - rho))
}

/// The decay certificate the companion sequence satisfies with equality:
/// `a_n = e · (2/e²)^n`.
pub fn assoc_certificate() -> DecayCertificate {
    DecayCertificate::new(std::f64::consts::E, common_ratio()).expect("constants are in range")
}

/// `D_f(s)` for the companion sequence `f(n) = a_n`.
pub fn df_eval(s: f64, terms: u64) -> Result<SeriesEstimate, DirichletError> {
    dirichlet_eval(
        assoc_value,
        &assoc_certificate(),
        DirichletPoint { s, terms },
    )
}

/// The factored form `ζ(s) · Σ_{n>=1} a_n`, which treats the series as if
/// the coefficients split off an Euler factor. Evaluated faithfully (direct
/// zeta at the default depth times the closed-form sum) precisely so it can
/// be compared against [`df_eval`] instead of silently replacing it.
pub fn df_paper_factored(s: f64) -> Result<f64, DirichletError> {
    if !s.is_finite() || s <= 1.0 {
        return Err(DirichletError::FactoredDomain { s });
    }
    let z = zeta(
        s,
        ZetaMethod::DirectSum {
            terms: ZETA_DEFAULT_TERMS,
        },
    )?;
    Ok(z.partial_sum * series_sum_closed())
}
