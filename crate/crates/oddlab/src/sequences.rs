//! The odd numbers `P_n = 2n - 1`, their companion terms
//! `a_n = 2^n · e^(1-2n)`, and certified summation of `Σ a_n`.
//!
//! The companion sequence is geometric in disguise: `a_n = e · q^n` with
//! `q = 2/e² ≈ 0.27067`, which gives three exact facts this module leans on:
//!
//! * `a_n · e^(P_n) = 2^n` (the defining identity),
//! * `a_{n+1}/a_n = q` for every n (constant d'Alembert ratio),
//! * `Σ_{n≥1} a_n = 2e/(e² - 2)` with geometric remainder `a_{N+1}/(1-q)`.

use std::f64::consts::{E, LN_2};

use crate::numeric::{compensated_sum, nudge_down, nudge_up};

/// Convergence margin for the ratio test: verdicts are only issued when the
/// limit clears 1 by more than this.
pub const RATIO_TEST_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("term index must be at least 1")]
    ZeroIndex,
    #[error("index {0} overflows the supported range")]
    IndexOverflow(u64),
    #[error("need at least {min} terms, got {got}")]
    TooFewTerms { min: u64, got: u64 },
}

/// The n-th odd number, `P_n = 2n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddTerm {
    pub index: u64,
    pub value: u64,
}

/// The companion term `a_n = 2^n · e^(1-2n)`, always positive in exact
/// arithmetic; in doubles it stays normal (and positive) up to n ≈ 550 and
/// underflows gradually beyond that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssociatedTerm {
    pub index: u64,
    pub value: f64,
}

/// Outcome of a d'Alembert ratio test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceVerdict {
    Convergent,
    Divergent,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioTestReport {
    pub limit_estimate: f64,
    pub terms_used: u64,
    pub verdict: ConvergenceVerdict,
}

/// A truncated series value together with a rigorous remainder bound.
///
/// `value_interval()` encloses the exact sum: one-sided
/// `[partial_sum, partial_sum + tail_bound]` for positive-term truncations,
/// symmetric around the estimate for corrected estimators that can land on
/// either side (the direct zeta sum). The interval ends are rounded outward
/// by one ulp so the enclosure survives the final additions' rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEstimate {
    pub partial_sum: f64,
    pub terms_used: u64,
    pub tail_bound: f64,
    lower: f64,
    upper: f64,
}

impl SeriesEstimate {
    /// Enclosure for a plain truncation of a positive-term series: the exact
    /// sum lies in `[partial_sum, partial_sum + tail_bound]`.
    pub(crate) fn truncation(partial_sum: f64, terms_used: u64, tail_bound: f64) -> Self {
        SeriesEstimate {
            partial_sum,
            terms_used,
            tail_bound,
            lower: partial_sum,
            upper: nudge_up(partial_sum + tail_bound),
        }
    }

    /// Symmetric enclosure `[center - radius, center + radius]` for estimators
    /// whose error envelope is two-sided.
    pub(crate) fn symmetric(center: f64, terms_used: u64, radius: f64) -> Self {
        SeriesEstimate {
            partial_sum: center,
            terms_used,
            tail_bound: radius,
            lower: nudge_down(center - radius),
            upper: nudge_up(center + radius),
        }
    }

    pub fn value_interval(&self) -> [f64; 2] {
        [self.lower, self.upper]
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// The common ratio `a_{n+1}/a_n = 2/e²`, evaluated as `2·exp(-2)` (the
/// doubling is exact in binary floating point).
pub fn common_ratio() -> f64 {
    2.0 * (-2.0_f64).exp()
}

/// `a_n` as a total function of the index: `e · (2/e²)^n`. Deep underflow
/// (n beyond ~750) returns 0.0, which is also where the exact value drops
/// below the smallest subnormal.
pub(crate) fn assoc_value(n: u64) -> f64 {
    match i32::try_from(n) {
        Ok(exp) => E * common_ratio().powi(exp),
        Err(_) => 0.0,
    }
}

/// The n-th odd number `P_n = 2n - 1`, n ≥ 1.
pub fn odd(n: u64) -> Result<OddTerm, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroIndex);
    }
    let value = n
        .checked_mul(2)
        .and_then(|d| d.checked_sub(1))
        .ok_or(SequenceError::IndexOverflow(n))?;
    Ok(OddTerm { index: n, value })
}

/// The companion term `a_n = 2^n · e^(1-2n)`, n ≥ 1, computed in the
/// geometric form `e · (2/e²)^n` which keeps the relative error near
/// machine precision for every index up to at least 500.
pub fn assoc_term(n: u64) -> Result<AssociatedTerm, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroIndex);
    }
    if i32::try_from(n).is_err() {
        return Err(SequenceError::IndexOverflow(n));
    }
    Ok(AssociatedTerm {
        index: n,
        value: assoc_value(n),
    })
}

/// Recovers the odd number from the companion term:
/// `P_n = n·ln 2 - ln(a_n)`. Goes through the computed `a_n`, so it is a
/// genuine round-trip rather than an algebraic restatement.
pub fn recover_odd(n: u64) -> Result<f64, SequenceError> {
    let term = assoc_term(n)?;
    Ok((n as f64) * LN_2 - term.value.ln())
}

/// D'Alembert ratio test on `Σ a_n` using `terms` terms (at least 2).
///
/// Successive terms satisfy `a_k/a_{k-1} = (2^k e^(1-2k))/(2^(k-1) e^(3-2k))`,
/// which cancels identically to `2e^(-2)` — so the quotient is evaluated in
/// cancelled form and does not drift with `terms`. The verdict compares the
/// limit against 1 with a `RATIO_TEST_MARGIN` guard band.
pub fn ratio_test(terms: u64) -> Result<RatioTestReport, SequenceError> {
    if terms < 2 {
        return Err(SequenceError::TooFewTerms { min: 2, got: terms });
    }
    let limit_estimate = common_ratio();
    let verdict = if !limit_estimate.is_finite() {
        ConvergenceVerdict::Inconclusive
    } else if limit_estimate < 1.0 - RATIO_TEST_MARGIN {
        ConvergenceVerdict::Convergent
    } else if limit_estimate > 1.0 + RATIO_TEST_MARGIN {
        ConvergenceVerdict::Divergent
    } else {
        ConvergenceVerdict::Inconclusive
    };
    Ok(RatioTestReport {
        limit_estimate,
        terms_used: terms,
        verdict,
    })
}

/// Compensated partial sum `Σ_{n=1..terms} a_n` with the exact geometric
/// remainder `a_{terms+1}/(1 - 2/e²)` as the tail bound.
pub fn partial_sum(terms: u64) -> Result<SeriesEstimate, SequenceError> {
    if terms == 0 {
        return Err(SequenceError::TooFewTerms { min: 1, got: 0 });
    }
    if i32::try_from(terms).is_err() {
        return Err(SequenceError::IndexOverflow(terms));
    }
    let sum = compensated_sum((1..=terms).map(assoc_value));
    let tail_bound = assoc_value(terms + 1) / (1.0 - common_ratio());
    Ok(SeriesEstimate::truncation(sum, terms, tail_bound))
}

/// Closed form of the full series: `Σ_{n≥1} a_n = 2e/(e² - 2)`.
pub fn series_sum_closed() -> f64 {
    2.0 * E / (E * E - 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_close(got: f64, want: f64, rel: f64) {
        let scale = want.abs().max(1e-300);
        assert!(
            (got - want).abs() <= rel * scale,
            "got {got:.17e}, want {want:.17e} (rel {:.3e})",
            (got - want).abs() / scale
        );
    }

    #[test]
    fn odd_anchors() {
        assert_eq!(odd(1).unwrap().value, 1);
        assert_eq!(odd(5).unwrap().value, 9);
        assert_eq!(odd(20).unwrap().value, 39);
        assert_eq!(odd(0), Err(SequenceError::ZeroIndex));
        assert!(matches!(
            odd(u64::MAX),
            Err(SequenceError::IndexOverflow(_))
        ));
    }

    #[test]
    fn assoc_term_anchors() {
        // 2/e, 4/e^3, 8/e^5, 2^10 e^-19 — frozen at 50-digit precision.
        assert_close(assoc_term(1).unwrap().value, 0.73575888234288465, 1e-15);
        assert_close(assoc_term(2).unwrap().value, 0.19914827347145577, 1e-15);
        assert_close(assoc_term(3).unwrap().value, 0.053903575992683737, 1e-15);
        assert_close(assoc_term(10).unwrap().value, 5.7372635520381620e-6, 1e-14);
        assert_close(assoc_term(30).unwrap().value, 2.5557915952774552e-17, 1e-13);
        assert_close(
            assoc_term(100).unwrap().value,
            4.7686743711074483e-57,
            1e-13,
        );
        assert_close(
            assoc_term(500).unwrap().value,
            4.5165873168655555e-284,
            1e-12,
        );
        assert_eq!(assoc_term(0), Err(SequenceError::ZeroIndex));
    }

    #[test]
    fn assoc_term_positive_through_contract_range() {
        for n in 1..=500 {
            let a = assoc_term(n).unwrap().value;
            assert!(a > 0.0 && a.is_finite(), "a_{n} = {a:e}");
        }
    }

    #[test]
    fn defining_identity_holds_to_twelve_digits() {
        for n in 1..=200u64 {
            let lhs = assoc_value(n) * ((2 * n - 1) as f64).exp();
            let rhs = 2.0_f64.powi(n as i32);
            assert!(
                ((lhs - rhs) / rhs).abs() <= 1e-12,
                "n = {n}: {lhs:.17e} vs {rhs:.17e}"
            );
        }
    }

    #[test]
    fn recover_odd_round_trips() {
        assert_close(recover_odd(5).unwrap(), 9.0, 1e-14);
        assert_close(recover_odd(20).unwrap(), 39.0, 1e-14);
        for n in 1..=200u64 {
            let got = recover_odd(n).unwrap();
            let want = (2 * n - 1) as f64;
            assert!((got - want).abs() <= 1e-10, "n = {n}: {got:.17e}");
        }
        assert_eq!(recover_odd(0), Err(SequenceError::ZeroIndex));
    }

    #[test]
    fn ratio_matches_term_quotients() {
        // The cancelled form must agree with the data-driven quotient.
        let limit = ratio_test(2).unwrap().limit_estimate;
        for k in 2..=400u64 {
            let quotient = assoc_value(k) / assoc_value(k - 1);
            assert!(
                ((quotient - limit) / limit).abs() <= 1e-13,
                "k = {k}: quotient {quotient:.17e} vs limit {limit:.17e}"
            );
        }
    }

    #[test]
    fn ratio_test_reports_convergence() {
        let report = ratio_test(64).unwrap();
        assert_close(report.limit_estimate, 0.27067056647322538, 1e-15);
        assert_eq!(report.verdict, ConvergenceVerdict::Convergent);
        assert_eq!(report.terms_used, 64);
        assert_eq!(
            ratio_test(1),
            Err(SequenceError::TooFewTerms { min: 2, got: 1 })
        );
    }

    #[test]
    fn partial_sum_anchors() {
        let one = partial_sum(1).unwrap();
        assert_eq!(one.partial_sum, assoc_term(1).unwrap().value);
        assert_close(one.tail_bound, 0.27305667962479782, 1e-13);

        let sixty = partial_sum(60).unwrap();
        assert_close(sixty.partial_sum, 1.0088155619676825, 1e-13);
        assert!(sixty.tail_bound < 1e-33);

        assert!(matches!(
            partial_sum(0),
            Err(SequenceError::TooFewTerms { min: 1, got: 0 })
        ));
    }

    #[test]
    fn partial_sums_enclose_the_closed_form() {
        let total = series_sum_closed();
        for n in 1..=100 {
            let est = partial_sum(n).unwrap();
            assert!(
                est.contains(total),
                "N = {n}: {total:.17e} outside [{:.17e}, {:.17e}]",
                est.value_interval()[0],
                est.value_interval()[1]
            );
        }
    }

    #[test]
    fn tail_bound_is_nonincreasing() {
        let mut prev = f64::INFINITY;
        for n in 1..=100 {
            let tail = partial_sum(n).unwrap().tail_bound;
            assert!(tail >= 0.0 && tail <= prev, "N = {n}");
            prev = tail;
        }
    }

    #[test]
    fn partial_sums_increase_while_terms_are_representable() {
        // a_29 is the first term below half an ulp of the running sum, so
        // strict growth is only guaranteed through N = 28.
        let mut prev = 0.0;
        for n in 1..=28 {
            let sum = partial_sum(n).unwrap().partial_sum;
            assert!(sum > prev, "N = {n}");
            prev = sum;
        }
    }

    #[test]
    fn closed_form_value() {
        assert_close(series_sum_closed(), 1.0088155619676825, 1e-15);
        // The full sum is emphatically not the common ratio.
        assert!((series_sum_closed() - common_ratio()).abs() > 0.7);
    }

    proptest! {
        #[test]
        fn geometric_recurrence(n in 1u64..=400) {
            let a = assoc_value(n);
            let next = assoc_value(n + 1);
            prop_assert!((next - common_ratio() * a).abs() <= 1e-13 * a.abs());
        }

        #[test]
        fn ratio_limit_is_index_independent(k in 2u64..=10_000) {
            // Bitwise identical for every sample, not merely close.
            prop_assert_eq!(
                ratio_test(k).unwrap().limit_estimate.to_bits(),
                ratio_test(2).unwrap().limit_estimate.to_bits()
            );
        }

        #[test]
        fn interval_always_contains_the_limit(n in 1u64..=300) {
            prop_assert!(partial_sum(n).unwrap().contains(series_sum_closed()));
        }
    }
}
