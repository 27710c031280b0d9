//! Multiplicative number theory on top of a shared Eratosthenes sieve:
//! factorization, Möbius μ, von Mangoldt Λ (with an explicit log base),
//! divisor log-sums and their Möbius inversion, prime counting, a
//! multiplicativity counterexample search for `f(n) = a_n`, and Goldbach
//! decompositions with the smallest-prime witness.

use std::collections::BTreeMap;

use crate::numeric::compensated_sum;
use crate::sequences::assoc_value;

/// Ceiling on sieve sizes unless a caller raises it explicitly (the CLI maps
/// the `ODDLAB_SIEVE_GUARD` environment variable onto the `with_guard`
/// entry points).
pub const DEFAULT_SIEVE_GUARD: u64 = 100_000_000;

/// Absolute-ish threshold used by [`multiplicativity_search`]:
/// a pair counts as a counterexample when
/// `|f(mn) - f(m)f(n)| > 1e-12 · max(1, |f(mn)|)`.
pub const MULTIPLICATIVITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ArithmeticError {
    #[error("n must be positive")]
    ZeroInput,
    #[error("sieve limit must be at least 2, got {got}")]
    SieveLimitTooSmall { got: u64 },
    #[error("requested limit {requested} exceeds the sieve guard {guard}")]
    SieveGuardExceeded { requested: u64, guard: u64 },
    #[error("r-factor is singular at n = 1 (log10 1 = 0)")]
    LogSingularity,
    #[error("prime count needs a finite x >= 0, got {got}")]
    PrimeCountDomain { got: f64 },
    #[error("Goldbach decomposition needs an even n >= 4, got {got}")]
    GoldbachDomain { got: u64 },
    #[error("no Goldbach witness for {n} — a disproof if it ever fires")]
    GoldbachNoWitness { n: u64 },
}

/// Logarithm base for Λ and the divisor log-sums. The Chebyshev identity
/// `Σ_{d|n} Λ(d) = log n` holds in either base; base ten is what makes the
/// r-factor prefactor cancel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Natural,
    Ten,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Ten => x.log10(),
        }
    }
}

/// Bit-packed Eratosthenes sieve over `[0, limit]`, immutable once built.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: u64,
    words: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Result<Self, ArithmeticError> {
        Self::with_guard(limit, DEFAULT_SIEVE_GUARD)
    }

    pub fn with_guard(limit: u64, guard: u64) -> Result<Self, ArithmeticError> {
        if limit < 2 {
            return Err(ArithmeticError::SieveLimitTooSmall { got: limit });
        }
        if limit > guard {
            return Err(ArithmeticError::SieveGuardExceeded {
                requested: limit,
                guard,
            });
        }
        let words = vec![u64::MAX; (limit / 64 + 1) as usize];
        let mut sieve = PrimeSieve { limit, words };
        sieve.clear(0);
        sieve.clear(1);
        let mut p = 2u64;
        while p * p <= limit {
            if sieve.bit(p) {
                let mut multiple = p * p;
                while multiple <= limit {
                    sieve.clear(multiple);
                    multiple += p;
                }
            }
            p += 1;
        }
        // Clear the slack bits above `limit` so popcounts equal prime counts.
        for n in (limit + 1)..(sieve.words.len() as u64 * 64) {
            sieve.clear(n);
        }
        Ok(sieve)
    }

    fn bit(&self, n: u64) -> bool {
        (self.words[(n / 64) as usize] >> (n % 64)) & 1 == 1
    }

    fn clear(&mut self, n: u64) {
        self.words[(n / 64) as usize] &= !(1u64 << (n % 64));
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality lookup. Panics if `n` exceeds the sieve limit — that is a
    /// caller bug, not a data condition.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "is_prime({n}) beyond sieve limit {}",
            self.limit
        );
        self.bit(n)
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(move |&n| self.bit(n))
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

/// The primes up to `limit` as a vector (guarded sieve underneath).
pub fn sieve_primes(limit: u64) -> Result<Vec<u64>, ArithmeticError> {
    Ok(PrimeSieve::new(limit)?.primes().collect())
}

/// Prime factorization as an ordered prime → exponent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: BTreeMap<u64, u32>,
}

impl Factorization {
    /// All divisors of `n`, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divisors = vec![1u64];
        for (&p, &e) in &self.factors {
            let mut extended = Vec::with_capacity(divisors.len() * (e as usize + 1));
            for &d in &divisors {
                let mut value = d;
                extended.push(value);
                for _ in 0..e {
                    value *= p;
                    extended.push(value);
                }
            }
            divisors = extended;
        }
        divisors.sort_unstable();
        divisors
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.values().all(|&e| e == 1)
    }
}

/// Trial division against the sieve of primes up to √n.
pub fn factorize(n: u64) -> Result<Factorization, ArithmeticError> {
    if n == 0 {
        return Err(ArithmeticError::ZeroInput);
    }
    let mut factors = BTreeMap::new();
    let mut rest = n;
    let root = isqrt(n);
    if root >= 2 {
        let sieve = PrimeSieve::new(root)?;
        for p in sieve.primes() {
            if p * p > rest {
                break;
            }
            while rest % p == 0 {
                rest /= p;
                *factors.entry(p).or_insert(0u32) += 1;
            }
        }
    }
    if rest > 1 {
        *factors.entry(rest).or_insert(0) += 1;
    }
    Ok(Factorization { n, factors })
}

/// Möbius μ(n): 0 on square divisors, otherwise (-1)^(number of primes).
pub fn mobius(n: u64) -> Result<i32, ArithmeticError> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Von Mangoldt Λ(n): `log p` when n is a power of the single prime p,
/// zero otherwise (including n = 1).
pub fn von_mangoldt(n: u64, base: LogBase) -> Result<f64, ArithmeticError> {
    let f = factorize(n)?;
    if f.factors.len() == 1 {
        let (&p, _) = f.factors.iter().next().expect("single entry");
        Ok(base.log(p as f64))
    } else {
        Ok(0.0)
    }
}

/// `Σ_{d|n} Λ(d)`, summed over the actual divisors so the Chebyshev
/// identity `= log n` stays a cross-check rather than the implementation.
pub fn divisor_lambda_sum(n: u64, base: LogBase) -> Result<f64, ArithmeticError> {
    let divisors = factorize(n)?.divisors();
    let mut terms = Vec::with_capacity(divisors.len());
    for d in divisors {
        terms.push(von_mangoldt(d, base)?);
    }
    Ok(compensated_sum(terms))
}

/// Möbius inversion of the divisor log-sum: `Σ_{d|n} μ(d) · log(n/d)`,
/// which should reproduce Λ(n) in the same base.
pub fn lambda_by_inversion(n: u64, base: LogBase) -> Result<f64, ArithmeticError> {
    let divisors = factorize(n)?.divisors();
    let mut terms = Vec::with_capacity(divisors.len());
    for d in divisors {
        terms.push(f64::from(mobius(d)?) * base.log((n / d) as f64));
    }
    Ok(compensated_sum(terms))
}

/// `r(n) = a_n / log10 n`, the factor tying the companion term to base-ten
/// logarithms. Singular at n = 1.
pub fn r_factor(n: u64) -> Result<f64, ArithmeticError> {
    match n {
        0 => Err(ArithmeticError::ZeroInput),
        1 => Err(ArithmeticError::LogSingularity),
        _ => Ok(assoc_value(n) / (n as f64).log10()),
    }
}

/// π(x): primes up to ⌊x⌋, by sieving.
pub fn prime_count(x: f64) -> Result<u64, ArithmeticError> {
    if !x.is_finite() || x < 0.0 {
        return Err(ArithmeticError::PrimeCountDomain { got: x });
    }
    let cap = x.floor();
    if cap < 2.0 {
        return Ok(0);
    }
    Ok(PrimeSieve::new(cap as u64)?.count())
}

/// First pair at which `f(n) = a_n` fails to be multiplicative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicativityCounterexample {
    pub m: u64,
    pub n: u64,
    pub f_mn: f64,
    pub f_m_times_f_n: f64,
}

/// Searches for a multiplicativity counterexample of `f(n) = a_n` among
/// coprime pairs `2 <= m < n <= max_n` in lexicographic order, then the
/// pairs `(1, n)` for `n = 2..=max_n`. Returns the first pair whose product
/// rule breaks [`MULTIPLICATIVITY_TOLERANCE`], or `None` (vacuously for
/// `max_n < 2`).
pub fn multiplicativity_search(max_n: u64) -> Option<MultiplicativityCounterexample> {
    let breaks = |m: u64, n: u64| -> Option<MultiplicativityCounterexample> {
        let f_mn = assoc_value(m.saturating_mul(n));
        let f_m_times_f_n = assoc_value(m) * assoc_value(n);
        let gap = (f_mn - f_m_times_f_n).abs();
        (gap > MULTIPLICATIVITY_TOLERANCE * 1.0_f64.max(f_mn.abs())).then_some(
            MultiplicativityCounterexample {
                m,
                n,
                f_mn,
                f_m_times_f_n,
            },
        )
    };
    for m in 2..=max_n {
        for n in (m + 1)..=max_n {
            if gcd(m, n) == 1 {
                if let Some(cx) = breaks(m, n) {
                    return Some(cx);
                }
            }
        }
    }
    for n in 2..=max_n {
        if let Some(cx) = breaks(1, n) {
            return Some(cx);
        }
    }
    None
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A verified decomposition `n = p + q` with both parts prime and `p` the
/// smallest possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldbachWitness {
    pub n: u64,
    pub p: u64,
    pub q: u64,
}

/// Smallest-prime Goldbach witness for an even `n >= 4`.
pub fn goldbach_decompose(n: u64) -> Result<GoldbachWitness, ArithmeticError> {
    goldbach_decompose_with_guard(n, DEFAULT_SIEVE_GUARD)
}

pub fn goldbach_decompose_with_guard(
    n: u64,
    guard: u64,
) -> Result<GoldbachWitness, ArithmeticError> {
    if n < 4 || n % 2 != 0 {
        return Err(ArithmeticError::GoldbachDomain { got: n });
    }
    let sieve = PrimeSieve::with_guard(n, guard)?;
    witness_from(&sieve, n).ok_or(ArithmeticError::GoldbachNoWitness { n })
}

fn witness_from(sieve: &PrimeSieve, n: u64) -> Option<GoldbachWitness> {
    sieve
        .primes()
        .take_while(|&p| p <= n / 2)
        .find(|&p| sieve.is_prime(n - p))
        .map(|p| GoldbachWitness { n, p, q: n - p })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbachScanReport {
    /// Largest even number checked (input rounded down to even).
    pub max_even: u64,
    pub verified: u64,
    /// The witness with the largest minimal prime seen in the scan
    /// (first n on ties).
    pub largest_minimal_witness: GoldbachWitness,
    /// Evens with no witness; nonempty would disprove the conjecture.
    pub failures: Vec<u64>,
}

/// Checks every even `n` in `[4, max_even]` for a Goldbach witness against
/// one shared sieve, ascending, and reports the extremal witness.
pub fn goldbach_scan(max_even: u64) -> Result<GoldbachScanReport, ArithmeticError> {
    goldbach_scan_with_guard(max_even, DEFAULT_SIEVE_GUARD)
}

pub fn goldbach_scan_with_guard(
    max_even: u64,
    guard: u64,
) -> Result<GoldbachScanReport, ArithmeticError> {
    if max_even < 4 {
        return Err(ArithmeticError::GoldbachDomain { got: max_even });
    }
    let top = max_even - max_even % 2;
    let sieve = PrimeSieve::with_guard(top, guard)?;
    let mut verified = 0u64;
    let mut failures = Vec::new();
    let mut best: Option<GoldbachWitness> = None;
    for n in (4..=top).step_by(2) {
        match witness_from(&sieve, n) {
            Some(w) => {
                verified += 1;
                if best.map_or(true, |b| w.p > b.p) {
                    best = Some(w);
                }
            }
            None => failures.push(n),
        }
    }
    Ok(GoldbachScanReport {
        max_even: top,
        verified,
        largest_minimal_witness: best.expect("at least n = 4 is scanned"),
        failures,
    })
}

/// Integer square root: largest r with r² <= n.
fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= n) {
        r += 1;
    }
    r
}
