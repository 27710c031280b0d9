//! Numerical audit bench for the geometric-style sequence
//! `a_n = 2^n · e^(1-2n)` and the identities claimed around it.
//!
//! The crate is organised as a pipeline of small modules:
//!
//! * [`sequences`] — the odd numbers `P_n = 2n - 1`, the associated terms
//!   `a_n`, d'Alembert ratio testing, and certified partial sums.
//! * [`arithmetic`] — prime sieve, factorization, Möbius, von Mangoldt,
//!   divisor log-sums, a multiplicativity counterexample search, and
//!   Goldbach decompositions.
//! * [`special`] — gamma, two independent zeta evaluators, the dilogarithm,
//!   and the gamma composite `X(s)`.
//! * [`dirichlet`] — a generic Dirichlet-series evaluator with geometric
//!   decay certificates, plus `D_f(s) = Σ a_n n^(-s)` and the (invalid)
//!   factored form kept as an auditable claim.
//! * [`claims`] — the C1..C10 ledger that re-computes both sides of each
//!   claimed identity and reports holds/fails verdicts with residuals.
//! * [`cli`] — the `oddlab` command-line surface over all of the above.
//!
//! Everything is plain `f64` with fixed summation orders, so every operation
//! is bit-for-bit deterministic across runs.

pub mod arithmetic;
pub mod claims;
pub mod cli;
pub mod dirichlet;
mod numeric;
pub mod sequences;
pub mod special;

pub use sequences::SeriesEstimate;
