//! Exact counting and asymptotics of (skew-)reciprocal Littlewood
//! polynomials with square discriminant.
//!
//! A Littlewood polynomial has all coefficients in {+1, -1}. For the
//! reciprocal and skew-reciprocal families in degrees 8n and 8n-2, the number
//! of monic members with nonvanishing square discriminant has a closed
//! combinatorial form: a central term plus a sum of products of two
//! almost-central binomial coefficients over Pythagorean-parametrization
//! triples (k, r, s). This crate evaluates those formulas exactly, validates
//! them against an exhaustive discriminant oracle, reproduces the
//! `16^n log n / sqrt n` growth law with its limit constants, and runs the
//! odd-degree and forbidden-degree experiments.
//!
//! Modules:
//!
//! - [`poly`] — arbitrary-precision integer polynomials: resultants,
//!   discriminants, squarefreeness, cyclotomic factors, square tests.
//! - [`family`] — construction and enumeration of the two families and the
//!   evaluation-based square-discriminant criterion.
//! - [`counts`] — tuple enumeration and the exact counting formulas.
//! - [`lattice`] — lattice points in circle/hyperbolic sectors with parity
//!   and coprimality filters, Moebius inversion, box counters.
//! - [`asymptotics`] — the normalized ratio estimator, limit constants,
//!   quadrature of the limit integrals, convergence tables.
//! - [`oracle`] — brute-force scans and the showcase verifications.
//! - [`verify`] — the one-shot acceptance suite behind `lwd verify`.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `lwd` binary wraps everything behind a scriptable command line.

pub mod asymptotics;
pub mod cli;
pub mod counts;
pub mod error;
pub mod exec;
pub mod family;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod precise;
pub mod verify;

pub use counts::{count_family, family_probability, CountResult, PythTuple, Region};
pub use error::{Error, Result};
pub use family::{enumerate_family, square_criterion, Family, FamilySeed, LittlewoodCode};
pub use poly::{is_perfect_square, IntPolynomial};
