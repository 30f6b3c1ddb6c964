//! Brute-force ground truth: exhaustive discriminant scans over Littlewood
//! polynomials, the forbidden-degree verification, the all-ones discriminant
//! identity and the odd-degree experiments.
//!
//! The oracle always computes full discriminants, never the family
//! square-criterion — the two paths stay independent so each can check the
//! other.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::exec;
use crate::family::{enumerate_family_guarded, Family, LittlewoodCode};
use crate::poly::{is_perfect_square, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Reciprocal,
    Skew,
    All,
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scope::Reciprocal => write!(f, "reciprocal"),
            Scope::Skew => write!(f, "skew"),
            Scope::All => write!(f, "all"),
        }
    }
}

impl std::str::FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reciprocal" | "rec" => Ok(Scope::Reciprocal),
            "skew" => Ok(Scope::Skew),
            "all" => Ok(Scope::All),
            other => Err(Error::InvalidInput(format!("unknown scope '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Exhaustive enumerations are capped at 2^guard_bits polynomials.
    pub guard_bits: u32,
    pub threads: usize,
    /// Opt-in for the multi-hour scans (odd degrees above 21, up to 29).
    pub long_run: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { guard_bits: 25, threads: 1, long_run: false }
    }
}

/// Everything recorded about one odd-degree polynomial with nonvanishing
/// square discriminant.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    /// Full coefficient mask (bit j set = coefficient of X^j is +1,
    /// top bit set = monic); decodes via [`LittlewoodCode`].
    pub mask: u64,
    pub disc_is_square: bool,
    pub cyclotomic_factors: Vec<u64>,
    pub divisible_by_x_plus_1: bool,
    pub divisible_by_x_minus_1: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub degree: u64,
    pub total_polys: u64,
    pub square_disc_count: u64,
    pub vanishing_disc_count: u64,
    pub witnesses: Vec<WitnessRecord>,
}

const BLOCK_BITS: u32 = 14;

/// Shared scan core over monic mask ranges: counts square discriminants
/// (zero included) and vanishing discriminants for masks in
/// `[from, to)`, optionally collecting witness records for nonzero squares.
fn scan_block(
    degree: u64,
    from: u64,
    to: u64,
    collect_witnesses: bool,
) -> (u64, u64, Vec<WitnessRecord>) {
    let mut square = 0u64;
    let mut vanishing = 0u64;
    let mut witnesses = Vec::new();
    for mask in from..to {
        let full_mask = mask | (1 << degree);
        let code = LittlewoodCode { degree, mask: full_mask };
        let p = code.to_polynomial();
        let disc = if degree == 1 {
            BigInt::from(1)
        } else {
            p.discriminant().expect("degree >= 1")
        };
        if disc.is_zero() {
            vanishing += 1;
            square += 1; // zero is a square; callers separate the two counts
            continue;
        }
        if is_perfect_square(&disc) {
            square += 1;
            if collect_witnesses {
                let one = BigInt::from(1);
                let minus_one = BigInt::from(-1);
                witnesses.push(WitnessRecord {
                    mask: full_mask,
                    disc_is_square: true,
                    cyclotomic_factors: p.cyclotomic_factors(),
                    divisible_by_x_plus_1: p.evaluate(&minus_one).is_zero(),
                    divisible_by_x_minus_1: p.evaluate(&one).is_zero(),
                });
            }
        }
    }
    (square, vanishing, witnesses)
}

/// Runs `scan_block` over `[0, 2^degree)` in fixed blocks, merged in block
/// order; output is independent of the thread count.
fn scan_all_masks(
    degree: u64,
    opts: &OracleOptions,
    collect_witnesses: bool,
) -> (u64, u64, Vec<WitnessRecord>) {
    let total: u64 = 1 << degree;
    let block = 1u64 << BLOCK_BITS.min(degree as u32);
    let blocks: Vec<u64> = (0..total).step_by(block as usize).collect();
    let parts: Vec<(u64, u64, Vec<WitnessRecord>)> = if opts.threads > 1 {
        exec::pool(opts.threads).install(|| {
            blocks
                .par_iter()
                .map(|&from| scan_block(degree, from, (from + block).min(total), collect_witnesses))
                .collect()
        })
    } else {
        blocks
            .iter()
            .map(|&from| scan_block(degree, from, (from + block).min(total), collect_witnesses))
            .collect()
    };
    let mut square = 0;
    let mut vanishing = 0;
    let mut witnesses = Vec::new();
    for (s, v, mut w) in parts {
        square += s;
        vanishing += v;
        witnesses.append(&mut w);
    }
    (square, vanishing, witnesses)
}

fn check_guard(free_bits: u32, opts: &OracleOptions) -> Result<()> {
    if free_bits > opts.guard_bits {
        return Err(Error::EnumerationTooLarge { bits: free_bits, guard: opts.guard_bits });
    }
    Ok(())
}

/// Exhaustive count of monic polynomials in scope whose discriminant is a
/// perfect square (nonzero required when `require_nonzero`). Family scopes
/// enumerate 2^(degree/2) seeds, the all-scope 2^degree masks.
pub fn brute_count(
    scope: Scope,
    degree: u64,
    require_nonzero: bool,
    opts: &OracleOptions,
) -> Result<u64> {
    if degree == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    match scope {
        Scope::All => {
            check_guard(degree as u32, opts)?;
            let (square, vanishing, _) = scan_all_masks(degree, opts, false);
            Ok(if require_nonzero { square - vanishing } else { square })
        }
        Scope::Reciprocal | Scope::Skew => {
            if degree % 2 != 0 {
                return Err(Error::OddDegree(degree));
            }
            check_guard((degree / 2) as u32, opts)?;
            let family = match scope {
                Scope::Reciprocal => Family::Reciprocal,
                _ => Family::Skew,
            };
            let seeds: Vec<_> =
                enumerate_family_guarded(family, degree, true, 2 * opts.guard_bits as u64)?
                    .collect();
            let counts: Vec<(u64, u64)> = if opts.threads > 1 {
                exec::pool(opts.threads).install(|| {
                    seeds
                        .par_chunks(1 << BLOCK_BITS)
                        .map(|chunk| count_seed_chunk(chunk))
                        .collect()
                })
            } else {
                seeds
                    .chunks(1 << BLOCK_BITS)
                    .map(count_seed_chunk)
                    .collect()
            };
            let square: u64 = counts.iter().map(|c| c.0).sum();
            let vanishing: u64 = counts.iter().map(|c| c.1).sum();
            Ok(if require_nonzero { square - vanishing } else { square })
        }
    }
}

fn count_seed_chunk(chunk: &[crate::family::FamilySeed]) -> (u64, u64) {
    let mut square = 0;
    let mut vanishing = 0;
    for seed in chunk {
        let disc = seed.build().discriminant().expect("degree >= 2");
        if disc.is_zero() {
            vanishing += 1;
            square += 1;
        } else if is_perfect_square(&disc) {
            square += 1;
        }
    }
    (square, vanishing)
}

/// Verifies that no Littlewood polynomial of the given degrees (all congruent
/// to 2 or 4 mod 8) has square discriminant. Zero discriminants cannot occur
/// in even degree (every even-degree Littlewood polynomial is separable);
/// this is asserted along the way, so "square" unambiguously means a nonzero
/// square here.
pub fn verify_entin(degrees: &[u64], opts: &OracleOptions) -> Result<bool> {
    for &d in degrees {
        if d % 8 != 2 && d % 8 != 4 {
            return Err(Error::WrongResidueClass { degree: d });
        }
        check_guard(d as u32, opts)?;
        let (square, vanishing, _) = scan_all_masks(d, opts, false);
        assert_eq!(vanishing, 0, "even-degree Littlewood polynomials are separable");
        if square != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the closed form `disc(p_n) = (-1)^(n(n-1)/2) (n+1)^(n-1)` for
/// `p_n = X^n + ... + X + 1`, plus the mod-8 dichotomy for even n:
/// the residue is 5 exactly when n = 2, 4 (mod 8) and 1 otherwise.
pub fn disc_pn_check(n_values: &[u64]) -> Result<bool> {
    for &n in n_values {
        if n == 0 || n > 200 {
            return Err(Error::InvalidInput(format!(
                "all-ones discriminant check supports 1 <= n <= 200, got {n}"
            )));
        }
        let p = IntPolynomial::from_coeffs_i64(&vec![1i64; n as usize + 1]);
        let disc = p.discriminant()?;
        let mut closed = BigInt::from(n + 1).pow(n as u32 - 1);
        if (n * (n - 1) / 2) % 2 == 1 {
            closed = -closed;
        }
        if disc != closed {
            return Ok(false);
        }
        if n % 2 == 0 {
            let residue = ((&disc % 8i32) + 8i32) % 8i32;
            let expected = if n % 8 == 2 || n % 8 == 4 { 5 } else { 1 };
            if residue != BigInt::from(expected) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Scans every monic Littlewood polynomial of each odd degree up to
/// `max_degree`, recording all nonvanishing square discriminants with their
/// cyclotomic factors and X+1 / X-1 divisibility. Degrees above 21 need the
/// long-run opt-in (29 is the practical ceiling).
pub fn odd_degree_scan(max_degree: u64, opts: &OracleOptions) -> Result<Vec<ScanReport>> {
    odd_degree_scan_impl(max_degree, opts, None)
}

/// As [`odd_degree_scan`], persisting progress to a resumable checkpoint
/// file after every mask block.
pub fn odd_degree_scan_resumable(
    max_degree: u64,
    opts: &OracleOptions,
    checkpoint_path: &Path,
) -> Result<Vec<ScanReport>> {
    odd_degree_scan_impl(max_degree, opts, Some(checkpoint_path))
}

fn odd_degree_scan_impl(
    max_degree: u64,
    opts: &OracleOptions,
    checkpoint_path: Option<&Path>,
) -> Result<Vec<ScanReport>> {
    if max_degree % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "odd-degree scan needs an odd maximum, got {max_degree}"
        )));
    }
    let cap = if opts.long_run { 29 } else { 21.min(opts.guard_bits as u64) };
    if max_degree > cap {
        return Err(Error::EnumerationTooLarge {
            bits: max_degree as u32,
            guard: cap as u32,
        });
    }
    let mut checkpoint = match checkpoint_path {
        Some(p) => Checkpoint::load(p)?,
        None => Checkpoint::default(),
    };
    let mut reports = Vec::new();
    for degree in (1..=max_degree).step_by(2) {
        let total: u64 = 1 << degree;
        let mut entry = checkpoint.entries.get(&degree).cloned().unwrap_or_default();
        if entry.next_mask >= total {
            reports.push(entry.to_report(degree));
            continue;
        }
        let block = 1u64 << BLOCK_BITS.min(degree as u32);
        while entry.next_mask < total {
            let from = entry.next_mask;
            let to = (from + block).min(total);
            let (square, vanishing, mut witnesses) = if opts.threads > 1 && to - from > 4096 {
                scan_range_parallel(degree, from, to, opts)
            } else {
                scan_block(degree, from, to, true)
            };
            entry.square += square;
            entry.vanishing += vanishing;
            entry.witnesses.append(&mut witnesses);
            entry.next_mask = to;
            if let Some(path) = checkpoint_path {
                checkpoint.entries.insert(degree, entry.clone());
                checkpoint.save(path)?;
            }
        }
        checkpoint.entries.insert(degree, entry.clone());
        reports.push(entry.to_report(degree));
    }
    Ok(reports)
}

fn scan_range_parallel(
    degree: u64,
    from: u64,
    to: u64,
    opts: &OracleOptions,
) -> (u64, u64, Vec<WitnessRecord>) {
    let step = ((to - from) / (4 * opts.threads as u64)).max(1024);
    let starts: Vec<u64> = (from..to).step_by(step as usize).collect();
    let parts: Vec<_> = exec::pool(opts.threads).install(|| {
        starts
            .par_iter()
            .map(|&s| scan_block(degree, s, (s + step).min(to), true))
            .collect()
    });
    let mut square = 0;
    let mut vanishing = 0;
    let mut witnesses = Vec::new();
    for (s, v, mut w) in parts {
        square += s;
        vanishing += v;
        witnesses.append(&mut w);
    }
    (square, vanishing, witnesses)
}

/// Resumable scan state, one entry per degree.
#[derive(Clone, Debug, Default)]
pub struct CheckpointEntry {
    pub next_mask: u64,
    pub square: u64,
    pub vanishing: u64,
    pub witnesses: Vec<WitnessRecord>,
}

impl CheckpointEntry {
    fn to_report(&self, degree: u64) -> ScanReport {
        ScanReport {
            degree,
            total_polys: 1 << degree,
            square_disc_count: self.square,
            vanishing_disc_count: self.vanishing,
            witnesses: self.witnesses.clone(),
        }
    }
}

/// Plain-text checkpoint file: one tab-separated line per degree with the
/// next unscanned mask, the partial counts and the witness masks found so
/// far. Rewritten atomically (temp file + rename).
#[derive(Clone, Debug, Default)]
pub struct Checkpoint {
    pub entries: BTreeMap<u64, CheckpointEntry>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Checkpoint> {
        if !path.exists() {
            return Ok(Checkpoint::default());
        }
        let text = std::fs::read_to_string(path)?;
        let mut entries = BTreeMap::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 6 {
                return Err(Error::InvalidInput(format!(
                    "malformed checkpoint line: {line:?}"
                )));
            }
            let parse = |s: &str| -> Result<u64> {
                s.parse()
                    .map_err(|_| Error::InvalidInput(format!("bad checkpoint number {s:?}")))
            };
            let degree = parse(fields[0])?;
            let witness_masks: Vec<u64> = if fields[5].is_empty() {
                Vec::new()
            } else {
                fields[5]
                    .split(',')
                    .map(parse)
                    .collect::<Result<Vec<u64>>>()?
            };
            // Witness metadata is recomputed from the mask on load; the mask
            // alone pins the polynomial.
            let witnesses = witness_masks
                .iter()
                .map(|&mask| {
                    let code = LittlewoodCode { degree, mask };
                    let p = code.to_polynomial();
                    let one = BigInt::from(1);
                    let minus_one = BigInt::from(-1);
                    WitnessRecord {
                        mask,
                        disc_is_square: true,
                        cyclotomic_factors: p.cyclotomic_factors(),
                        divisible_by_x_plus_1: p.evaluate(&minus_one).is_zero(),
                        divisible_by_x_minus_1: p.evaluate(&one).is_zero(),
                    }
                })
                .collect();
            entries.insert(
                degree,
                CheckpointEntry {
                    next_mask: parse(fields[1])?,
                    square: parse(fields[3])?,
                    vanishing: parse(fields[4])?,
                    witnesses,
                },
            );
            // field[2] (scanned) is redundant with next_mask; kept for
            // human inspection.
        }
        Ok(Checkpoint { entries })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            for (degree, e) in &self.entries {
                let masks: Vec<String> =
                    e.witnesses.iter().map(|w| w.mask.to_string()).collect();
                writeln!(
                    f,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    degree,
                    e.next_mask,
                    e.next_mask,
                    e.square,
                    e.vanishing,
                    masks.join(",")
                )?;
            }
            f.flush()?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// The nearly-reciprocal vanishing-discriminant construction in degree 2n+1:
/// `(X^(n+1) - 1)(X^n + ... + 1) = (X-1)(X^n + ... + 1)^2`.
pub fn repeated_factor_witness(degree: u64) -> Result<IntPolynomial> {
    if degree % 2 == 0 || degree < 3 {
        return Err(Error::InvalidInput(format!(
            "the repeated-factor construction needs odd degree >= 3, got {degree}"
        )));
    }
    let n = (degree - 1) / 2;
    let ones = IntPolynomial::from_coeffs_i64(&vec![1i64; n as usize + 1]);
    Ok(IntPolynomial::x_power_minus_one(n as usize + 1).mul(&ones))
}

/// The degree-18 cofactor of the known Littlewood polynomial with a repeated
/// non-cyclotomic factor.
pub fn repeated_factor_cofactor() -> IntPolynomial {
    let mut coeffs = vec![0i64; 19];
    for (e, c) in [
        (0, 1),
        (3, 2),
        (5, 2),
        (6, 1),
        (7, 2),
        (8, 3),
        (10, 3),
        (11, 2),
        (12, 1),
        (13, 2),
        (15, 2),
        (16, 1),
        (18, 1),
    ] {
        coeffs[e] = c;
    }
    IntPolynomial::from_coeffs_i64(&coeffs)
}

/// The degree-27 Littlewood polynomial divisible by (X^3 + X^2 - 1)^2.
pub fn repeated_factor_littlewood() -> IntPolynomial {
    let cubic = IntPolynomial::from_coeffs_i64(&[-1, 0, 1, 1]);
    repeated_factor_cofactor()
        .mul(&IntPolynomial::from_coeffs_i64(&[1, 0, 1])) // X^2 + 1
        .mul(&IntPolynomial::from_coeffs_i64(&[-1, 1])) // X - 1
        .mul(&cubic)
        .mul(&cubic)
}

/// The degree-11 Littlewood polynomial with vanishing discriminant that is
/// not a product of nearly (skew-)reciprocal factors:
/// `(X+1)^2 (X^2 - X + 1) (X^7 - X^5 + X^4 - X^3 + X^2 + 1)`.
pub fn non_reciprocal_vanishing_example() -> IntPolynomial {
    let a = IntPolynomial::from_coeffs_i64(&[1, 1]);
    let b = IntPolynomial::from_coeffs_i64(&[1, -1, 1]);
    let c = IntPolynomial::from_coeffs_i64(&[1, 0, 1, -1, 1, -1, 0, 1]);
    a.mul(&a).mul(&b).mul(&c)
}

#[derive(Clone, Debug, Serialize)]
pub struct ShowcaseReport {
    pub ok: bool,
    pub issues: Vec<String>,
}

/// Expands both displayed products exactly and checks the claims made about
/// them: the degree-27 product has all coefficients in {+1,-1}, is divisible
/// by the square of the non-cyclotomic cubic X^3+X^2-1 (hence not
/// squarefree), and the degree-11 product is a Littlewood polynomial with
/// vanishing discriminant. Galois-group structure is not examined.
pub fn verify_showcase() -> ShowcaseReport {
    let mut issues = Vec::new();

    let taylor = repeated_factor_littlewood();
    if taylor.degree() != Some(27) {
        issues.push(format!("degree-27 product has degree {:?}", taylor.degree()));
    }
    if let Some(j) = first_non_unit_coefficient(&taylor) {
        issues.push(format!(
            "degree-27 product: coefficient of X^{j} is {}, not +1/-1",
            taylor.coeff(j)
        ));
    }
    let cubic = IntPolynomial::from_coeffs_i64(&[-1, 0, 1, 1]);
    let square = cubic.mul(&cubic);
    if !taylor.is_divisible_by(&square) {
        issues.push("degree-27 product is not divisible by (X^3+X^2-1)^2".into());
    }
    if !cubic.cyclotomic_factors().is_empty() {
        issues.push("X^3+X^2-1 unexpectedly has a cyclotomic factor".into());
    }
    if taylor.is_squarefree() {
        issues.push("degree-27 product is unexpectedly squarefree".into());
    }

    let example = non_reciprocal_vanishing_example();
    if let Some(j) = first_non_unit_coefficient(&example) {
        issues.push(format!(
            "degree-11 product: coefficient of X^{j} is {}, not +1/-1",
            example.coeff(j)
        ));
    }
    match example.discriminant() {
        Ok(d) if d.is_zero() => {}
        Ok(d) => issues.push(format!("degree-11 product has discriminant {d}, expected 0")),
        Err(e) => issues.push(format!("degree-11 discriminant failed: {e}")),
    }

    ShowcaseReport { ok: issues.is_empty(), issues }
}

/// Index of the first coefficient outside {+1, -1}, if any.
pub fn first_non_unit_coefficient(p: &IntPolynomial) -> Option<usize> {
    let deg = p.degree()?;
    (0..=deg).find(|&j| p.coeff(j).abs() != BigInt::from(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_small_examples() {
        let opts = OracleOptions::default();
        assert_eq!(brute_count(Scope::Reciprocal, 8, true, &opts).unwrap(), 10);
        assert_eq!(brute_count(Scope::All, 4, true, &opts).unwrap(), 0);
        assert_eq!(brute_count(Scope::All, 2, true, &opts).unwrap(), 0);
    }

    #[test]
    fn guard_rejects_oversized_scans() {
        let opts = OracleOptions { guard_bits: 10, ..Default::default() };
        assert!(matches!(
            brute_count(Scope::All, 12, true, &opts),
            Err(Error::EnumerationTooLarge { .. })
        ));
        // Odd-degree scans cap at 21 by default and 29 with the long-run
        // opt-in.
        let opts = OracleOptions::default();
        assert!(matches!(
            odd_degree_scan(23, &opts),
            Err(Error::EnumerationTooLarge { .. })
        ));
        let long = OracleOptions { long_run: true, ..Default::default() };
        assert!(matches!(
            odd_degree_scan(31, &long),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(odd_degree_scan(1, &long).is_ok());
    }

    #[test]
    fn entin_examples() {
        let opts = OracleOptions::default();
        assert!(verify_entin(&[2, 4], &opts).unwrap());
        assert!(matches!(
            verify_entin(&[6], &opts),
            Err(Error::WrongResidueClass { degree: 6 })
        ));
    }

    #[test]
    fn disc_pn_examples() {
        assert!(disc_pn_check(&[2]).unwrap());
        assert!(disc_pn_check(&[4]).unwrap());
        assert!(disc_pn_check(&(2..=50).collect::<Vec<u64>>()).unwrap());
        assert!(disc_pn_check(&[0]).is_err());
        assert!(disc_pn_check(&[201]).is_err());
    }

    #[test]
    fn scan_degree_one() {
        let opts = OracleOptions::default();
        let reports = odd_degree_scan(1, &opts).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        // X+1 and X-1 both have discriminant 1.
        assert_eq!(r.square_disc_count, 2);
        assert_eq!(r.vanishing_disc_count, 0);
        assert_eq!(r.witnesses.len(), 2);
        assert!(r
            .witnesses
            .iter()
            .all(|w| w.divisible_by_x_plus_1 || w.divisible_by_x_minus_1));
    }

    #[test]
    fn scan_small_degrees_frozen() {
        // Frozen against an independent sympy enumeration.
        let opts = OracleOptions::default();
        let reports = odd_degree_scan(9, &opts).unwrap();
        let summary: Vec<(u64, u64, usize)> = reports
            .iter()
            .map(|r| (r.degree, r.vanishing_disc_count, r.witnesses.len()))
            .collect();
        assert_eq!(
            summary,
            vec![(1, 0, 2), (3, 2, 0), (5, 2, 4), (7, 6, 6), (9, 2, 24)]
        );
        for r in &reports {
            assert!(r
                .witnesses
                .iter()
                .all(|w| w.divisible_by_x_plus_1 || w.divisible_by_x_minus_1));
            assert_eq!(
                r.square_disc_count,
                r.vanishing_disc_count + r.witnesses.len() as u64
            );
        }
    }

    #[test]
    fn repeated_factor_witness_vanishes() {
        for degree in [3u64, 9, 15] {
            let p = repeated_factor_witness(degree).unwrap();
            assert_eq!(p.degree(), Some(degree as usize));
            assert!(first_non_unit_coefficient(&p).is_none());
            assert!(!p.is_squarefree());
            assert!(p.discriminant().unwrap().is_zero());
        }
    }

    #[test]
    fn showcase_passes() {
        let report = verify_showcase();
        assert!(report.ok, "issues: {:?}", report.issues);
    }

    #[test]
    fn showcase_mutation_fails() {
        // Flip one coefficient of the degree-18 cofactor; the product must
        // leave the Littlewood family.
        let mut coeffs: Vec<BigInt> = repeated_factor_cofactor().coeffs().to_vec();
        coeffs[5] += 1;
        let mutated = IntPolynomial::new(coeffs);
        let cubic = IntPolynomial::from_coeffs_i64(&[-1, 0, 1, 1]);
        let product = mutated
            .mul(&IntPolynomial::from_coeffs_i64(&[1, 0, 1]))
            .mul(&IntPolynomial::from_coeffs_i64(&[-1, 1]))
            .mul(&cubic)
            .mul(&cubic);
        assert!(first_non_unit_coefficient(&product).is_some());
    }

    #[test]
    fn checkpoint_round_trip() {
        let dir = std::env::temp_dir().join("lwd-checkpoint-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("scan.ckpt");
        let _ = std::fs::remove_file(&path);

        let opts = OracleOptions::default();
        let full = odd_degree_scan(5, &opts).unwrap();
        let resumed = odd_degree_scan_resumable(5, &opts, &path).unwrap();
        assert_eq!(full.len(), resumed.len());
        for (a, b) in full.iter().zip(&resumed) {
            assert_eq!(a.square_disc_count, b.square_disc_count);
            assert_eq!(a.vanishing_disc_count, b.vanishing_disc_count);
            assert_eq!(
                a.witnesses.iter().map(|w| w.mask).collect::<Vec<_>>(),
                b.witnesses.iter().map(|w| w.mask).collect::<Vec<_>>()
            );
        }
        // Resuming after completion replays the stored state.
        let replayed = odd_degree_scan_resumable(5, &opts, &path).unwrap();
        assert_eq!(replayed[2].witnesses.len(), resumed[2].witnesses.len());
        std::fs::remove_file(&path).unwrap();
    }
}
