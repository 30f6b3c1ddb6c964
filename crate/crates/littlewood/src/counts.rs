//! Exact evaluation of the four family counting formulas.
//!
//! The number of monic reciprocal Littlewood polynomials of degree 8n with
//! nonvanishing square discriminant is
//!
//! ```text
//! 2^(2n) C(2n,n) + 2 * sum C(2n, n + krs/2) C(2n, n + (k(r^2+s^2) + (-1)^((k+1)/2))/4)
//! ```
//!
//! summed over triples (k, r, s) with k odd positive and r > s > 0 coprime of
//! opposite parity; degrees 8n-2 and the skew-reciprocal family replace the
//! second binomial by the printed variants (top index 2n-1 and/or
//! k(r^2-s^2) with sign (-1)^(s + ...)). The summand vanishes once the second
//! offset exceeds n, so enumeration over circle norm (or leg and twice-area)
//! at most 4n+1 is exhaustive.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::Family;

/// Tuple regions: `B` bounds the circle norm `k(r^2+s^2)`; `D` bounds both
/// the leg `k(r^2-s^2)` and twice the area `2krs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    B,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Closed,
    Open,
}

/// A Pythagorean parametrization tuple: k odd positive, r > s > 0 coprime of
/// opposite parity. The associated triple is
/// `(k(r^2-s^2))^2 + (2krs)^2 = (k(r^2+s^2))^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PythTuple {
    pub k: u64,
    pub r: u64,
    pub s: u64,
}

impl PythTuple {
    pub fn new(k: u64, r: u64, s: u64) -> Result<Self> {
        let t = PythTuple { k, r, s };
        if k == 0 || k % 2 == 0 {
            return Err(Error::InvalidInput(format!("k = {k} must be odd positive")));
        }
        if !(r > s && s > 0) {
            return Err(Error::InvalidInput(format!("need r > s > 0, got ({r},{s})")));
        }
        if r.gcd(&s) != 1 {
            return Err(Error::InvalidInput(format!("({r},{s}) not coprime")));
        }
        if (r + s) % 2 == 0 {
            return Err(Error::InvalidInput(format!("({r},{s}) not of opposite parity")));
        }
        t.circle_norm();
        Ok(t)
    }

    /// `k(r^2+s^2)`, the hypotenuse scale.
    pub fn circle_norm(&self) -> u64 {
        let v = self.k as u128 * (self.r as u128 * self.r as u128 + self.s as u128 * self.s as u128);
        u64::try_from(v).expect("circle norm overflows u64")
    }

    /// `k(r^2-s^2)`, the odd leg.
    pub fn leg(&self) -> u64 {
        let v = self.k as u128 * (self.r as u128 * self.r as u128 - self.s as u128 * self.s as u128);
        u64::try_from(v).expect("leg overflows u64")
    }

    /// `2krs`, the even leg (for k = 1 this is twice the triangle's area).
    pub fn twice_area(&self) -> u64 {
        let v = 2 * self.k as u128 * self.r as u128 * self.s as u128;
        u64::try_from(v).expect("twice_area overflows u64")
    }
}

#[inline]
fn within(v: u64, bound: u64, boundary: Boundary) -> bool {
    match boundary {
        Boundary::Closed => v <= bound,
        Boundary::Open => v < bound,
    }
}

/// Odd k values admitting at least one tuple in the region at this bound.
pub(crate) fn k_values(region: Region, bound: u64, boundary: Boundary) -> impl Iterator<Item = u64> {
    // The smallest tuple (k,2,1) has circle norm 5k, leg 3k, twice-area 4k.
    let min_norm = match region {
        Region::B => 5,
        Region::D => 4,
    };
    let kmax = match boundary {
        Boundary::Closed => bound / min_norm,
        Boundary::Open => bound.saturating_sub(1) / min_norm,
    };
    (1..=kmax).step_by(2)
}

/// Tuples for one fixed k, r ascending then s ascending.
pub(crate) fn tuples_for_k(
    region: Region,
    bound: u64,
    boundary: Boundary,
    k: u64,
) -> impl Iterator<Item = PythTuple> {
    let m = bound / k; // per-k budget; membership below re-checks exactly
    let rmax = match region {
        Region::B => (m.saturating_sub(1)).sqrt(),
        // In region D the extreme r satisfies r^2 = (m/k)(1+sqrt2)/2 < 1.25 m.
        Region::D => (m.saturating_mul(5) / 4).sqrt() + 1,
    };
    (2..=rmax).flat_map(move |r| {
        let start = if r % 2 == 0 { 1 } else { 2 };
        (start..r).step_by(2).filter_map(move |s| {
            if r.gcd(&s) != 1 {
                return None;
            }
            let t = PythTuple { k, r, s };
            let ok = match region {
                Region::B => within(t.circle_norm(), bound, boundary),
                Region::D => {
                    within(t.leg(), bound, boundary) && within(t.twice_area(), bound, boundary)
                }
            };
            ok.then_some(t)
        })
    })
}

/// Streams every admissible tuple in the region, ordered by k, then r, then s.
pub fn enumerate_tuples(
    region: Region,
    bound: u64,
    boundary: Boundary,
) -> impl Iterator<Item = PythTuple> {
    k_values(region, bound, boundary).flat_map(move |k| tuples_for_k(region, bound, boundary, k))
}

/// `|B_bound|` or `|D_bound|` (closed boundary, matching the set definitions).
pub fn region_size(region: Region, bound: u64) -> u64 {
    enumerate_tuples(region, bound, Boundary::Closed).count() as u64
}

/// Parallel region size; partitions over k, exact additive merge.
pub fn region_size_parallel(region: Region, bound: u64, threads: usize) -> u64 {
    if threads <= 1 {
        return region_size(region, bound);
    }
    let ks: Vec<u64> = k_values(region, bound, Boundary::Closed).collect();
    crate::exec::pool(threads).install(|| {
        ks.par_iter()
            .map(|&k| tuples_for_k(region, bound, Boundary::Closed, k).count() as u64)
            .sum()
    })
}

/// Binomial coefficient `C(a, b)` with `C(a, b) = 0` for `b < 0` or `b > a`,
/// by incremental multiply/divide.
pub fn exact_binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Cached row of shifted binomials `C(top, center + j)` for `j = 0..=span`,
/// built outward from the central value by incremental multiply/divide.
pub(crate) struct BinomialRow {
    top: u64,
    center: u64,
    values: Vec<BigInt>,
}

impl BinomialRow {
    pub(crate) fn new(top: u64, center: u64, span: u64) -> Self {
        let mut values = Vec::with_capacity(span as usize + 1);
        let mut v = exact_binomial(top, center as i64);
        values.push(v.clone());
        for j in 0..span {
            // C(top, c+j+1) = C(top, c+j) * (top-c-j) / (c+j+1)
            if center + j >= top {
                v = BigInt::zero();
            } else {
                v = v * BigInt::from(top - center - j) / BigInt::from(center + j + 1);
            }
            values.push(v.clone());
        }
        BinomialRow { top, center, values }
    }

    /// `C(top, center + j)` for `j >= 0`; zero beyond the cached span.
    pub(crate) fn get(&self, j: u64) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if self.center + j > self.top {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.values[j as usize]
    }
}

/// Exact count of monic family members with nonvanishing square discriminant.
#[derive(Clone, Debug)]
pub struct CountResult {
    pub family: Family,
    pub degree: u64,
    pub count: BigInt,
    /// Number of tuples contributing a nonzero summand.
    pub tuple_terms: u64,
    pub central_term: BigInt,
}

/// Degree classes supported by the formulas.
enum DegreeClass {
    /// degree = 8n
    Zero(u64),
    /// degree = 8n - 2
    Six(u64),
}

fn classify_degree(degree: u64) -> Result<DegreeClass> {
    if degree % 2 == 1 || degree < 6 {
        return Err(Error::UnsupportedDegree(degree));
    }
    match degree % 8 {
        0 => Ok(DegreeClass::Zero(degree / 8)),
        6 => Ok(DegreeClass::Six((degree + 2) / 8)),
        _ => Err(Error::UnsupportedDegree(degree)),
    }
}

/// Evaluates the counting formula for the family at this degree exactly.
///
/// Enumeration is truncated at circle norm (region B) or leg/twice-area
/// (region D) at most `4n+1`: any tuple beyond pushes the second binomial
/// offset past n and the summand vanishes, so the truncation is lossless.
pub fn count_family(family: Family, degree: u64) -> Result<CountResult> {
    count_family_with_bound(family, degree, None)
}

/// As [`count_family`] with an explicit enumeration bound (used to check that
/// widening the region beyond 4n+1 cannot change the result).
pub fn count_family_with_bound(
    family: Family,
    degree: u64,
    bound_override: Option<u64>,
) -> Result<CountResult> {
    let class = classify_degree(degree)?;
    let (n, top_b, central) = match class {
        DegreeClass::Zero(n) => {
            let central = BigInt::from(2).pow(2 * n as u32) * exact_binomial(2 * n, n as i64);
            (n, 2 * n, central)
        }
        DegreeClass::Six(n) => {
            let central = BigInt::from(2).pow(2 * n as u32 - 1) * exact_binomial(2 * n, n as i64);
            (n, 2 * n - 1, central)
        }
    };
    let bound = bound_override.unwrap_or(4 * n + 1);
    let region = match family {
        Family::Reciprocal => Region::B,
        Family::Skew => Region::D,
    };
    let row_a = BinomialRow::new(2 * n, n, n);
    let row_b = BinomialRow::new(top_b, n, n);

    let mut total = central.clone();
    let mut tuple_terms = 0u64;
    for t in enumerate_tuples(region, bound, Boundary::Closed) {
        let term = tuple_term(family, &class, n, &row_a, &row_b, &t)?;
        if !term.is_zero() {
            tuple_terms += 1;
            total += term << 1;
        }
    }
    Ok(CountResult {
        family,
        degree,
        count: total,
        tuple_terms,
        central_term: central,
    })
}

fn tuple_term(
    family: Family,
    class: &DegreeClass,
    n: u64,
    row_a: &BinomialRow,
    row_b: &BinomialRow,
    t: &PythTuple,
) -> Result<BigInt> {
    let krs = t.k as i128 * t.r as i128 * t.s as i128;
    if krs % 2 != 0 {
        return Err(Error::OffsetNotIntegral { k: t.k, r: t.r, s: t.s });
    }
    let off_a = krs / 2;
    let q: i128 = match family {
        Family::Reciprocal => t.circle_norm() as i128,
        Family::Skew => t.leg() as i128,
    };
    // Sign corrections exactly as printed: (-1)^((k+1)/2) for degree 8n,
    // (-1)^((k-1)/2) - 2 for degree 8n-2; the skew family multiplies the
    // sign by (-1)^s.
    let (sigma, shift) = match class {
        DegreeClass::Zero(_) => (if ((t.k + 1) / 2) % 2 == 1 { -1i128 } else { 1 }, 0i128),
        DegreeClass::Six(_) => (if ((t.k - 1) / 2) % 2 == 1 { -1i128 } else { 1 }, -2i128),
    };
    let sigma = match family {
        Family::Reciprocal => sigma,
        Family::Skew => {
            if t.s % 2 == 1 {
                -sigma
            } else {
                sigma
            }
        }
    };
    let num = q + sigma + shift;
    if num % 4 != 0 {
        return Err(Error::OffsetNotIntegral { k: t.k, r: t.r, s: t.s });
    }
    let off_b = num / 4;
    debug_assert!(off_b >= 0);
    if off_a > n as i128 || off_b > n as i128 {
        return Ok(BigInt::zero());
    }
    let a = row_a.get(off_a as u64);
    if a.is_zero() {
        return Ok(BigInt::zero());
    }
    let b = row_b.get(off_b as u64);
    if b.is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(a * b)
}

/// `count / 2^(degree/2)`: the probability that a uniform monic family seed
/// yields a nonvanishing square discriminant.
pub fn family_probability(family: Family, degree: u64) -> Result<BigRational> {
    let result = count_family(family, degree)?;
    let denom = BigInt::one() << (degree / 2) as usize;
    Ok(BigRational::new(result.count, denom))
}

/// Checks both halving identities exactly in rational arithmetic:
/// `C(2n-1, n+n0) = (1/2 - n0/2n) C(2n, n+n0)` and
/// `C(2n-1, n+n0-1) = (1/2 + n0/2n) C(2n, n+n0)`.
pub fn halving_identity_check(n: u64, n0: u64) -> bool {
    assert!(n >= 1 && n0 <= n);
    let full = BigRational::from(exact_binomial(2 * n, (n + n0) as i64));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let tilt = BigRational::new(BigInt::from(n0), BigInt::from(2 * n));
    let lhs1 = BigRational::from(exact_binomial(2 * n - 1, (n + n0) as i64));
    let lhs2 = BigRational::from(exact_binomial(2 * n - 1, (n + n0) as i64 - 1));
    lhs1 == (&half - &tilt) * &full && lhs2 == (&half + &tilt) * &full
}
