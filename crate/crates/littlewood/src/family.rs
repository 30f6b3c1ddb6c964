//! Monic (skew-)reciprocal Littlewood polynomials.
//!
//! A Littlewood polynomial has every coefficient in {+1, -1}. A reciprocal
//! polynomial of degree 2m satisfies `f(X) = X^(2m) f(1/X)`, which forces the
//! coefficient symmetry `c_(2m-j) = c_j`. A skew-reciprocal polynomial
//! satisfies `f(X) = (-1)^m X^(2m) f(-1/X)`, whose coefficient form is
//! `c_(2m-j) = (-1)^(m+j) c_j`. Either way the upper half of the coefficient
//! vector is free and determines the rest; a [`FamilySeed`] is that free
//! half-vector.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{is_perfect_square, IntPolynomial};

/// Default guard on family enumeration (free half of 32 coefficients).
pub const DEFAULT_DEGREE_GUARD: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Reciprocal,
    Skew,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Reciprocal => write!(f, "reciprocal"),
            Family::Skew => write!(f, "skew"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reciprocal" | "rec" => Ok(Family::Reciprocal),
            "skew" | "skew-reciprocal" => Ok(Family::Skew),
            other => Err(Error::InvalidInput(format!("unknown family '{other}'"))),
        }
    }
}

/// The free upper-half coefficients of a degree-2m family member.
/// `half_coeffs[t]` holds `a_t`, the coefficient of `X^(m+t)`; `a_0` is the
/// middle coefficient and `a_m` the leading one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySeed {
    family: Family,
    degree: u64,
    half_coeffs: Vec<i8>,
}

impl FamilySeed {
    pub fn new(family: Family, degree: u64, half_coeffs: Vec<i8>) -> Result<Self> {
        if degree == 0 || degree % 2 != 0 {
            return Err(Error::OddDegree(degree));
        }
        let m = (degree / 2) as usize;
        if half_coeffs.len() != m + 1 {
            return Err(Error::InvalidInput(format!(
                "half-coefficient vector must have length {} for degree {degree}, got {}",
                m + 1,
                half_coeffs.len()
            )));
        }
        if half_coeffs.iter().any(|&a| a != 1 && a != -1) {
            return Err(Error::InvalidInput(
                "half coefficients must be +1 or -1".into(),
            ));
        }
        Ok(FamilySeed {
            family,
            degree,
            half_coeffs,
        })
    }

    /// Seed from a bitmask over `(a_0, ..., a_(m-1))` (bit t set means
    /// `a_t = +1`), with `a_m = +1` in monic mode. Non-monic masks carry
    /// `a_m` in bit m.
    pub fn from_mask(family: Family, degree: u64, mask: u64, monic: bool) -> Result<Self> {
        if degree == 0 || degree % 2 != 0 {
            return Err(Error::OddDegree(degree));
        }
        let m = (degree / 2) as usize;
        let bits = if monic { m } else { m + 1 };
        let mut half = Vec::with_capacity(m + 1);
        for t in 0..bits {
            half.push(if (mask >> t) & 1 == 1 { 1 } else { -1 });
        }
        if monic {
            half.push(1);
        }
        FamilySeed::new(family, degree, half)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn half_coeffs(&self) -> &[i8] {
        &self.half_coeffs
    }

    pub fn is_monic(&self) -> bool {
        *self.half_coeffs.last().unwrap() == 1
    }

    /// The unique family member with these upper-half coefficients.
    /// The defining coefficient symmetry is asserted on every build.
    pub fn build(&self) -> IntPolynomial {
        let m = (self.degree / 2) as usize;
        let mut coeffs = vec![BigInt::zero(); 2 * m + 1];
        for (t, &a) in self.half_coeffs.iter().enumerate() {
            coeffs[m + t] = BigInt::from(a);
            let low = match self.family {
                Family::Reciprocal => a,
                Family::Skew => {
                    if t % 2 == 1 {
                        -a
                    } else {
                        a
                    }
                }
            };
            coeffs[m - t] = BigInt::from(low);
        }
        let f = IntPolynomial::new(coeffs);
        assert_symmetry(&f, self.family);
        f
    }
}

/// Checks the coefficient form of the defining functional equation.
fn assert_symmetry(f: &IntPolynomial, family: Family) {
    let n = f.degree().expect("family member is nonzero");
    let m = n / 2;
    for j in 0..=n {
        let lhs = f.coeff(n - j);
        let rhs = match family {
            Family::Reciprocal => f.coeff(j),
            Family::Skew => {
                if (m + j) % 2 == 1 {
                    -f.coeff(j)
                } else {
                    f.coeff(j)
                }
            }
        };
        assert_eq!(lhs, rhs, "family symmetry violated at coefficient {j}");
    }
}

/// A Littlewood polynomial of degree n packed into a bitmask: bit j set means
/// the coefficient of `X^j` is +1, clear means -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LittlewoodCode {
    pub degree: u64,
    pub mask: u64,
}

impl LittlewoodCode {
    pub fn new(degree: u64, mask: u64) -> Result<Self> {
        if degree > 62 {
            return Err(Error::EnumerationTooLarge {
                bits: degree as u32 + 1,
                guard: 63,
            });
        }
        if degree < 63 && mask >> (degree + 1) != 0 {
            return Err(Error::InvalidInput(format!(
                "mask {mask:#x} has bits beyond degree {degree}"
            )));
        }
        Ok(LittlewoodCode { degree, mask })
    }

    pub fn is_monic(&self) -> bool {
        (self.mask >> self.degree) & 1 == 1
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let coeffs = (0..=self.degree)
            .map(|j| BigInt::from(if (self.mask >> j) & 1 == 1 { 1 } else { -1 }))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn from_polynomial(p: &IntPolynomial) -> Result<Self> {
        let degree = p
            .degree()
            .ok_or(Error::ZeroPolynomial)? as u64;
        let mut mask = 0u64;
        for j in 0..=degree {
            let c = p.coeff(j as usize);
            if c == BigInt::from(1) {
                mask |= 1 << j;
            } else if c != BigInt::from(-1) {
                return Err(Error::InvalidInput(format!(
                    "coefficient of X^{j} is {c}, not +1 or -1"
                )));
            }
        }
        LittlewoodCode::new(degree, mask)
    }
}

/// Splits `f(X) = f_e(X^2) + X * f_o(X^2)` into its even and odd parts.
pub fn even_odd_split(f: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let coeffs = f.coeffs();
    let even = coeffs.iter().step_by(2).cloned().collect();
    let odd = coeffs.iter().skip(1).step_by(2).cloned().collect();
    let fe = IntPolynomial::new(even);
    let fo = IntPolynomial::new(odd);
    debug_assert_eq!(recombine(&fe, &fo), *f);
    (fe, fo)
}

fn recombine(fe: &IntPolynomial, fo: &IntPolynomial) -> IntPolynomial {
    let mut coeffs = Vec::new();
    for (j, c) in fe.coeffs().iter().enumerate() {
        if coeffs.len() < 2 * j + 1 {
            coeffs.resize(2 * j + 1, BigInt::zero());
        }
        coeffs[2 * j] = c.clone();
    }
    for (j, c) in fo.coeffs().iter().enumerate() {
        if coeffs.len() < 2 * j + 2 {
            coeffs.resize(2 * j + 2, BigInt::zero());
        }
        coeffs[2 * j + 1] = c.clone();
    }
    IntPolynomial::new(coeffs)
}

/// The square-discriminant criterion for separable members of either family:
/// for reciprocal f of degree 2n the discriminant is a square iff
/// `(-1)^n f(1) f(-1)` is; for skew-reciprocal f iff
/// `f_e(-1)^2 + f_o(-1)^2` is.
pub fn square_criterion(f: &IntPolynomial, family: Family) -> Result<bool> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 != 0 || deg == 0 {
        return Err(Error::OddDegree(deg as u64));
    }
    let n = deg / 2;
    match family {
        Family::Reciprocal => {
            let mut v = f.evaluate(&BigInt::from(1)) * f.evaluate(&BigInt::from(-1));
            if n % 2 == 1 {
                v = -v;
            }
            Ok(is_perfect_square(&v))
        }
        Family::Skew => {
            let (fe, fo) = even_odd_split(f);
            let a = fe.evaluate(&BigInt::from(-1));
            let b = fo.evaluate(&BigInt::from(-1));
            Ok(is_perfect_square(&(&a * &a + &b * &b)))
        }
    }
}

/// Streams every seed of the family in ascending bitmask order of
/// `(a_0, ..., a_(m-1))` (plus `a_m` as the top bit when non-monic):
/// `2^m` seeds in monic mode, `2^(m+1)` otherwise.
pub fn enumerate_family(
    family: Family,
    degree: u64,
    monic: bool,
) -> Result<impl Iterator<Item = FamilySeed>> {
    enumerate_family_guarded(family, degree, monic, DEFAULT_DEGREE_GUARD)
}

/// As [`enumerate_family`] with an explicit degree guard.
pub fn enumerate_family_guarded(
    family: Family,
    degree: u64,
    monic: bool,
    degree_guard: u64,
) -> Result<impl Iterator<Item = FamilySeed>> {
    if degree == 0 || degree % 2 != 0 {
        return Err(Error::OddDegree(degree));
    }
    if degree > degree_guard {
        return Err(Error::EnumerationTooLarge {
            bits: (degree / 2) as u32 + if monic { 0 } else { 1 },
            guard: (degree_guard / 2) as u32,
        });
    }
    let bits = degree / 2 + if monic { 0 } else { 1 };
    let count: u64 = 1 << bits;
    Ok((0..count).map(move |mask| {
        FamilySeed::from_mask(family, degree, mask, monic).expect("mask in range")
    }))
}
