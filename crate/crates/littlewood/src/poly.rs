//! Dense univariate polynomials over the integers.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers
//! and no operation rounds. The module provides the arithmetic needed by the
//! counting machinery — evaluation, resultants (subresultant remainder
//! sequence, with a Sylvester/Bareiss determinant as an independent route),
//! discriminants, squarefreeness via integer pseudo-remainder gcd, cyclotomic
//! factor detection and perfect-square tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// A polynomial with integer coefficients, stored densely: `coeffs[j]` is the
/// coefficient of `X^j`. The zero polynomial is the empty coefficient vector;
/// any other canonical value has a nonzero trailing entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Canonicalizes by trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `c * X^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPolynomial { coeffs }
    }

    /// `X^d - 1`, the divisibility workhorse for cyclotomic products.
    pub fn x_power_minus_one(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = -BigInt::one();
        coeffs[d] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * BigInt::from(j))
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            coeffs.push(self.coeff(j) + other.coeff(j));
        }
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for j in 0..n {
            coeffs.push(self.coeff(j) - other.coeff(j));
        }
        IntPolynomial::new(coeffs)
    }

    /// Schoolbook product; degrees in this crate stay small.
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide exactly.
    fn scale_div_exact(&self, c: &BigInt) -> IntPolynomial {
        debug_assert!(!c.is_zero());
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division in PRS");
                    q
                })
                .collect(),
        }
    }

    /// Long division by a monic divisor, exact over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(
            divisor.leading_coefficient().map_or(false, One::is_one),
            "div_rem_monic requires a monic divisor"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().take(dd).enumerate() {
                rem[i - dd + j] -= &q * b;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// True iff `divisor` (monic) divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &IntPolynomial) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a  mod  b`, all over
    /// the integers.
    pub fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => {
                // lc(b)^(delta+1) with delta < 0 is taken as multiplier 1.
                return self.clone();
            }
        };
        let lb = b.leading_coefficient().unwrap().clone();
        let mut e = (da - db + 1) as i64;
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coefficient().unwrap().clone();
            // r <- lb*r - lr * X^(dr-db) * b
            let mut coeffs = vec![BigInt::zero(); dr];
            for (j, c) in r.coeffs.iter().take(dr).enumerate() {
                coeffs[j] = c * &lb;
            }
            for (j, c) in b.coeffs.iter().take(db).enumerate() {
                coeffs[dr - db + j] -= &lr * c;
            }
            r = IntPolynomial::new(coeffs);
            e -= 1;
        }
        if e > 0 {
            let f = lb.pow(e as u32);
            r = r.scale(&f);
        }
        r
    }

    /// Content: gcd of the coefficients, nonnegative. Zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part (content divided out, sign kept).
    pub fn primitive_part(&self) -> IntPolynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.scale_div_exact(&c)
    }

    /// Integer-polynomial gcd via the primitive pseudo-remainder sequence.
    /// The result is primitive with positive leading coefficient, scaled by
    /// the gcd of the contents.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.normalized_sign().scale(&c)
    }

    fn normalized_sign(&self) -> IntPolynomial {
        match self.leading_coefficient() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// True iff the polynomial has no repeated factor over the rationals,
    /// i.e. gcd(p, p') is constant. Requires degree >= 1.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Resultant via the subresultant polynomial remainder sequence
    /// (fraction-free; every division below is exact).
    pub fn resultant(&self, other: &IntPolynomial) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b, mut sign) = if self.degree() < other.degree() {
            let s = if (self.degree().unwrap() * other.degree().unwrap()) % 2 == 1 {
                -1i32
            } else {
                1
            };
            (other.clone(), self.clone(), s)
        } else {
            (self.clone(), other.clone(), 1)
        };
        // Pull out contents; Res(ca*A, cb*B) = ca^degB * cb^degA * Res(A, B).
        let ca = a.content();
        let cb = b.content();
        a = a.scale_div_exact(&ca);
        b = b.scale_div_exact(&cb);
        let t = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);

        if b.degree() == Some(0) {
            // Res(A, c) = c^(deg A); covers the constant-constant case c^0 = 1.
            let res = b.coeff(0).pow(a.degree().unwrap() as u32);
            return Ok(BigInt::from(sign) * t * res);
        }

        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = (da - db) as u32;
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            // b <- r / (g * h^delta), exact.
            let denom = &g * h.pow(delta);
            b = r.scale_div_exact(&denom);
            g = a.leading_coefficient().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                // h <- g^delta / h^(delta-1), exact.
                let num = g.pow(delta);
                if delta == 1 {
                    num
                } else {
                    let den = h.pow(delta - 1);
                    let (q, rr) = num.div_rem(&den);
                    debug_assert!(rr.is_zero());
                    q
                }
            };
            if b.is_zero() {
                return Ok(BigInt::zero());
            }
            if b.degree() == Some(0) {
                break;
            }
        }
        let da = a.degree().unwrap() as u32;
        let num = b.coeff(0).pow(da);
        let res = if da <= 1 {
            num
        } else {
            let den = h.pow(da - 1);
            let (q, rr) = num.div_rem(&den);
            debug_assert!(rr.is_zero());
            q
        };
        Ok(BigInt::from(sign) * t * res)
    }

    /// Resultant as the determinant of the Sylvester matrix, evaluated by
    /// fraction-free Bareiss elimination. Independent of [`Self::resultant`];
    /// the two must always agree.
    pub fn resultant_sylvester(&self, other: &IntPolynomial) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        if m == 0 {
            return Ok(self.coeff(0).pow(n as u32));
        }
        if n == 0 {
            return Ok(other.coeff(0).pow(m as u32));
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        // n rows of self's coefficients (descending), then m rows of other's.
        for i in 0..n {
            for j in 0..=m {
                mat[i][i + j] = self.coeff(m - j);
            }
        }
        for i in 0..m {
            for j in 0..=n {
                mat[n + i][i + j] = other.coeff(n - j);
            }
        }
        bareiss_determinant(mat)
    }

    /// Discriminant with the sign convention
    /// `disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f)`, `n = deg f`.
    /// Degree-1 polynomials have discriminant 1 (empty product).
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::DegreeTooSmall { min: 1, got: 0 }),
            Some(n) => n,
        };
        let res = self.resultant(&self.derivative())?;
        let lc = self.leading_coefficient().unwrap();
        let (q, r) = res.div_rem(lc);
        debug_assert!(r.is_zero(), "Res(f, f') must be divisible by lc(f)");
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
    }

    /// All `d >= 1` such that the d-th cyclotomic polynomial divides `self`.
    /// The search runs over `d <= 2*deg^2`, a safe over-approximation: any
    /// cyclotomic divisor has `phi(d) <= deg`, and `phi(d) >= sqrt(d/2)`.
    pub fn cyclotomic_factors(&self) -> Vec<u64> {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d as u64,
            _ => return Vec::new(),
        };
        let bound = 2 * deg * deg;
        let mut out = Vec::new();
        for d in 1..=bound {
            if euler_phi(d) > deg {
                continue;
            }
            if self.is_divisible_by(&cyclotomic_polynomial(d)) {
                out.push(d);
            }
        }
        out
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if j == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{}", j)?;
                }
            }
        }
        Ok(())
    }
}

/// Fraction-free determinant (Bareiss). Consumes the matrix.
fn bareiss_determinant(mut mat: Vec<Vec<BigInt>>) -> Result<BigInt> {
    let n = mat.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// True iff `z` is a perfect square (0 counts).
pub fn is_perfect_square(z: &BigInt) -> bool {
    if z.is_negative() {
        return false;
    }
    let r = z.sqrt();
    &r * &r == *z
}

/// Euler's totient by trial-division factorization; arguments here stay tiny.
pub fn euler_phi(d: u64) -> u64 {
    let mut n = d;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// The d-th cyclotomic polynomial, built from the Moebius product
/// `Phi_d = prod_(e | d) (X^(d/e) - 1)^(mu(e))` by exact division.
pub fn cyclotomic_polynomial(d: u64) -> IntPolynomial {
    assert!(d >= 1);
    if d == 1 {
        return IntPolynomial::from_coeffs_i64(&[-1, 1]);
    }
    let mut numerators = Vec::new();
    let mut denominators = Vec::new();
    for e in divisors(d) {
        match moebius(e) {
            1 => numerators.push((d / e) as usize),
            -1 => denominators.push((d / e) as usize),
            _ => {}
        }
    }
    let mut acc = IntPolynomial::one();
    for m in numerators {
        acc = acc.mul(&IntPolynomial::x_power_minus_one(m));
    }
    for m in denominators {
        let (q, r) = acc.div_rem_monic(&IntPolynomial::x_power_minus_one(m));
        debug_assert!(r.is_zero(), "cyclotomic product division must be exact");
        acc = q;
    }
    acc
}

fn divisors(d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= d {
        if d % i == 0 {
            out.push(i);
            if i != d / i {
                out.push(d / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

fn moebius(mut n: u64) -> i32 {
    let mut mu = 1i32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs_i64(coeffs)
    }

    #[test]
    fn evaluate_examples() {
        let p = poly(&[1, 1, 1]); // X^2+X+1
        assert_eq!(p.evaluate(&BigInt::from(1)), BigInt::from(3));
        assert_eq!(p.evaluate(&BigInt::from(-1)), BigInt::from(1));
        let p9 = IntPolynomial::from_coeffs_i64(&[1; 9]); // X^8+...+1
        assert_eq!(p9.evaluate(&BigInt::from(1)), BigInt::from(9));
    }

    #[test]
    fn resultant_examples() {
        let r = poly(&[-1, 1]).resultant(&poly(&[1, 1])).unwrap();
        assert_eq!(r, BigInt::from(2));
        let r = poly(&[1, 0, 1]).resultant(&poly(&[0, 1])).unwrap();
        assert_eq!(r, BigInt::from(1));
        let r = poly(&[1, 1, 1]).resultant(&poly(&[1, 2])).unwrap();
        assert_eq!(r, BigInt::from(3));
        // Same values through the Sylvester determinant.
        let r = poly(&[1, 1, 1]).resultant_sylvester(&poly(&[1, 2])).unwrap();
        assert_eq!(r, BigInt::from(3));
        let r = poly(&[1, 0, 1]).resultant_sylvester(&poly(&[0, 1])).unwrap();
        assert_eq!(r, BigInt::from(1));
    }

    #[test]
    fn resultant_zero_polynomial_is_an_error() {
        assert!(matches!(
            poly(&[1, 1]).resultant(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(poly(&[1, 1, 1]).discriminant().unwrap(), BigInt::from(-3));
        // (X-1)^2 has a repeated root.
        assert_eq!(poly(&[1, -2, 1]).discriminant().unwrap(), BigInt::zero());
        // X^4+X^3+X^2+X+1: 5^3 with positive sign.
        assert_eq!(
            poly(&[1, 1, 1, 1, 1]).discriminant().unwrap(),
            BigInt::from(125)
        );
        assert!(matches!(
            poly(&[7]).discriminant(),
            Err(Error::DegreeTooSmall { .. })
        ));
        // Degree 1: empty product convention.
        assert_eq!(poly(&[5, 3]).discriminant().unwrap(), BigInt::one());
    }

    #[test]
    fn perfect_square_examples() {
        assert!(is_perfect_square(&BigInt::from(9)));
        assert!(!is_perfect_square(&BigInt::from(-3)));
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(!is_perfect_square(&BigInt::from(8)));
    }

    #[test]
    fn squarefree_examples() {
        assert!(!poly(&[1, -2, 1]).is_squarefree());
        assert!(poly(&[1, 1, 1]).is_squarefree());
    }

    #[test]
    fn cyclotomic_factor_examples() {
        assert_eq!(poly(&[-1, 0, 1]).cyclotomic_factors(), vec![1, 2]);
        assert_eq!(poly(&[1, 1, 1]).cyclotomic_factors(), vec![3]);
        // X^3+X^2-1 is non-cyclotomic.
        assert!(poly(&[-1, 0, 1, 1]).cyclotomic_factors().is_empty());
    }

    #[test]
    fn cyclotomic_product_identity_small() {
        // X^d - 1 = prod_(e | d) Phi_e for a few d; the full d <= 100 sweep
        // lives in the integration suite.
        for d in [1u64, 2, 6, 12, 30] {
            let mut prod = IntPolynomial::one();
            for e in divisors(d) {
                prod = prod.mul(&cyclotomic_polynomial(e));
            }
            assert_eq!(prod, IntPolynomial::x_power_minus_one(d as usize));
        }
    }

    #[test]
    fn gcd_and_content() {
        let a = poly(&[2, 4, 2]); // 2(X+1)^2
        let b = poly(&[2, 2]); // 2(X+1)
        let g = a.gcd(&b);
        assert_eq!(g, poly(&[2, 2]));
        assert_eq!(a.content(), BigInt::from(2));
    }

    #[test]
    fn monic_division() {
        let p = poly(&[2, 3, 1]); // (X+1)(X+2)
        let (q, r) = p.div_rem_monic(&poly(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, poly(&[2, 1]));
    }
}
