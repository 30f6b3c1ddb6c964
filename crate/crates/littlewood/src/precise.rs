//! Fixed-point interval arithmetic at 40 decimal digits.
//!
//! Sector membership tests in the box counters compare a rational lattice
//! ratio s/r against transcendental bounds like tan(i*pi/(4N)). Those bounds
//! are evaluated here as rigorous enclosures `[lo, hi]` of `value * 10^40`,
//! tight enough (width well below 1e-30) that no rational with a desk-scale
//! denominator can straddle one — and if one ever does, the caller reports it
//! instead of guessing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use std::sync::OnceLock;

/// Decimal digits of the fixed-point scale.
pub const DIGITS: u32 = 40;

fn scale() -> &'static BigInt {
    static S: OnceLock<BigInt> = OnceLock::new();
    S.get_or_init(|| BigInt::from(10u32).pow(DIGITS))
}

/// Enclosure of a real value v: `lo <= v * 10^40 <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigInt,
    pub hi: BigInt,
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

impl Enclosure {
    pub fn exact_int(v: i64) -> Self {
        let x = BigInt::from(v) * scale();
        Enclosure { lo: x.clone(), hi: x }
    }

    /// Exact rational p/q, rounded outward by at most one unit in the last
    /// place.
    pub fn from_ratio(p: i64, q: u64) -> Self {
        let num = BigInt::from(p) * scale();
        let den = BigInt::from(q);
        Enclosure {
            lo: div_floor(&num, &den),
            hi: div_ceil(&num, &den),
        }
    }

    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let s = scale();
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap();
        let hi = candidates.iter().max().unwrap();
        Enclosure {
            lo: div_floor(lo, s),
            hi: div_ceil(hi, s),
        }
    }

    /// Requires a divisor enclosure strictly positive.
    pub fn div(&self, other: &Enclosure) -> Enclosure {
        assert!(other.lo.is_positive(), "interval division by a non-positive enclosure");
        let s = scale();
        let c1 = div_floor(&(&self.lo * s), &other.hi);
        let c2 = div_floor(&(&self.lo * s), &other.lo);
        let c3 = div_ceil(&(&self.hi * s), &other.hi);
        let c4 = div_ceil(&(&self.hi * s), &other.lo);
        let lo = c1.clone().min(c2.clone()).min(c3.clone()).min(c4.clone());
        let hi = c1.max(c2).max(c3).max(c4);
        Enclosure { lo, hi }
    }

    /// Scales by the exact rational p/q (q > 0).
    pub fn mul_ratio(&self, p: u64, q: u64) -> Enclosure {
        let p = BigInt::from(p);
        let q = BigInt::from(q);
        Enclosure {
            lo: div_floor(&(&self.lo * &p), &q),
            hi: div_ceil(&(&self.hi * &p), &q),
        }
    }

    /// Where the exact rational s/r sits relative to this enclosure.
    pub fn compare_ratio(&self, s: u64, r: u64) -> RatioPosition {
        let v = BigInt::from(s) * scale();
        let lo = &self.lo * BigInt::from(r);
        let hi = &self.hi * BigInt::from(r);
        if v < lo {
            RatioPosition::Below
        } else if v > hi {
            RatioPosition::Above
        } else {
            RatioPosition::Inside
        }
    }

    /// Midpoint as f64 (reporting only).
    pub fn to_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigInt::from(2);
        let (sign, digits) = mid.to_radix_be(10);
        let mut v = 0.0f64;
        for d in &digits {
            v = v * 10.0 + *d as f64;
        }
        let v = v * 10f64.powi(-(DIGITS as i32));
        if sign == num_bigint::Sign::Minus {
            -v
        } else {
            v
        }
    }
}

/// pi, 50 digits.
pub fn pi() -> Enclosure {
    static P: OnceLock<Enclosure> = OnceLock::new();
    P.get_or_init(|| {
        // 3.1415926535897932384626433832795028841971693993751...
        let lo: BigInt = "31415926535897932384626433832795028841971"
            .parse()
            .unwrap();
        Enclosure {
            hi: &lo + BigInt::one(),
            lo,
        }
    })
    .clone()
}

/// sqrt(2) via the integer square root of 2 * 10^80.
pub fn sqrt2() -> Enclosure {
    static S: OnceLock<Enclosure> = OnceLock::new();
    S.get_or_init(|| {
        let two = BigInt::from(2) * scale() * scale();
        let r = two.sqrt();
        debug_assert!(&r * &r <= two && (&r + 1u32) * (&r + 1u32) > two);
        Enclosure {
            hi: &r + BigInt::one(),
            lo: r,
        }
    })
    .clone()
}

/// artanh(sqrt(2)-1) = log sqrt(1+sqrt(2)), the hyperbolic half-opening where
/// the two skew constraints balance.
pub fn alpha() -> Enclosure {
    static A: OnceLock<Enclosure> = OnceLock::new();
    A.get_or_init(|| artanh(&sqrt2().sub(&Enclosure::exact_int(1))))
        .clone()
}

/// artanh(x) = sum x^(2m+1)/(2m+1) for 0 < x <= 1/2, with a geometric tail
/// bound.
pub fn artanh(x: &Enclosure) -> Enclosure {
    assert!(x.lo.is_positive() && x.hi <= scale() / BigInt::from(2) + BigInt::one());
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut acc = x.clone();
    let mut m = 1u32;
    loop {
        term = term.mul(&x2);
        m += 2;
        let contrib = Enclosure {
            lo: div_floor(&term.lo, &BigInt::from(m)),
            hi: div_ceil(&term.hi, &BigInt::from(m)),
        };
        acc = acc.add(&contrib);
        if term.hi < BigInt::from(10_000u32) {
            break;
        }
    }
    // Tail: sum_(j>m) x^j/j < x^(m+2)/(1-x^2) <= term.hi * x2.hi/(s - x2.hi) ulps.
    let tail = div_ceil(&(&term.hi * &x2.hi), &(scale() - &x2.hi)) + BigInt::one();
    Enclosure {
        lo: acc.lo,
        hi: acc.hi + tail,
    }
}

/// sin and cos for 0 <= x <= 1 by alternating Taylor series; the truncation
/// error is bounded by the first dropped term.
fn sin_cos(x: &Enclosure) -> (Enclosure, Enclosure) {
    assert!(!x.lo.is_negative() && x.hi <= scale() + BigInt::one());
    let x2 = x.mul(x);
    let mut sin = x.clone();
    let mut cos = Enclosure::exact_int(1);
    let mut term_s = x.clone();
    let mut term_c = Enclosure::exact_int(1);
    let mut sign = -1i32;
    let mut k = 1u32;
    loop {
        // term_c: x^(2k)/(2k)!, term_s: x^(2k+1)/(2k+1)!
        term_c = term_c.mul(&x2);
        term_c = Enclosure {
            lo: div_floor(&term_c.lo, &BigInt::from((2 * k - 1) * (2 * k))),
            hi: div_ceil(&term_c.hi, &BigInt::from((2 * k - 1) * (2 * k))),
        };
        term_s = term_s.mul(&x2);
        term_s = Enclosure {
            lo: div_floor(&term_s.lo, &BigInt::from((2 * k) * (2 * k + 1))),
            hi: div_ceil(&term_s.hi, &BigInt::from((2 * k) * (2 * k + 1))),
        };
        if sign < 0 {
            cos = cos.sub(&term_c);
            sin = sin.sub(&term_s);
        } else {
            cos = cos.add(&term_c);
            sin = sin.add(&term_s);
        }
        sign = -sign;
        k += 1;
        if term_c.hi < BigInt::from(100u32) && term_s.hi < BigInt::from(100u32) {
            break;
        }
    }
    // Alternating series: truncation bounded by the next term; pad generously.
    let pad = &term_c.hi + &term_s.hi + BigInt::from(10u32);
    (
        Enclosure { lo: &sin.lo - &pad, hi: &sin.hi + &pad },
        Enclosure { lo: &cos.lo - &pad, hi: &cos.hi + &pad },
    )
}

/// tan(x) for 0 <= x <= pi/4 + eps.
pub fn tan(x: &Enclosure) -> Enclosure {
    let (s, c) = sin_cos(x);
    s.div(&c)
}

/// exp(x) for 0 <= x <= 1.
fn exp_pos(x: &Enclosure) -> Enclosure {
    assert!(!x.lo.is_negative() && x.hi <= scale() + BigInt::one());
    let mut acc = Enclosure::exact_int(1);
    let mut term = Enclosure::exact_int(1);
    let mut k = 1u32;
    loop {
        term = term.mul(x);
        term = Enclosure {
            lo: div_floor(&term.lo, &BigInt::from(k)),
            hi: div_ceil(&term.hi, &BigInt::from(k)),
        };
        acc = acc.add(&term);
        k += 1;
        if term.hi < BigInt::from(100u32) {
            break;
        }
    }
    // Tail for x <= 1: next term * 1/(1 - x/k) <= next term * 2.
    let tail = &term.hi * BigInt::from(2) + BigInt::from(10u32);
    Enclosure {
        lo: acc.lo,
        hi: acc.hi + tail,
    }
}

/// exp(-x) for 0 <= x <= 1.
pub fn exp_neg(x: &Enclosure) -> Enclosure {
    Enclosure::exact_int(1).div(&exp_pos(x))
}

/// tanh(x) = (1 - e^(-2x)) / (1 + e^(-2x)) for 0 <= 2x <= 1.
pub fn tanh(x: &Enclosure) -> Enclosure {
    let one = Enclosure::exact_int(1);
    let u = exp_neg(&x.mul(&Enclosure::exact_int(2)));
    one.sub(&u).div(&one.add(&u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(e: &Enclosure, v: f64) {
        let mid = e.to_f64();
        assert!((mid - v).abs() < 1e-12, "enclosure {mid} vs reference {v}");
        assert!(e.width() < BigInt::from(10u64).pow(10), "width too large: {}", e.width());
    }

    #[test]
    fn constants_match_f64() {
        close(&pi(), std::f64::consts::PI);
        close(&sqrt2(), std::f64::consts::SQRT_2);
        close(&alpha(), ((1.0 + 2f64.sqrt()).sqrt()).ln());
    }

    #[test]
    fn elementary_functions_match_f64() {
        for i in 1..=7u64 {
            let x = pi().mul_ratio(i, 32);
            let xf = std::f64::consts::PI * i as f64 / 32.0;
            close(&tan(&x), xf.tan());
        }
        for i in 1..=4u64 {
            let x = alpha().mul_ratio(i, 4);
            let xf = ((1.0f64 + 2f64.sqrt()).sqrt()).ln() * i as f64 / 4.0;
            close(&tanh(&x), xf.tanh());
            close(&exp_neg(&x.mul(&Enclosure::exact_int(2))), (-2.0 * xf).exp());
        }
    }

    #[test]
    fn ratio_comparison() {
        let t = tan(&pi().mul_ratio(1, 16)); // ~0.19891
        assert_eq!(t.compare_ratio(1, 7), RatioPosition::Below); // 0.1428
        assert_eq!(t.compare_ratio(1, 5), RatioPosition::Above); // 0.2
        let half = Enclosure::from_ratio(1, 2);
        assert_eq!(half.compare_ratio(1, 2), RatioPosition::Inside);
    }
}

/// Result of comparing a rational against an enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioPosition {
    Below,
    Inside,
    Above,
}
