//! Exact lattice-point counting in circle and hyperbolic sectors, odd-modulus
//! Moebius inversion, and the box counters behind the equidistribution
//! analysis.
//!
//! Region membership is always decided in exact integer arithmetic. A sector
//! of squared radius `num/den` contains `(x, y)` when `den*(x^2+y^2) < num`
//! (circle), `den*(x^2-y^2) < num` (hyperbola) or `den*2xy < num` (star);
//! slopes are exact rationals `p/q` compared as `y*q <= x*p`. Boundary
//! semantics follow the region definitions verbatim — strict radius, closed
//! slope upper bound — with an opt-in closed-radius mode for cross-checks
//! against the tuple sets, which use a closed bound.

use num_integer::{Integer, Roots};


use crate::error::{Error, Result};
use crate::family::Family;
use crate::precise::{self, Enclosure, RatioPosition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectorKind {
    Circle,
    Hyperbola,
    HyperbolaStar,
}

impl std::fmt::Display for SectorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SectorKind::Circle => write!(f, "circle"),
            SectorKind::Hyperbola => write!(f, "hyperbola"),
            SectorKind::HyperbolaStar => write!(f, "hyperbola-star"),
        }
    }
}

/// Guard for hyperbolic slopes: tanh(theta) may not exceed
/// tanh(alpha) = sqrt(2)-1, checked against the decimal over-approximation
/// 0.414214.
const HYPERBOLIC_SLOPE_GUARD: (u64, u64) = (414_214, 1_000_000);

#[derive(Clone, Debug)]
pub struct SectorSpec {
    pub kind: SectorKind,
    /// Slope p/q: tan(theta) for circles, tanh(theta) for both hyperbolic
    /// kinds (the star sector bound e^(2 theta) = (q+p)/(q-p) is derived).
    pub slope_num: u64,
    pub slope_den: u64,
    /// Squared radius as an exact rational; radius sqrt(N/d) is representable.
    pub radius_sq_num: u64,
    pub radius_sq_den: u64,
    /// Strict radius inequality by default, closed on request.
    pub closed_radius: bool,
}

impl SectorSpec {
    pub fn new(
        kind: SectorKind,
        slope: (u64, u64),
        radius_sq: (u64, u64),
    ) -> Result<Self> {
        let (p, q) = slope;
        let (num, den) = radius_sq;
        if q == 0 {
            return Err(Error::InvalidInput("slope denominator must be positive".into()));
        }
        if num == 0 || den == 0 {
            return Err(Error::InvalidInput("radius_sq must be positive".into()));
        }
        match kind {
            SectorKind::Circle => {
                if p > q {
                    return Err(Error::InvalidInput(format!(
                        "circle slope {p}/{q} exceeds 1 (theta > pi/4)"
                    )));
                }
            }
            SectorKind::Hyperbola | SectorKind::HyperbolaStar => {
                let (gn, gd) = HYPERBOLIC_SLOPE_GUARD;
                if (p as u128) * (gd as u128) > (q as u128) * (gn as u128) {
                    return Err(Error::InvalidInput(format!(
                        "hyperbolic slope {p}/{q} exceeds tanh(alpha) = sqrt(2)-1"
                    )));
                }
            }
        }
        Ok(SectorSpec {
            kind,
            slope_num: p,
            slope_den: q,
            radius_sq_num: num,
            radius_sq_den: den,
            closed_radius: false,
        })
    }

    pub fn with_closed_radius(mut self, closed: bool) -> Self {
        self.closed_radius = closed;
        self
    }

    /// Floor of the radius.
    pub fn radius_floor(&self) -> u64 {
        (self.radius_sq_num / self.radius_sq_den).sqrt()
    }

    fn scaled(&self, d: u64) -> SectorSpec {
        let mut s = self.clone();
        s.radius_sq_den = self
            .radius_sq_den
            .checked_mul(d * d)
            .expect("scaled radius denominator overflows u64");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Opposite,
    Any,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Opposite => write!(f, "opposite"),
            Parity::Any => write!(f, "any"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeFilter {
    pub parity: Parity,
    pub coprime: bool,
}

/// Count of y in [lo, hi] with the given parity (0 = even, 1 = odd).
#[inline]
fn count_parity_in(lo: u64, hi: u64, parity: u64) -> u64 {
    if lo > hi {
        return 0;
    }
    if parity == 1 {
        (hi + 1) / 2 - lo / 2
    } else {
        hi / 2 - (lo - 1) / 2
    }
}

#[inline]
fn count_filtered(x: u64, lo: u64, hi: u64, filter: LatticeFilter) -> u64 {
    if lo > hi {
        return 0;
    }
    if !filter.coprime {
        return match filter.parity {
            Parity::Any => hi - lo + 1,
            Parity::Opposite => count_parity_in(lo, hi, (x + 1) % 2),
        };
    }
    let mut count = 0;
    for y in lo..=hi {
        if filter.parity == Parity::Opposite && (x + y) % 2 == 0 {
            continue;
        }
        if x.gcd(&y) == 1 {
            count += 1;
        }
    }
    count
}

/// Largest y >= 0 with `den*(x^2+y^2) <= rhs`; 0 when even y = 0 fails.
fn y_max_circle(rhs: u128, den: u128, x: u128) -> u64 {
    let dx2 = den * x * x;
    if dx2 > rhs {
        return 0;
    }
    let mut y = (((rhs - dx2) / den) as u128).sqrt() as u64;
    while den * (x * x + (y as u128 + 1) * (y as u128 + 1)) <= rhs {
        y += 1;
    }
    while y > 0 && den * (x * x + (y as u128) * (y as u128)) > rhs {
        y -= 1;
    }
    y
}

/// Smallest y >= 1 with `den*(x^2-y^2) <= rhs` (i.e. `den*y^2 >= den*x^2 - rhs`).
fn y_min_hyperbola(rhs: u128, den: u128, x: u128) -> u64 {
    let dx2 = den * x * x;
    if dx2 <= rhs {
        return 1;
    }
    let t = dx2 - rhs;
    let mut y = ((t / den) as u128).sqrt() as u64;
    while den * (y as u128) * (y as u128) < t {
        y += 1;
    }
    while y > 1 && den * (y as u128 - 1) * (y as u128 - 1) >= t {
        y -= 1;
    }
    y.max(1)
}

/// Exact count of lattice points (x, y), x, y > 0, in the sector under the
/// filter. Column-major in x; each column's y-interval comes from an integer
/// square root.
pub fn count_sector(spec: &SectorSpec, filter: LatticeFilter) -> u64 {
    let num = spec.radius_sq_num as u128;
    let den = spec.radius_sq_den as u128;
    // Strict comparisons against num become closed comparisons against num-1.
    let rhs = if spec.closed_radius { num } else { num.saturating_sub(1) };
    let p = spec.slope_num as u128;
    let q = spec.slope_den as u128;
    let mut total = 0u64;
    match spec.kind {
        SectorKind::Circle => {
            let mut x = 1u128;
            loop {
                if den * (x * x + 1) > rhs {
                    break;
                }
                let y_r = y_max_circle(rhs, den, x);
                let y_s = ((x * p) / q) as u64;
                total += count_filtered(x as u64, 1, y_r.min(y_s), filter);
                x += 1;
            }
        }
        SectorKind::Hyperbola => {
            if p == 0 {
                return 0;
            }
            // x^2 (1 - (p/q)^2) < n^2 bounds the sector; add slack and skip
            // empty columns.
            let xmax = ((num * q * q) / (den * (q * q - p * p))).sqrt() as u64 + 2;
            for x in 1..=xmax as u128 {
                let y_lo = y_min_hyperbola(rhs, den, x);
                let y_hi = ((x * p) / q) as u64;
                total += count_filtered(x as u64, y_lo, y_hi, filter);
            }
        }
        SectorKind::HyperbolaStar => {
            if p >= q {
                return 0;
            }
            let xmax = ((num * (q + p)) / (2 * den * (q - p))).sqrt() as u64 + 2;
            for x in 1..=xmax as u128 {
                // x <= e^(2 theta) y  <=>  y >= x (q-p)/(q+p), rounded up.
                let y_lo = ((x * (q - p) + (q + p) - 1) / (q + p)).max(1) as u64;
                // den*2xy <= rhs and y < x.
                let y_hi = ((rhs / (2 * den * x)) as u64).min(x as u64 - 1);
                total += count_filtered(x as u64, y_lo, y_hi, filter);
            }
        }
    }
    total
}

/// Moebius function mu(d) for 1 <= d <= limit by linear sieve; entry 0 is a
/// placeholder.
pub fn mobius_sieve(limit: usize) -> Vec<i8> {
    let mut mu = vec![1i8; limit + 1];
    if limit == 0 {
        mu[0] = 0;
        return mu;
    }
    mu[0] = 0;
    let mut primes: Vec<usize> = Vec::new();
    let mut composite = vec![false; limit + 1];
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Coprime sector count by Moebius inversion: sums `mu(d) * F(radius/d)` over
/// odd d (opposite-parity points have odd gcd; with no parity condition the
/// sum runs over every d). `parity_count_fn` supplies the unrestricted-gcd
/// count for a scaled sector. Contract: equals
/// `count_sector(spec, {parity, coprime: true})`.
pub fn mobius_sector_count<F>(spec: &SectorSpec, parity: Parity, parity_count_fn: F) -> u64
where
    F: Fn(&SectorSpec) -> u64,
{
    let radius = spec.radius_floor();
    if radius == 0 {
        return parity_count_fn(spec);
    }
    let mu = mobius_sieve(radius as usize);
    let step = match parity {
        Parity::Opposite => 2,
        Parity::Any => 1,
    };
    let mut total = 0i128;
    let mut d = 1u64;
    while d <= radius {
        let m = mu[d as usize];
        if m != 0 {
            let c = parity_count_fn(&spec.scaled(d)) as i128;
            total += m as i128 * c;
        }
        d += step;
    }
    u64::try_from(total).expect("Moebius-inverted count must be nonnegative")
}

/// Convenience form of [`mobius_sector_count`] backed by [`count_sector`].
pub fn mobius_sector_count_default(spec: &SectorSpec, parity: Parity) -> u64 {
    mobius_sector_count(spec, parity, |s| {
        count_sector(s, LatticeFilter { parity, coprime: false })
    })
}

/// The epsilon-grid of the equidistribution analysis: N^3 boxes indexed by an
/// angular slot i (1..=N) and a radial shell j (1..=N^2) at scale parameter n.
/// Reciprocal grids slice the circle sector at angles `theta_i = i eps pi/4`;
/// skew grids slice both hyperbolic sectors at `theta_i = i eps alpha`.
#[derive(Clone, Debug)]
pub struct BoxGrid {
    pub subdivisions: u32,
    pub family: Family,
    pub scale: u64,
}

impl BoxGrid {
    pub fn new(subdivisions: u32, family: Family, scale: u64) -> Result<Self> {
        if subdivisions == 0 || subdivisions > 64 {
            return Err(Error::InvalidInput(format!(
                "subdivisions must be in 1..=64, got {subdivisions}"
            )));
        }
        if scale == 0 {
            return Err(Error::InvalidInput("scale must be positive".into()));
        }
        Ok(BoxGrid { subdivisions, family, scale })
    }
}

/// A slope bound: either exactly rational/algebraic, or an irrational
/// enclosed to 40 digits with an f64 fast path.
enum SlopeBound {
    /// tan(0) = tanh(0) = 0.
    Zero,
    /// tan(pi/4) = e^0 = 1; with s < r the comparison is always strict-true.
    One,
    /// sqrt(2)-1: `s/r <= sqrt(2)-1  <=>  (s+r)^2 <= 2 r^2` exactly.
    Sqrt2MinusOne,
    Irrational { enc: Enclosure, f_lo: f64, f_hi: f64 },
}

impl SlopeBound {
    fn irrational(enc: Enclosure) -> SlopeBound {
        let mid = enc.to_f64();
        SlopeBound::Irrational {
            f_lo: mid - 1e-12,
            f_hi: mid + 1e-12,
            enc,
        }
    }

    /// Is s/r <= bound? Errors when the ratio falls inside an irrational
    /// bound's enclosure.
    fn ratio_leq(&self, s: u64, r: u64) -> Result<bool> {
        match self {
            SlopeBound::Zero => Ok(false),
            SlopeBound::One => Ok(true),
            SlopeBound::Sqrt2MinusOne => {
                let lhs = (s as u128 + r as u128).pow(2);
                let rhs = 2 * (r as u128) * (r as u128);
                debug_assert!(lhs != rhs, "sqrt(2) cannot be rational");
                Ok(lhs < rhs)
            }
            SlopeBound::Irrational { enc, f_lo, f_hi } => {
                let v = s as f64 / r as f64;
                if v < *f_lo {
                    return Ok(true);
                }
                if v > *f_hi {
                    return Ok(false);
                }
                match enc.compare_ratio(s, r) {
                    RatioPosition::Below => Ok(true),
                    RatioPosition::Above => Ok(false),
                    RatioPosition::Inside => Err(Error::AmbiguousSlope { s, r }),
                }
            }
        }
    }
}

/// Window `lower < s/r <= upper`.
struct SlopeWindow {
    lower: SlopeBound,
    upper: SlopeBound,
}

impl SlopeWindow {
    fn contains(&self, s: u64, r: u64) -> Result<bool> {
        Ok(!self.lower.ratio_leq(s, r)? && self.upper.ratio_leq(s, r)?)
    }
}

/// tan(idx * pi / (4N)) as a bound; exact at the endpoints.
fn circle_bound(idx: u32, n_subdiv: u32) -> SlopeBound {
    if idx == 0 {
        SlopeBound::Zero
    } else if idx == n_subdiv {
        SlopeBound::One
    } else {
        let x = precise::pi().mul_ratio(idx as u64, 4 * n_subdiv as u64);
        SlopeBound::irrational(precise::tan(&x))
    }
}

/// tanh(idx * alpha / N); exact at the endpoints (0 and sqrt(2)-1).
fn tanh_bound(idx: u32, n_subdiv: u32) -> SlopeBound {
    if idx == 0 {
        SlopeBound::Zero
    } else if idx == n_subdiv {
        SlopeBound::Sqrt2MinusOne
    } else {
        let x = precise::alpha().mul_ratio(idx as u64, n_subdiv as u64);
        SlopeBound::irrational(precise::tanh(&x))
    }
}

/// e^(-2 idx alpha / N); exact at the endpoints (1 and sqrt(2)-1).
fn exp_bound(idx: u32, n_subdiv: u32) -> SlopeBound {
    if idx == 0 {
        SlopeBound::One
    } else if idx == n_subdiv {
        SlopeBound::Sqrt2MinusOne
    } else {
        let x = precise::alpha().mul_ratio(2 * idx as u64, n_subdiv as u64);
        SlopeBound::irrational(precise::exp_neg(&x))
    }
}

/// Radial shell `(j-1) eps sqrt(n) < v <= j eps sqrt(n)`, decided exactly by
/// squaring: `(vN)^2 > (j-1)^2 n` and `(vN)^2 <= j^2 n`.
#[derive(Clone, Copy)]
struct Shell {
    n_subdiv: u128,
    scale: u128,
    j: u128,
}

impl Shell {
    #[inline]
    fn contains(&self, v: u64) -> bool {
        let vv = (v as u128 * self.n_subdiv).pow(2);
        vv > (self.j - 1) * (self.j - 1) * self.scale && vv <= self.j * self.j * self.scale
    }

    /// Largest integer v admitted by the shell's upper bound.
    fn v_max(&self) -> u64 {
        ((self.j * self.j * self.scale).sqrt() / self.n_subdiv) as u64
    }
}

/// Number of admissible tuples (k odd, r > s > 0 coprime of opposite parity)
/// in box (i, j) of the grid. Reciprocal grids bin the circle norm against
/// tan windows; skew grids are the disjoint union of a leg/tanh box and a
/// twice-area/exp box.
pub fn count_box(grid: &BoxGrid, i: u32, j: u32) -> Result<u64> {
    let n_subdiv = grid.subdivisions;
    if i < 1 || i > n_subdiv || j < 1 || j > n_subdiv * n_subdiv {
        return Err(Error::InvalidInput(format!(
            "box index ({i},{j}) outside 1..={n_subdiv} x 1..={}",
            n_subdiv * n_subdiv
        )));
    }
    let shell = Shell {
        n_subdiv: n_subdiv as u128,
        scale: grid.scale as u128,
        j: j as u128,
    };
    match grid.family {
        Family::Reciprocal => {
            let window = SlopeWindow {
                lower: circle_bound(i - 1, n_subdiv),
                upper: circle_bound(i, n_subdiv),
            };
            count_box_part(shell, &window, NormKind::CircleNorm)
        }
        Family::Skew => {
            let leg_window = SlopeWindow {
                lower: tanh_bound(i - 1, n_subdiv),
                upper: tanh_bound(i, n_subdiv),
            };
            let star_window = SlopeWindow {
                lower: exp_bound(i, n_subdiv),
                upper: exp_bound(i - 1, n_subdiv),
            };
            Ok(count_box_part(shell, &leg_window, NormKind::Leg)?
                + count_box_part(shell, &star_window, NormKind::TwiceArea)?)
        }
    }
}

#[derive(Clone, Copy)]
enum NormKind {
    CircleNorm,
    Leg,
    TwiceArea,
}

fn count_box_part(shell: Shell, window: &SlopeWindow, norm: NormKind) -> Result<u64> {
    let v_max = shell.v_max();
    let k_min_norm = match norm {
        NormKind::CircleNorm => 5,
        NormKind::Leg => 3,
        NormKind::TwiceArea => 4,
    };
    let mut total = 0u64;
    let mut k = 1u64;
    while k * k_min_norm <= v_max {
        let m = v_max / k;
        let r_max = match norm {
            NormKind::CircleNorm => m.saturating_sub(1).sqrt(),
            // Extremes satisfy r^2 <= 1.21 m/k for the leg and twice-area
            // windows (the slope window keeps s/r above sqrt(2)-1 there).
            NormKind::Leg | NormKind::TwiceArea => (m.saturating_mul(5) / 4).sqrt() + 1,
        };
        for r in 2..=r_max {
            let s_start = if r % 2 == 0 { 1 } else { 2 };
            for s in (s_start..r).step_by(2) {
                if r.gcd(&s) != 1 {
                    continue;
                }
                let t = crate::counts::PythTuple { k, r, s };
                let v = match norm {
                    NormKind::CircleNorm => t.circle_norm(),
                    NormKind::Leg => t.leg(),
                    NormKind::TwiceArea => t.twice_area(),
                };
                if !shell.contains(v) {
                    continue;
                }
                if window.contains(s, r)? {
                    total += 1;
                }
            }
        }
        k += 2;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(slope: (u64, u64), radius: u64) -> SectorSpec {
        SectorSpec::new(SectorKind::Circle, slope, (radius * radius, 1)).unwrap()
    }

    const OPP: LatticeFilter = LatticeFilter { parity: Parity::Opposite, coprime: false };
    const OPP_COPRIME: LatticeFilter = LatticeFilter { parity: Parity::Opposite, coprime: true };

    #[test]
    fn circle_examples() {
        assert_eq!(count_sector(&circle((1, 1), 3), OPP), 1);
        assert_eq!(count_sector(&circle((1, 1), 5), OPP), 3);
        assert_eq!(count_sector(&circle((0, 1), 5), OPP), 0);
        // (4,3) sits exactly on radius 5: strict excludes, closed admits.
        assert_eq!(
            count_sector(&circle((1, 1), 5).with_closed_radius(true), OPP),
            4
        );
    }

    #[test]
    fn mobius_values() {
        let mu = mobius_sieve(10);
        assert_eq!(mu[1], 1);
        assert_eq!(mu[2], -1);
        assert_eq!(mu[4], 0);
        assert_eq!(mu[6], 1);
        assert_eq!(mu[9], 0);
        assert_eq!(mu[10], 1);
    }

    #[test]
    fn mobius_count_matches_direct() {
        let spec = circle((1, 1), 5);
        assert_eq!(count_sector(&spec, OPP_COPRIME), 3);
        assert_eq!(mobius_sector_count_default(&spec, Parity::Opposite), 3);

        let spec = circle((1, 1), 15);
        assert_eq!(
            mobius_sector_count_default(&spec, Parity::Opposite),
            count_sector(&spec, OPP_COPRIME)
        );

        // Hyperbola star at a convergent of tanh(alpha).
        let spec = SectorSpec::new(SectorKind::HyperbolaStar, (195_025, 470_832), (400, 1)).unwrap();
        assert_eq!(
            mobius_sector_count_default(&spec, Parity::Opposite),
            count_sector(&spec, OPP_COPRIME)
        );
    }

    #[test]
    fn mobius_inversion_without_parity_runs_over_all_d() {
        // With no parity restriction the gcd can be even, so the inversion
        // must sum over every d, not just the odd ones.
        for radius in [10u64, 30, 101] {
            let spec = circle((1, 1), radius);
            let direct = count_sector(&spec, LatticeFilter { parity: Parity::Any, coprime: true });
            assert_eq!(mobius_sector_count_default(&spec, Parity::Any), direct, "radius {radius}");
        }
    }

    #[test]
    fn mobius_accepts_a_custom_count_fn() {
        // The inversion is generic over the unrestricted-gcd counter; feed it
        // a brute-force double loop instead of the column counter.
        let spec = circle((1, 1), 40);
        let brute = |s: &SectorSpec| {
            let mut c = 0u64;
            for x in 1..=200u64 {
                for y in 1..=x {
                    let inside = (s.radius_sq_den as u128) * ((x * x + y * y) as u128)
                        < s.radius_sq_num as u128;
                    if inside && (x + y) % 2 == 1 {
                        c += 1;
                    }
                }
            }
            c
        };
        assert_eq!(
            mobius_sector_count(&spec, Parity::Opposite, brute),
            count_sector(&spec, OPP_COPRIME)
        );
    }

    #[test]
    fn closed_radius_hyperbola_admits_the_boundary() {
        // (5, 1) sits exactly on x^2 - y^2 = 24 and inside the slope bound;
        // the other lattice point on that level, (7, 5), is outside it.
        let strict = SectorSpec::new(SectorKind::Hyperbola, (195_025, 470_832), (24, 1)).unwrap();
        let closed = strict.clone().with_closed_radius(true);
        let any = LatticeFilter { parity: Parity::Any, coprime: false };
        assert_eq!(count_sector(&closed, any) - count_sector(&strict, any), 1);
    }

    #[test]
    fn hyperbola_small_counts_match_enumeration() {
        // Brute-force the definition at a small radius for both kinds.
        let p = 195_025u64;
        let q = 470_832u64;
        let n = 12u64;
        let spec = SectorSpec::new(SectorKind::Hyperbola, (p, q), (n * n, 1)).unwrap();
        let mut expect = 0;
        for x in 1..100u64 {
            for y in 1..100u64 {
                if x * x < y * y + n * n
                    && y as u128 * q as u128 <= x as u128 * p as u128
                    && (x + y) % 2 == 1
                {
                    expect += 1;
                }
            }
        }
        assert_eq!(count_sector(&spec, OPP), expect);

        let spec = SectorSpec::new(SectorKind::HyperbolaStar, (p, q), (n * n, 1)).unwrap();
        let mut expect = 0;
        for x in 1..200u64 {
            for y in 1..x {
                if 2 * x * y < n * n
                    && x as u128 * (q - p) as u128 <= y as u128 * (q + p) as u128
                    && (x + y) % 2 == 1
                {
                    expect += 1;
                }
            }
        }
        assert_eq!(count_sector(&spec, OPP), expect);
    }

    #[test]
    fn slope_guard_enforced() {
        assert!(SectorSpec::new(SectorKind::Hyperbola, (2, 5), (100, 1)).is_ok());
        // 1/2 = 0.5 already exceeds tanh(alpha) = sqrt(2)-1.
        assert!(SectorSpec::new(SectorKind::Hyperbola, (1, 2), (100, 1)).is_err());
        assert!(SectorSpec::new(SectorKind::Circle, (2, 1), (100, 1)).is_err());
    }

    #[test]
    fn box_degenerate_cases() {
        // N=10, n=4: the first shell needs circle norm <= 0.2.
        let grid = BoxGrid::new(10, Family::Reciprocal, 4).unwrap();
        assert_eq!(count_box(&grid, 1, 1).unwrap(), 0);

        // N=1: the single box is the whole region at bound floor(sqrt(n)).
        for n in [10_000u64, 123_456] {
            let grid = BoxGrid::new(1, Family::Reciprocal, n).unwrap();
            assert_eq!(
                count_box(&grid, 1, 1).unwrap(),
                crate::counts::region_size(crate::counts::Region::B, n.sqrt())
            );
            let grid = BoxGrid::new(1, Family::Skew, n).unwrap();
            assert_eq!(
                count_box(&grid, 1, 1).unwrap(),
                crate::counts::region_size(crate::counts::Region::D, n.sqrt())
            );
        }
    }

    #[test]
    fn boxes_partition_the_region() {
        // Summing every box must reproduce the untiled region count.
        let n = 40_000u64; // sqrt(n) = 200 exactly
        for (family, region) in [
            (Family::Reciprocal, crate::counts::Region::B),
            (Family::Skew, crate::counts::Region::D),
        ] {
            let grid = BoxGrid::new(3, family, n).unwrap();
            let mut total = 0;
            for i in 1..=3 {
                for j in 1..=9 {
                    total += count_box(&grid, i, j).unwrap();
                }
            }
            // The N^3 boxes tile the region up to norm N^2 * eps * sqrt(n) = 600.
            assert_eq!(total, crate::counts::region_size(region, 600));
        }
    }

    #[test]
    fn box_index_validation() {
        let grid = BoxGrid::new(4, Family::Reciprocal, 100).unwrap();
        assert!(count_box(&grid, 0, 1).is_err());
        assert!(count_box(&grid, 5, 1).is_err());
        assert!(count_box(&grid, 1, 17).is_err());
    }
}
