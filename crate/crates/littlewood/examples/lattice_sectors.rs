//! Lattice points in circle and hyperbolic sectors.
//!
//! Counts integer points (x, y), x, y > 0 under parity and coprimality
//! filters, with every membership test done in exact integer arithmetic.
//! Opposite-parity counts approach theta n^2/4 and coprime counts
//! 2 theta n^2/pi^2; the coprime counts are computed twice, directly and by
//! Moebius inversion over odd scaling factors.
//!
//! ```bash
//! cargo run --release -p littlewood --example lattice_sectors
//! ```

use littlewood::asymptotics::alpha;
use littlewood::lattice::{
    count_sector, mobius_sector_count_default, LatticeFilter, Parity, SectorKind, SectorSpec,
};
use std::f64::consts::PI;

fn main() {
    let n = 2000u64;
    let nf = n as f64;
    // tanh(alpha) = sqrt(2)-1 as a continued-fraction convergent.
    let tanh_alpha = (195_025u64, 470_832u64);
    let opp = LatticeFilter { parity: Parity::Opposite, coprime: false };
    let coprime = LatticeFilter { parity: Parity::Opposite, coprime: true };

    println!("radius {n}; expected densities: opposite ~ theta n^2/4, coprime ~ 2 theta n^2/pi^2\n");
    for (kind, slope, theta) in [
        (SectorKind::Circle, (1u64, 1u64), PI / 4.0),
        (SectorKind::Hyperbola, tanh_alpha, alpha()),
        (SectorKind::HyperbolaStar, tanh_alpha, alpha()),
    ] {
        let spec = SectorSpec::new(kind, slope, (n * n, 1)).unwrap();
        let o = count_sector(&spec, opp);
        let c_direct = count_sector(&spec, coprime);
        let c_mobius = mobius_sector_count_default(&spec, Parity::Opposite);
        assert_eq!(c_direct, c_mobius, "the two coprime algorithms must agree");
        println!("{kind}:");
        println!(
            "  opposite parity: {:>8}   / (theta n^2/4)      = {:.5}",
            o,
            o as f64 / (theta * nf * nf / 4.0)
        );
        println!(
            "  coprime (both):  {:>8}   / (2 theta n^2/pi^2) = {:.5}",
            c_direct,
            c_direct as f64 / (2.0 * theta * nf * nf / (PI * PI))
        );
    }

    // Boundary semantics: the sector radius is strict, the tuple regions are
    // closed; radius 5 shows the difference ((4,3) sits on the circle).
    let strict = SectorSpec::new(SectorKind::Circle, (1, 1), (25, 1)).unwrap();
    let closed = strict.clone().with_closed_radius(true);
    println!(
        "\nradius-5 circle, opposite parity: strict {} vs closed {}",
        count_sector(&strict, opp),
        count_sector(&closed, opp)
    );
}
