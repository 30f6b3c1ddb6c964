//! The exhaustive discriminant oracle against the closed formulas.
//!
//! The oracle enumerates every monic family seed, builds the polynomial,
//! computes its full discriminant and tests it for squareness — no shortcut
//! shares code with the formula path, so agreement is meaningful.
//!
//! ```bash
//! cargo run --release -p littlewood --example brute_vs_formula
//! ```

use littlewood::oracle::{brute_count, OracleOptions, Scope};
use littlewood::{count_family, Family};

fn main() {
    let opts = OracleOptions { threads: 2, ..Default::default() };
    println!("{:>11} {:>7} {:>12} {:>12}  {}", "family", "degree", "formula", "brute", "status");
    for (family, scope) in [
        (Family::Reciprocal, Scope::Reciprocal),
        (Family::Skew, Scope::Skew),
    ] {
        for degree in [6u64, 8, 14, 16, 22, 24, 30, 32] {
            let formula = count_family(family, degree).unwrap().count;
            let brute = brute_count(scope, degree, true, &opts).unwrap();
            let ok = formula == brute.into();
            println!(
                "{:>11} {:>7} {:>12} {:>12}  {}",
                family.to_string(),
                degree,
                formula.to_string(),
                brute,
                if ok { "match" } else { "MISMATCH" }
            );
            assert!(ok);
        }
    }
}
