//! Exact family counts from the closed combinatorial formulas.
//!
//! For every supported degree (even, congruent to 0 or 6 mod 8) the count of
//! monic family members with nonvanishing square discriminant is a central
//! term plus a sum over Pythagorean-parametrization tuples. Everything here
//! is exact big-integer arithmetic; the probability column divides by the
//! 2^(degree/2) monic seeds.
//!
//! ```bash
//! cargo run --release -p littlewood --example exact_counts
//! ```

use littlewood::{count_family, family_probability, Family};
use num_traits::ToPrimitive;

fn main() {
    println!("{:>7}  {:>11}  {:>24}  {:>11}  {:>12}", "degree", "family", "count", "tuple terms", "probability");
    for degree in (6..=96u64).filter(|d| d % 8 == 0 || d % 8 == 6) {
        for family in [Family::Reciprocal, Family::Skew] {
            let r = count_family(family, degree).expect("supported degree");
            let p = family_probability(family, degree).unwrap();
            println!(
                "{:>7}  {:>11}  {:>24}  {:>11}  {:>12.8}",
                degree,
                family.to_string(),
                r.count.to_string(),
                r.tuple_terms,
                p.to_f64().unwrap()
            );
        }
    }
    println!();
    println!("The count splits as central + 2 * (tuple sum); e.g. degree 8 reciprocal:");
    let r = count_family(Family::Reciprocal, 8).unwrap();
    println!(
        "  {} = {} + 2 * {}",
        r.count,
        r.central_term,
        (&r.count - &r.central_term) / 2
    );
}
