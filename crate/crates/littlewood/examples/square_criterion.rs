//! The evaluation criterion for square discriminants.
//!
//! A separable reciprocal polynomial of degree 2n has square discriminant
//! exactly when (-1)^n f(1) f(-1) is a square; a skew-reciprocal one exactly
//! when f_e(-1)^2 + f_o(-1)^2 is. Both are checked here against the full
//! discriminant for every monic family member of each even degree up to 16.
//!
//! ```bash
//! cargo run --release -p littlewood --example square_criterion
//! ```

use littlewood::family::even_odd_split;
use littlewood::{enumerate_family, is_perfect_square, square_criterion, Family};
use num_bigint::BigInt;

fn main() {
    for family in [Family::Reciprocal, Family::Skew] {
        let mut checked = 0u64;
        for degree in (2..=16u64).step_by(2) {
            for seed in enumerate_family(family, degree, true).unwrap() {
                let f = seed.build();
                let fast = square_criterion(&f, family).unwrap();
                let slow = is_perfect_square(&f.discriminant().unwrap());
                assert_eq!(fast, slow, "criterion disagrees at {f}");
                checked += 1;
            }
        }
        println!("{family}: criterion == discriminant test on {checked} polynomials");
    }

    // A closer look at one member of each family.
    let p9 = littlewood::IntPolynomial::from_coeffs_i64(&[1; 9]);
    let v = p9.evaluate(&BigInt::from(1)) * p9.evaluate(&BigInt::from(-1));
    println!("\nf = {p9}");
    println!("  (-1)^4 f(1) f(-1) = {v} -> square: {}", is_perfect_square(&v));
    println!("  disc(f) = {} -> square: {}", p9.discriminant().unwrap(),
        is_perfect_square(&p9.discriminant().unwrap()));

    let seed = littlewood::FamilySeed::from_mask(Family::Skew, 8, 0b0110, true).unwrap();
    let f = seed.build();
    let (fe, fo) = even_odd_split(&f);
    let a = fe.evaluate(&BigInt::from(-1));
    let b = fo.evaluate(&BigInt::from(-1));
    println!("\nf = {f}");
    println!(
        "  f_e(-1)^2 + f_o(-1)^2 = {}^2 + {}^2 = {} -> square: {}",
        a,
        b,
        &a * &a + &b * &b,
        is_perfect_square(&(&a * &a + &b * &b))
    );
}
