//! Degrees where square discriminants cannot occur.
//!
//! In even degree congruent to 2 or 4 mod 8 no Littlewood polynomial has
//! square discriminant. The obstruction runs through the all-ones polynomial
//! p_n = X^n + ... + 1: every degree-n Littlewood polynomial agrees with p_n
//! mod 2, and disc(p_n) = (-1)^(n(n-1)/2) (n+1)^(n-1) is 5 mod 8 exactly in
//! those residue classes (a 2-adic non-square). Both facts are checked here,
//! the first exhaustively.
//!
//! ```bash
//! cargo run --release -p littlewood --example forbidden_degrees
//! ```

use littlewood::oracle::{brute_count, disc_pn_check, OracleOptions, Scope};
use littlewood::IntPolynomial;
use num_bigint::BigInt;

fn main() {
    let opts = OracleOptions { threads: 2, ..Default::default() };
    for degree in [2u64, 4, 10, 12] {
        let squares = brute_count(Scope::All, degree, false, &opts).unwrap();
        println!(
            "degree {degree:2}: {} of {} monic Littlewood polynomials have square discriminant",
            squares,
            1u64 << degree
        );
        assert_eq!(squares, 0);
    }

    println!("\ndisc(p_n) for the all-ones polynomial:");
    println!("{:>3}  {:>28}  {:>7}", "n", "disc", "mod 8");
    for n in 2..=16u64 {
        let p = IntPolynomial::from_coeffs_i64(&vec![1i64; n as usize + 1]);
        let d = p.discriminant().unwrap();
        let m8 = ((&d % 8i32) + 8i32) % 8i32;
        println!("{:>3}  {:>28}  {:>7}", n, d.to_string(), m8);
        let mut closed = BigInt::from(n + 1).pow(n as u32 - 1);
        if (n * (n - 1) / 2) % 2 == 1 {
            closed = -closed;
        }
        assert_eq!(d, closed);
    }
    assert!(disc_pn_check(&(1..=50).collect::<Vec<u64>>()).unwrap());
    println!("\nclosed form and mod-8 dichotomy verified for n <= 50");
}
