//! The odd-degree experiments and the showcase polynomials.
//!
//! Scanning all monic Littlewood polynomials of odd degree: every one found
//! with nonvanishing square discriminant is divisible by X+1 or X-1 (so has
//! a cyclotomic factor). Vanishing discriminants exist in every odd degree
//! from 3 on via (X^(n+1)-1)(X^n+...+1) = (X-1)(X^n+...+1)^2. Two special
//! polynomials are re-expanded and checked exactly: a degree-27 Littlewood
//! polynomial divisible by the square of the non-cyclotomic cubic X^3+X^2-1,
//! and a degree-11 one with vanishing discriminant whose factors are not
//! nearly (skew-)reciprocal.
//!
//! ```bash
//! cargo run --release -p littlewood --example odd_degree_experiments
//! ```

use littlewood::oracle::{
    odd_degree_scan, repeated_factor_littlewood, repeated_factor_witness, verify_showcase,
    OracleOptions,
};

fn main() {
    let opts = OracleOptions { threads: 2, ..Default::default() };
    println!("{:>7} {:>9} {:>9} {:>10} {:>10}  {}", "degree", "scanned", "squares", "vanishing", "witnesses", "all div. by X+1 or X-1");
    for report in odd_degree_scan(13, &opts).unwrap() {
        let all_divisible = report
            .witnesses
            .iter()
            .all(|w| w.divisible_by_x_plus_1 || w.divisible_by_x_minus_1);
        println!(
            "{:>7} {:>9} {:>9} {:>10} {:>10}  {}",
            report.degree,
            report.total_polys,
            report.square_disc_count,
            report.vanishing_disc_count,
            report.witnesses.len(),
            all_divisible
        );
        assert!(all_divisible);
    }
    println!("(the scan extends to degree 29 behind OracleOptions::long_run or `lwd brute --scan --long`)");

    println!("\nvanishing-discriminant construction, degree 9:");
    let w = repeated_factor_witness(9).unwrap();
    println!("  {w}");
    println!("  squarefree: {}, disc = {}", w.is_squarefree(), w.discriminant().unwrap());

    println!("\ndegree-27 Littlewood polynomial with repeated non-cyclotomic factor:");
    println!("  {}", repeated_factor_littlewood());

    let report = verify_showcase();
    println!("\nshowcase checks pass: {}", report.ok);
    for issue in &report.issues {
        println!("  issue: {issue}");
    }
    assert!(report.ok);
}
