//! How slowly the normalized counts approach their limits.
//!
//! The counts divided by 16^n log n/sqrt n converge to 0.0749... (reciprocal)
//! and 0.0897... (skew), but the approach is glacial: at n = 10^11 the
//! reciprocal ratio is still 0.099..., a third above its limit. The estimator
//! works in normalized space throughout — nothing of size 16^n is ever
//! formed — so each row takes well under a second.
//!
//! ```bash
//! cargo run --release -p littlewood --example convergence_table
//! ```

use littlewood::asymptotics::convergence_table;
use littlewood::Family;

fn main() {
    let n_values = [
        10_000u64,
        1_000_000,
        100_000_000,
        10_000_000_000,
        100_000_000_000,
    ];
    for family in [Family::Reciprocal, Family::Skew] {
        println!("{family}:");
        println!("{:>16}  {:>10}  {:>10}  {:>12}", "n", "ratio", "limit", "ratio/limit");
        for row in convergence_table(family, &n_values, 2).unwrap() {
            println!(
                "{:>16}  {:>10.6}  {:>10.6}  {:>12.4}",
                row.n, row.ratio, row.limit, row.ratio_over_limit
            );
        }
        println!();
    }
    println!("(counts normalized by 16^n log n / sqrt n)");
}
