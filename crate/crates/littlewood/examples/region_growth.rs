//! Growth of the tuple regions feeding the counting formulas.
//!
//! |B_n| (circle norm at most n) grows like n log n/(4 pi); |D_n| (leg and
//! twice-area at most n) like (2 alpha/pi^2) n log n with
//! alpha = log sqrt(1+sqrt(2)). Convergence is O(1/log n), i.e. slow — the
//! ratios below crawl toward 1.
//!
//! ```bash
//! cargo run --release -p littlewood --example region_growth
//! ```

use littlewood::asymptotics::alpha;
use littlewood::counts::{region_size_parallel, Region};
use std::f64::consts::PI;

fn main() {
    println!(
        "{:>10}  {:>10} {:>9}   {:>10} {:>9}",
        "n", "|B_n|", "ratio", "|D_n|", "ratio"
    );
    for exp in 3..=7u32 {
        let n = 10u64.pow(exp);
        let nf = n as f64;
        let b = region_size_parallel(Region::B, n, 2);
        let d = region_size_parallel(Region::D, n, 2);
        let b_ref = nf * nf.ln() / (4.0 * PI);
        let d_ref = 2.0 * alpha() / (PI * PI) * nf * nf.ln();
        println!(
            "{:>10}  {:>10} {:>9.5}   {:>10} {:>9.5}",
            n,
            b,
            b as f64 / b_ref,
            d,
            d as f64 / d_ref
        );
    }
    println!("\nreferences: |B_n| ~ n ln n/(4 pi), |D_n| ~ (2 alpha/pi^2) n ln n");
}
