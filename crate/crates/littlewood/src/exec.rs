//! Thread-pool plumbing. Heavy operations take a thread-count hint and run
//! their fixed chunk decomposition on a local pool; results are merged in a
//! fixed order, so outputs are identical for every thread count.

use rayon::{ThreadPool, ThreadPoolBuilder};

pub fn pool(threads: usize) -> ThreadPool {
    ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool construction")
}

/// Pairwise (tree) summation over an ordered slice. The reduction tree is a
/// function of the slice alone, so the result is bit-identical no matter how
/// the per-element values were produced.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}
