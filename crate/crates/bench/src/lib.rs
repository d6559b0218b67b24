//! Fixtures shared by the criterion benchmarks.

use wofz_core::verification::{bench_points, BENCH_SEED};
use wofz_core::{Complex64, Variant};

/// Points per benchmark iteration.
pub const BATCH: usize = 1024;

/// Fixed-seed first-quadrant points drawn from `variant`'s working domain.
pub fn points(variant: Variant) -> Vec<Complex64> {
    bench_points(BATCH, BENCH_SEED, variant)
}

/// Points hugging the removable singularities `τz = nπ`.
pub fn pole_points() -> Vec<Complex64> {
    (1..=23)
        .flat_map(|n| {
            let x = n as f64 * std::f64::consts::PI / 12.0;
            [0.0, 1e-14, 1e-8].map(|y| Complex64::new(x, y))
        })
        .collect()
}
