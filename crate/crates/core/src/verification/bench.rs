use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coefficients::CoefficientTable;
use crate::error::VerifyError;
use crate::eval::Variant;

pub const BENCH_SEED: u64 = 42;

/// `n` pseudo-random first-quadrant points for `variant`.
///
/// Two-term and combined evaluation draw `x ∈ [0, 40000]` and `y`
/// log-uniform in `[1e-14, 1e2]`. The small-`y` form draws from its own
/// working domain `x ∈ [0, 10]`, `y ∈ [1e-14, 1e-1]`, because `cos τz`
/// overflows once `τy` passes ~710.
pub fn bench_points(n: usize, seed: u64, variant: Variant) -> Vec<Complex64> {
    let (x_hi, ly) = match variant {
        Variant::Eq4 => (10.0, (-14.0, -1.0)),
        _ => (40_000.0, (-14.0, 2.0)),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x = rng.gen_range(0.0..=x_hi);
            let e: f64 = rng.gen_range(ly.0..=ly.1);
            Complex64::new(x, 10f64.powf(e))
        })
        .collect()
}

/// Order-sensitive FNV-1a hash over the bit patterns of `values`.
pub fn checksum(values: &[Complex64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in values {
        for word in [v.re.to_bits(), v.im.to_bits()] {
            for b in word.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
    }
    h
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub variant: Variant,
    pub points: usize,
    pub threads: usize,
    pub elapsed: Duration,
    pub checksum: u64,
}

impl BenchReport {
    pub fn evals_per_second(&self) -> f64 {
        self.points as f64 / self.elapsed.as_secs_f64().max(1e-12)
    }
}

/// Evaluate `variant` at the benchmark points on a pool of `threads` workers.
///
/// `threads == 0` uses rayon's default. The checksum covers every result in
/// input order and does not depend on the thread count.
pub fn run_throughput(
    n: usize,
    seed: u64,
    variant: Variant,
    threads: usize,
    table: &CoefficientTable,
) -> Result<BenchReport, VerifyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| VerifyError::InvalidGrid(format!("thread pool: {e}")))?;
    let points = bench_points(n, seed, variant);
    let start = Instant::now();
    let values: Vec<Complex64> = pool.install(|| {
        points
            .par_iter()
            .map(|&z| variant.eval_upper_right(z, table))
            .collect::<Result<_, _>>()
    })?;
    let elapsed = start.elapsed();
    Ok(BenchReport {
        variant,
        points: n,
        threads: pool.current_num_threads(),
        elapsed,
        checksum: checksum(&values),
    })
}
