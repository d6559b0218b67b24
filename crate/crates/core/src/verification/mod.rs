//! Relative-error metrics and error-map sweeps against the reference oracle.

mod bench;
mod grid;

use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::coefficients::CoefficientTable;
use crate::error::{EvalError, VerifyError};
use crate::eval::{w_eq2, w_eq4, Variant};
use crate::fmt::shortest;
use crate::oracle::{w_ref, ReferenceValue};

pub use self::bench::{bench_points, checksum, run_throughput, BenchReport, BENCH_SEED};
pub use self::grid::{GridSpec, Scale};

/// `(Δ_Re, Δ_Im)` of `approx` against `reference`.
///
/// `Δ = |(ref - approx) / ref|` per component, with the reference rounded to
/// double first. A component whose reference is exactly zero yields NaN; a
/// non-finite approximation against a non-zero reference yields `+∞`.
pub fn rel_err_components(approx: Complex64, reference: &ReferenceValue) -> (f64, f64) {
    rel_err_c64(approx, reference.to_c64())
}

pub(crate) fn rel_err_c64(approx: Complex64, reference: Complex64) -> (f64, f64) {
    let one = |a: f64, r: f64| {
        if r == 0.0 {
            f64::NAN
        } else if !a.is_finite() {
            f64::INFINITY
        } else {
            ((r - a) / r).abs()
        }
    };
    (one(approx.re, reference.re), one(approx.im, reference.im))
}

/// Per-node relative errors over a grid, stored row-major (`y` outer).
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorMap {
    pub grid: GridSpec,
    pub variant: Variant,
    pub delta_re: Vec<f64>,
    pub delta_im: Vec<f64>,
}

impl ErrorMap {
    /// CSV with header `x,y,delta_re,delta_im`, one row per node.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        out.write_all(b"x,y,delta_re,delta_im\n")?;
        for (i, z) in self.grid.nodes().iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{}",
                shortest(z.re),
                shortest(z.im),
                shortest(self.delta_re[i]),
                shortest(self.delta_im[i])
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    /// Restrict to columns with `x ≤ x_max`.
    pub fn restrict_x(&self, x_max: f64) -> ErrorMap {
        let xs = self.grid.xs();
        let keep: Vec<usize> = (0..xs.len()).filter(|&i| xs[i] <= x_max).collect();
        let nx = self.grid.nx;
        let pick = |v: &[f64]| {
            (0..self.grid.ny)
                .flat_map(|r| keep.iter().map(move |&c| v[r * nx + c]))
                .collect::<Vec<_>>()
        };
        let mut grid = self.grid.clone();
        grid.nx = keep.len();
        grid.x_max = keep.last().map_or(grid.x_min, |&i| xs[i]);
        ErrorMap {
            grid,
            variant: self.variant,
            delta_re: pick(&self.delta_re),
            delta_im: pick(&self.delta_im),
        }
    }
}

/// Evaluate `variant` and the oracle at every node of `grid`.
///
/// Rows are processed in parallel; the result does not depend on the number
/// of worker threads.
pub fn sweep(
    grid: &GridSpec,
    variant: Variant,
    table: &CoefficientTable,
    digits: u32,
) -> Result<ErrorMap, VerifyError> {
    grid.validate()?;
    if grid.x_min < 0.0 || grid.y_min < 0.0 {
        return Err(VerifyError::InvalidGrid(
            "sweeps cover the first quadrant only (x_min, y_min >= 0)".into(),
        ));
    }
    let nodes = grid.nodes();
    let deltas: Vec<(f64, f64)> = nodes
        .par_iter()
        .map(|&z| -> Result<(f64, f64), VerifyError> {
            let approx = variant.eval_upper_right(z, table)?;
            let reference = w_ref(z, digits)?;
            Ok(rel_err_components(approx, &reference))
        })
        .collect::<Result<_, _>>()?;
    let (delta_re, delta_im) = deltas.into_iter().unzip();
    Ok(ErrorMap {
        grid: grid.clone(),
        variant,
        delta_re,
        delta_im,
    })
}

/// Summary statistics of an [`ErrorMap`]; NaN entries are excluded.
///
/// A component with no finite entries reports NaN for its statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorSummary {
    pub max_re: f64,
    pub max_im: f64,
    pub argmax_re: Complex64,
    pub argmax_im: Complex64,
    pub p999_re: f64,
    pub p999_im: f64,
}

impl ErrorSummary {
    /// Largest of the two component maxima, ignoring undefined components.
    pub fn max(&self) -> f64 {
        match (self.max_re.is_nan(), self.max_im.is_nan()) {
            (true, _) => self.max_im,
            (_, true) => self.max_re,
            _ => self.max_re.max(self.max_im),
        }
    }

    /// Single-object JSON-style rendering; undefined values print as `nan`.
    pub fn to_json(&self) -> String {
        let fields = [
            ("max_re", self.max_re),
            ("max_im", self.max_im),
            ("argmax_re_x", self.argmax_re.re),
            ("argmax_re_y", self.argmax_re.im),
            ("argmax_im_x", self.argmax_im.re),
            ("argmax_im_y", self.argmax_im.im),
            ("p999_re", self.p999_re),
            ("p999_im", self.p999_im),
        ];
        let body: Vec<String> = fields
            .iter()
            .map(|(k, v)| format!("  \"{k}\": {}", shortest(*v)))
            .collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }
}

struct ComponentStats {
    max: f64,
    argmax: Complex64,
    p999: f64,
}

fn component_stats(values: &[f64], nodes: &[Complex64]) -> Option<ComponentStats> {
    let mut best: Option<(f64, usize)> = None;
    let mut finite: Vec<f64> = Vec::with_capacity(values.len());
    for (i, &v) in values.iter().enumerate() {
        if v.is_nan() {
            continue;
        }
        finite.push(v);
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, i));
        }
    }
    let (max, idx) = best?;
    finite.sort_by(|a, b| a.total_cmp(b));
    // Nearest-rank percentile.
    let rank = ((0.999 * finite.len() as f64).ceil() as usize).clamp(1, finite.len());
    Some(ComponentStats {
        max,
        argmax: nodes[idx],
        p999: finite[rank - 1],
    })
}

pub fn summarize(map: &ErrorMap) -> Result<ErrorSummary, VerifyError> {
    let nodes = map.grid.nodes();
    let re = component_stats(&map.delta_re, &nodes);
    let im = component_stats(&map.delta_im, &nodes);
    if re.is_none() && im.is_none() {
        return Err(VerifyError::EmptyMap);
    }
    let nan_c = Complex64::new(f64::NAN, f64::NAN);
    let split = |s: Option<ComponentStats>| match s {
        Some(s) => (s.max, s.argmax, s.p999),
        None => (f64::NAN, nan_c, f64::NAN),
    };
    let (max_re, argmax_re, p999_re) = split(re);
    let (max_im, argmax_im, p999_im) = split(im);
    Ok(ErrorSummary {
        max_re,
        max_im,
        argmax_re,
        argmax_im,
        p999_re,
        p999_im,
    })
}

pub type Evaluator = fn(Complex64, &CoefficientTable) -> Result<Complex64, EvalError>;

/// `max |f(z) - g(z)| / |f(z)|` over the grid.
pub fn max_discrepancy(
    grid: &GridSpec,
    table: &CoefficientTable,
    f: Evaluator,
    g: Evaluator,
) -> Result<f64, VerifyError> {
    grid.validate()?;
    let mut worst = 0.0f64;
    for z in grid.nodes() {
        let a = f(z, table)?;
        let b = g(z, table)?;
        let d = (a - b).norm() / a.norm();
        if d.is_nan() || d > worst {
            worst = if d.is_nan() { f64::INFINITY } else { d };
        }
    }
    Ok(worst)
}

/// Default band where both expansions are accurate.
pub fn overlap_grid() -> GridSpec {
    GridSpec::new((0.0, 10.0, 51), (1e-3, 1e-1, 21), Scale::Log10).expect("static grid is valid")
}

/// Largest relative discrepancy between the two expansions over `grid`,
/// which must lie inside `0 ≤ x ≤ 10`, `1e-3 ≤ y ≤ 1e-1`.
pub fn overlap_consistency(grid: &GridSpec, table: &CoefficientTable) -> Result<f64, VerifyError> {
    grid.validate()?;
    if grid.x_min < 0.0 || grid.x_max > 10.0 || grid.y_min < 1e-3 || grid.y_max > 1e-1 {
        return Err(VerifyError::InvalidGrid(
            "overlap grid must lie within 0 <= x <= 10, 1e-3 <= y <= 1e-1".into(),
        ));
    }
    max_discrepancy(grid, table, w_eq2, w_eq4)
}
