//! Voigt line profiles from physical line parameters.
//!
//! Widths are half-widths at half-maximum in cm⁻¹. The reduced coordinates are
//! `x = √ln2·(ν − ν₀)/α_D` and `y = √ln2·γ_L/α_D`.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Deserialize;

use crate::coefficients::CoefficientTable;
use crate::error::LineError;
use crate::eval::{route, voigt, Variant};
use crate::fmt::shortest;

const SQRT_LN2: f64 = 0.832_554_611_157_697_8;

/// Expected line-list header.
pub const LINE_LIST_HEADER: [&str; 4] = ["nu0", "alpha_d", "gamma_l", "intensity"];

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct SpectralLine {
    /// Line centre.
    pub nu0: f64,
    /// Doppler HWHM.
    pub alpha_d: f64,
    /// Lorentz HWHM.
    pub gamma_l: f64,
    pub intensity: f64,
}

impl SpectralLine {
    pub fn new(nu0: f64, alpha_d: f64, gamma_l: f64, intensity: f64) -> Result<Self, LineError> {
        let line = Self {
            nu0,
            alpha_d,
            gamma_l,
            intensity,
        };
        line.validate()?;
        Ok(line)
    }

    pub fn validate(&self) -> Result<(), LineError> {
        let msg = if !self.nu0.is_finite() {
            "nu0 must be finite"
        } else if !(self.alpha_d > 0.0 && self.alpha_d.is_finite()) {
            "alpha_d must be positive and finite"
        } else if !(self.gamma_l >= 0.0 && self.gamma_l.is_finite()) {
            "gamma_l must be non-negative and finite"
        } else if !(self.intensity >= 0.0 && self.intensity.is_finite()) {
            "intensity must be non-negative and finite"
        } else {
            return Ok(());
        };
        Err(LineError::InvalidLine(msg.into()))
    }

    /// Reduced `y`, shared by every wavenumber.
    pub fn y(&self) -> f64 {
        SQRT_LN2 * self.gamma_l / self.alpha_d
    }

    /// Peak of the Doppler profile with unit intensity.
    fn norm(&self) -> f64 {
        SQRT_LN2 / (std::f64::consts::PI.sqrt() * self.alpha_d)
    }
}

/// Uniform wavenumber grid including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavenumberGrid {
    pub nu_start: f64,
    pub nu_end: f64,
    pub n_points: usize,
}

impl WavenumberGrid {
    pub fn new(nu_start: f64, nu_end: f64, n_points: usize) -> Result<Self, LineError> {
        if !(nu_start.is_finite() && nu_end.is_finite()) {
            return Err(LineError::InvalidGrid("bounds must be finite".into()));
        }
        if nu_start >= nu_end {
            return Err(LineError::InvalidGrid(format!(
                "nu_start {nu_start} must be below nu_end {nu_end}"
            )));
        }
        if n_points < 2 {
            return Err(LineError::InvalidGrid(format!(
                "need n_points >= 2, got {n_points}"
            )));
        }
        Ok(Self {
            nu_start,
            nu_end,
            n_points,
        })
    }

    /// Grid of `n_points` over `nu0 ± half_width`.
    pub fn centered(nu0: f64, half_width: f64, n_points: usize) -> Result<Self, LineError> {
        Self::new(nu0 - half_width, nu0 + half_width, n_points)
    }

    /// Nodes, placed as offsets from the midpoint so that mirrored nodes
    /// have exactly opposite offsets.
    pub fn nodes(&self) -> Vec<f64> {
        let mid = 0.5 * (self.nu_start + self.nu_end);
        let half = 0.5 * (self.nu_end - self.nu_start);
        let last = (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|i| match i {
                0 => self.nu_start,
                i if i == self.n_points - 1 => self.nu_end,
                i => mid + half * ((2 * i) as f64 - last) / last,
            })
            .collect()
    }

    pub fn step(&self) -> f64 {
        (self.nu_end - self.nu_start) / (self.n_points - 1) as f64
    }
}

pub fn to_reduced_coords(nu: f64, line: &SpectralLine) -> Result<Complex64, LineError> {
    line.validate()?;
    Ok(Complex64::new(
        SQRT_LN2 * (nu - line.nu0) / line.alpha_d,
        line.y(),
    ))
}

/// `intensity·√ln2/(√π·α_D)·V(x, y)` at every node of `grid`.
pub fn voigt_profile(
    line: &SpectralLine,
    grid: &WavenumberGrid,
    table: &CoefficientTable,
) -> Result<Vec<f64>, LineError> {
    line.validate()?;
    let scale = line.intensity * line.norm();
    let y = line.y();
    grid.nodes()
        .par_iter()
        .map(|&nu| {
            let x = SQRT_LN2 * (nu - line.nu0) / line.alpha_d;
            Ok(scale * voigt(x, y, table)?)
        })
        .collect()
}

/// Trapezoidal integral of `values` sampled on `grid`.
pub fn integrate(grid: &WavenumberGrid, values: &[f64]) -> f64 {
    let nodes = grid.nodes();
    nodes
        .windows(2)
        .zip(values.windows(2))
        .map(|(n, v)| 0.5 * (n[1] - n[0]) * (v[0] + v[1]))
        .sum()
}

/// How many grid nodes the dispatcher sends to each expansion, as
/// `(plain, small_y)`.
pub fn route_counts(
    line: &SpectralLine,
    grid: &WavenumberGrid,
) -> Result<(usize, usize), LineError> {
    let mut counts = (0, 0);
    for nu in grid.nodes() {
        let z = to_reduced_coords(nu, line)?;
        match route(Complex64::new(z.re.abs(), z.im)) {
            Variant::Eq4 => counts.1 += 1,
            _ => counts.0 += 1,
        }
    }
    Ok(counts)
}

/// Read a line list. Row numbers in errors count data rows from 1.
pub fn read_line_list<R: Read>(input: R) -> Result<Vec<SpectralLine>, LineError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr.headers().map_err(|e| LineError::Parse {
        row: 0,
        message: e.to_string(),
    })?;
    if headers.iter().ne(LINE_LIST_HEADER) {
        return Err(LineError::Parse {
            row: 0,
            message: format!("expected header '{}'", LINE_LIST_HEADER.join(",")),
        });
    }
    let mut lines = Vec::new();
    for (i, rec) in rdr.deserialize::<SpectralLine>().enumerate() {
        let row = i + 1;
        let line = rec.map_err(|e| LineError::Parse {
            row,
            message: e.to_string(),
        })?;
        line.validate().map_err(|e| LineError::InvariantViolation {
            row,
            message: match e {
                LineError::InvalidLine(m) => m,
                other => other.to_string(),
            },
        })?;
        lines.push(line);
    }
    Ok(lines)
}

pub fn parse_line_list(path: impl AsRef<Path>) -> Result<Vec<SpectralLine>, LineError> {
    read_line_list(std::fs::File::open(path)?)
}

/// Profile CSV with header `nu,value`.
pub fn write_profile_csv<W: Write>(
    mut out: W,
    grid: &WavenumberGrid,
    values: &[f64],
) -> std::io::Result<()> {
    out.write_all(b"nu,value\n")?;
    for (nu, v) in grid.nodes().iter().zip(values) {
        writeln!(out, "{},{}", shortest(*nu), shortest(*v))?;
    }
    Ok(())
}
