use num_complex::Complex64;

use crate::error::VerifyError;

/// Node spacing along one grid axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scale {
    #[default]
    Linear,
    Log10,
}

/// Rectangular evaluation grid, `nx` columns by `ny` rows.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub y_min: f64,
    pub y_max: f64,
    pub ny: usize,
    pub x_scale: Scale,
    pub y_scale: Scale,
}

impl GridSpec {
    /// Grid with linear `x` and the given `y` spacing.
    pub fn new(
        (x_min, x_max, nx): (f64, f64, usize),
        (y_min, y_max, ny): (f64, f64, usize),
        y_scale: Scale,
    ) -> Result<Self, VerifyError> {
        let g = Self {
            x_min,
            x_max,
            nx,
            y_min,
            y_max,
            ny,
            x_scale: Scale::Linear,
            y_scale,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn with_x_scale(mut self, scale: Scale) -> Result<Self, VerifyError> {
        self.x_scale = scale;
        self.validate()?;
        Ok(self)
    }

    /// A single node at `z`.
    pub fn point(z: Complex64) -> Self {
        Self {
            x_min: z.re,
            x_max: z.re,
            nx: 1,
            y_min: z.im,
            y_max: z.im,
            ny: 1,
            x_scale: Scale::Linear,
            y_scale: Scale::Linear,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |m: String| Err(VerifyError::InvalidGrid(m));
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return bad("grid bounds must be finite".into());
        }
        if self.nx < 1 || self.ny < 1 {
            return bad(format!(
                "need at least one node per axis, got {}x{}",
                self.nx, self.ny
            ));
        }
        if self.x_min > self.x_max {
            return bad(format!("x_min {} > x_max {}", self.x_min, self.x_max));
        }
        if self.y_min > self.y_max {
            return bad(format!("y_min {} > y_max {}", self.y_min, self.y_max));
        }
        if self.x_scale == Scale::Log10 && self.x_min <= 0.0 {
            return bad("logarithmic x needs x_min > 0".into());
        }
        if self.y_scale == Scale::Log10 && self.y_min <= 0.0 {
            return bad("logarithmic y needs y_min > 0".into());
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn xs(&self) -> Vec<f64> {
        axis(self.x_min, self.x_max, self.nx, self.x_scale)
    }

    pub fn ys(&self) -> Vec<f64> {
        axis(self.y_min, self.y_max, self.ny, self.y_scale)
    }

    /// All nodes in row-major order (`y` outer, `x` inner).
    pub fn nodes(&self) -> Vec<Complex64> {
        let xs = self.xs();
        self.ys()
            .into_iter()
            .flat_map(|y| xs.iter().map(move |&x| Complex64::new(x, y)))
            .collect()
    }
}

fn axis(lo: f64, hi: f64, n: usize, scale: Scale) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == 0 {
                return lo;
            }
            if i == n - 1 {
                return hi;
            }
            match scale {
                Scale::Linear => lo + (hi - lo) * i as f64 / last,
                Scale::Log10 => {
                    let (a, b) = (lo.log10(), hi.log10());
                    10f64.powf(a + (b - a) * i as f64 / last)
                }
            }
        })
        .collect()
}
