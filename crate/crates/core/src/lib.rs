//! Double-precision evaluation of the Faddeeva function
//!
//! ```text
//! w(z) = exp(-z²) · (1 + (2i/√π) ∫₀^z exp(t²) dt)
//! ```
//!
//! built on a truncated Fourier expansion of `exp(-t²/4)` and a rearranged
//! form of the same expansion that stays accurate as `Im z → 0`.
//!
//! The crate is split into:
//!
//! - [`coefficients`]: the Fourier coefficient table `a_n`.
//! - [`kernel`]: removable-singularity-safe term kernels.
//! - [`eval`]: the two expansions, the dispatcher and full-plane symmetry.
//! - [`oracle`]: an independent arbitrary-precision reference for `w(z)`.
//! - [`verification`]: relative-error metrics, error maps and sweeps.
//! - [`lineshape`]: Voigt line profiles from physical line parameters.
//! - [`fmt`]: shortest round-trip float rendering used by every text format.

pub mod coefficients;
pub mod error;
pub mod eval;
pub mod fmt;
pub mod kernel;
pub mod lineshape;
pub mod oracle;
pub mod verification;

pub use num_complex::Complex64;

pub use crate::coefficients::{build_coefficients, CoefficientTable};
pub use crate::error::{EvalError, LineError, OracleError, VerifyError};
pub use crate::eval::{
    route, voigt, w_any, w_any_with, w_eq2, w_eq4, w_upper_right, Variant, Y_SWITCH,
};
pub use crate::kernel::{leading_term_eq2, leading_term_eq4, series_term, SeriesMode};
pub use crate::oracle::{w_ref, w_ref_cf, w_ref_series, Method, ReferenceValue};
