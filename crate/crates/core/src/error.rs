use thiserror::Error;

/// Errors raised by the double-precision evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("term index {n} outside 1..={n_terms}")]
    IndexOutOfRange { n: usize, n_terms: usize },

    #[error("z = {re} + {im}i is outside the first quadrant; use w_any")]
    Domain { re: f64, im: f64 },

    #[error("w({re} + {im}i) is not representable: exp(-z²) overflows")]
    Overflow { re: f64, im: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("reference precision must be at least 20 digits, got {0}")]
    InvalidDigits(u32),

    #[error("|z| = {modulus} outside the method's range ({range})")]
    OutOfRange { modulus: f64, range: &'static str },

    #[error("reference requires finite z in the first quadrant, got {re} + {im}i")]
    Domain { re: f64, im: f64 },

    #[error("continued fraction did not converge within depth {depth}")]
    NoConvergence { depth: usize },

    #[error("oracle methods disagree at z = {re} + {im}i (relative difference {rel_diff:e})")]
    Inconsistent { re: f64, im: f64, rel_diff: f64 },

    #[error("extended-precision arithmetic failed: {0}")]
    Arithmetic(String),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("error map has no finite entries")]
    EmptyMap,

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error(transparent)]
    Oracle(#[from] OracleError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl VerifyError {
    /// True when the failure is an oracle self-consistency failure, which
    /// invalidates a verification run rather than the input.
    pub fn is_oracle_inconsistency(&self) -> bool {
        matches!(self, VerifyError::Oracle(OracleError::Inconsistent { .. }))
    }
}

#[derive(Debug, Error)]
pub enum LineError {
    #[error("invalid line: {0}")]
    InvalidLine(String),

    #[error("invalid wavenumber grid: {0}")]
    InvalidGrid(String),

    #[error("row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("row {row}: {message}")]
    InvariantViolation { row: usize, message: String },

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
