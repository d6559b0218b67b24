//! Command-line front end for `wofz-core`.
//!
//! Exit codes: 0 on success, 2 for usage, domain and I/O errors, 3 when the
//! reference oracle reports an internal inconsistency.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use wofz_core::fmt::shortest;
use wofz_core::lineshape::{
    parse_line_list, route_counts, voigt_profile, write_profile_csv, WavenumberGrid,
};
use wofz_core::oracle::DEFAULT_DIGITS;
use wofz_core::verification::{
    overlap_consistency, rel_err_components, run_throughput, summarize, sweep, GridSpec, Scale,
    BENCH_SEED,
};
use wofz_core::{
    w_any_with, w_ref, CoefficientTable, Complex64, OracleError, Variant, VerifyError,
};

#[derive(Debug, Parser)]
#[command(
    name = "wofz",
    version,
    about = "Faddeeva function w(z) evaluation and verification"
)]
pub struct Cli {
    /// Decimal digits used by the reference oracle.
    #[arg(long, global = true, env = "WOFZ_ORACLE_DIGITS", default_value_t = DEFAULT_DIGITS)]
    pub digits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate w(x + iy) at one point.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, default_value = "auto")]
        variant: Variant,
        /// Also print the relative errors against the reference oracle.
        #[arg(long)]
        check: bool,
    },
    /// Evaluate every row of a CSV file with header `x,y`.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value = "auto")]
        variant: Variant,
    },
    /// Write a relative-error map against the reference oracle.
    Errmap {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "auto")]
        variant: Variant,
        #[arg(long)]
        output: PathBuf,
        /// Also write the summary to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Largest relative difference between the two expansions over a grid.
    Overlap {
        #[arg(long, default_value_t = 0.0)]
        xmin: f64,
        #[arg(long, default_value_t = 10.0)]
        xmax: f64,
        #[arg(long, default_value_t = 51)]
        nx: usize,
        #[arg(long, default_value_t = 1e-3)]
        ymin: f64,
        #[arg(long, default_value_t = 1e-1)]
        ymax: f64,
        #[arg(long, default_value_t = 21)]
        ny: usize,
    },
    /// Synthesise the summed Voigt profile of a line list.
    Voigt {
        /// Line list CSV with header `nu0,alpha_d,gamma_l,intensity`.
        #[arg(long)]
        lines: PathBuf,
        #[arg(long)]
        nu_start: f64,
        #[arg(long)]
        nu_end: f64,
        #[arg(long, default_value_t = 10_001)]
        n_points: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Throughput on fixed-seed pseudo-random points.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        #[arg(long, default_value_t = BENCH_SEED)]
        seed: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value = "auto")]
        variant: Variant,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub xmax: f64,
    #[arg(long, default_value_t = 101)]
    pub nx: usize,
    #[arg(long, default_value_t = 1e-14)]
    pub ymin: f64,
    #[arg(long, default_value_t = 1e-1)]
    pub ymax: f64,
    #[arg(long, default_value_t = 61)]
    pub ny: usize,
    /// Logarithmic y spacing (the default).
    #[arg(long, overrides_with = "linear_y")]
    pub log_y: bool,
    #[arg(long, overrides_with = "log_y")]
    pub linear_y: bool,
    /// Logarithmic x spacing.
    #[arg(long)]
    pub log_x: bool,
}

impl GridArgs {
    pub fn to_grid(&self) -> Result<GridSpec, VerifyError> {
        let y_scale = if self.linear_y {
            Scale::Linear
        } else {
            Scale::Log10
        };
        let x_scale = if self.log_x {
            Scale::Log10
        } else {
            Scale::Linear
        };
        GridSpec::new(
            (self.xmin, self.xmax, self.nx),
            (self.ymin, self.ymax, self.ny),
            y_scale,
        )?
        .with_x_scale(x_scale)
    }
}

/// A failed run: message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = if e.is_oracle_inconsistency() { 3 } else { 2 };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        VerifyError::from(e).into()
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::usage(e.to_string())
            }
        }
    )*};
}
failure_from!(
    std::io::Error,
    wofz_core::EvalError,
    wofz_core::LineError,
    csv::Error
);

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let table = CoefficientTable::default();
    match &cli.command {
        Command::Eval {
            x,
            y,
            variant,
            check,
        } => eval(*x, *y, *variant, check.then_some(cli.digits), &table, out),
        Command::Batch {
            input,
            output,
            variant,
        } => batch(input, output, *variant, &table, err),
        Command::Errmap {
            grid,
            variant,
            output,
            summary,
        } => {
            let grid = grid.to_grid()?;
            let map = sweep(&grid, *variant, &table, cli.digits)?;
            let mut w = BufWriter::new(File::create(output)?);
            map.write_csv(&mut w)?;
            w.flush()?;
            let s = summarize(&map)?;
            if let Some(path) = summary {
                std::fs::write(path, s.to_json())?;
            }
            out.write_all(s.to_json().as_bytes())?;
            Ok(())
        }
        Command::Overlap {
            xmin,
            xmax,
            nx,
            ymin,
            ymax,
            ny,
        } => {
            let grid = GridSpec::new((*xmin, *xmax, *nx), (*ymin, *ymax, *ny), Scale::Log10)?;
            let d = overlap_consistency(&grid, &table)?;
            writeln!(out, "max_rel_diff={}", shortest(d))?;
            Ok(())
        }
        Command::Voigt {
            lines,
            nu_start,
            nu_end,
            n_points,
            output,
        } => {
            let list = parse_line_list(lines)?;
            let grid = WavenumberGrid::new(*nu_start, *nu_end, *n_points)?;
            let mut total = vec![0.0; grid.n_points];
            let (mut plain, mut small_y) = (0, 0);
            for line in &list {
                for (t, v) in total.iter_mut().zip(voigt_profile(line, &grid, &table)?) {
                    *t += v;
                }
                let (a, b) = route_counts(line, &grid)?;
                plain += a;
                small_y += b;
            }
            let mut w = BufWriter::new(File::create(output)?);
            write_profile_csv(&mut w, &grid, &total)?;
            w.flush()?;
            writeln!(
                out,
                "lines={} points={} eq2_nodes={plain} eq4_nodes={small_y}",
                list.len(),
                grid.n_points
            )?;
            Ok(())
        }
        Command::Bench {
            n,
            seed,
            threads,
            variant,
        } => {
            if *n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            let r = run_throughput(*n, *seed, *variant, *threads, &table)?;
            writeln!(
                out,
                "variant={} n={} threads={} seconds={:.6} evals_per_sec={:.0} checksum={:016x}",
                r.variant,
                r.points,
                r.threads,
                r.elapsed.as_secs_f64(),
                r.evals_per_second(),
                r.checksum
            )?;
            Ok(())
        }
    }
}

fn eval(
    x: f64,
    y: f64,
    variant: Variant,
    check_digits: Option<u32>,
    table: &CoefficientTable,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Failure::usage("x and y must be finite"));
    }
    let z = Complex64::new(x, y);
    let w = w_any_with(z, table, variant)?;
    write!(out, "re={} im={}", shortest(w.re), shortest(w.im))?;
    if let Some(digits) = check_digits {
        if y < 0.0 {
            return Err(Failure::usage("--check needs y >= 0"));
        }
        // w(-x + iy) = conj w(x + iy)
        let r = w_ref(Complex64::new(x.abs(), y), digits)?;
        let w_mirror = if x < 0.0 { w.conj() } else { w };
        let (dr, di) = rel_err_components(w_mirror, &r);
        write!(out, " delta_re={} delta_im={}", shortest(dr), shortest(di))?;
    }
    writeln!(out)?;
    Ok(())
}

fn batch(
    input: &PathBuf,
    output: &PathBuf,
    variant: Variant,
    table: &CoefficientTable,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(input)?;
    if rdr.headers()?.iter().ne(["x", "y"]) {
        return Err(Failure::usage(format!(
            "{}: expected header 'x,y'",
            input.display()
        )));
    }
    let mut w = BufWriter::new(File::create(output)?);
    w.write_all(b"x,y,re,im\n")?;
    let mut warnings = 0usize;
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let field = |k: usize| -> Result<f64, Failure> {
            rec.get(k)
                .and_then(|s| s.parse::<f64>().ok())
                .ok_or_else(|| {
                    Failure::usage(format!(
                        "{}: row {}: expected two numbers",
                        input.display(),
                        i + 1
                    ))
                })
        };
        let (x, y) = (field(0)?, field(1)?);
        let w_val = match w_any_with(Complex64::new(x, y), table, variant) {
            Ok(v) => v,
            Err(e) => {
                warnings += 1;
                writeln!(err, "row {}: {e}", i + 1)?;
                Complex64::new(f64::NAN, f64::NAN)
            }
        };
        writeln!(
            w,
            "{},{},{},{}",
            shortest(x),
            shortest(y),
            shortest(w_val.re),
            shortest(w_val.im)
        )?;
    }
    w.flush()?;
    writeln!(err, "warnings: {warnings}")?;
    Ok(())
}
