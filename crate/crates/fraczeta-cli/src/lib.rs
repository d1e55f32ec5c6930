//! Command-line front end: evaluate zeta/eta, evaluate the fractional-part
//! integrals, locate critical-line zeros, run the verification suite, and
//! emit machine-readable reports.
//!
//! Exit codes: 0 success (and, for `verify`, all zeros passed), 1
//! verification failures present, 2 usage error, 3 numeric failure
//! (accuracy not reached, singular input, I/O trouble).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use fraczeta::integral::{integral_improper, IntegrandKind, QuadratureConfig};
use fraczeta::report::{write_scan_report, write_verify_report, write_zeros_report, ReportFormat};
use fraczeta::verify::{scan_grid, verify_zeros};
use fraczeta::zeta::{eta_series, find_zeros, zeta_from_eta};
use fraczeta::Complex64;

#[derive(Parser)]
#[command(
    name = "fraczeta",
    version,
    about = "Fractional-part integral evaluation of zeta/eta and verification of the critical-line zero identity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate zeta or eta at s = sigma + i t.
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        /// `series` uses the accelerated alternating series; `integral`
        /// goes through the fractional-part integral representation.
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
        #[arg(long, default_value_t = 1e-10, value_parser = positive_f64)]
        tol: f64,
    },
    /// Evaluate one improper integral and report its error bound.
    Integral {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long, default_value_t = 1e-6, value_parser = positive_f64)]
        tol: f64,
    },
    /// Locate critical-line zeros with ordinate in (from, to).
    Zeros {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 0.05, value_parser = positive_f64)]
        step: f64,
        #[arg(long, default_value_t = 1e-9, value_parser = positive_f64)]
        refine_tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Locate zeros and check the zero identity at each of them.
    Verify {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Base pass threshold on the measured residual.
        #[arg(long, default_value_t = 1e-5, value_parser = positive_f64)]
        tol: f64,
        #[arg(long, default_value_t = 0.05, value_parser = positive_f64)]
        step: f64,
        #[arg(long, default_value_t = 1e-9, value_parser = positive_f64)]
        refine_tol: f64,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample the residual law rhs - lhs = -(2^s - 1) zeta(s) over a grid.
    ResidualScan {
        /// Comma-separated sigma values, e.g. 0.25,0.5,0.75.
        #[arg(long, value_delimiter = ',', required = true)]
        sigma_list: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        t_from: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_to: f64,
        #[arg(long, value_parser = positive_f64)]
        t_step: f64,
        #[arg(long, default_value_t = 1e-10, value_parser = positive_f64)]
        tol: f64,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Zeta,
    Eta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Series,
    Integral,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Frac,
    Shifted,
    Kappa,
}

impl From<Kind> for IntegrandKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Frac => IntegrandKind::Frac,
            Kind::Shifted => IntegrandKind::FracShifted,
            Kind::Kappa => IntegrandKind::Kappa,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    JsonLines,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::JsonLines => ReportFormat::JsonLines,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct QuadArgs {
    /// Piecewise summation cutoff of the improper integrals.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u32).range(2..))]
    cutoff: u32,
    /// Integration-by-parts depth of the tail expansion (0-4).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=4))]
    depth: u32,
}

impl QuadArgs {
    fn config(self, target_tol: f64) -> QuadratureConfig {
        QuadratureConfig {
            cutoff_n: self.cutoff,
            ibp_depth: self.depth,
            target_tol,
        }
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Write the report to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn positive_f64(raw: &str) -> Result<f64, String> {
    let v: f64 = raw.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a positive finite number, got {raw}"))
    }
}

/// Parses `argv` and runs the tool, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fraczeta: {e}");
            3
        }
    }
}

type CliResult = Result<i32, Box<dyn std::error::Error>>;

fn execute(cli: Cli) -> CliResult {
    match cli.command {
        Command::Eval {
            function,
            sigma,
            t,
            method,
            tol,
        } => eval(function, Complex64::new(sigma, t), method, tol),
        Command::Integral {
            kind,
            sigma,
            t,
            quad,
            tol,
        } => integral(kind.into(), Complex64::new(sigma, t), quad.config(tol)),
        Command::Zeros {
            from,
            to,
            step,
            refine_tol,
            output,
        } => {
            let zeros = find_zeros(from, to, step, refine_tol)?;
            eprintln!("found {} zeros in ({from}, {to})", zeros.len());
            write_report(&output, |w| {
                write_zeros_report(w, &zeros, output.format.into())
            })?;
            Ok(0)
        }
        Command::Verify {
            from,
            to,
            tol,
            step,
            refine_tol,
            quad,
            output,
        } => {
            let zeros = find_zeros(from, to, step, refine_tol)?;
            let records = verify_zeros(&zeros, &quad.config(1e-6), tol)?;
            let passed = records.iter().filter(|r| r.passed).count();
            eprintln!("verified {} zeros, {} passed", records.len(), passed);
            write_report(&output, |w| {
                write_verify_report(w, &records, output.format.into())
            })?;
            Ok(if passed == records.len() { 0 } else { 1 })
        }
        Command::ResidualScan {
            sigma_list,
            t_from,
            t_to,
            t_step,
            tol,
            quad,
            output,
        } => {
            let ts = grid_1d(t_from, t_to, t_step)?;
            let rows = scan_grid(&sigma_list, &ts, &quad.config(1e-6), tol)?;
            let failed = rows
                .iter()
                .filter(|r| matches!(r, fraczeta::ScanOutcome::Failed { .. }))
                .count();
            eprintln!("scanned {} points, {} failed", rows.len(), failed);
            write_report(&output, |w| {
                write_scan_report(w, &rows, output.format.into())
            })?;
            Ok(0)
        }
    }
}

fn eval(function: Function, s: Complex64, method: Method, tol: f64) -> CliResult {
    let value = match (function, method) {
        (Function::Zeta, Method::Series) => zeta_from_eta(s, tol)?,
        (Function::Eta, Method::Series) => eta_series(s, tol)?,
        (Function::Zeta, Method::Integral) => {
            if s == Complex64::new(1.0, 0.0) {
                return Err(fraczeta::Error::Singular("pole at s=1".into()).into());
            }
            let cfg = QuadratureConfig {
                target_tol: tol,
                ..QuadratureConfig::default()
            };
            let i = integral_improper(IntegrandKind::Frac, s, &cfg)?;
            s / (s - 1.0) - s * i.value
        }
        (Function::Eta, Method::Integral) => {
            let cfg = QuadratureConfig {
                target_tol: tol,
                ..QuadratureConfig::default()
            };
            let i = integral_improper(IntegrandKind::Kappa, s, &cfg)?;
            s * i.value
        }
    };
    println!("{} {:+}i", value.re, value.im);
    Ok(0)
}

fn integral(kind: IntegrandKind, s: Complex64, cfg: QuadratureConfig) -> CliResult {
    let result = integral_improper(kind, s, &cfg)?;
    println!("value: {} {:+}i", result.value.re, result.value.im);
    println!("tail_bound: {:e}", result.tail_bound);
    println!("pieces: {}", result.pieces);
    Ok(0)
}

/// `from, from + step, ...` up to `to` inclusive (with rounding slack so a
/// range that is a whole number of steps keeps its endpoint).
fn grid_1d(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Box<dyn std::error::Error>> {
    if !from.is_finite() || !to.is_finite() || to < from {
        return Err(fraczeta::Error::Domain(format!("bad grid range [{from}, {to}]")).into());
    }
    let count = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| from + i as f64 * step).collect())
}

fn write_report<F>(output: &OutputArgs, body: F) -> io::Result<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match &output.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            body(&mut w)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()
        }
    }
}
