//! Evaluates both sides of the zero identity
//! `2^ρ + 1/(ρ-1) + 1/2 = ρ ∫₁^∞ {t + 1/2} t^(-ρ-1) dt`
//! and the closed-form residual law that governs it off the zero set:
//! for every `Re(s) > 0`, `s ≠ 1`,
//!
//! `RHS(s) - LHS(s) = -(2^s - 1)·ζ(s)`,
//!
//! which vanishes exactly at the zeta zeros (2^s ≠ 1 in the strip). Every
//! point therefore carries a quantitative prediction, turning non-zero
//! inputs into negative controls.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integral::{integral_improper, IntegrandKind, QuadratureConfig};
use crate::sum::map_indexed;
use crate::zeta::{zeta_from_eta, ZeroRecord};

/// Base pass threshold for [`verify_zero`]; the effective threshold is
/// `max(PASS_THRESHOLD, 3 × error_budget)`.
pub const PASS_THRESHOLD: f64 = 1e-5;

/// Tolerance used for the reference ζ evaluations inside the harness.
const REF_TOL: f64 = 1e-10;

/// Step of the central finite difference estimating `d/ds[(2^s - 1)ζ(s)]`,
/// taken in the imaginary direction. 1e-5 balances truncation against
/// roundoff in double precision.
const DERIV_STEP: f64 = 1e-5;

/// One checked zero: both sides of the identity, the measured residual,
/// the residual the closed-form law predicts, and the error budget the
/// comparison is entitled to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationRecord {
    pub rho: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// `|rhs - lhs|`.
    pub residual: f64,
    /// `|(2^ρ - 1)·ζ(ρ)|`; collapses to ~0 at a true zero.
    pub predicted_residual: f64,
    /// Quadrature bound plus zero-location uncertainty.
    pub error_budget: f64,
    pub passed: bool,
}

/// One residual-law sample at a general point `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub s: Complex64,
    /// `rhs - lhs` as a complex value.
    pub measured: Complex64,
    /// `-(2^s - 1)·ζ(s)`.
    pub predicted: Complex64,
}

/// A grid point outcome; failed points are reported, never dropped.
#[derive(Debug, Clone, PartialEq)]
pub enum ScanOutcome {
    Row(ScanRow),
    Failed { s: Complex64, message: String },
}

impl ScanOutcome {
    pub fn s(&self) -> Complex64 {
        match self {
            ScanOutcome::Row(r) => r.s,
            ScanOutcome::Failed { s, .. } => *s,
        }
    }
}

fn two_pow(s: Complex64) -> Complex64 {
    (s * std::f64::consts::LN_2).exp()
}

/// Left side of the identity: `2^ρ + 1/(ρ - 1) + 1/2`.
pub fn lhs_eq5(rho: Complex64) -> Result<Complex64> {
    if !rho.re.is_finite() || !rho.im.is_finite() {
        return Err(Error::Domain(format!("non-finite parameter {rho}")));
    }
    if rho == Complex64::new(1.0, 0.0) {
        return Err(Error::Singular("pole at s=1".into()));
    }
    Ok(two_pow(rho) + (rho - 1.0).inv() + 0.5)
}

/// Right side of the identity, `ρ·∫₁^∞ {t + 1/2} t^(-ρ-1) dt`, with the
/// propagated quadrature bound `|ρ|·tail_bound`.
pub fn rhs_eq5(rho: Complex64, cfg: &QuadratureConfig) -> Result<(Complex64, f64)> {
    let integral = integral_improper(IntegrandKind::FracShifted, rho, cfg)?;
    Ok((rho * integral.value, rho.norm() * integral.tail_bound))
}

/// The closed-form residual `-(2^s - 1)·ζ(s)` that `rhs - lhs` must equal
/// for every `Re(s) > 0`, `s ≠ 1`.
pub fn residual_closed_form(s: Complex64, tol: f64) -> Result<Complex64> {
    let zeta = zeta_from_eta(s, tol)?;
    Ok(-(two_pow(s) - 1.0) * zeta)
}

fn prediction_fn(s: Complex64) -> Result<Complex64> {
    Ok((two_pow(s) - 1.0) * zeta_from_eta(s, REF_TOL)?)
}

/// Checks the identity at a located zero with the default pass threshold.
pub fn verify_zero(zero: &ZeroRecord, cfg: &QuadratureConfig) -> Result<VerificationRecord> {
    verify_zero_with_threshold(zero, cfg, PASS_THRESHOLD)
}

/// Checks the identity at a located zero; `passed` requires the measured
/// residual to stay under `max(base_threshold, 3 × error_budget)`.
pub fn verify_zero_with_threshold(
    zero: &ZeroRecord,
    cfg: &QuadratureConfig,
    base_threshold: f64,
) -> Result<VerificationRecord> {
    let rho = Complex64::new(0.5, zero.ordinate);
    let lhs = lhs_eq5(rho)?;
    let (rhs, rhs_err) = rhs_eq5(rho, cfg)?;
    let residual = (rhs - lhs).norm();
    let predicted_residual = prediction_fn(rho)?.norm();

    // Sensitivity of the prediction to the residual zero-location error.
    let h = Complex64::new(0.0, DERIV_STEP);
    let deriv = (prediction_fn(rho + h)? - prediction_fn(rho - h)?) / (2.0 * h);
    let width = zero.bracket_hi - zero.bracket_lo;
    let error_budget = rhs_err + deriv.norm() * width;

    let passed = residual <= base_threshold.max(3.0 * error_budget);
    Ok(VerificationRecord {
        rho,
        lhs,
        rhs,
        residual,
        predicted_residual,
        error_budget,
        passed,
    })
}

/// Checks a batch of located zeros; records come back sorted by ordinate
/// regardless of execution order.
pub fn verify_zeros(
    zeros: &[ZeroRecord],
    cfg: &QuadratureConfig,
    base_threshold: f64,
) -> Result<Vec<VerificationRecord>> {
    let records = map_indexed(zeros.len(), |i| {
        verify_zero_with_threshold(&zeros[i], cfg, base_threshold)
    });
    let mut out: Vec<VerificationRecord> = records.into_iter().collect::<Result<_>>()?;
    out.sort_by(|a, b| a.rho.im.total_cmp(&b.rho.im));
    Ok(out)
}

/// Samples the residual law over `sigma_values × t_values` in row-major
/// order (σ outer, t inner). Failures are per-point markers.
pub fn scan_grid(
    sigma_values: &[f64],
    t_values: &[f64],
    cfg: &QuadratureConfig,
    tol: f64,
) -> Result<Vec<ScanOutcome>> {
    if sigma_values.is_empty() || t_values.is_empty() {
        return Err(Error::Domain("scan grids must be nonempty".into()));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let nt = t_values.len();
    let total = sigma_values.len() * nt;
    let rows = map_indexed(total, |idx| {
        let s = Complex64::new(sigma_values[idx / nt], t_values[idx % nt]);
        let point = || -> Result<ScanRow> {
            let lhs = lhs_eq5(s)?;
            let (rhs, _) = rhs_eq5(s, cfg)?;
            let predicted = residual_closed_form(s, tol)?;
            Ok(ScanRow {
                s,
                measured: rhs - lhs,
                predicted,
            })
        };
        match point() {
            Ok(row) => ScanOutcome::Row(row),
            Err(e) => ScanOutcome::Failed {
                s,
                message: e.to_string(),
            },
        }
    });
    Ok(rows)
}
