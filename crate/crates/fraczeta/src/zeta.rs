//! Reference values independent of the integral engine: `η(s)` by an
//! accelerated alternating series, `ζ(s) = η(s) / (1 - 2^(1-s))`, and
//! critical-line zero location through sign changes of the Hardy Z
//! function.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sum::map_indexed;

/// Term budget for the alternating series: enough for the binomial
/// averaging to converge below 1e-12 once the oscillatory regime
/// (roughly the first 2.3·|Im s| transformed terms) has passed.
fn eta_budget(s: Complex64) -> usize {
    64 + 4 * (s.im.abs().ceil() as usize)
}

const ETA_MAX_TERMS: usize = 20_000;

/// Internal tolerance for reference evaluations feeding Z scans and
/// residual predictions. Loose enough to stay above the rounding floor of
/// the averaging table for |Im s| up to a few hundred.
const REF_TOL: f64 = 1e-10;

/// Dirichlet eta `η(s) = Σ (-1)^(k-1) k^(-s)` for `Re(s) > 0`, accelerated
/// by binomial (Euler-transform) averaging of the partial sums.
///
/// The n-th estimate is `2^(-n) Σ C(n,j) S_j`, computed as n rounds of
/// pairwise averaging of the partial-sum table; being a convex combination
/// it is unconditionally stable. The whole budget is always run; the
/// result is accepted when the last estimates have stabilized under `tol`
/// (plus a rounding floor for the table), and rejected with the achieved
/// estimate otherwise.
pub fn eta_series(s: Complex64, tol: f64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite parameter s = {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "eta series requires Re(s) > 0, got Re(s) = {}",
            s.re
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = eta_budget(s).min(ETA_MAX_TERMS);

    // Partial sums S_0 .. S_n of Σ (-1)^j (j+1)^(-s), compensated.
    let mut table = Vec::with_capacity(n + 1);
    let mut acc = crate::sum::KahanSum::new();
    let mut max_abs: f64 = 0.0;
    for j in 0..=n {
        let mut term = (-s * ((j + 1) as f64).ln()).exp();
        if j % 2 == 1 {
            term = -term;
        }
        acc.add(term);
        let sj = acc.value();
        max_abs = max_abs.max(sj.norm());
        table.push(sj);
    }

    // Run the whole budget (the averaging is cheap next to the powers
    // above) and judge convergence from the last two estimates plus a
    // rounding floor for the table itself.
    let fp_floor = (n as f64) * f64::EPSILON * max_abs;
    let mut prev = table[0];
    let mut diff1 = f64::INFINITY;
    let mut diff2 = f64::INFINITY;
    for k in 1..=n {
        for j in 0..=(n - k) {
            table[j] = 0.5 * (table[j] + table[j + 1]);
        }
        let head = table[0];
        diff2 = diff1;
        diff1 = (head - prev).norm();
        prev = head;
    }
    let achieved = 4.0 * diff1.max(diff2) + fp_floor;
    if achieved <= tol {
        Ok(prev)
    } else {
        Err(Error::AccuracyNotReached {
            requested: tol,
            achieved,
        })
    }
}

/// `ζ(s) = η(s) / (1 - 2^(1-s))` for `Re(s) > 0`, `s ≠ 1`, away from the
/// zeros of the denominator (all of which sit on `Re(s) = 1`).
pub fn zeta_from_eta(s: Complex64, tol: f64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Singular("pole at s=1".into()));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let den = one - ((one - s) * std::f64::consts::LN_2).exp();
    if den.norm() < 1e-12 {
        return Err(Error::Singular(format!(
            "removable singularity: 1 - 2^(1-s) vanishes at s = {s}"
        )));
    }
    let eta_tol = (tol * den.norm()).max(1e-14);
    let eta = eta_series(s, eta_tol)?;
    Ok(eta / den)
}

/// Riemann-Siegel theta by truncated asymptotic expansion:
/// `θ(t) ≈ (t/2)·ln(t/2π) - t/2 - π/8 + 1/(48t) + 7/(5760t³)`.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    let half_t = 0.5 * t;
    half_t * (t / (2.0 * std::f64::consts::PI)).ln() - half_t - std::f64::consts::FRAC_PI_8
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t * t)
}

/// Hardy Z function `Z(t) = Re(exp(iθ(t)) ζ(1/2 + it))`, real-valued up to
/// the truncation of the theta asymptotics; its sign changes bracket
/// critical-line zeros.
pub fn hardy_z(t: f64, tol: f64) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!(
            "Z(t) requires finite t > 0, got {t}"
        )));
    }
    let zeta = zeta_from_eta(Complex64::new(0.5, t), tol)?;
    let phase = Complex64::new(0.0, riemann_siegel_theta(t)).exp();
    Ok((phase * zeta).re)
}

/// A located critical-line zero `ρ = 1/2 + iγ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    /// γ, the imaginary part of the zero.
    pub ordinate: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// `|η(1/2 + iγ)|` at the refined ordinate.
    pub eta_residual: f64,
}

/// Locates the simple critical-line zeros with ordinate in `(t_lo, t_hi)`.
///
/// Scans `Z(t)` on a uniform grid for sign changes and refines each
/// bracket by bisection to width at most `refine_tol`. A grid too coarse
/// to separate a pair of zeros is not detected; the default step 0.05 is
/// far below the gaps at desk scale.
pub fn find_zeros(
    t_lo: f64,
    t_hi: f64,
    grid_step: f64,
    refine_tol: f64,
) -> Result<Vec<ZeroRecord>> {
    if !(t_lo.is_finite() && t_hi.is_finite()) || t_lo <= 0.0 || t_hi <= t_lo {
        return Err(Error::Domain(format!(
            "zero scan requires 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    if !grid_step.is_finite() || grid_step <= 0.0 || grid_step > 0.5 {
        return Err(Error::Domain(format!(
            "grid step must lie in (0, 0.5], got {grid_step}"
        )));
    }
    if !refine_tol.is_finite() || refine_tol <= 0.0 {
        return Err(Error::Domain(format!(
            "refinement tolerance must be positive, got {refine_tol}"
        )));
    }

    let steps = ((t_hi - t_lo) / grid_step).ceil() as usize;
    let points: Vec<f64> = (0..=steps)
        .map(|i| (t_lo + i as f64 * grid_step).min(t_hi))
        .collect();
    let values: Vec<Result<f64>> = {
        let pts = &points;
        map_indexed(pts.len(), move |i| hardy_z(pts[i], REF_TOL))
    };
    let mut z = Vec::with_capacity(values.len());
    for v in values {
        z.push(v?);
    }

    let mut brackets = Vec::new();
    for i in 0..points.len() - 1 {
        if points[i + 1] > points[i] && z[i] * z[i + 1] < 0.0 {
            brackets.push((points[i], points[i + 1], z[i]));
        }
    }

    let refined: Vec<Result<ZeroRecord>> = map_indexed(brackets.len(), |bi| {
        let (mut lo, mut hi, mut f_lo) = brackets[bi];
        while hi - lo > refine_tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return Err(Error::Refinement(format!(
                    "bracket [{lo}, {hi}] collapsed below floating-point resolution"
                )));
            }
            let f_mid = hardy_z(mid, REF_TOL)?;
            if (f_mid < 0.0) == (f_lo < 0.0) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        let ordinate = 0.5 * (lo + hi);
        let eta_residual = eta_series(Complex64::new(0.5, ordinate), REF_TOL)?.norm();
        Ok(ZeroRecord {
            ordinate,
            bracket_lo: lo,
            bracket_hi: hi,
            eta_residual,
        })
    });

    refined.into_iter().collect()
}
