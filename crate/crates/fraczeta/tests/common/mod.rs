//! Shared oracles for the integration tests. Everything here is
//! deliberately independent of the closed-form piece path in the crate:
//! integrands are evaluated literally and integrated by adaptive Simpson
//! quadrature.

// Each test target uses its own slice of this module.
#![allow(dead_code)]

use num_complex::Complex64;

/// Adaptive Simpson with interval bisection; `tol` is an absolute bound on
/// the quadrature error of the whole call.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    fn simpson<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        fa: Complex64,
        b: f64,
        fb: Complex64,
    ) -> (Complex64, Complex64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        let s = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        (s, fm, m)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        fa: Complex64,
        b: f64,
        fb: Complex64,
        m: f64,
        fm: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let (left, flm, lm) = simpson(f, a, fa, m, fm);
        let (right, frm, rm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.norm() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
    }

    let fa = f(a);
    let fb = f(b);
    let (whole, fm, m) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 40)
}

fn frac(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

fn kappa(t: f64) -> f64 {
    let f = t.floor();
    f - 2.0 * (f / 2.0).floor()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Frac,
    FracShifted,
    Kappa,
}

fn integrand(kind: Kind, t: f64, s: Complex64) -> Complex64 {
    let f = match kind {
        Kind::Frac => frac(t),
        Kind::FracShifted => frac(t + 0.5),
        Kind::Kappa => kappa(t),
    };
    f * ((-s - 1.0) * t.ln()).exp()
}

/// Breakpoints of the integrand within `[1, upper]`, endpoints included.
fn breakpoints(kind: Kind, upper: u32) -> Vec<f64> {
    let mut pts = vec![1.0];
    match kind {
        Kind::Frac | Kind::Kappa => {
            for k in 2..=upper {
                pts.push(f64::from(k));
            }
        }
        Kind::FracShifted => {
            let mut x = 1.5;
            while x < f64::from(upper) {
                pts.push(x);
                x += 1.0;
            }
            pts.push(f64::from(upper));
        }
    }
    pts
}

/// Brute-force value of `∫₁^∞ f(t) t^(-s-1) dt`: adaptive quadrature piece
/// by piece up to `upper` plus the closed-form mean tail. Returns the value
/// and a bound on its total error (quadrature + the oscillating remainder
/// of the tail).
pub fn brute_force_improper(
    kind: Kind,
    s: Complex64,
    upper: u32,
    piece_tol: f64,
) -> (Complex64, f64) {
    let pts = breakpoints(kind, upper);
    let mut total = Complex64::new(0.0, 0.0);
    for w in pts.windows(2) {
        // Sample strictly inside the piece: nudge the endpoints so the
        // jump points never enter the quadrature.
        let a = w[0] + 1e-12 * w[0];
        let b = w[1] - 1e-12 * w[1];
        total += adaptive_simpson(&|t| integrand(kind, t, s), a, b, piece_tol);
    }
    let nf = f64::from(upper);
    // Mean tail: (1/2) ∫ t^(-s-1) = (1/2) n^(-s) / s; the mean-zero part
    // is bounded by sup|f - 1/2| ∫ t^(-σ-1).
    let mean_tail = 0.5 * ((-s) * nf.ln()).exp() / s;
    let sigma = s.re;
    let tail_bound = 0.5 * nf.powf(-sigma) / sigma;
    let edge_slop = 4e-12 * pts.len() as f64;
    let err = piece_tol * pts.len() as f64 + tail_bound + edge_slop;
    (total + mean_tail, err)
}

/// ζ(σ) for real σ > 1 by direct summation with an Euler-Maclaurin tail.
pub fn zeta_real_oracle(sigma: f64) -> f64 {
    let m = 20_000u64;
    let mut sum = 0.0;
    for n in (1..m).rev() {
        sum += (n as f64).powf(-sigma);
    }
    let mf = m as f64;
    sum + mf.powf(1.0 - sigma) / (sigma - 1.0)
        + 0.5 * mf.powf(-sigma)
        + sigma * mf.powf(-sigma - 1.0) / 12.0
}
