//! Fractional-part primitives and the square-wave function `kappa`.
//!
//! `{x} = x - floor(x)` is the sawtooth fractional part with values in
//! `[0, 1)`; at integers it is exactly 0. For a complex `z = x + iy` the
//! fractional part is taken componentwise, `{z} = {x} + i{y}`.
//!
//! `kappa(t) = {t/2} + 1/2 - {t/2 + 1/2}` is an exact 0/1 indicator: it is
//! 1 on `[2k-1, 2k)` and 0 on `[2k, 2k+1)`, i.e. the parity of `floor(t)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A real number known to lie in the half-open unit interval `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FractionalValue(f64);

impl FractionalValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<FractionalValue> for f64 {
    fn from(v: FractionalValue) -> f64 {
        v.0
    }
}

/// Fractional part of a finite real, `x - floor(x)`, in `[0, 1)`.
pub fn frac_real(x: f64) -> Result<FractionalValue> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("fractional part of non-finite {x}")));
    }
    Ok(FractionalValue(frac_unit(x)))
}

/// Componentwise fractional part of a finite complex number.
///
/// Each component lies in `[0, 1)`, so the modulus of the result is below
/// the square root of two.
pub fn frac_complex(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("fractional part of non-finite {z}")));
    }
    Ok(Complex64::new(frac_unit(z.re), frac_unit(z.im)))
}

/// `{t/2} + 1/2 - {t/2 + 1/2}`, evaluated as the parity of `floor(t)`.
///
/// The parity route returns an exact 0.0 or 1.0 with no cancellation at the
/// jump points; agreement with the literal three-term expression away from
/// the jumps is covered by tests.
pub fn kappa(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("kappa of non-finite {t}")));
    }
    Ok(kappa_unit(t))
}

pub(crate) fn frac_unit(x: f64) -> f64 {
    let f = x - x.floor();
    // x - floor(x) can round up to exactly 1.0 for tiny negative x; wrap it.
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

pub(crate) fn kappa_unit(t: f64) -> f64 {
    let f = t.floor();
    // f/2 is exact (power-of-two divide), so this mod-2 is exact for every
    // finite magnitude and yields exactly 0.0 or 1.0.
    f - 2.0 * (f / 2.0).floor()
}
