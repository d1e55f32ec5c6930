//! Fractional-part integral representations of the Riemann zeta and
//! Dirichlet eta functions, with numerical verification of the
//! critical-line zero identity
//!
//! ```text
//! 2^ρ + 1/(ρ-1) + 1/2 = ρ ∫₁^∞ {t + 1/2} t^(-ρ-1) dt
//! ```
//!
//! The crate has four layers:
//!
//! * [`frak`] — exact fractional-part primitives and the 0/1 square wave
//!   `kappa`;
//! * [`integral`] — closed-form piecewise evaluation of the improper
//!   integrals `∫₁^∞ f(t) t^(-s-1) dt` for `f ∈ {{t}, {t+1/2}, κ(t)}`,
//!   with an integration-by-parts tail expansion and a sound error bound;
//! * [`zeta`] — engine-independent reference values (`η`, `ζ`) and a
//!   Hardy-Z zero finder, so the identity is checked against zeros that
//!   do not come from the integrals themselves;
//! * [`verify`] — both sides of the identity, residual measurement at
//!   zeros and control points, and the closed-form residual law
//!   `rhs - lhs = -(2^s - 1)·ζ(s)`.
//!
//! All computations are deterministic: piece sums reduce in a fixed chunk
//! order (see [`sum`]), so results are bit-identical for any thread count
//! and with the `parallel` feature disabled.

pub mod error;
pub mod frak;
pub mod integral;
pub mod report;
pub mod sum;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use integral::{integral_improper, IntegralResult, IntegrandKind, QuadratureConfig};
pub use num_complex::Complex64;
pub use report::ReportFormat;
pub use verify::{scan_grid, verify_zero, ScanOutcome, ScanRow, VerificationRecord};
pub use zeta::{eta_series, find_zeros, zeta_from_eta, ZeroRecord};
