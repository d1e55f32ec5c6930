//! Closed-form quadrature against an independent adaptive-quadrature
//! oracle, plus empirical soundness of the reported error bounds.

mod common;

use common::{adaptive_simpson, brute_force_improper, Kind};
use fraczeta::integral::{
    integral_improper, piece_integral_affine, IntegrandKind, QuadratureConfig,
};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn closed_form_piece_matches_adaptive_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..100 {
        let c0: f64 = rng.gen_range(-5.0..5.0);
        let c1: f64 = rng.gen_range(-5.0..5.0);
        let a: f64 = rng.gen_range(0.1..20.0);
        let b: f64 = a + rng.gen_range(0.1..10.0);
        let s = c(rng.gen_range(0.1..3.0), rng.gen_range(-30.0..30.0));

        let closed = piece_integral_affine(c0, c1, a, b, s).unwrap();
        let scale = closed.norm().max(1e-6);
        let numeric = adaptive_simpson(
            &|t| (c0 + c1 * t) * ((-s - 1.0) * t.ln()).exp(),
            a,
            b,
            (1e-14 * scale).max(1e-16),
        );
        let rel = (closed - numeric).norm() / scale;
        assert!(
            rel <= 1e-12,
            "case {case}: rel err {rel:e} at s = {s}, [{a}, {b}]"
        );
    }
}

#[test]
fn improper_integral_matches_brute_force_at_complex_point() {
    let s = c(0.5, 14.134725141734694);
    let cfg = QuadratureConfig {
        cutoff_n: 2_000,
        ibp_depth: 3,
        target_tol: 1e-6,
    };
    for (kind, okind) in [
        (IntegrandKind::Frac, Kind::Frac),
        (IntegrandKind::FracShifted, Kind::FracShifted),
        (IntegrandKind::Kappa, Kind::Kappa),
    ] {
        let engine = integral_improper(kind, s, &cfg).unwrap();
        let (oracle, oracle_err) = brute_force_improper(okind, s, 2_000, 1e-13);
        let gap = (engine.value - oracle).norm();
        assert!(
            gap <= engine.tail_bound + oracle_err,
            "{kind:?}: gap {gap:e} vs budget {:e}",
            engine.tail_bound + oracle_err
        );
    }
}

#[test]
fn tail_bound_covers_refinement_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let kinds = [
        IntegrandKind::Frac,
        IntegrandKind::FracShifted,
        IntegrandKind::Kappa,
    ];
    for trial in 0..50 {
        let s = c(rng.gen_range(0.25..2.0), rng.gen_range(-40.0..40.0));
        let kind = kinds[trial % 3];
        // Every trial covers the two cheap cutoffs; every tenth one also
        // exercises 10^4 against 10^5.
        let cutoffs: &[u32] = if trial % 10 == 0 {
            &[100, 1_000, 10_000]
        } else {
            &[100, 1_000]
        };
        for &n in cutoffs {
            let coarse = integral_improper(
                kind,
                s,
                &QuadratureConfig {
                    cutoff_n: n,
                    ibp_depth: 3,
                    target_tol: 1e3,
                },
            )
            .unwrap();
            let fine = integral_improper(
                kind,
                s,
                &QuadratureConfig {
                    cutoff_n: 10 * n,
                    ibp_depth: 3,
                    target_tol: 1e3,
                },
            )
            .unwrap();
            let diff = (fine.value - coarse.value).norm();
            assert!(
                diff <= coarse.tail_bound,
                "trial {trial} {kind:?} s = {s} n = {n}: diff {diff:e} > bound {:e}",
                coarse.tail_bound
            );
        }
    }
}

#[test]
fn deeper_expansions_stay_sound_and_tighten() {
    let s = c(0.5, 21.0);
    let reference = integral_improper(
        IntegrandKind::Frac,
        s,
        &QuadratureConfig {
            cutoff_n: 200_000,
            ibp_depth: 4,
            target_tol: 1.0,
        },
    )
    .unwrap()
    .value;
    let mut bounds = Vec::new();
    for depth in 0..=4 {
        let r = integral_improper(
            IntegrandKind::Frac,
            s,
            &QuadratureConfig {
                cutoff_n: 100,
                ibp_depth: depth,
                target_tol: 1.0,
            },
        )
        .unwrap();
        assert!(
            (r.value - reference).norm() <= r.tail_bound,
            "depth {depth}: err {:e} > bound {:e}",
            (r.value - reference).norm(),
            r.tail_bound
        );
        bounds.push(r.tail_bound);
    }
    // Each integration by parts buys roughly a factor n/|s| at this site.
    assert!(bounds[4] < bounds[2] && bounds[2] < bounds[0]);
}
