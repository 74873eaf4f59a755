//! Cross-module invariants that don't belong to a single unit: smoothness
//! across knots, the phase-derivative identity, pairing stability against
//! the compensated reference, analytic tail bounds, denominator positivity.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use trigspline::fundamental::FundamentalBasis;
use trigspline::kernel::{c_full, h_full};
use trigspline::oracle::{brute_series, SeriesId};
use trigspline::spline::supported_pairs;
use trigspline::{
    FactorKind, Interpolant, KernelFamily, Parity, Samples, SplineConfig, TruncationPolicy,
};

/// Jump estimate of `f` across `x` at probe distance `delta`.
fn jump(f: &dyn Fn(f64) -> f64, x: f64, delta: f64) -> f64 {
    (f(x + delta) - f(x - delta)).abs()
}

#[test]
fn derivatives_are_continuous_across_knots_up_to_r_minus_1() {
    let mut rng = StdRng::seed_from_u64(41);
    for family in [Parity::Full, Parity::Even, Parity::Odd] {
        for &(i1, i2) in supported_pairs(family) {
            let r = 3u32;
            let n = if family == Parity::Full { 9 } else { 7 };
            for q in 0..r {
                let cfg = SplineConfig::new(family, i1, i2, FactorKind::Power, r, q, n).unwrap();
                let grid = cfg.grid().unwrap();
                let vals: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let sp = Interpolant::new(cfg, &Samples::new(grid, vals).unwrap()).unwrap();
                let eval = |t: f64| sp.eval(t);
                let scale = 1.0
                    + (0..40)
                        .map(|i| eval(0.02 + i as f64 * 0.07).abs())
                        .fold(0.0f64, f64::max);
                // interior knots only
                for knot in cfg.knots().iter().filter(|k| **k > 0.1 && **k < PI - 0.1) {
                    let d2 = jump(&eval, *knot, 1e-2);
                    let d3 = jump(&eval, *knot, 1e-3);
                    let d4 = jump(&eval, *knot, 1e-4);
                    // continuity: shrinking the probe shrinks the jump
                    // roughly linearly; allow slack for the smooth part
                    assert!(
                        d3 <= 0.5 * d2 + 1e-9 * scale && d4 <= 0.5 * d3 + 1e-9 * scale,
                        "{family:?} ({i1},{i2}) q={q} at knot {knot}: {d2:e} {d3:e} {d4:e}"
                    );
                }
            }
        }
    }
}

#[test]
fn cardinal_functions_share_the_smoothness_class() {
    let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 3, 2, 9).unwrap();
    let basis = FundamentalBasis::new(cfg).unwrap();
    let eval = |t: f64| basis.eval(3, t).unwrap();
    for knot in cfg.knots().iter().filter(|k| **k > 0.1) {
        let d2 = jump(&eval, *knot, 1e-2);
        let d3 = jump(&eval, *knot, 1e-3);
        let d4 = jump(&eval, *knot, 1e-4);
        assert!(d3 <= 0.5 * d2 + 1e-9 && d4 <= 0.5 * d3 + 1e-9);
    }
}

#[test]
fn phase_derivative_identity_by_finite_differences() {
    // d/dt of the truncated series at fixed M equals the series with
    // q -> q + 1: termwise differentiation shifts the phase by a quarter
    // turn and scales by the frequency.
    let policy = TruncationPolicy::FixedTerms(2_000);
    let h = 1e-5;
    for factor in [FactorKind::Power, FactorKind::Riemann] {
        for (r, q, k, t) in [(3u32, 0u32, 1usize, 0.7), (4, 1, 3, 2.1), (5, 3, 4, 5.6)] {
            let plus = c_full(0, factor, r, q, k, 9, t + h, policy).unwrap();
            let minus = c_full(0, factor, r, q, k, 9, t - h, policy).unwrap();
            let analytic = c_full(0, factor, r, q + 1, k, 9, t, policy).unwrap();
            let fd = (plus - minus) / (2.0 * h);
            assert!(
                (fd - analytic).abs() < 1e-6,
                "{factor:?} r={r} q={q} k={k}: fd {fd} vs {analytic}"
            );
        }
    }
}

#[test]
fn pairing_stability_against_compensated_reference() {
    // fast-decaying configurations reach the reference to 1e-12
    let policy = TruncationPolicy::TailTolerance {
        eps: 1e-14,
        m_max: 1_000_000,
    };
    for (r, q, k, n, t) in [
        (4u32, 0u32, 2usize, 9usize, 1.3),
        (5, 1, 1, 7, 4.2),
        (5, 2, 3, 9, 0.9),
    ] {
        let main = c_full(0, FactorKind::Power, r, q, k, n, t, policy).unwrap();
        let reference = brute_series(
            SeriesId::C,
            KernelFamily::Full { i1: 0, i2: 0 },
            FactorKind::Power,
            r,
            q,
            k,
            n,
            t,
            1_000_000,
        )
        .unwrap();
        assert!(
            (main - reference).abs() < 1e-12,
            "r={r} q={q}: {main:.15e} vs {reference:.15e}"
        );
    }
}

#[test]
fn truncation_error_within_analytic_tail_bound() {
    let mut rng = StdRng::seed_from_u64(43);
    for _ in 0..50 {
        let r = rng.gen_range(2..=5u32);
        let q = rng.gen_range(0..r.min(r - 1));
        let n = [5usize, 7, 9][rng.gen_range(0..3)];
        let k = rng.gen_range(1..=(n - 1) / 2);
        let t = rng.gen_range(0.0..2.0 * PI);
        let m = rng.gen_range(5..200usize);
        let family = KernelFamily::Full { i1: 0, i2: 0 };
        let truncated = c_full(
            0,
            FactorKind::Power,
            r,
            q,
            k,
            n,
            t,
            TruncationPolicy::FixedTerms(m),
        )
        .unwrap();
        let reference = brute_series(
            SeriesId::C,
            family,
            FactorKind::Power,
            r,
            q,
            k,
            n,
            t,
            1_000_000,
        )
        .unwrap();
        let bound = trigspline::kernel::tail_bound(family, FactorKind::Power, r, q, n, k, m);
        assert!(
            (truncated - reference).abs() <= bound,
            "r={r} q={q} k={k} N={n} M={m}: err {:e} > bound {bound:e}",
            (truncated - reference).abs()
        );
    }
}

#[test]
fn riemann_same_grid_denominators_stay_positive() {
    for r in 1..=11u32 {
        for (i1, i2) in [(0u8, 0u8), (1, 1)] {
            for k in 1..=4usize {
                let h = h_full(
                    i1,
                    i2,
                    FactorKind::Riemann,
                    r,
                    k,
                    9,
                    TruncationPolicy::TailTolerance {
                        eps: 1e-12,
                        m_max: 100_000,
                    },
                )
                .unwrap();
                assert!(h > 0.0, "H({i1},{i2},riemann,{r},{k}) = {h}");
            }
        }
    }
}

#[test]
fn top_order_derivative_is_stable_in_the_conditional_regime() {
    // q = r: terms decay like 1/(mP); paired summation keeps the cut stable,
    // doubling the term count moves mid-interval values only at O(1/(M P)).
    let mut rng = StdRng::seed_from_u64(53);
    let grid = trigspline::GridSpec::new(trigspline::GridFamily::Full, 0, 9).unwrap();
    let vals: Vec<f64> = (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let samples = Samples::new(grid, vals).unwrap();
    let make = |m: usize| {
        let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 2, 2, 9)
            .unwrap()
            .with_truncation(TruncationPolicy::FixedTerms(m));
        Interpolant::new(cfg, &samples).unwrap()
    };
    let coarse = make(10_000);
    let fine = make(20_000);
    for i in 0..9 {
        let t = 0.31 + i as f64 * 0.65; // clear of the knots at 2*pi*j/9
        let a = coarse.eval(t);
        let b = fine.eval(t);
        assert!(a.is_finite() && b.is_finite());
        assert!((a - b).abs() < 1e-2, "t={t}: {a} vs {b}");
    }
}

#[test]
fn even_top_harmonic_weight_is_consistent() {
    // phase-0 even splines put a half weight on the top harmonic; the node
    // residual arbitrates the pairing with the plain transform coefficient
    let mut rng = StdRng::seed_from_u64(47);
    for n in [5usize, 6, 9] {
        let cfg = SplineConfig::new(Parity::Even, 0, 0, FactorKind::Power, 2, 0, n).unwrap();
        let grid = cfg.grid().unwrap();
        let vals: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let sp = Interpolant::new(cfg, &Samples::new(grid, vals.clone()).unwrap()).unwrap();
        for (x, v) in grid.nodes().iter().zip(&vals) {
            assert!((sp.eval(*x) - v).abs() < 1e-9, "N={n}");
        }
    }
}
