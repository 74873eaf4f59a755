//! Verification suite: every numbered check is runnable from both the test
//! harness and the CLI `check` subcommand, producing one pass/fail line per
//! check with details on failure.

use crate::bspline::{BSplineBasis, BSplineInterpolant, BSplineKind, Normalization};
use crate::factor::FactorKind;
use crate::fourier::{Parity, Samples};
use crate::fundamental::FundamentalBasis;
use crate::grid::GridSpec;
use crate::kernel::{self, KernelFamily, TruncationPolicy};
use crate::oracle::{self, SeriesId};
use crate::spline::{supported_pairs, Interpolant, SplineConfig};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::time::Instant;

const TWO_PI: f64 = 2.0 * PI;

/// Outcome of one verification check.
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckReport {
    fn new(id: usize, name: &'static str) -> Self {
        CheckReport {
            id,
            name,
            passed: true,
            details: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        self.details.push(msg);
    }

    fn note(&mut self, msg: String) {
        self.details.push(msg);
    }

    /// One-line summary in the form the CLI prints.
    pub fn summary(&self) -> String {
        format!(
            "check {} ({}): {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// Reference |determinant| values for the six basis kinds at N = 9 on the
/// phase-0 grid, columns r = 1, 2, 3, 4, 5, 11.
const DET_RS: [u32; 6] = [1, 2, 3, 4, 5, 11];
const DET_KINDS: [&str; 6] = ["br", "bc", "br0", "bc0", "br1", "bc1"];
const DET_REFERENCE: [[f64; 6]; 6] = [
    [25.1548, 1.46797, 0.3538, 0.0770, 0.0189, 5.893e-6],
    [9.88e-4, 2.44e-8, 5.5e-10, 1.7e-13, 1.1e-15, 0.0],
    [6.4396e3, 105.3279, 512.0283, 103.5795, 246.0022, 117.3284],
    [1.0271e6, 1.1347e3, 8.1665e4, 3.7613e3, 3.9236e4, 1.8713e4],
    [434.9783, 837.8267, 116.5782, 324.7136, 101.8178, 94.1006],
    [6.9376e4, 9.0262e3, 1.8593e4, 1.1791e4, 1.6239e4, 1.5008e4],
];

pub fn kind_by_label(label: &str, r: u32, q: u32, n: usize) -> Option<BSplineKind> {
    let (normalization, factor) = match label {
        "bc" => (Normalization::FirstKind, FactorKind::Power),
        "br" => (Normalization::FirstKind, FactorKind::Riemann),
        "bc0" => (Normalization::SecondKindSame, FactorKind::Power),
        "br0" => (Normalization::SecondKindSame, FactorKind::Riemann),
        "bc1" => (Normalization::SecondKindCross, FactorKind::Power),
        "br1" => (Normalization::SecondKindCross, FactorKind::Riemann),
        _ => return None,
    };
    BSplineKind::new(normalization, factor, r, q, n).ok()
}

/// The six basis-kind labels in table order.
pub fn kind_labels() -> &'static [&'static str] {
    &DET_KINDS
}

fn random_samples(rng: &mut StdRng, grid: GridSpec) -> Samples {
    let vals: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Samples::new(grid, vals).unwrap()
}

fn dense_points(count: usize, a: f64, b: f64) -> Vec<f64> {
    (0..count)
        .map(|i| a + (b - a) * i as f64 / count as f64)
        .collect()
}

/// Check 1: Collocation determinant table at N = 9, phase-0 grid, tail tolerance
/// 1e-12. Reference cells above 1e-6 must match within 1% relative, cells at
/// or below 1e-6 within 1e-6 absolute, and the singular power-factor cell at
/// r = 11 must come out below 1e-12. A cell that misses the primary
/// tolerance falls back to the qualitative claim (nonzero determinant) and
/// is reported.
pub fn check_determinant_table() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(1, "determinant table");
    let policy = TruncationPolicy::TailTolerance {
        eps: 1e-12,
        m_max: 100_000,
    };
    for (row, label) in DET_KINDS.iter().enumerate() {
        for (col, &r) in DET_RS.iter().enumerate() {
            let kind = kind_by_label(label, r, 0, 9)
                .unwrap()
                .with_truncation(policy);
            let basis = match BSplineBasis::new(kind) {
                Ok(b) => b,
                Err(e) => {
                    report.fail(format!("{label} r={r}: basis construction failed: {e}"));
                    continue;
                }
            };
            let det = basis.collocation_matrix().unwrap().det().abs();
            let reference = DET_REFERENCE[row][col];
            let singular_cell = *label == "bc" && r == 11;
            if singular_cell {
                if det >= 1e-12 {
                    report.fail(format!("bc r=11: |det| = {det:e}, expected < 1e-12"));
                }
                continue;
            }
            let primary = if reference > 1e-6 {
                (det - reference).abs() / reference <= 0.01
            } else {
                (det - reference).abs() <= 1e-6
            };
            if !primary {
                // qualitative fallback: unisolvence (nonzero determinant)
                if det > 1e-12 {
                    report.note(format!(
                        "{label} r={r}: |det| = {det:.6e} vs reference {reference:.6e} \
                         ({:+.3}%), outside 1%; nonzero fallback applies",
                        (det / reference - 1.0) * 100.0
                    ));
                } else {
                    report.fail(format!(
                        "{label} r={r}: |det| = {det:e} vs reference {reference:e}"
                    ));
                }
            }
        }
    }
    report.note(format!(
        "36 cells in {:.1} s",
        start.elapsed().as_secs_f64()
    ));
    report
}

/// Check 2: Interpolation: random data reproduced at the nodes to
/// 1e-7 * (1 + max|f|) for every family, indicator pair, factor, r = 1..5,
/// N in {7, 9}.
pub fn check_interpolation() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(2, "interpolation at nodes");
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for family in [Parity::Full, Parity::Even, Parity::Odd] {
        for &(i1, i2) in supported_pairs(family) {
            for factor in [FactorKind::Power, FactorKind::Riemann] {
                for r in 1..=5 {
                    for n in [7usize, 9] {
                        let cfg = SplineConfig::new(family, i1, i2, factor, r, 0, n).unwrap();
                        let grid = cfg.grid().unwrap();
                        let samples = random_samples(&mut rng, grid);
                        let maxv = samples.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
                        let sp = Interpolant::new(cfg, &samples).unwrap();
                        let worst = grid
                            .nodes()
                            .iter()
                            .zip(samples.values())
                            .map(|(x, f)| (sp.eval(*x) - f).abs())
                            .fold(0.0f64, f64::max);
                        if worst >= 1e-7 * (1.0 + maxv) {
                            report.fail(format!(
                                "{} ({i1},{i2}) {} r={r} N={n}: residual {worst:e}",
                                family.name(),
                                factor.name()
                            ));
                        }
                    }
                }
            }
        }
    }
    report.note(format!(
        "160 configurations in {:.1} s",
        start.elapsed().as_secs_f64()
    ));
    report
}

/// Check 3: The three representations agree: cardinal form vs coefficient form for
/// every supported pair, and basis (collocation) form vs coefficient form for
/// the four second-kind families, r = 1..3, max abs 1e-6 on 500-point grids.
pub fn check_representation_equivalence() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(3, "representation equivalence");
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    // cap the shared truncation: equivalence is exact at matched truncation,
    // so the cap only bounds runtime
    let policy = TruncationPolicy::TailTolerance {
        eps: 1e-12,
        m_max: 10_000,
    };
    let n = 9usize;

    for family in [Parity::Full, Parity::Even, Parity::Odd] {
        for &(i1, i2) in supported_pairs(family) {
            for (ri, r) in (1..=3u32).enumerate() {
                // alternate factors to keep the sweep affordable
                let factor = if (ri + i1 as usize + i2 as usize) % 2 == 0 {
                    FactorKind::Power
                } else {
                    FactorKind::Riemann
                };
                let nn = if family == Parity::Full { n } else { 8 };
                let cfg = SplineConfig::new(family, i1, i2, factor, r, 0, nn)
                    .unwrap()
                    .with_truncation(policy);
                let grid = cfg.grid().unwrap();
                let samples = random_samples(&mut rng, grid);
                let sp = Interpolant::new(cfg, &samples).unwrap();
                let basis = FundamentalBasis::new(cfg).unwrap();
                let span = if family == Parity::Full { TWO_PI } else { PI };
                let pts = dense_points(500, 0.0, span);
                let direct = sp.eval_many(&pts);
                let worst = pts
                    .par_iter()
                    .zip(&direct)
                    .map(|(t, d)| (basis.eval_samples(&samples, *t).unwrap() - d).abs())
                    .reduce(|| 0.0, f64::max);
                if worst >= 1e-6 {
                    report.fail(format!(
                        "cardinal vs coefficient {} ({i1},{i2}) {} r={r}: max diff {worst:e}",
                        family.name(),
                        factor.name()
                    ));
                }
            }
        }
    }

    for label in ["bc0", "br0", "bc1", "br1"] {
        for r in 1..=3u32 {
            let kind = kind_by_label(label, r, 0, n)
                .unwrap()
                .with_truncation(policy);
            let factor = kind.factor;
            let grid = GridSpec::new(crate::grid::GridFamily::Full, 0, n).unwrap();
            let samples = random_samples(&mut rng, grid);
            let recon = BSplineInterpolant::fit(kind, &samples).unwrap();
            // every second-kind basis spans the (0,0) spline space: the
            // denominators cancel in the collocation solve
            let cfg = SplineConfig::new(Parity::Full, 0, 0, factor, r, 0, n)
                .unwrap()
                .with_truncation(policy);
            let sp = Interpolant::new(cfg, &samples).unwrap();
            let pts = dense_points(500, 0.0, TWO_PI);
            let direct = sp.eval_many(&pts);
            let worst = pts
                .par_iter()
                .zip(&direct)
                .map(|(t, d)| (recon.eval(*t) - d).abs())
                .reduce(|| 0.0, f64::max);
            if worst >= 1e-6 {
                report.fail(format!("{label} r={r} basis form: max diff {worst:e}"));
            }
        }
    }
    report.note(format!("elapsed {:.1} s", start.elapsed().as_secs_f64()));
    report
}

/// Check 4: The Riemann-factor periodic spline of order 3 coincides with the
/// classical periodic cubic interpolation spline: max abs error below 1e-6
/// over 1000 points for 5 random sample sets at N = 9.
pub fn check_polynomial_coincidence() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(4, "periodic cubic spline coincidence");
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let grid = GridSpec::new(crate::grid::GridFamily::Full, 0, 9).unwrap();
    let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Riemann, 3, 0, 9).unwrap();
    let pts = dense_points(1000, 0.0, TWO_PI);
    for set in 0..5 {
        let samples = random_samples(&mut rng, grid);
        let sp = Interpolant::new(cfg, &samples).unwrap();
        let classical = oracle::PeriodicCubicSpline::fit(&samples).unwrap();
        let vals = sp.eval_many(&pts);
        let worst = pts
            .iter()
            .zip(&vals)
            .map(|(t, v)| (classical.eval(*t) - v).abs())
            .fold(0.0f64, f64::max);
        if worst >= 1e-6 {
            report.fail(format!("sample set {set}: max abs diff {worst:e}"));
        }
    }
    report.note(format!("elapsed {:.1} s", start.elapsed().as_secs_f64()));
    report
}

/// Check 5: Unit integral: every basis kind integrates to 1 over a period,
/// composite Simpson with 1e4 intervals, r = 1..5, tolerance 1e-6.
pub fn check_unit_integral() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(5, "unit integral of basis functions");
    // The integral is independent of the truncation level (every oscillatory
    // term integrates to zero over the period). Keep the highest retained
    // frequency below the quadrature's first alias (intervals/2), where the
    // composite rule would stop annihilating cosines exactly.
    let policy = TruncationPolicy::TailTolerance {
        eps: 1e-12,
        m_max: 500,
    };
    let quad = oracle::OracleConfig::default().quad_points;
    for label in DET_KINDS {
        for r in 1..=5u32 {
            let kind = kind_by_label(label, r, 0, 9)
                .unwrap()
                .with_truncation(policy);
            let basis = BSplineBasis::new(kind).unwrap();
            let h = (quad / 2) * 2;
            let xs: Vec<f64> = (0..=h)
                .map(|i| -PI + TWO_PI * i as f64 / h as f64)
                .collect();
            let vals: Vec<f64> = xs.par_iter().map(|t| basis.eval(2, *t).unwrap()).collect();
            // Simpson weights over precomputed values
            let step = TWO_PI / h as f64;
            let mut acc = vals[0] + vals[h];
            for (i, v) in vals.iter().enumerate().take(h).skip(1) {
                acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
            }
            let integral = acc * step / 3.0;
            if (integral - 1.0).abs() >= 1e-6 {
                report.fail(format!("{label} r={r}: integral {integral:.9}"));
            }
        }
    }
    report.note(format!(
        "30 kind/order combinations in {:.1} s",
        start.elapsed().as_secs_f64()
    ));
    report
}

/// Check 6: Cardinal functions: delta property at the nodes to 1e-8 and a discrete
/// Gram matrix equal to identity to 1e-8, all families, pairs, factors,
/// r = 1..5.
pub fn check_cardinal_delta() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(6, "cardinal delta + orthogonality");
    for family in [Parity::Full, Parity::Even, Parity::Odd] {
        for &(i1, i2) in supported_pairs(family) {
            for factor in [FactorKind::Power, FactorKind::Riemann] {
                for r in 1..=5 {
                    let n = if family == Parity::Full { 9 } else { 7 };
                    let cfg = SplineConfig::new(family, i1, i2, factor, r, 0, n).unwrap();
                    let basis = FundamentalBasis::new(cfg).unwrap();
                    let nodes = basis.grid().nodes();
                    let at_nodes: Vec<Vec<f64>> =
                        nodes.iter().map(|x| basis.eval_all(*x)).collect();
                    let mut worst_delta = 0.0f64;
                    let mut worst_gram = 0.0f64;
                    for k in 0..n {
                        for j in 0..n {
                            let want = if k == j { 1.0 } else { 0.0 };
                            worst_delta = worst_delta.max((at_nodes[j][k] - want).abs());
                            let dot: f64 = (0..n).map(|m| at_nodes[m][k] * at_nodes[m][j]).sum();
                            worst_gram = worst_gram.max((dot - want).abs());
                        }
                    }
                    if worst_delta >= 1e-8 || worst_gram >= 1e-8 {
                        report.fail(format!(
                            "{} ({i1},{i2}) {} r={r}: delta {worst_delta:e}, gram {worst_gram:e}",
                            family.name(),
                            factor.name()
                        ));
                    }
                }
            }
        }
    }
    report.note(format!("elapsed {:.1} s", start.elapsed().as_secs_f64()));
    report
}

/// Check 7: Odd splines and odd cardinal functions vanish at 0 and pi to 1e-10.
pub fn check_boundary_zeros() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(7, "odd boundary zeros");
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for &(i1, i2) in supported_pairs(Parity::Odd) {
        for factor in [FactorKind::Power, FactorKind::Riemann] {
            for r in 1..=5 {
                let cfg = SplineConfig::new(Parity::Odd, i1, i2, factor, r, 0, 7).unwrap();
                let samples = random_samples(&mut rng, cfg.grid().unwrap());
                let sp = Interpolant::new(cfg, &samples).unwrap();
                for t in [0.0, PI] {
                    let v = sp.eval(t).abs();
                    if v >= 1e-10 {
                        report.fail(format!(
                            "spline ({i1},{i2}) {} r={r} at t={t}: |S| = {v:e}",
                            factor.name()
                        ));
                    }
                }
                let basis = FundamentalBasis::new(cfg).unwrap();
                for k in 1..=7 {
                    for t in [0.0, PI] {
                        let v = basis.eval(k, t).unwrap().abs();
                        if v >= 1e-10 {
                            report.fail(format!(
                                "cardinal ({i1},{i2}) {} r={r} k={k} at t={t}: {v:e}",
                                factor.name()
                            ));
                        }
                    }
                }
            }
        }
    }
    report.note(format!("elapsed {:.1} s", start.elapsed().as_secs_f64()));
    report
}

/// Check 8: The analytic derivative of order q+1 matches a central finite
/// difference of the order-q evaluation, h = 1e-5, tolerance 1e-5, for
/// q <= r-2.
pub fn check_derivative_consistency() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(8, "derivative consistency");
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let h = 1e-5;
    // one fixed term count for both orders: differentiation is exact
    // termwise, so the q and q+1 series must be cut at the same place
    let policy = TruncationPolicy::FixedTerms(20_000);
    for family in [Parity::Full, Parity::Even, Parity::Odd] {
        for &(i1, i2) in supported_pairs(family) {
            for factor in [FactorKind::Power, FactorKind::Riemann] {
                for r in 2..=5u32 {
                    let n = if family == Parity::Full { 9 } else { 7 };
                    for q in 0..=r - 2 {
                        let cfg_q = SplineConfig::new(family, i1, i2, factor, r, q, n)
                            .unwrap()
                            .with_truncation(policy);
                        let cfg_q1 = SplineConfig::new(family, i1, i2, factor, r, q + 1, n)
                            .unwrap()
                            .with_truncation(policy);
                        let samples = random_samples(&mut rng, cfg_q.grid().unwrap());
                        let sq = Interpolant::new(cfg_q, &samples).unwrap();
                        let sq1 = Interpolant::new(cfg_q1, &samples).unwrap();
                        let span = if family == Parity::Full { TWO_PI } else { PI };
                        // the stencil [t-h, t+h] must stay clear of the
                        // knots: at q = r-2 the derivative the difference
                        // quotient expands through no longer exists there
                        let knots = cfg_q.knots();
                        let mut worst = 0.0f64;
                        let mut draws = 0;
                        while draws < 20 {
                            let t = rng.gen_range(0.05 * span..0.95 * span);
                            if knots.iter().any(|k| (t - k).abs() < 5e-3) {
                                continue;
                            }
                            draws += 1;
                            let fd = (sq.eval(t + h) - sq.eval(t - h)) / (2.0 * h);
                            worst = worst.max((fd - sq1.eval(t)).abs());
                        }
                        if worst >= 1e-5 {
                            report.fail(format!(
                                "{} ({i1},{i2}) {} r={r} q={q}: max fd error {worst:e}",
                                family.name(),
                                factor.name()
                            ));
                        }
                    }
                }
            }
        }
    }
    report.note(format!("elapsed {:.1} s", start.elapsed().as_secs_f64()));
    report
}

/// Check 9: Main truncated kernels against the brute-force compensated reference
/// at M = 1e6: 200 randomized (series, parameters, t) tuples, agreement
/// within max(1e-10, analytic tail bound at the resolved truncation).
pub fn check_kernel_reference() -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(9, "kernel reference sums");
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let policy = TruncationPolicy::default_for(5, 0); // eps 1e-12, cap 1e5
    let m_ref = oracle::OracleConfig::default().m_ref;
    type Tuple = (
        KernelFamily,
        FactorKind,
        u32,
        u32,
        usize,
        usize,
        f64,
        SeriesId,
    );
    let tuples: Vec<Tuple> = (0..200)
        .map(|_| {
            let (family, n) = match rng.gen_range(0..5) {
                0 => {
                    let n = [5usize, 7, 9][rng.gen_range(0..3)];
                    (
                        KernelFamily::Full {
                            i1: rng.gen_range(0..2),
                            i2: rng.gen_range(0..2),
                        },
                        n,
                    )
                }
                1 => (KernelFamily::Even { indicator: 0 }, rng.gen_range(5..10)),
                2 => (KernelFamily::Even { indicator: 1 }, rng.gen_range(5..10)),
                3 => (KernelFamily::Odd { indicator: 0 }, rng.gen_range(5..10)),
                _ => (KernelFamily::Odd { indicator: 1 }, rng.gen_range(5..10)),
            };
            let factor = if rng.gen_bool(0.5) {
                FactorKind::Power
            } else {
                FactorKind::Riemann
            };
            let r = rng.gen_range(1..=5u32);
            let q = if r > 1 { rng.gen_range(0..r) } else { 0 };
            let k = rng.gen_range(1..=family.harmonic_count(n));
            let t = rng.gen_range(0.0..TWO_PI);
            let series = match family {
                KernelFamily::Full { .. } => {
                    [SeriesId::H, SeriesId::C, SeriesId::S][rng.gen_range(0..3)]
                }
                KernelFamily::Even { .. } => [SeriesId::H, SeriesId::C][rng.gen_range(0..2)],
                KernelFamily::Odd { .. } => [SeriesId::H, SeriesId::S][rng.gen_range(0..2)],
            };
            (family, factor, r, q, k, n, t, series)
        })
        .collect();

    let failures: Vec<String> = tuples
        .par_iter()
        .filter_map(|&(family, factor, r, q, k, n, t, series)| {
            let q = if series == SeriesId::H { 0 } else { q };
            let main = match (family, series) {
                (KernelFamily::Full { i1, i2 }, SeriesId::H) => {
                    kernel::h_full(i1, i2, factor, r, k, n, policy)
                }
                (KernelFamily::Full { i1, .. }, SeriesId::C) => {
                    kernel::c_full(i1, factor, r, q, k, n, t, policy)
                }
                (KernelFamily::Full { i1, .. }, SeriesId::S) => {
                    kernel::s_full(i1, factor, r, q, k, n, t, policy)
                }
                (KernelFamily::Even { indicator }, SeriesId::H) => {
                    kernel::h_even(indicator, factor, r, k, n, policy)
                }
                (KernelFamily::Even { indicator }, _) => {
                    kernel::c_even(indicator, factor, r, q, k, n, t, policy)
                }
                (KernelFamily::Odd { indicator }, SeriesId::H) => {
                    kernel::h_odd(indicator, factor, r, k, n, policy)
                }
                (KernelFamily::Odd { indicator }, _) => {
                    kernel::s_odd(indicator, factor, r, q, k, n, t, policy)
                }
            }
            .unwrap();
            let reference =
                oracle::brute_series(series, family, factor, r, q, k, n, t, m_ref).unwrap();
            let shape = family.shape(factor, r, q, n);
            let m_used = shape.resolve(k as u64, policy);
            let tol = shape.tail_bound(k as u64, m_used).max(1e-10);
            if (main - reference).abs() > tol {
                Some(format!(
                    "{family:?} {} r={r} q={q} k={k} N={n} {series:?}: \
                     main {main:.12e} vs reference {reference:.12e} (tol {tol:.1e})",
                    factor.name()
                ))
            } else {
                None
            }
        })
        .collect();
    for f in failures {
        report.fail(f);
    }
    report.note(format!(
        "200 tuples in {:.1} s",
        start.elapsed().as_secs_f64()
    ));
    report
}

/// Run the selected checks (all nine when `ids` is empty).
pub fn run(ids: &[usize]) -> Vec<CheckReport> {
    let all: [(usize, fn() -> CheckReport); 9] = [
        (1, check_determinant_table),
        (2, check_interpolation),
        (3, check_representation_equivalence),
        (4, check_polynomial_coincidence),
        (5, check_unit_integral),
        (6, check_cardinal_delta),
        (7, check_boundary_zeros),
        (8, check_derivative_consistency),
        (9, check_kernel_reference),
    ];
    all.iter()
        .filter(|(id, _)| ids.is_empty() || ids.contains(id))
        .map(|(_, f)| f())
        .collect()
}
