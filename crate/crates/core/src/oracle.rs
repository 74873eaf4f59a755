//! Independent reference implementations used only for verification:
//! brute-force re-summation of the kernel series with compensated
//! accumulation, a classical periodic cubic interpolation spline, a
//! periodized cardinal cubic B-spline and composite Simpson quadrature.
//!
//! These deliberately share no evaluation machinery with [`crate::kernel`]:
//! angles are reduced per term and terms are accumulated one by one in
//! strict ascending order with Kahan compensation.

use crate::error::{Error, Result};
use crate::factor::FactorKind;
use crate::fourier::Samples;
use crate::grid::GridFamily;
use crate::kernel::KernelFamily;
use crate::linalg::solve_cyclic_tridiagonal;
use std::f64::consts::PI;

const TWO_PI: f64 = 2.0 * PI;

/// Reference-run parameters.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Truncation for reference sums.
    pub m_ref: usize,
    /// Composite Simpson interval count.
    pub quad_points: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            m_ref: 1_000_000,
            quad_points: 10_000,
        }
    }
}

/// Kahan compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Which series a brute-force request targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesId {
    H,
    C,
    S,
}

fn reduced_cos(w: u64, t: f64, phase_quarters: u32) -> f64 {
    let ang = (w as f64 * t).rem_euclid(TWO_PI);
    match phase_quarters % 4 {
        0 => ang.cos(),
        1 => -ang.sin(),
        2 => -ang.cos(),
        _ => ang.sin(),
    }
}

fn reduced_sin(w: u64, t: f64, phase_quarters: u32) -> f64 {
    let ang = (w as f64 * t).rem_euclid(TWO_PI);
    match phase_quarters % 4 {
        0 => ang.sin(),
        1 => ang.cos(),
        2 => -ang.sin(),
        _ => -ang.cos(),
    }
}

/// Re-sum one kernel series by brute force with `m_ref` tail terms.
///
/// Parameters mirror the main kernel operations; `family` selects the series
/// variant exactly as in [`crate::kernel::KernelTable::build`].
pub fn brute_series(
    series: SeriesId,
    family: KernelFamily,
    factor: FactorKind,
    r: u32,
    q: u32,
    k: usize,
    n: usize,
    t: f64,
    m_ref: usize,
) -> Result<f64> {
    if q > r {
        return Err(Error::DerivativeTooHigh { q, r });
    }
    let k_max = family.harmonic_count(n);
    if k < 1 || k > k_max {
        return Err(Error::HarmonicOutOfRange { k, k_max });
    }
    let shape = family.shape(factor, r, q, n);
    let p = shape.p;
    let k = k as u64;
    let sig = |w: u64| shape.factor.sigma(shape.r, w);
    let amp = |w: u64| (w as f64).powi(q as i32);
    let mut acc = KahanSum::new();
    match series {
        SeriesId::H => acc.add(sig(k)),
        SeriesId::C => acc.add(sig(k) * amp(k) * reduced_cos(k, t, q)),
        SeriesId::S => acc.add(sig(k) * amp(k) * reduced_sin(k, t, q)),
    }
    for m in 1..=m_ref as u64 {
        let hsign = if shape.alt_h && m % 2 == 1 { -1.0 } else { 1.0 };
        let nsign = if shape.alt_num && m % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        let wp = m * p + k;
        let wm = m * p - k;
        let term = match series {
            SeriesId::H => hsign * (sig(wp) + shape.chi * sig(wm)),
            SeriesId::C => {
                nsign
                    * (sig(wp) * amp(wp) * reduced_cos(wp, t, q)
                        + shape.chi * sig(wm) * amp(wm) * reduced_cos(wm, t, q))
            }
            SeriesId::S => {
                nsign
                    * (sig(wp) * amp(wp) * reduced_sin(wp, t, q)
                        - shape.chi * sig(wm) * amp(wm) * reduced_sin(wm, t, q))
            }
        };
        acc.add(term);
    }
    Ok(acc.value())
}

/// Classical C^2 periodic cubic interpolation spline on the uniform
/// full grid (phase 0), solved through the cyclic tridiagonal moment system.
pub struct PeriodicCubicSpline {
    n: usize,
    h: f64,
    values: Vec<f64>,
    moments: Vec<f64>,
}

impl PeriodicCubicSpline {
    pub fn fit(samples: &Samples) -> Result<Self> {
        let grid = samples.grid();
        if grid.family() != GridFamily::Full || grid.indicator() != 0 {
            return Err(Error::GridMismatch {
                expected: "full phase 0",
                got: grid.family().name(),
            });
        }
        let n = grid.len();
        let h = TWO_PI / n as f64;
        let f = samples.values();
        let sub = vec![h / 6.0; n - 1];
        let sup = vec![h / 6.0; n - 1];
        let diag = vec![2.0 * h / 3.0; n];
        let rhs: Vec<f64> = (0..n)
            .map(|j| {
                let prev = f[(j + n - 1) % n];
                let next = f[(j + 1) % n];
                (next - 2.0 * f[j] + prev) / h
            })
            .collect();
        let moments = solve_cyclic_tridiagonal(&sub, &diag, &sup, h / 6.0, h / 6.0, &rhs);
        Ok(PeriodicCubicSpline {
            n,
            h,
            values: f.to_vec(),
            moments,
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let tt = t.rem_euclid(TWO_PI);
        let mut i = (tt / self.h).floor() as usize;
        if i >= self.n {
            i = self.n - 1;
        }
        let x0 = i as f64 * self.h;
        let d1 = tt - x0;
        let d0 = self.h - d1;
        let ip = (i + 1) % self.n;
        let h = self.h;
        (self.moments[i] * d0.powi(3) + self.moments[ip] * d1.powi(3)) / (6.0 * h)
            + (self.values[i] - self.moments[i] * h * h / 6.0) * d0 / h
            + (self.values[ip] - self.moments[ip] * h * h / 6.0) * d1 / h
    }
}

/// Cardinal cubic B-spline on knots `0..4`.
fn m4(u: f64) -> f64 {
    let p3 = |v: f64| if v > 0.0 { v * v * v } else { 0.0 };
    (p3(u) - 4.0 * p3(u - 1.0) + 6.0 * p3(u - 2.0) - 4.0 * p3(u - 3.0) + p3(u - 4.0)) / 6.0
}

/// Unit-integral periodized cubic B-spline centered at `center`, knot
/// spacing `2*pi/n`. Needs `n >= 5` so at most one period wrap overlaps.
pub fn periodic_cubic_bspline(t: f64, center: f64, n: usize) -> f64 {
    assert!(n >= 5);
    let h = TWO_PI / n as f64;
    let dt = (t - center + PI).rem_euclid(TWO_PI) - PI;
    let u = dt / h + 2.0;
    (m4(u) + m4(u + n as f64) + m4(u - n as f64)) / h
}

/// Integral of a basis function over one period, composite Simpson on
/// `[-pi, pi]` with the configured interval count.
pub fn quadrature_unit_integral(
    basis: &crate::bspline::BSplineBasis,
    j: usize,
    cfg: &OracleConfig,
) -> Result<f64> {
    // probe once so an out-of-range index errors instead of panicking below
    basis.eval(j, 0.0)?;
    Ok(simpson(
        |t| basis.eval(j, t).unwrap(),
        -PI,
        PI,
        cfg.quad_points,
    ))
}

/// Composite Simpson rule with `intervals` subintervals (made even).
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    let n = if intervals % 2 == 0 {
        intervals
    } else {
        intervals + 1
    };
    let h = (b - a) / n as f64;
    let mut acc = KahanSum::new();
    acc.add(f(a));
    acc.add(f(b));
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc.add(w * f(a + i as f64 * h));
    }
    acc.value() * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::kernel::{h_full, TruncationPolicy};

    #[test]
    fn brute_h_matches_frozen_reference() {
        let v = brute_series(
            SeriesId::H,
            KernelFamily::Full { i1: 0, i2: 0 },
            FactorKind::Power,
            1,
            0,
            1,
            3,
            0.0,
            1_000_000,
        )
        .unwrap();
        assert!((v - 1.4621633927540902).abs() < 1e-13);
    }

    #[test]
    fn brute_series_cauchy_tail() {
        // Order 1: doubling the cut from 1e6 to 1e7 still moves the sum by
        // the analytic tail, about 2e-7 here; order 3 is converged below 1e-12.
        let f = |m| {
            brute_series(
                SeriesId::H,
                KernelFamily::Full { i1: 0, i2: 0 },
                FactorKind::Power,
                1,
                0,
                1,
                3,
                0.0,
                m,
            )
            .unwrap()
        };
        let d = (f(10_000_000) - f(1_000_000)).abs();
        assert!(d > 1e-8 && d < 3e-7, "tail {d:e}");

        let g = |m| {
            brute_series(
                SeriesId::H,
                KernelFamily::Full { i1: 0, i2: 0 },
                FactorKind::Power,
                3,
                0,
                1,
                3,
                0.0,
                m,
            )
            .unwrap()
        };
        assert!((g(2_000_000) - g(1_000_000)).abs() < 1e-12);
    }

    #[test]
    fn brute_s_zero_at_origin() {
        let v = brute_series(
            SeriesId::S,
            KernelFamily::Odd { indicator: 0 },
            FactorKind::Power,
            2,
            0,
            3,
            7,
            0.0,
            10_000,
        )
        .unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn brute_agrees_with_main_kernel() {
        let main = h_full(
            0,
            0,
            FactorKind::Power,
            4,
            2,
            9,
            TruncationPolicy::TailTolerance {
                eps: 1e-13,
                m_max: 1_000_000,
            },
        )
        .unwrap();
        let reference = brute_series(
            SeriesId::H,
            KernelFamily::Full { i1: 0, i2: 0 },
            FactorKind::Power,
            4,
            0,
            2,
            9,
            0.0,
            1_000_000,
        )
        .unwrap();
        assert!((main - reference).abs() < 1e-12);
    }

    #[test]
    fn cubic_spline_interpolates() {
        let grid = GridSpec::new(GridFamily::Full, 0, 9).unwrap();
        let s = Samples::from_fn(grid, |x| x.sin());
        let sp = PeriodicCubicSpline::fit(&s).unwrap();
        for (x, v) in grid.nodes().iter().zip(s.values()) {
            assert!((sp.eval(*x) - v).abs() < 1e-12);
        }
        let s = Samples::from_fn(grid, |_| 3.25);
        let sp = PeriodicCubicSpline::fit(&s).unwrap();
        for t in [0.0, 0.1, 2.0, 6.0] {
            assert!((sp.eval(t) - 3.25).abs() < 1e-12);
        }
    }

    #[test]
    fn simpson_basics() {
        let v = simpson(|x| x.sin(), 0.0, PI, 1000);
        assert!((v - 2.0).abs() < 1e-10);
        let v = simpson(|_| 0.0, -PI, PI, 100);
        assert_eq!(v, 0.0);
    }

    #[test]
    fn periodic_bspline_partition_of_unity() {
        let n = 9;
        let grid = GridSpec::new(GridFamily::Full, 0, n).unwrap();
        let h = TWO_PI / n as f64;
        for t in [0.0, 0.17, 1.3, 5.9] {
            let total: f64 = grid
                .nodes()
                .iter()
                .map(|&c| periodic_cubic_bspline(t, c, n))
                .sum();
            assert!((total - 1.0 / h).abs() < 1e-12);
        }
    }
}
