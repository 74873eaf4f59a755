//! Discrete Fourier coefficients of the interpolation trigonometric
//! polynomial: full (cosine + sine), even (cosine-only) and odd (sine-only)
//! transforms on the matching grid family.
//!
//! Summation is direct O(N^2); the grids in play are small and the transform
//! stays a pure, exactly-invertible map.

use crate::error::{Error, Result};
use crate::grid::{GridFamily, GridSpec};

/// Symmetry class of a coefficient set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Full,
    Even,
    Odd,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Full => "full",
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    pub fn grid_family(self) -> GridFamily {
        match self {
            Parity::Full => GridFamily::Full,
            Parity::Even => GridFamily::EvenClosed,
            Parity::Odd => GridFamily::OddOpen,
        }
    }
}

/// Sampled values attached to the grid they were taken on.
#[derive(Debug, Clone)]
pub struct Samples {
    grid: GridSpec,
    values: Vec<f64>,
}

impl Samples {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::SampleLength {
                expected: grid.len(),
                got: values.len(),
            });
        }
        Ok(Samples { grid, values })
    }

    /// Sample a function at the grid nodes.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.nodes().into_iter().map(f).collect();
        Samples { grid, values }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Coefficients `a0, a_k, b_k` of the interpolation polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigCoefficients {
    pub parity: Parity,
    pub a0: f64,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

/// Full transform on the periodic grid: `a0 = 2/N sum f_j`,
/// `a_k = 2/N sum f_j cos(k x_j)`, `b_k = 2/N sum f_j sin(k x_j)` for
/// `k = 1..n`, `N = 2n+1`.
pub fn full_coeffs(samples: &Samples) -> Result<TrigCoefficients> {
    let grid = samples.grid();
    if grid.family() != GridFamily::Full {
        return Err(Error::GridMismatch {
            expected: "full",
            got: grid.family().name(),
        });
    }
    let n_nodes = grid.len();
    let n = (n_nodes - 1) / 2;
    let x = grid.nodes();
    let f = samples.values();
    let w = 2.0 / n_nodes as f64;
    let a0 = w * f.iter().sum::<f64>();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 1..=n {
        let kf = k as f64;
        let mut ca = 0.0;
        let mut cb = 0.0;
        for (xj, fj) in x.iter().zip(f) {
            let (s, c) = (kf * xj).sin_cos();
            ca += fj * c;
            cb += fj * s;
        }
        a.push(w * ca);
        b.push(w * cb);
    }
    Ok(TrigCoefficients {
        parity: Parity::Full,
        a0,
        a,
        b,
    })
}

/// Even transform on the closed half-range grid. Phase 0 weights the two
/// endpoint samples by 1/2; phase 1 is a plain average. `k = 1..N-1`.
pub fn even_coeffs(samples: &Samples) -> Result<TrigCoefficients> {
    let grid = samples.grid();
    if grid.family() != GridFamily::EvenClosed {
        return Err(Error::GridMismatch {
            expected: "even",
            got: grid.family().name(),
        });
    }
    let n = grid.len();
    let x = grid.nodes();
    let f = samples.values();
    let (w, endpoint_half) = if grid.indicator() == 0 {
        (2.0 / (n as f64 - 1.0), true)
    } else {
        (2.0 / n as f64, false)
    };
    let node_weight = |j: usize| -> f64 {
        if endpoint_half && (j == 0 || j == n - 1) {
            0.5
        } else {
            1.0
        }
    };
    let a0 = w * f
        .iter()
        .enumerate()
        .map(|(j, fj)| node_weight(j) * fj)
        .sum::<f64>();
    let mut a = Vec::with_capacity(n - 1);
    for k in 1..n {
        let kf = k as f64;
        let mut acc = 0.0;
        for (j, (xj, fj)) in x.iter().zip(f).enumerate() {
            acc += node_weight(j) * fj * (kf * xj).cos();
        }
        a.push(w * acc);
    }
    Ok(TrigCoefficients {
        parity: Parity::Even,
        a0,
        a,
        b: Vec::new(),
    })
}

/// Odd transform on the open half-range grid: `b_k = w sum f_j sin(k x_j)`,
/// `w = 2/(N+1)` for phase 0 and `2/N` for phase 1, `k = 1..N`.
pub fn odd_coeffs(samples: &Samples) -> Result<TrigCoefficients> {
    let grid = samples.grid();
    if grid.family() != GridFamily::OddOpen {
        return Err(Error::GridMismatch {
            expected: "odd",
            got: grid.family().name(),
        });
    }
    let n = grid.len();
    let x = grid.nodes();
    let f = samples.values();
    let w = if grid.indicator() == 0 {
        2.0 / (n as f64 + 1.0)
    } else {
        2.0 / n as f64
    };
    let mut b = Vec::with_capacity(n);
    for k in 1..=n {
        let kf = k as f64;
        let mut acc = 0.0;
        for (xj, fj) in x.iter().zip(f) {
            acc += fj * (kf * xj).sin();
        }
        b.push(w * acc);
    }
    Ok(TrigCoefficients {
        parity: Parity::Odd,
        a0: 0.0,
        a: Vec::new(),
        b,
    })
}

/// Dispatch on the sample grid's family.
pub fn coeffs(samples: &Samples) -> Result<TrigCoefficients> {
    match samples.grid().family() {
        GridFamily::Full => full_coeffs(samples),
        GridFamily::EvenClosed => even_coeffs(samples),
        GridFamily::OddOpen => odd_coeffs(samples),
    }
}

/// Evaluate the plain interpolation polynomial (no convergence factors);
/// test oracle for the round-trip property and the basis of the even/odd
/// polynomial conventions: even uses a half weight on the top harmonic for
/// phase 0, odd uses one for phase 1.
pub fn eval_polynomial(c: &TrigCoefficients, indicator: u8, t: f64) -> f64 {
    match c.parity {
        Parity::Full => {
            let mut v = c.a0 / 2.0;
            for (k, (ak, bk)) in c.a.iter().zip(&c.b).enumerate() {
                let kf = (k + 1) as f64;
                let (s, co) = (kf * t).sin_cos();
                v += ak * co + bk * s;
            }
            v
        }
        Parity::Even => {
            let top = c.a.len();
            let mut v = c.a0 / 2.0;
            for (k, ak) in c.a.iter().enumerate() {
                let kf = (k + 1) as f64;
                let w = if indicator == 0 && k + 1 == top {
                    0.5
                } else {
                    1.0
                };
                v += w * ak * (kf * t).cos();
            }
            v
        }
        Parity::Odd => {
            let top = c.b.len();
            let mut v = 0.0;
            for (k, bk) in c.b.iter().enumerate() {
                let kf = (k + 1) as f64;
                let w = if indicator == 1 && k + 1 == top {
                    0.5
                } else {
                    1.0
                };
                v += w * bk * (kf * t).sin();
            }
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridFamily, GridSpec};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn grid(family: GridFamily, i: u8, n: usize) -> GridSpec {
        GridSpec::new(family, i, n).unwrap()
    }

    #[test]
    fn constant_on_full_grid() {
        let g = grid(GridFamily::Full, 0, 9);
        let s = Samples::from_fn(g, |_| 4.5);
        let c = full_coeffs(&s).unwrap();
        assert!((c.a0 - 9.0).abs() < 1e-14);
        for (ak, bk) in c.a.iter().zip(&c.b) {
            assert!(ak.abs() < 1e-14 && bk.abs() < 1e-14);
        }
    }

    #[test]
    fn pure_harmonics_recovered() {
        let g = grid(GridFamily::Full, 0, 9);
        let c = full_coeffs(&Samples::from_fn(g, |x| x.cos())).unwrap();
        assert!((c.a[0] - 1.0).abs() < 1e-14);
        assert!(c.a0.abs() < 1e-14);
        for k in 1..c.a.len() {
            assert!(c.a[k].abs() < 1e-14);
        }
        for bk in &c.b {
            assert!(bk.abs() < 1e-14);
        }

        let g = grid(GridFamily::Full, 1, 9);
        let c = full_coeffs(&Samples::from_fn(g, |x| (2.0 * x).sin())).unwrap();
        assert!((c.b[1] - 1.0).abs() < 1e-14);
        for (k, bk) in c.b.iter().enumerate() {
            if k != 1 {
                assert!(bk.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn even_constant_and_harmonic() {
        let g = grid(GridFamily::EvenClosed, 0, 5);
        let c = even_coeffs(&Samples::from_fn(g, |_| 1.0)).unwrap();
        assert!((c.a0 - 2.0).abs() < 1e-14);
        for ak in &c.a {
            assert!(ak.abs() < 1e-14);
        }

        let g = grid(GridFamily::EvenClosed, 1, 8);
        let c = even_coeffs(&Samples::from_fn(g, |x| x.cos())).unwrap();
        assert!((c.a[0] - 1.0).abs() < 1e-14);
        assert!(c.a0.abs() < 1e-14);
        for ak in c.a.iter().skip(1) {
            assert!(ak.abs() < 1e-14);
        }
    }

    #[test]
    fn odd_harmonics_recovered() {
        let c = odd_coeffs(&Samples::from_fn(grid(GridFamily::OddOpen, 0, 7), |x| {
            x.sin()
        }))
        .unwrap();
        assert!((c.b[0] - 1.0).abs() < 1e-14);
        for bk in c.b.iter().skip(1) {
            assert!(bk.abs() < 1e-14);
        }

        let c = odd_coeffs(&Samples::from_fn(grid(GridFamily::OddOpen, 1, 7), |x| {
            (3.0 * x).sin()
        }))
        .unwrap();
        assert!((c.b[2] - 1.0).abs() < 1e-14);
        for (k, bk) in c.b.iter().enumerate() {
            if k != 2 {
                assert!(bk.abs() < 1e-14, "k={k}: {bk}");
            }
        }

        let c = odd_coeffs(&Samples::from_fn(grid(GridFamily::OddOpen, 0, 7), |_| 0.0)).unwrap();
        assert!(c.b.iter().all(|b| *b == 0.0));
    }

    #[test]
    fn wrong_family_rejected() {
        let s = Samples::from_fn(grid(GridFamily::Full, 0, 9), |x| x);
        assert!(even_coeffs(&s).is_err());
        assert!(odd_coeffs(&s).is_err());
        let s = Samples::from_fn(grid(GridFamily::OddOpen, 0, 7), |x| x);
        assert!(full_coeffs(&s).is_err());
    }

    #[test]
    fn polynomial_round_trip_random_samples() {
        let mut rng = StdRng::seed_from_u64(7);
        for family in [
            GridFamily::Full,
            GridFamily::EvenClosed,
            GridFamily::OddOpen,
        ] {
            for indicator in [0u8, 1] {
                for n in [5usize, 7, 9, 16, 17] {
                    if family == GridFamily::Full && n % 2 == 0 {
                        continue;
                    }
                    let g = grid(family, indicator, n);
                    let values: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                    let max = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                    let s = Samples::new(g, values.clone()).unwrap();
                    let c = coeffs(&s).unwrap();
                    for (j, xj) in g.nodes().iter().enumerate() {
                        let v = eval_polynomial(&c, indicator, *xj);
                        assert!(
                            (v - values[j]).abs() < 1e-12 * max.max(1.0),
                            "{family:?} I={indicator} N={n} node {j}: {v} vs {}",
                            values[j]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn linearity() {
        let mut rng = StdRng::seed_from_u64(11);
        let g = grid(GridFamily::Full, 0, 9);
        let fv: Vec<f64> = (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let gv: Vec<f64> = (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let (alpha, beta) = (1.7, -0.45);
        let combo: Vec<f64> = fv
            .iter()
            .zip(&gv)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        let cf = full_coeffs(&Samples::new(g, fv).unwrap()).unwrap();
        let cg = full_coeffs(&Samples::new(g, gv).unwrap()).unwrap();
        let cc = full_coeffs(&Samples::new(g, combo).unwrap()).unwrap();
        for k in 0..cf.a.len() {
            let want = alpha * cf.a[k] + beta * cg.a[k];
            assert!((cc.a[k] - want).abs() < 1e-13 * want.abs().max(1.0));
            let want = alpha * cf.b[k] + beta * cg.b[k];
            assert!((cc.b[k] - want).abs() < 1e-13 * want.abs().max(1.0));
        }
    }
}
