//! Spline evaluation in coefficient form: the spline value is the data's
//! discrete Fourier coefficients weighted by the kernel ratios `C/H`, `S/H`.
//!
//! A configuration fixes the family (full / even / odd), the stitching and
//! interpolation grid phases `I1`, `I2`, the convergence factor, the order
//! `r`, the derivative order `q` and the truncation policy. Supported
//! indicator pairs: full - all four; even - (0,0) and (0,1);
//! odd - (0,0) and (1,1).

use crate::error::{Error, Result};
use crate::factor::FactorKind;
use crate::fourier::{self, Parity, Samples, TrigCoefficients};
use crate::grid::GridSpec;
use crate::kernel::{KernelFamily, KernelTable, TruncationPolicy};
use rayon::prelude::*;

/// Everything that pins down one spline family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplineConfig {
    pub family: Parity,
    pub i1: u8,
    pub i2: u8,
    pub factor: FactorKind,
    pub r: u32,
    pub q: u32,
    pub n: usize,
    pub truncation: TruncationPolicy,
}

impl SplineConfig {
    pub fn new(
        family: Parity,
        i1: u8,
        i2: u8,
        factor: FactorKind,
        r: u32,
        q: u32,
        n: usize,
    ) -> Result<Self> {
        let cfg = SplineConfig {
            family,
            i1,
            i2,
            factor,
            r,
            q,
            n,
            truncation: TruncationPolicy::default_for(r, q),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_truncation(mut self, truncation: TruncationPolicy) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.i1 > 1 {
            return Err(Error::InvalidIndicator(self.i1));
        }
        if self.i2 > 1 {
            return Err(Error::InvalidIndicator(self.i2));
        }
        if self.r < 1 {
            return Err(Error::InvalidOrder(self.r));
        }
        if self.q > self.r {
            return Err(Error::DerivativeTooHigh {
                q: self.q,
                r: self.r,
            });
        }
        let supported = match self.family {
            Parity::Full => true,
            Parity::Even => self.i1 == 0,
            Parity::Odd => self.i1 == self.i2,
        };
        if !supported {
            return Err(Error::UnsupportedIndicatorPair {
                family: self.family.name(),
                i1: self.i1,
                i2: self.i2,
            });
        }
        self.truncation.validate()?;
        // grid validity
        self.grid()?;
        Ok(())
    }

    /// The interpolation grid this spline samples on.
    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.family.grid_family(), self.i2, self.n)
    }

    pub(crate) fn kernel_family(&self) -> KernelFamily {
        match self.family {
            Parity::Full => KernelFamily::Full {
                i1: self.i1,
                i2: self.i2,
            },
            Parity::Even => KernelFamily::Even { indicator: self.i2 },
            Parity::Odd => KernelFamily::Odd { indicator: self.i2 },
        }
    }

    /// Grid nodes where the spline's smoothness class drops to `C^(r-1-q)`;
    /// phase selected by the stitching indicator.
    pub fn knots(&self) -> Vec<f64> {
        let p = self.kernel_family().period(self.n);
        let h = 2.0 * std::f64::consts::PI / p as f64;
        let count = match self.family {
            Parity::Full => self.n,
            _ => (p / 2) as usize + 1,
        };
        (0..count)
            .map(|j| {
                if self.i1 == 0 {
                    j as f64 * h
                } else {
                    (j as f64 + 0.5) * h
                }
            })
            .collect()
    }
}

fn indicator_value(q: u32) -> f64 {
    if q == 0 {
        1.0
    } else {
        0.0
    }
}

/// A config bound to its kernel table; evaluates any coefficient set.
pub struct SplineEvaluator {
    cfg: SplineConfig,
    table: KernelTable,
}

impl SplineEvaluator {
    pub fn new(cfg: SplineConfig) -> Result<Self> {
        cfg.validate()?;
        let table = KernelTable::build(
            cfg.kernel_family(),
            cfg.factor,
            cfg.r,
            cfg.q,
            cfg.n,
            cfg.truncation,
        )?;
        Ok(SplineEvaluator { cfg, table })
    }

    pub fn config(&self) -> &SplineConfig {
        &self.cfg
    }

    pub fn table(&self) -> &KernelTable {
        &self.table
    }

    fn check_coeffs(&self, coeffs: &TrigCoefficients) -> Result<()> {
        if coeffs.parity != self.cfg.family {
            return Err(Error::ParityMismatch {
                expected: self.cfg.family.name(),
                got: coeffs.parity.name(),
            });
        }
        let k_max = self.table.harmonic_count();
        let ok = match self.cfg.family {
            Parity::Full => coeffs.a.len() == k_max && coeffs.b.len() == k_max,
            Parity::Even => coeffs.a.len() == k_max,
            Parity::Odd => coeffs.b.len() == k_max,
        };
        if !ok {
            return Err(Error::SampleLength {
                expected: k_max,
                got: coeffs.a.len().max(coeffs.b.len()),
            });
        }
        Ok(())
    }

    pub fn eval(&self, coeffs: &TrigCoefficients, t: f64) -> Result<f64> {
        self.check_coeffs(coeffs)?;
        let k_max = self.table.harmonic_count();
        let mut c = vec![0.0; k_max];
        let mut s = vec![0.0; k_max];
        self.table.eval_cs_into(t, &mut c, &mut s);
        Ok(self.combine(coeffs, &c, &s))
    }

    pub(crate) fn combine(&self, coeffs: &TrigCoefficients, c: &[f64], s: &[f64]) -> f64 {
        let cfg = &self.cfg;
        let iq = indicator_value(cfg.q);
        let k_max = self.table.harmonic_count();
        match cfg.family {
            Parity::Full => {
                let mut v = coeffs.a0 / 2.0 * iq;
                for k in 0..k_max {
                    let h = self.table.h(k + 1);
                    v += (c[k] * coeffs.a[k] + s[k] * coeffs.b[k]) / h;
                }
                v
            }
            Parity::Even => {
                // phase 0 carries a half weight on the top harmonic
                let mut v = 0.5 * coeffs.a0 * iq;
                for k in 0..k_max {
                    let w = if cfg.i2 == 0 && k + 1 == k_max {
                        0.5
                    } else {
                        1.0
                    };
                    v += w * coeffs.a[k] * c[k] / self.table.h(k + 1);
                }
                v
            }
            Parity::Odd => {
                // phase 1 carries a half weight on the top harmonic
                let mut v = 0.0;
                for k in 0..k_max {
                    let w = if cfg.i2 == 1 && k + 1 == k_max {
                        0.5
                    } else {
                        1.0
                    };
                    v += w * coeffs.b[k] * s[k] / self.table.h(k + 1);
                }
                v
            }
        }
    }

    /// Evaluate at many points (parallel over points).
    pub fn eval_many(&self, coeffs: &TrigCoefficients, ts: &[f64]) -> Result<Vec<f64>> {
        self.check_coeffs(coeffs)?;
        let k_max = self.table.harmonic_count();
        Ok(ts
            .par_iter()
            .map(|&t| {
                let mut c = vec![0.0; k_max];
                let mut s = vec![0.0; k_max];
                self.table.eval_cs_into(t, &mut c, &mut s);
                self.combine(coeffs, &c, &s)
            })
            .collect())
    }
}

/// A spline bound to concrete data.
pub struct Interpolant {
    evaluator: SplineEvaluator,
    coeffs: TrigCoefficients,
}

impl Interpolant {
    pub fn new(cfg: SplineConfig, samples: &Samples) -> Result<Self> {
        let grid = cfg.grid()?;
        if samples.grid() != grid {
            return Err(Error::GridMismatch {
                expected: grid.family().name(),
                got: samples.grid().family().name(),
            });
        }
        let coeffs = fourier::coeffs(samples)?;
        let evaluator = SplineEvaluator::new(cfg)?;
        Ok(Interpolant { evaluator, coeffs })
    }

    pub fn config(&self) -> &SplineConfig {
        self.evaluator.config()
    }

    pub fn coefficients(&self) -> &TrigCoefficients {
        &self.coeffs
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.evaluator
            .eval(&self.coeffs, t)
            .expect("coefficients validated at construction")
    }

    pub fn eval_many(&self, ts: &[f64]) -> Vec<f64> {
        self.evaluator
            .eval_many(&self.coeffs, ts)
            .expect("validated at construction")
    }
}

/// Periodic spline value from full-grid coefficients.
pub fn eval_full(cfg: &SplineConfig, coeffs: &TrigCoefficients, t: f64) -> Result<f64> {
    if cfg.family != Parity::Full {
        return Err(Error::ParityMismatch {
            expected: "full",
            got: cfg.family.name(),
        });
    }
    SplineEvaluator::new(*cfg)?.eval(coeffs, t)
}

/// Even (cosine) spline value on `[0, pi]`.
pub fn eval_even(cfg: &SplineConfig, coeffs: &TrigCoefficients, t: f64) -> Result<f64> {
    if cfg.family != Parity::Even {
        return Err(Error::ParityMismatch {
            expected: "even",
            got: cfg.family.name(),
        });
    }
    SplineEvaluator::new(*cfg)?.eval(coeffs, t)
}

/// Odd (sine) spline value on `[0, pi]`.
pub fn eval_odd(cfg: &SplineConfig, coeffs: &TrigCoefficients, t: f64) -> Result<f64> {
    if cfg.family != Parity::Odd {
        return Err(Error::ParityMismatch {
            expected: "odd",
            got: cfg.family.name(),
        });
    }
    SplineEvaluator::new(*cfg)?.eval(coeffs, t)
}

/// All `(I1, I2)` pairs the family supports.
pub fn supported_pairs(family: Parity) -> &'static [(u8, u8)] {
    match family {
        Parity::Full => &[(0, 0), (0, 1), (1, 0), (1, 1)],
        Parity::Even => &[(0, 0), (0, 1)],
        Parity::Odd => &[(0, 0), (1, 1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridFamily;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    fn samples(family: Parity, i2: u8, n: usize, f: impl Fn(f64) -> f64) -> Samples {
        let grid = GridSpec::new(family.grid_family(), i2, n).unwrap();
        Samples::from_fn(grid, f)
    }

    #[test]
    fn constant_reproduction_and_derivative() {
        let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 3, 0, 9).unwrap();
        let sp = Interpolant::new(cfg, &samples(Parity::Full, 0, 9, |_| 5.0)).unwrap();
        for t in [0.0, 0.3, 2.2, 6.1] {
            assert!((sp.eval(t) - 5.0).abs() < 1e-12);
        }
        let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 3, 1, 9).unwrap();
        let sp = Interpolant::new(cfg, &samples(Parity::Full, 0, 9, |_| 5.0)).unwrap();
        for t in [0.0, 1.7, 4.9] {
            assert!(sp.eval(t).abs() < 1e-12);
        }
    }

    #[test]
    fn full_interpolates_trig_polynomial_data() {
        let f = |x: f64| x.sin() + 0.3 * (2.0 * x).cos();
        let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 3, 0, 9).unwrap();
        let s = samples(Parity::Full, 0, 9, f);
        let sp = Interpolant::new(cfg, &s).unwrap();
        for (x, v) in s.grid().nodes().iter().zip(s.values()) {
            assert!((sp.eval(*x) - v).abs() < 1e-8);
        }
    }

    #[test]
    fn even_interpolation_and_symmetry_derivative() {
        let cfg = SplineConfig::new(Parity::Even, 0, 1, FactorKind::Power, 2, 0, 8).unwrap();
        let s = samples(Parity::Even, 1, 8, |x| x.cos());
        let sp = Interpolant::new(cfg, &s).unwrap();
        for (x, v) in s.grid().nodes().iter().zip(s.values()) {
            assert!((sp.eval(*x) - v).abs() < 1e-8);
        }
        // an even function has zero derivative at t = 0
        let cfg = SplineConfig::new(Parity::Even, 0, 1, FactorKind::Power, 2, 1, 8).unwrap();
        let sp = Interpolant::new(cfg, &s).unwrap();
        assert!(sp.eval(0.0).abs() < 1e-9);
    }

    #[test]
    fn odd_interpolation_and_boundary_zeros() {
        let cfg = SplineConfig::new(Parity::Odd, 0, 0, FactorKind::Power, 3, 0, 7).unwrap();
        let s = samples(Parity::Odd, 0, 7, |x| x.sin());
        let sp = Interpolant::new(cfg, &s).unwrap();
        for (x, v) in s.grid().nodes().iter().zip(s.values()) {
            assert!((sp.eval(*x) - v).abs() < 1e-8);
        }
        let mut rng = StdRng::seed_from_u64(5);
        let vals: Vec<f64> = (0..7).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let grid = GridSpec::new(GridFamily::OddOpen, 0, 7).unwrap();
        let sp = Interpolant::new(cfg, &Samples::new(grid, vals).unwrap()).unwrap();
        assert!(sp.eval(0.0).abs() < 1e-10);
        assert!(sp.eval(PI).abs() < 1e-10);
    }

    #[test]
    fn random_interpolation_everywhere() {
        let mut rng = StdRng::seed_from_u64(99);
        for family in [Parity::Full, Parity::Even, Parity::Odd] {
            for &(i1, i2) in supported_pairs(family) {
                for factor in [FactorKind::Power, FactorKind::Riemann] {
                    for r in [1, 3, 5] {
                        let n = if family == Parity::Full { 9 } else { 7 };
                        let grid = GridSpec::new(family.grid_family(), i2, n).unwrap();
                        let vals: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                        let maxv = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                        let s = Samples::new(grid, vals.clone()).unwrap();
                        let cfg = SplineConfig::new(family, i1, i2, factor, r, 0, n).unwrap();
                        let sp = Interpolant::new(cfg, &s).unwrap();
                        for (x, v) in grid.nodes().iter().zip(&vals) {
                            let got = sp.eval(*x);
                            assert!(
                                (got - v).abs() < 1e-7 * (1.0 + maxv),
                                "{family:?} ({i1},{i2}) {factor:?} r={r}: {got} vs {v}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn periodicity() {
        let mut rng = StdRng::seed_from_u64(31);
        let cfg = SplineConfig::new(Parity::Full, 1, 0, FactorKind::Power, 2, 1, 9).unwrap();
        let grid = GridSpec::new(GridFamily::Full, 0, 9).unwrap();
        let vals: Vec<f64> = (0..9).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let sp = Interpolant::new(cfg, &Samples::new(grid, vals).unwrap()).unwrap();
        for _ in 0..20 {
            let t = rng.gen_range(0.0..2.0 * PI);
            assert!((sp.eval(t) - sp.eval(t + 2.0 * PI)).abs() < 1e-10);
        }
    }

    #[test]
    fn unsupported_pairs_rejected() {
        assert!(SplineConfig::new(Parity::Even, 1, 0, FactorKind::Power, 2, 0, 6).is_err());
        assert!(SplineConfig::new(Parity::Even, 1, 1, FactorKind::Power, 2, 0, 6).is_err());
        assert!(SplineConfig::new(Parity::Odd, 0, 1, FactorKind::Power, 2, 0, 7).is_err());
        assert!(SplineConfig::new(Parity::Odd, 1, 0, FactorKind::Power, 2, 0, 7).is_err());
        assert!(SplineConfig::new(Parity::Full, 0, 2, FactorKind::Power, 2, 0, 9).is_err());
        assert!(SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 2, 3, 9).is_err());
    }

    #[test]
    fn mismatched_coefficients_rejected() {
        let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Power, 2, 0, 9).unwrap();
        let s = samples(Parity::Odd, 0, 7, |x| x.sin());
        let coeffs = fourier::odd_coeffs(&s).unwrap();
        assert!(matches!(
            eval_full(&cfg, &coeffs, 0.5),
            Err(Error::ParityMismatch { .. })
        ));
    }

    #[test]
    fn eval_many_matches_eval() {
        let cfg = SplineConfig::new(Parity::Full, 0, 1, FactorKind::Riemann, 3, 1, 9).unwrap();
        let s = samples(Parity::Full, 1, 9, |x| (2.0 * x).sin() - x.cos());
        let sp = Interpolant::new(cfg, &s).unwrap();
        let ts: Vec<f64> = (0..40).map(|i| i as f64 * 0.17).collect();
        let many = sp.eval_many(&ts);
        for (t, v) in ts.iter().zip(many) {
            assert_eq!(sp.eval(*t), v);
        }
    }
}
