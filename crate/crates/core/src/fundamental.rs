//! Fundamental (cardinal) splines: for each node `k` a spline that is 1 at
//! node `k` and 0 at every other node, so interpolation is a plain
//! sample-weighted sum.
//!
//! For the periodic family the cardinal function is a translated kernel sum
//! evaluated at `t - x_k`; its numerator series carries the sign pattern of
//! the combined indicator `I1 + I2`. For the half-range families the
//! cardinal function weights the spline kernels by `cos(j x_k)` or
//! `sin(j x_k)`; the harmonic and sample weights mirror the hidden half
//! weights of the underlying transforms (top harmonic for the phase with a
//! closed endpoint, endpoint samples on the closed even grid).

use crate::error::{Error, Result};
use crate::fourier::{Parity, Samples};
use crate::grid::GridSpec;
use crate::kernel::{GridShift, KernelTable, TruncationPolicy};
use crate::spline::SplineConfig;

/// Cardinal basis for one spline configuration.
pub struct FundamentalBasis {
    cfg: SplineConfig,
    grid: GridSpec,
    table: KernelTable,
    shifts: Vec<GridShift>,
}

impl FundamentalBasis {
    pub fn new(cfg: SplineConfig) -> Result<Self> {
        cfg.validate()?;
        let grid = cfg.grid()?;
        let family = cfg.kernel_family();
        let table = match cfg.family {
            Parity::Full => {
                // cardinal numerators alternate with (I1 + I2), not I1
                let mut shape = family.shape(cfg.factor, cfg.r, cfg.q, cfg.n);
                shape.alt_num = (cfg.i1 + cfg.i2) % 2 == 1;
                KernelTable::build_from_shape(shape, family.harmonic_count(cfg.n), cfg.truncation)?
            }
            _ => KernelTable::build(family, cfg.factor, cfg.r, cfg.q, cfg.n, cfg.truncation)?,
        };
        let half = grid.indicator() == 1;
        let shifts = grid
            .nodes()
            .into_iter()
            .map(|x| GridShift {
                x,
                half_class: half,
            })
            .collect();
        Ok(FundamentalBasis {
            cfg,
            grid,
            table,
            shifts,
        })
    }

    pub fn config(&self) -> &SplineConfig {
        &self.cfg
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.cfg.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn indicator_term(&self) -> f64 {
        if self.cfg.q == 0 {
            1.0
        } else {
            0.0
        }
    }

    /// Combine kernel values into the cardinal function of node `k`
    /// (1-based). `c`/`s` hold `C_j`/`S_j` per harmonic; for the periodic
    /// family they must already be evaluated at `t - x_k`.
    fn combine(&self, k: usize, c: &[f64], s: &[f64]) -> f64 {
        let n = self.cfg.n as f64;
        let k_max = self.table.harmonic_count();
        let xk = self.grid.node_unchecked(k);
        match self.cfg.family {
            Parity::Full => {
                let mut v = self.indicator_term();
                for j in 0..k_max {
                    v += 2.0 * c[j] / self.table.h(j + 1);
                }
                v / n
            }
            Parity::Even => {
                let mut v = 0.5 * self.indicator_term();
                for j in 0..k_max {
                    let jf = (j + 1) as f64;
                    let w = if self.cfg.i2 == 0 && j + 1 == k_max {
                        0.5
                    } else {
                        1.0
                    };
                    v += w * c[j] * (jf * xk).cos() / self.table.h(j + 1);
                }
                if self.cfg.i2 == 0 {
                    // endpoint samples carry the same half weight they have
                    // in the cosine transform; without it the cardinal
                    // function of an endpoint evaluates to 2 at its own node
                    let wk = if k == 1 || k == self.cfg.n { 0.5 } else { 1.0 };
                    wk * 2.0 / (n - 1.0) * v
                } else {
                    2.0 / n * v
                }
            }
            Parity::Odd => {
                let mut v = 0.0;
                for j in 0..k_max {
                    let jf = (j + 1) as f64;
                    let w = if self.cfg.i2 == 1 && j + 1 == k_max {
                        0.5
                    } else {
                        1.0
                    };
                    v += w * s[j] * (jf * xk).sin() / self.table.h(j + 1);
                }
                if self.cfg.i2 == 0 {
                    2.0 / (n + 1.0) * v
                } else {
                    2.0 / n * v
                }
            }
        }
    }

    /// Cardinal function of node `k` (1-based) at `t`.
    pub fn eval(&self, k: usize, t: f64) -> Result<f64> {
        if k < 1 || k > self.cfg.n {
            return Err(Error::IndexOutOfRange {
                j: k,
                n: self.cfg.n,
            });
        }
        let k_max = self.table.harmonic_count();
        let mut c = vec![0.0; k_max];
        let mut s = vec![0.0; k_max];
        let arg = match self.cfg.family {
            Parity::Full => t - self.grid.node_unchecked(k),
            _ => t,
        };
        self.table.eval_cs_into(arg, &mut c, &mut s);
        Ok(self.combine(k, &c, &s))
    }

    /// All N cardinal functions at `t`.
    pub fn eval_all(&self, t: f64) -> Vec<f64> {
        let k_max = self.table.harmonic_count();
        match self.cfg.family {
            Parity::Full => {
                let ns = self.shifts.len();
                let mut c = vec![0.0; k_max * ns];
                let mut s = vec![0.0; k_max * ns];
                self.table
                    .eval_cs_shifted_into(t, &self.shifts, &mut c, &mut s);
                (0..ns)
                    .map(|si| {
                        self.combine(
                            si + 1,
                            &c[si * k_max..(si + 1) * k_max],
                            &s[si * k_max..(si + 1) * k_max],
                        )
                    })
                    .collect()
            }
            _ => {
                // kernels are shift-free; one evaluation serves every node
                let mut c = vec![0.0; k_max];
                let mut s = vec![0.0; k_max];
                self.table.eval_cs_into(t, &mut c, &mut s);
                (1..=self.cfg.n).map(|k| self.combine(k, &c, &s)).collect()
            }
        }
    }

    /// Interpolate samples as `sum_k f_k phi_k(t)`.
    pub fn eval_samples(&self, samples: &Samples, t: f64) -> Result<f64> {
        if samples.grid() != self.grid {
            return Err(Error::GridMismatch {
                expected: self.grid.family().name(),
                got: samples.grid().family().name(),
            });
        }
        Ok(self
            .eval_all(t)
            .iter()
            .zip(samples.values())
            .map(|(phi, f)| phi * f)
            .sum())
    }
}

/// Periodic cardinal function, free-standing form.
pub fn fundamental_full(cfg: &SplineConfig, k: usize, t: f64) -> Result<f64> {
    if cfg.family != Parity::Full {
        return Err(Error::ParityMismatch {
            expected: "full",
            got: cfg.family.name(),
        });
    }
    FundamentalBasis::new(*cfg)?.eval(k, t)
}

/// Even cardinal function.
pub fn fundamental_even(cfg: &SplineConfig, k: usize, t: f64) -> Result<f64> {
    if cfg.family != Parity::Even {
        return Err(Error::ParityMismatch {
            expected: "even",
            got: cfg.family.name(),
        });
    }
    FundamentalBasis::new(*cfg)?.eval(k, t)
}

/// Odd cardinal function.
pub fn fundamental_odd(cfg: &SplineConfig, k: usize, t: f64) -> Result<f64> {
    if cfg.family != Parity::Odd {
        return Err(Error::ParityMismatch {
            expected: "odd",
            got: cfg.family.name(),
        });
    }
    FundamentalBasis::new(*cfg)?.eval(k, t)
}

/// Interpolation through the cardinal representation.
pub fn eval_via_fundamentals(cfg: &SplineConfig, samples: &Samples, t: f64) -> Result<f64> {
    FundamentalBasis::new(*cfg)?.eval_samples(samples, t)
}

/// Convenience: a basis with a custom truncation policy.
pub fn basis_with_policy(
    mut cfg: SplineConfig,
    policy: TruncationPolicy,
) -> Result<FundamentalBasis> {
    cfg.truncation = policy;
    FundamentalBasis::new(cfg)
}
