//! Trigonometric B-splines on the periodic grid: translated bell functions
//! spanning the spline space, the collocation matrix built from them, its
//! determinant, and interpolation in the B-spline basis.
//!
//! A first-kind basis function is the bare numerator series
//! `(1/pi) [ I(q)/2 + sum_k C(k, q, t - x_j) ]`; second-kind functions divide
//! each harmonic by a denominator sum taken at order `r + 1` with the
//! factor's absolute values (same-grid uses the plain sum, cross-grid the
//! alternating one). With the Riemann factor the first-kind functions
//! coincide with periodized polynomial B-splines of degree `r`; the
//! verification suite pins the collocation determinants of all six kinds.

use crate::error::{Error, Result};
use crate::factor::{ConvergenceFactor, FactorKind};
use crate::fourier::Samples;
use crate::grid::{GridFamily, GridSpec};
use crate::kernel::{
    h_series, GridShift, KernelFamily, KernelTable, SeriesShape, TruncationPolicy,
};
use crate::linalg::Lu;
use std::f64::consts::PI;

/// Denominator normalization of a basis function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// No denominator.
    FirstKind,
    /// Denominator with the plain alias sum (same-named grids).
    SecondKindSame,
    /// Denominator with the alternating alias sum (differently named grids).
    SecondKindCross,
}

/// One B-spline family member: normalization, factor, order, derivative
/// order, grid size and truncation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BSplineKind {
    pub normalization: Normalization,
    pub factor: FactorKind,
    pub r: u32,
    pub q: u32,
    pub n: usize,
    pub truncation: TruncationPolicy,
}

impl BSplineKind {
    pub fn new(
        normalization: Normalization,
        factor: FactorKind,
        r: u32,
        q: u32,
        n: usize,
    ) -> Result<Self> {
        let kind = BSplineKind {
            normalization,
            factor,
            r,
            q,
            n,
            truncation: TruncationPolicy::default_for(r, q),
        };
        kind.validate()?;
        Ok(kind)
    }

    pub fn with_truncation(mut self, truncation: TruncationPolicy) -> Self {
        self.truncation = truncation;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(Error::InvalidOrder(self.r));
        }
        if self.q > self.r {
            return Err(Error::DerivativeTooHigh {
                q: self.q,
                r: self.r,
            });
        }
        GridSpec::new(GridFamily::Full, 0, self.n)?;
        self.truncation.validate()
    }

    /// Conventional short name: `bc`/`br` variants by factor and kind.
    pub fn label(&self) -> String {
        let stem = match self.factor {
            FactorKind::Power => "bc",
            FactorKind::Riemann => "br",
        };
        let suffix = match self.normalization {
            Normalization::FirstKind => "",
            Normalization::SecondKindSame => "0",
            Normalization::SecondKindCross => "1",
        };
        format!("{stem}{suffix}")
    }
}

/// Denominator sums `H(|sigma|, r+1, k)` for one second-kind family.
fn denominators(kind: &BSplineKind) -> Result<Vec<f64>> {
    let n_harm = (kind.n - 1) / 2;
    match kind.normalization {
        Normalization::FirstKind => Ok(vec![1.0; n_harm]),
        Normalization::SecondKindSame | Normalization::SecondKindCross => {
            let alt = kind.normalization == Normalization::SecondKindCross;
            let r_den = kind.r + 1;
            let factor = match kind.factor {
                FactorKind::Power => ConvergenceFactor::power(),
                FactorKind::Riemann => ConvergenceFactor::riemann(kind.n as u64),
            };
            // chi = (-1)^(1 + r_den), the same sign rule the power-factor
            // numerator follows at order r_den
            let shape = SeriesShape {
                p: kind.n as u64,
                r: r_den,
                q: 0,
                alt_h: alt,
                alt_num: false,
                chi: if r_den % 2 == 0 { -1.0 } else { 1.0 },
                factor,
                use_abs: true,
            };
            let mut h = Vec::with_capacity(n_harm);
            for k in 1..=n_harm as u64 {
                let m = shape.resolve(k, kind.truncation);
                let v = h_series(&shape, k, m);
                if v.abs() < 1e-300 {
                    return Err(Error::DegenerateKernel {
                        k: k as usize,
                        h: v,
                    });
                }
                h.push(v);
            }
            Ok(h)
        }
    }
}

/// The N translated basis functions of one kind, centered on the nodes of a
/// full grid (phase 0 by default, phase 1 behind the grid argument).
pub struct BSplineBasis {
    kind: BSplineKind,
    grid: GridSpec,
    table: KernelTable,
    h_den: Vec<f64>,
    shifts: Vec<GridShift>,
}

impl BSplineBasis {
    pub fn new(kind: BSplineKind) -> Result<Self> {
        let grid = GridSpec::new(GridFamily::Full, 0, kind.n)?;
        Self::on_grid(kind, grid)
    }

    /// Basis with centers (and collocation nodes) on the given full grid.
    pub fn on_grid(kind: BSplineKind, grid: GridSpec) -> Result<Self> {
        kind.validate()?;
        if grid.family() != GridFamily::Full || grid.len() != kind.n {
            return Err(Error::GridMismatch {
                expected: "full",
                got: grid.family().name(),
            });
        }
        let table = KernelTable::build(
            KernelFamily::Full { i1: 0, i2: 0 },
            kind.factor,
            kind.r,
            kind.q,
            kind.n,
            kind.truncation,
        )?;
        let h_den = denominators(&kind)?;
        let half = grid.indicator() == 1;
        let shifts = grid
            .nodes()
            .into_iter()
            .map(|x| GridShift {
                x,
                half_class: half,
            })
            .collect();
        Ok(BSplineBasis {
            kind,
            grid,
            table,
            h_den,
            shifts,
        })
    }

    pub fn kind(&self) -> &BSplineKind {
        &self.kind
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.kind.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn assemble(&self, c: &[f64]) -> f64 {
        let iq = if self.kind.q == 0 { 0.5 } else { 0.0 };
        let mut v = iq;
        for (ck, hk) in c.iter().zip(&self.h_den) {
            v += ck / hk;
        }
        v / PI
    }

    /// Basis function `j` (1-based) at `t`.
    pub fn eval(&self, j: usize, t: f64) -> Result<f64> {
        let x = self.grid.node(j)?;
        let nk = self.table.harmonic_count();
        let mut c = vec![0.0; nk];
        let mut s = vec![0.0; nk];
        self.table.eval_cs_into(t - x, &mut c, &mut s);
        Ok(self.assemble(&c))
    }

    /// All basis functions at `t`, sharing one pass over the series terms.
    pub fn eval_all(&self, t: f64) -> Vec<f64> {
        let nk = self.table.harmonic_count();
        let ns = self.shifts.len();
        let mut c = vec![0.0; nk * ns];
        let mut s = vec![0.0; nk * ns];
        self.table
            .eval_cs_shifted_into(t, &self.shifts, &mut c, &mut s);
        (0..ns)
            .map(|si| self.assemble(&c[si * nk..(si + 1) * nk]))
            .collect()
    }

    /// Collocation matrix `M[i][j] = B_j(x_i)` over the basis grid and its
    /// determinant. Requires `q = 0`.
    pub fn collocation_matrix(&self) -> Result<CollocationSystem<'_>> {
        if self.kind.q != 0 {
            return Err(Error::DerivativeTooHigh {
                q: self.kind.q,
                r: 0,
            });
        }
        let n = self.kind.n;
        let mut matrix = vec![0.0; n * n];
        for (i, xi) in self.grid.nodes().into_iter().enumerate() {
            let row = self.eval_all(xi);
            matrix[i * n..(i + 1) * n].copy_from_slice(&row);
        }
        let det = Lu::factor(&matrix, n).det();
        Ok(CollocationSystem {
            basis: self,
            matrix,
            det,
        })
    }
}

/// Basis values at the interpolation nodes plus the determinant certifying
/// unisolvence. The determinant is reported even when near-singular.
pub struct CollocationSystem<'a> {
    basis: &'a BSplineBasis,
    matrix: Vec<f64>,
    det: f64,
}

impl<'a> CollocationSystem<'a> {
    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn matrix(&self) -> &[f64] {
        &self.matrix
    }

    /// Scale reference for the singularity floor: product of row norms
    /// (Hadamard bound), so `|det| / scale <= 1` always.
    pub fn hadamard_scale(&self) -> f64 {
        let n = self.basis.kind.n;
        (0..n)
            .map(|i| {
                self.matrix[i * n..(i + 1) * n]
                    .iter()
                    .map(|v| v * v)
                    .sum::<f64>()
                    .sqrt()
            })
            .product()
    }

    /// Solve for the basis coefficients interpolating `samples`, rejecting
    /// systems whose determinant falls below `floor_ratio` times the
    /// Hadamard scale.
    pub fn solve_with_floor(&self, samples: &Samples, floor_ratio: f64) -> Result<Vec<f64>> {
        if samples.grid() != self.basis.grid {
            return Err(Error::GridMismatch {
                expected: "collocation grid",
                got: samples.grid().family().name(),
            });
        }
        let floor = floor_ratio * self.hadamard_scale();
        if !self.det.is_finite() || self.det.abs() <= floor {
            return Err(Error::SingularCollocation {
                det: self.det,
                floor,
            });
        }
        let n = self.basis.kind.n;
        Lu::factor(&self.matrix, n)
            .solve(samples.values())
            .ok_or(Error::SingularCollocation {
                det: self.det,
                floor,
            })
    }

    /// Solve with the default floor `1e-12 * scale`.
    pub fn solve(&self, samples: &Samples) -> Result<Vec<f64>> {
        self.solve_with_floor(samples, 1e-12)
    }
}

/// A spline expressed as `sum_j alpha_j B_j(t)`.
pub struct BSplineInterpolant {
    basis: BSplineBasis,
    alphas: Vec<f64>,
}

impl BSplineInterpolant {
    pub fn fit(kind: BSplineKind, samples: &Samples) -> Result<Self> {
        let basis = BSplineBasis::on_grid(kind, samples.grid())?;
        let alphas = basis.collocation_matrix()?.solve(samples)?;
        Ok(BSplineInterpolant { basis, alphas })
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn basis(&self) -> &BSplineBasis {
        &self.basis
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.basis
            .eval_all(t)
            .iter()
            .zip(&self.alphas)
            .map(|(b, a)| a * b)
            .sum()
    }
}
