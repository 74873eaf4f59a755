//! Trigonometric interpolation splines on uniform grids.
//!
//! A trigonometric spline is a trigonometric series whose harmonics are
//! damped by a convergence factor so that the sum has prescribed finite
//! smoothness (order `r` gives class `C^(r-1)`), while still interpolating
//! sampled data exactly at the grid nodes. This crate builds, evaluates and
//! differentiates such splines in three equivalent representations:
//!
//! 1. **coefficient form** - discrete Fourier coefficients of the data
//!    weighted by kernel ratios `C/H`, `S/H` ([`spline`]);
//! 2. **B-spline form** - a collocation expansion over translated bell
//!    functions ([`bspline`]);
//! 3. **cardinal form** - a sample-weighted sum of fundamental splines that
//!    are 1 at one node and 0 at the others ([`fundamental`]).
//!
//! Periodic data lives on the full grid on `[0, 2*pi)`; non-periodic data
//! uses cosine-only (even) or sine-only (odd) splines on `[0, pi]`. The
//! [`oracle`] module holds independent reference implementations (brute-force
//! series summation, a classical periodic cubic spline, quadrature) used by
//! the verification suite in [`check`].
//!
//! ```
//! use trigspline::{FactorKind, Interpolant, Parity, Samples, SplineConfig};
//!
//! let cfg = SplineConfig::new(Parity::Full, 0, 0, FactorKind::Riemann, 3, 0, 9).unwrap();
//! let samples = Samples::from_fn(cfg.grid().unwrap(), f64::sin);
//! let spline = Interpolant::new(cfg, &samples).unwrap();
//! assert!((spline.eval(1.0) - 1.0f64.sin()).abs() < 1e-2);
//! ```

// series kernels index several parallel arrays in hot loops, and the kernel
// operations take their full parameter lists by design
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]
#![allow(clippy::manual_is_multiple_of)]

pub mod bspline;
pub mod check;
pub mod error;
pub mod factor;
pub mod fourier;
pub mod fundamental;
pub mod grid;
pub mod kernel;
pub mod linalg;
pub mod oracle;
pub mod spline;

pub use error::{Error, Result};
pub use factor::{ConvergenceFactor, FactorKind};
pub use fourier::{Parity, Samples, TrigCoefficients};
pub use grid::{GridFamily, GridSpec};
pub use kernel::{KernelFamily, KernelTable, TruncationPolicy};
pub use spline::{Interpolant, SplineConfig, SplineEvaluator};
