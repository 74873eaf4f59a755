//! Shared fixtures for the benchmark suite.

use trigspline::bspline::{BSplineKind, Normalization};
use trigspline::{FactorKind, GridFamily, GridSpec, Samples};

/// A smooth multi-harmonic sample set on the periodic phase-0 grid.
pub fn sample_wave(n: usize) -> Samples {
    let grid = GridSpec::new(GridFamily::Full, 0, n).expect("valid periodic grid");
    Samples::from_fn(grid, |x| {
        x.sin() + 0.3 * (2.0 * x).cos() - 0.1 * (3.0 * x).sin()
    })
}

/// Basis kind from its conventional label.
pub fn bspline_kind(label: &str, r: u32, n: usize) -> BSplineKind {
    let (normalization, factor) = match label {
        "bc" => (Normalization::FirstKind, FactorKind::Power),
        "br" => (Normalization::FirstKind, FactorKind::Riemann),
        "bc0" => (Normalization::SecondKindSame, FactorKind::Power),
        "br0" => (Normalization::SecondKindSame, FactorKind::Riemann),
        "bc1" => (Normalization::SecondKindCross, FactorKind::Power),
        "br1" => (Normalization::SecondKindCross, FactorKind::Riemann),
        other => panic!("unknown basis kind {other:?}"),
    };
    BSplineKind::new(normalization, factor, r, 0, n).expect("valid kind")
}
