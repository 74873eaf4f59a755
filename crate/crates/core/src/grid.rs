//! Uniform grids on `[0, 2*pi)` (periodic) and `[0, pi]` (even/odd data).
//!
//! Three families are supported, each in two phases selected by an indicator
//! `I` in `{0, 1}`:
//!
//! * `Full`       - N nodes on `[0, 2*pi)`, N odd;
//! * `EvenClosed` - N nodes on `[0, pi]`, phase 0 includes both endpoints;
//! * `OddOpen`    - N nodes on `(0, pi)` for phase 0, excluding the endpoints.
//!
//! Nodes are always computed from the closed formula, never accumulated, so
//! node positions are exact to within one rounding of the formula itself.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Grid family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridFamily {
    /// Periodic grid on `[0, 2*pi)`; node count must be odd.
    Full,
    /// Grid on `[0, pi]`; phase 0 contains both 0 and pi.
    EvenClosed,
    /// Grid on `[0, pi]`; phase 0 contains neither 0 nor pi.
    OddOpen,
}

impl GridFamily {
    pub fn name(self) -> &'static str {
        match self {
            GridFamily::Full => "full",
            GridFamily::EvenClosed => "even",
            GridFamily::OddOpen => "odd",
        }
    }
}

/// A validated uniform grid: family, phase indicator and node count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    family: GridFamily,
    indicator: u8,
    n: usize,
}

impl GridSpec {
    pub fn new(family: GridFamily, indicator: u8, n: usize) -> Result<Self> {
        if indicator > 1 {
            return Err(Error::InvalidIndicator(indicator));
        }
        match family {
            GridFamily::Full => {
                if n < 3 || n % 2 == 0 {
                    return Err(Error::InvalidGrid {
                        family: family.name(),
                        n,
                        reason: "full grids need an odd node count N = 2n+1 >= 3",
                    });
                }
            }
            GridFamily::EvenClosed => {
                if n < 2 {
                    return Err(Error::InvalidGrid {
                        family: family.name(),
                        n,
                        reason: "even grids need N >= 2",
                    });
                }
            }
            GridFamily::OddOpen => {
                if n < 1 {
                    return Err(Error::InvalidGrid {
                        family: family.name(),
                        n,
                        reason: "odd grids need N >= 1",
                    });
                }
            }
        }
        Ok(GridSpec {
            family,
            indicator,
            n,
        })
    }

    pub fn family(&self) -> GridFamily {
        self.family
    }

    pub fn indicator(&self) -> u8 {
        self.indicator
    }

    /// Node count N.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node coordinate for the 1-based index `j`.
    pub fn node(&self, j: usize) -> Result<f64> {
        if j < 1 || j > self.n {
            return Err(Error::IndexOutOfRange { j, n: self.n });
        }
        Ok(self.node_unchecked(j))
    }

    pub(crate) fn node_unchecked(&self, j: usize) -> f64 {
        let n = self.n as f64;
        let j = j as f64;
        match (self.family, self.indicator) {
            (GridFamily::Full, 0) => 2.0 * PI * (j - 1.0) / n,
            (GridFamily::Full, _) => PI * (2.0 * j - 1.0) / n,
            (GridFamily::EvenClosed, 0) => PI * (j - 1.0) / (n - 1.0),
            (GridFamily::EvenClosed, _) => PI * (2.0 * j - 1.0) / (2.0 * n),
            (GridFamily::OddOpen, 0) => PI * j / (n + 1.0),
            (GridFamily::OddOpen, _) => PI * (2.0 * j - 1.0) / (2.0 * n),
        }
    }

    /// All node coordinates in index order.
    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.n).map(|j| self.node_unchecked(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_formula_values() {
        let g = GridSpec::new(GridFamily::Full, 0, 9).unwrap();
        assert_eq!(g.node(1).unwrap(), 0.0);
        let g = GridSpec::new(GridFamily::Full, 1, 3).unwrap();
        assert!((g.node(2).unwrap() - PI).abs() < 1e-15);
        let g = GridSpec::new(GridFamily::EvenClosed, 0, 5).unwrap();
        assert!((g.node(5).unwrap() - PI).abs() < 1e-15);
        let g = GridSpec::new(GridFamily::OddOpen, 0, 3).unwrap();
        assert!((g.node(2).unwrap() - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(GridSpec::new(GridFamily::Full, 0, 8).is_err());
        assert!(GridSpec::new(GridFamily::Full, 0, 1).is_err());
        assert!(GridSpec::new(GridFamily::EvenClosed, 0, 1).is_err());
        assert!(GridSpec::new(GridFamily::OddOpen, 0, 0).is_err());
        assert!(GridSpec::new(GridFamily::Full, 2, 9).is_err());
        let g = GridSpec::new(GridFamily::Full, 0, 9).unwrap();
        assert!(g.node(0).is_err());
        assert!(g.node(10).is_err());
    }

    #[test]
    fn spacing_is_constant() {
        for family in [
            GridFamily::Full,
            GridFamily::EvenClosed,
            GridFamily::OddOpen,
        ] {
            for indicator in [0, 1] {
                let n = if family == GridFamily::Full { 9 } else { 8 };
                let g = GridSpec::new(family, indicator, n).unwrap();
                let x = g.nodes();
                let h = x[1] - x[0];
                for w in x.windows(2) {
                    // ulp-scale: nodes reach 2*pi, so allow a few ulps there
                    let tol = 1e-15 * w[1].abs().max(1.0);
                    assert!(
                        (w[1] - w[0] - h).abs() <= tol,
                        "{family:?} I={indicator} spacing drift"
                    );
                }
            }
        }
    }

    #[test]
    fn endpoint_membership() {
        let g = GridSpec::new(GridFamily::OddOpen, 0, 7).unwrap();
        let x = g.nodes();
        assert!(x[0] > 0.0 && x[6] < PI);

        let g = GridSpec::new(GridFamily::EvenClosed, 0, 7).unwrap();
        let x = g.nodes();
        assert_eq!(x[0], 0.0);
        assert!((x[6] - PI).abs() < 1e-15);

        let g = GridSpec::new(GridFamily::Full, 0, 9).unwrap();
        let x = g.nodes();
        assert_eq!(x[0], 0.0);
        assert!(x[8] < 2.0 * PI);
    }

    #[test]
    fn even_and_odd_phase_one_coincide() {
        let ge = GridSpec::new(GridFamily::EvenClosed, 1, 8).unwrap();
        let go = GridSpec::new(GridFamily::OddOpen, 1, 8).unwrap();
        for (a, b) in ge.nodes().iter().zip(go.nodes()) {
            assert_eq!(*a, b);
        }
    }
}
