//! Convergence multipliers damping the harmonics of the kernel series.
//!
//! Two kinds are supported. The power multiplier `(1/k)^(1+r)` is
//! grid-independent. The Riemann multiplier
//! `(sin(pi k / P) / (pi k / P))^(1+r)` is tied to a modulus `P`; for the
//! periodic family `P` is the node count, for even/odd kernels it is the
//! alias period of the series, which keeps every denominator nonzero.
//!
//! Riemann values are signed: the base `sin(x)/x` may be negative and an
//! even order preserves that sign. The sign pattern is what makes the
//! periodic splines coincide with polynomial splines.

use std::f64::consts::PI;

/// Which multiplier family to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `(sin(pi k / P) / (pi k / P))^(1+r)`, signed.
    Riemann,
    /// `(1/k)^(1+r)`.
    Power,
}

impl FactorKind {
    pub fn name(self) -> &'static str {
        match self {
            FactorKind::Riemann => "riemann",
            FactorKind::Power => "power",
        }
    }
}

/// A concrete multiplier: kind plus the Riemann modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceFactor {
    kind: FactorKind,
    modulus: u64,
}

impl ConvergenceFactor {
    pub fn power() -> Self {
        ConvergenceFactor {
            kind: FactorKind::Power,
            modulus: 0,
        }
    }

    /// Riemann multiplier with modulus `p` (`sin(pi k / p)` zeros at
    /// multiples of `p`). Requires `p >= 3`.
    pub fn riemann(p: u64) -> Self {
        assert!(p >= 3, "riemann factor needs modulus >= 3");
        ConvergenceFactor {
            kind: FactorKind::Riemann,
            modulus: p,
        }
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// sigma(r, k) for order `r >= 1` and harmonic `k >= 1`.
    pub fn sigma(&self, r: u32, k: u64) -> f64 {
        debug_assert!(r >= 1 && k >= 1);
        match self.kind {
            FactorKind::Power => (k as f64).powi(-(r as i32 + 1)),
            FactorKind::Riemann => {
                let p = self.modulus;
                if k % p == 0 {
                    return 0.0;
                }
                // Reduce before sin: raw pi*k/P loses digits for large k.
                let red = (k % (2 * p)) as f64;
                let s = (PI * red / p as f64).sin();
                let x = PI * k as f64 / p as f64;
                (s / x).powi(r as i32 + 1)
            }
        }
    }

    /// |sigma(r, k)|.
    pub fn sigma_abs(&self, r: u32, k: u64) -> f64 {
        self.sigma(r, k).abs()
    }

    /// Upper bound on |sigma(r, k)| * k^(1+r), used by tail bounds.
    pub(crate) fn amplitude(&self, r: u32) -> f64 {
        match self.kind {
            FactorKind::Power => 1.0,
            FactorKind::Riemann => (self.modulus as f64 / PI).powi(r as i32 + 1),
        }
    }
}
