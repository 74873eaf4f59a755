//! Kernel series: the denominator sums `H` and the numerator series `C`, `S`
//! from which every spline value is assembled.
//!
//! Each family variant is one instance of the same series template. With an
//! alias period `P`, a convergence factor `sigma`, an order `r`, a derivative
//! order `q` and a phase `phi = q*pi/2`:
//!
//! ```text
//! H(k)      = sigma(r,k) + sum_m a_h^m [ sigma(r,mP+k) + chi * sigma(r,mP-k) ]
//! C(k,q,t)  = sigma(r,k) k^q cos(kt+phi)
//!           + sum_m a_n^m [ sigma(r,mP+k) (mP+k)^q cos((mP+k)t+phi)
//!                           + chi * sigma(r,mP-k) (mP-k)^q cos((mP-k)t+phi) ]
//! S(k,q,t)  = same with sin, and -chi on the (mP-k) branch
//! ```
//!
//! where `a_h`, `a_n` are `-1` or `+1` (the alternating variants) and `chi`
//! is `(-1)^(1+r)` for the power factor on the periodic family and `+1`
//! otherwise; the Riemann factor carries its alias signs inside `sigma`
//! itself.
//!
//! The two branches of each `m` term are always summed together before being
//! added to the accumulator, and the numerator and its `H` use the same
//! truncation count per harmonic, which makes the node-collocation identities
//! hold to rounding error at any truncation level.

use crate::error::{Error, Result};
use crate::factor::{ConvergenceFactor, FactorKind};
use std::f64::consts::PI;

const TWO_PI: f64 = 2.0 * PI;

/// How to cut the infinite `m` sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruncationPolicy {
    /// Exactly `M` tail terms (0 keeps only the leading term).
    FixedTerms(usize),
    /// Smallest `M` whose analytic tail bound is below `eps`, capped at `m_max`.
    TailTolerance { eps: f64, m_max: usize },
}

impl TruncationPolicy {
    /// Library default for a given derivative order: tail tolerance 1e-12
    /// capped at 1e5 terms while the series converges absolutely fast enough
    /// (`q < r`), a fixed 1e4-term cut for the conditionally convergent
    /// boundary case `q = r`.
    pub fn default_for(r: u32, q: u32) -> Self {
        if q < r {
            TruncationPolicy::TailTolerance {
                eps: 1e-12,
                m_max: 100_000,
            }
        } else {
            TruncationPolicy::FixedTerms(10_000)
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            TruncationPolicy::FixedTerms(_) => Ok(()),
            TruncationPolicy::TailTolerance { eps, m_max } => {
                if eps.is_nan() || eps <= 0.0 {
                    Err(Error::InvalidTruncation("tail tolerance must be positive"))
                } else if m_max == 0 {
                    Err(Error::InvalidTruncation("m_max must be at least 1"))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// One fully parameterised series instance.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesShape {
    pub p: u64,
    pub r: u32,
    pub q: u32,
    pub alt_h: bool,
    pub alt_num: bool,
    pub chi: f64,
    pub factor: ConvergenceFactor,
    pub use_abs: bool,
}

impl SeriesShape {
    fn sig(&self, w: u64) -> f64 {
        if self.use_abs {
            self.factor.sigma_abs(self.r, w)
        } else {
            self.factor.sigma(self.r, w)
        }
    }

    /// Upper bound on the absolute tail beyond `m` terms (both branches).
    /// Infinite when `q >= r` (conditionally convergent regime).
    pub fn tail_bound(&self, k: u64, m: usize) -> f64 {
        if self.q >= self.r || (m as u64) * self.p <= k {
            return f64::INFINITY;
        }
        let s = (self.r - self.q) as i32;
        let amp = self.factor.amplitude(self.r);
        let edge = (m as f64) * self.p as f64 - k as f64;
        2.0 * amp * edge.powi(-s) / (self.p as f64 * s as f64)
    }

    /// Truncation count for harmonic `k` under `policy`.
    pub fn resolve(&self, k: u64, policy: TruncationPolicy) -> usize {
        match policy {
            TruncationPolicy::FixedTerms(m) => m,
            TruncationPolicy::TailTolerance { eps, m_max } => {
                if self.q >= self.r {
                    return m_max;
                }
                let s = (self.r - self.q) as f64;
                let amp = self.factor.amplitude(self.r);
                let x = (eps * self.p as f64 * s / (2.0 * amp)).powf(-1.0 / s);
                let m = ((x + k as f64) / self.p as f64).ceil();
                (m.max(1.0) as usize).min(m_max)
            }
        }
    }
}

/// Which kernel variant: the periodic family keyed by the two indicators,
/// or the half-range families keyed by their grid phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFamily {
    Full { i1: u8, i2: u8 },
    Even { indicator: u8 },
    Odd { indicator: u8 },
}

impl KernelFamily {
    /// Alias period of the series for a grid with `n` nodes.
    pub fn period(&self, n: usize) -> u64 {
        match *self {
            KernelFamily::Full { .. } => n as u64,
            KernelFamily::Even { indicator: 0 } => 2 * (n as u64 - 1),
            KernelFamily::Even { .. } => 2 * n as u64,
            KernelFamily::Odd { indicator: 0 } => 2 * (n as u64 + 1),
            KernelFamily::Odd { .. } => 2 * n as u64,
        }
    }

    /// Number of harmonics the matching spline sum runs over.
    pub fn harmonic_count(&self, n: usize) -> usize {
        match *self {
            KernelFamily::Full { .. } => (n - 1) / 2,
            KernelFamily::Even { .. } => n - 1,
            KernelFamily::Odd { .. } => n,
        }
    }

    pub(crate) fn shape(&self, factor: FactorKind, r: u32, q: u32, n: usize) -> SeriesShape {
        let p = self.period(n);
        let conv = match factor {
            FactorKind::Power => ConvergenceFactor::power(),
            FactorKind::Riemann => ConvergenceFactor::riemann(p),
        };
        let (alt_h, alt_num, chi) = match *self {
            KernelFamily::Full { i1, i2 } => {
                let chi = match factor {
                    // The explicit sign mimics the alias signs the Riemann
                    // factor carries on its own.
                    FactorKind::Power => {
                        if r % 2 == 0 {
                            -1.0
                        } else {
                            1.0
                        }
                    }
                    FactorKind::Riemann => 1.0,
                };
                ((i1 + i2) % 2 == 1, i1 % 2 == 1, chi)
            }
            KernelFamily::Even { indicator } => (indicator == 1, false, 1.0),
            KernelFamily::Odd { indicator } => (false, indicator == 1, 1.0),
        };
        SeriesShape {
            p,
            r,
            q,
            alt_h,
            alt_num,
            chi,
            factor: conv,
            use_abs: false,
        }
    }
}

/// One-shot denominator sum for shape and harmonic `k` with `m` tail terms.
pub(crate) fn h_series(shape: &SeriesShape, k: u64, m: usize) -> f64 {
    let mut h = shape.sig(k);
    for i in 1..=m as u64 {
        let sign = if shape.alt_h && i % 2 == 1 { -1.0 } else { 1.0 };
        h += sign * (shape.sig(i * shape.p + k) + shape.chi * shape.sig(i * shape.p - k));
    }
    h
}

/// One-shot numerator pair `(C, S)` at argument `t`.
pub(crate) fn cs_series(shape: &SeriesShape, k: u64, t: f64, m: usize) -> (f64, f64) {
    let q = shape.q;
    let kf = k as f64;
    let (sk, ck) = (kf * t).sin_cos();
    let (cp, sp) = quarter_turn(ck, sk, q);
    let (cm, sm) = quarter_turn(ck, -sk, q);
    let lead = shape.sig(k) * kf.powi(q as i32);
    let mut c = lead * cp;
    let mut s = lead * sp;
    let rho = (shape.p as f64 * t).rem_euclid(TWO_PI);
    let mut beta = 0.0;
    for i in 1..=m as u64 {
        beta += rho;
        if beta >= TWO_PI {
            beta -= TWO_PI;
        }
        let (sb, cb) = beta.sin_cos();
        let sign = if shape.alt_num && i % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        let base = i * shape.p;
        let wp = base + k;
        let wm = base - k;
        let ap = sign * shape.sig(wp) * (wp as f64).powi(q as i32);
        let am = sign * shape.chi * shape.sig(wm) * (wm as f64).powi(q as i32);
        c += ap * (cb * cp - sb * sp) + am * (cb * cm - sb * sm);
        s += ap * (sb * cp + cb * sp) - am * (sb * cm + cb * sm);
    }
    (c, s)
}

/// `(cos(x + q*pi/2), sin(x + q*pi/2))` from `(cos x, sin x)`; the quarter
/// turns are applied exactly instead of perturbing the angle.
#[inline]
pub(crate) fn quarter_turn(c: f64, s: f64, q: u32) -> (f64, f64) {
    match q % 4 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

struct Harmonic {
    h: f64,
    lead: f64,
    /// `a_n^m sigma(r, mP+k) (mP+k)^q`
    wp: Vec<f64>,
    /// `a_n^m chi sigma(r, mP-k) (mP-k)^q`
    wm: Vec<f64>,
}

/// Node shift for batched evaluation. Grid nodes satisfy `P*x = 0 mod 2pi`
/// (`half_class = false`) or `P*x = pi mod 2pi` (`half_class = true`);
/// phase-1 grids are always the latter.
#[derive(Debug, Clone, Copy)]
pub struct GridShift {
    pub x: f64,
    pub half_class: bool,
}

/// Precomputed kernel data for one `(family, factor, r, q, N, truncation)`
/// configuration: denominators `H(k)` and the numerator term weights for all
/// harmonics, immutable after construction.
pub struct KernelTable {
    shape: SeriesShape,
    harmonics: Vec<Harmonic>,
}

impl KernelTable {
    pub fn build(
        family: KernelFamily,
        factor: FactorKind,
        r: u32,
        q: u32,
        n: usize,
        policy: TruncationPolicy,
    ) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidOrder(r));
        }
        if q > r {
            return Err(Error::DerivativeTooHigh { q, r });
        }
        policy.validate()?;
        let shape = family.shape(factor, r, q, n);
        Self::build_from_shape(shape, family.harmonic_count(n), policy)
    }

    pub(crate) fn build_from_shape(
        shape: SeriesShape,
        k_max: usize,
        policy: TruncationPolicy,
    ) -> Result<Self> {
        let mut harmonics = Vec::with_capacity(k_max);
        for k in 1..=k_max as u64 {
            let m_count = shape.resolve(k, policy);
            let mut h = shape.sig(k);
            let mut wp = Vec::with_capacity(m_count);
            let mut wm = Vec::with_capacity(m_count);
            let qi = shape.q as i32;
            for i in 1..=m_count as u64 {
                let odd = i % 2 == 1;
                let hsign = if shape.alt_h && odd { -1.0 } else { 1.0 };
                let nsign = if shape.alt_num && odd { -1.0 } else { 1.0 };
                let freq_p = i * shape.p + k;
                let freq_m = i * shape.p - k;
                let sp = shape.sig(freq_p);
                let sm = shape.sig(freq_m);
                h += hsign * (sp + shape.chi * sm);
                wp.push(nsign * sp * (freq_p as f64).powi(qi));
                wm.push(nsign * shape.chi * sm * (freq_m as f64).powi(qi));
            }
            if h.abs() < 1e-300 {
                return Err(Error::DegenerateKernel { k: k as usize, h });
            }
            let lead = shape.sig(k) * (k as f64).powi(qi);
            harmonics.push(Harmonic { h, lead, wp, wm });
        }
        Ok(KernelTable { shape, harmonics })
    }

    pub fn harmonic_count(&self) -> usize {
        self.harmonics.len()
    }

    pub fn derivative_order(&self) -> u32 {
        self.shape.q
    }

    /// Denominator `H(k)`, 1-based harmonic index.
    pub fn h(&self, k: usize) -> f64 {
        self.harmonics[k - 1].h
    }

    /// Truncation count used for harmonic `k`.
    pub fn terms(&self, k: usize) -> usize {
        self.harmonics[k - 1].wp.len()
    }

    /// Evaluate `C(k, q, tau)` and `S(k, q, tau)` for every harmonic at a
    /// single argument.
    pub fn eval_cs_into(&self, tau: f64, c: &mut [f64], s: &mut [f64]) {
        assert_eq!(c.len(), self.harmonics.len());
        assert_eq!(s.len(), self.harmonics.len());
        let q = self.shape.q;
        let nk = self.harmonics.len();
        // gamma constants: cos/sin of (+k*tau + phi) and (-k*tau + phi)
        let mut gam = Vec::with_capacity(nk);
        for (idx, harm) in self.harmonics.iter().enumerate() {
            let kf = (idx + 1) as f64;
            let (sk, ck) = (kf * tau).sin_cos();
            let (cp, sp) = quarter_turn(ck, sk, q);
            let (cm, sm) = quarter_turn(ck, -sk, q);
            c[idx] = harm.lead * cp;
            s[idx] = harm.lead * sp;
            gam.push([cp, sp, cm, sm]);
        }
        let rho = (self.shape.p as f64 * tau).rem_euclid(TWO_PI);
        let m_max = self.harmonics.iter().map(|h| h.wp.len()).max().unwrap_or(0);
        let mut beta = 0.0;
        for m in 0..m_max {
            beta += rho;
            if beta >= TWO_PI {
                beta -= TWO_PI;
            }
            let (sb, cb) = beta.sin_cos();
            for idx in 0..nk {
                let harm = &self.harmonics[idx];
                if m < harm.wp.len() {
                    let [cp, sp, cm, sm] = gam[idx];
                    let ap = harm.wp[m];
                    let am = harm.wm[m];
                    c[idx] += ap * (cb * cp - sb * sp) + am * (cb * cm - sb * sm);
                    s[idx] += ap * (sb * cp + cb * sp) - am * (sb * cm + cb * sm);
                }
            }
        }
    }

    /// Batched evaluation of `C`/`S` at `t - shift.x` for every shift and
    /// every harmonic, sharing one pass over the `m` terms. Output layout is
    /// `[shift][harmonic]` flattened. Shifts must be grid nodes (see
    /// [`GridShift`]); anything else makes the shared-angle reduction wrong.
    pub fn eval_cs_shifted_into(&self, t: f64, shifts: &[GridShift], c: &mut [f64], s: &mut [f64]) {
        let nk = self.harmonics.len();
        let ns = shifts.len();
        assert_eq!(c.len(), nk * ns);
        assert_eq!(s.len(), nk * ns);
        let q = self.shape.q;
        let mut gam = vec![[0.0f64; 4]; nk * ns];
        for (si, shift) in shifts.iter().enumerate() {
            let tau = t - shift.x;
            for (idx, harm) in self.harmonics.iter().enumerate() {
                let kf = (idx + 1) as f64;
                let (sk, ck) = (kf * tau).sin_cos();
                let (cp, sp) = quarter_turn(ck, sk, q);
                let (cm, sm) = quarter_turn(ck, -sk, q);
                let at = si * nk + idx;
                c[at] = harm.lead * cp;
                s[at] = harm.lead * sp;
                gam[at] = [cp, sp, cm, sm];
            }
        }
        let rho = (self.shape.p as f64 * t).rem_euclid(TWO_PI);
        let m_max = self.harmonics.iter().map(|h| h.wp.len()).max().unwrap_or(0);
        let mut beta = 0.0;
        for m in 0..m_max {
            beta += rho;
            if beta >= TWO_PI {
                beta -= TWO_PI;
            }
            let (sb, cb) = beta.sin_cos();
            let odd = m % 2 == 0; // m terms are 1-based: index 0 is m = 1
            for (si, shift) in shifts.iter().enumerate() {
                let flip = if shift.half_class && odd { -1.0 } else { 1.0 };
                for idx in 0..nk {
                    let harm = &self.harmonics[idx];
                    if m < harm.wp.len() {
                        let [cp, sp, cm, sm] = gam[si * nk + idx];
                        let ap = flip * harm.wp[m];
                        let am = flip * harm.wm[m];
                        let at = si * nk + idx;
                        c[at] += ap * (cb * cp - sb * sp) + am * (cb * cm - sb * sm);
                        s[at] += ap * (sb * cp + cb * sp) - am * (sb * cm + cb * sm);
                    }
                }
            }
        }
    }
}

/// Analytic bound on the absolute series tail beyond `m` terms for the given
/// family variant; infinite in the conditionally convergent regime `q >= r`.
pub fn tail_bound(
    family: KernelFamily,
    factor: FactorKind,
    r: u32,
    q: u32,
    n: usize,
    k: usize,
    m: usize,
) -> f64 {
    family.shape(factor, r, q, n).tail_bound(k as u64, m)
}

/// Term count a truncation policy resolves to for harmonic `k`.
pub fn resolved_terms(
    family: KernelFamily,
    factor: FactorKind,
    r: u32,
    q: u32,
    n: usize,
    k: usize,
    policy: TruncationPolicy,
) -> usize {
    family.shape(factor, r, q, n).resolve(k as u64, policy)
}

fn check_full_harmonic(k: usize, n: usize) -> Result<()> {
    let k_max = (n - 1) / 2;
    if k < 1 || k > k_max {
        return Err(Error::HarmonicOutOfRange { k, k_max });
    }
    Ok(())
}

fn check_half_harmonic(k: usize, k_max: usize) -> Result<()> {
    if k < 1 || k > k_max {
        return Err(Error::HarmonicOutOfRange { k, k_max });
    }
    Ok(())
}

fn degenerate_checked(k: usize, h: f64) -> Result<f64> {
    if h.abs() < 1e-300 {
        Err(Error::DegenerateKernel { k, h })
    } else {
        Ok(h)
    }
}

/// Denominator sum for the periodic family.
pub fn h_full(
    i1: u8,
    i2: u8,
    factor: FactorKind,
    r: u32,
    k: usize,
    n: usize,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_full_harmonic(k, n)?;
    let shape = KernelFamily::Full { i1, i2 }.shape(factor, r, 0, n);
    let m = shape.resolve(k as u64, trunc);
    degenerate_checked(k, h_series(&shape, k as u64, m))
}

/// Cosine numerator series for the periodic family.
pub fn c_full(
    i1: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    k: usize,
    n: usize,
    t: f64,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_full_harmonic(k, n)?;
    if q > r {
        return Err(Error::DerivativeTooHigh { q, r });
    }
    let shape = KernelFamily::Full { i1, i2: 0 }.shape(factor, r, q, n);
    let m = shape.resolve(k as u64, trunc);
    Ok(cs_series(&shape, k as u64, t, m).0)
}

/// Sine numerator series for the periodic family.
pub fn s_full(
    i1: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    k: usize,
    n: usize,
    t: f64,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_full_harmonic(k, n)?;
    if q > r {
        return Err(Error::DerivativeTooHigh { q, r });
    }
    let shape = KernelFamily::Full { i1, i2: 0 }.shape(factor, r, q, n);
    let m = shape.resolve(k as u64, trunc);
    Ok(cs_series(&shape, k as u64, t, m).1)
}

pub fn h_even(
    indicator: u8,
    factor: FactorKind,
    r: u32,
    k: usize,
    n: usize,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_half_harmonic(k, n - 1)?;
    let shape = KernelFamily::Even { indicator }.shape(factor, r, 0, n);
    let m = shape.resolve(k as u64, trunc);
    degenerate_checked(k, h_series(&shape, k as u64, m))
}

pub fn c_even(
    indicator: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    k: usize,
    n: usize,
    t: f64,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_half_harmonic(k, n - 1)?;
    if q > r {
        return Err(Error::DerivativeTooHigh { q, r });
    }
    let shape = KernelFamily::Even { indicator }.shape(factor, r, q, n);
    let m = shape.resolve(k as u64, trunc);
    Ok(cs_series(&shape, k as u64, t, m).0)
}

pub fn h_odd(
    indicator: u8,
    factor: FactorKind,
    r: u32,
    k: usize,
    n: usize,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_half_harmonic(k, n)?;
    let shape = KernelFamily::Odd { indicator }.shape(factor, r, 0, n);
    let m = shape.resolve(k as u64, trunc);
    degenerate_checked(k, h_series(&shape, k as u64, m))
}

pub fn s_odd(
    indicator: u8,
    factor: FactorKind,
    r: u32,
    q: u32,
    k: usize,
    n: usize,
    t: f64,
    trunc: TruncationPolicy,
) -> Result<f64> {
    check_half_harmonic(k, n)?;
    if q > r {
        return Err(Error::DerivativeTooHigh { q, r });
    }
    let shape = KernelFamily::Odd { indicator }.shape(factor, r, q, n);
    let m = shape.resolve(k as u64, trunc);
    Ok(cs_series(&shape, k as u64, t, m).1)
}
