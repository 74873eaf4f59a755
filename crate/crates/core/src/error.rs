use thiserror::Error;

/// Errors produced by grid construction, configuration validation and the
/// numerical paths that can legitimately fail (degenerate kernels, singular
/// collocation systems).
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid node count {n} for grid family {family}: {reason}")]
    InvalidGrid {
        family: &'static str,
        n: usize,
        reason: &'static str,
    },

    #[error("node index {j} out of range 1..={n}")]
    IndexOutOfRange { j: usize, n: usize },

    #[error("indicator must be 0 or 1, got {0}")]
    InvalidIndicator(u8),

    #[error("spline order r must be >= 1, got {0}")]
    InvalidOrder(u32),

    #[error("derivative order q = {q} exceeds spline order r = {r}")]
    DerivativeTooHigh { q: u32, r: u32 },

    #[error("harmonic index k = {k} out of range 1..={k_max}")]
    HarmonicOutOfRange { k: usize, k_max: usize },

    #[error("(I1, I2) = ({i1}, {i2}) is not a supported pair for the {family} family")]
    UnsupportedIndicatorPair {
        family: &'static str,
        i1: u8,
        i2: u8,
    },

    #[error("sample length {got} does not match grid node count {expected}")]
    SampleLength { expected: usize, got: usize },

    #[error("samples live on grid family {got}, expected {expected}")]
    GridMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("coefficient parity {got} does not match spline family {expected}")]
    ParityMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("degenerate kernel: H = {h:e} for harmonic k = {k} (factor/order/grid combination is invalid)")]
    DegenerateKernel { k: usize, h: f64 },

    #[error("collocation system is numerically singular: |det| = {det:e} below floor {floor:e}")]
    SingularCollocation { det: f64, floor: f64 },

    #[error("invalid truncation policy: {0}")]
    InvalidTruncation(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
