//! Numerical laboratory for the Fourier decay of the measure of maximal
//! entropy of an explicit family of perturbed doubling maps.
//!
//! The family is the circle map `f_δ(x) = φ_δ(2x)` built from the tent
//! potential `Φ(x) = x - 1/4` / `3/4 - x`. The crate evaluates the map and
//! its inverse branches in closed form ([`dynamics`]), computes the Hölder
//! conjugacy with the doubling map and the self-similar measure it pushes
//! forward ([`conjugacy`]), measures the decay of the measure's Fourier
//! transform ([`fourier`]), and runs the non-concentration censuses and
//! multiplicative exponential sums that explain that decay ([`census`],
//! [`sumproduct`]). [`brownian`] provides the classical Wiener-process
//! baseline for comparison.
//!
//! Everything is deterministic: random sampling goes through a counter-based
//! generator ([`rng`]) and parallel reductions use fixed combination trees,
//! so results are independent of thread count.

pub mod brownian;
pub mod census;
pub mod conjugacy;
pub mod dynamics;
pub mod fit;
pub mod fourier;
pub mod reduce;
pub mod rng;
pub mod sumproduct;
pub mod word;

pub use dynamics::{normalizer, tent_phi, Cylinder, PerturbedMap};
pub use word::Word;

/// Upper bound (exclusive) of the admissible perturbation range.
///
/// The anti-concentration induction needs the two-level excursion bound
/// `e^{-2δ}/2 + e^{-4δ}/4 - e^{6δ}/(8(1 - e^{2δ}/2)) > 1/4`, which holds with
/// a wide margin on `[0, 1/50)`.
pub const DELTA_MAX: f64 = 1.0 / 50.0;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("delta must lie in [0, 1/50): got {0}")]
    DeltaRange(f64),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("required cylinder depth {required} exceeds the cap {cap}")]
    DepthOverflow { required: u32, cap: u32 },
    #[error("bin width {width:.3e} in the product domain is too coarse for eta = {eta:.3e} (phase aliasing)")]
    Resolution { width: f64, eta: f64 },
    #[error("insufficient usable range: {0}")]
    InsufficientRange(String),
    #[error("oscillation budget exceeded: {0}")]
    Budget(String),
    #[error("sigma {sigma:.3e} outside the admissible range [{lo:.3e}, {hi:.3e}]")]
    SigmaRange { sigma: f64, lo: f64, hi: f64 },
    #[error("fit refused: discretization error bound {bound:.3e} exceeds 10% of the envelope scale {scale:.3e}")]
    FitRefused { bound: f64, scale: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
