//! Two-engine laboratory for ergodic spectral efficiency in MIMO Poisson
//! bipolar networks.
//!
//! One engine is a Monte Carlo simulator of the full physical model: Poisson
//! dipole topologies, i.i.d. Rayleigh MIMO fading, zero-forcing (ZF) and
//! ZF successive-interference-cancellation (ZF-SIC) receive filters, and
//! Shannon-rate averaging over geometry and fading. The other engine
//! evaluates the matching closed-form machinery numerically: interference
//! Laplace transforms, the exact sum-spectral-efficiency quadratures for
//! direct and local CSIR, closed-form lower/upper bounds, optimal density
//! and stream-count formulas, and asymptotic scaling-law classification.
//! Each engine exists to validate the other.
//!
//! Module map:
//!
//! * [`real`] / [`special`] / [`quad`] — scalar-generic math kernels
//!   (gamma-family functions, sine/cosine integrals, Gauss rules).
//! * [`config`] — the shared [`SystemConfig`] describing one network.
//! * [`geometry`] / [`channel`] / [`detection`] / [`montecarlo`] — the
//!   simulator lane (f64 throughout, reproducible by construction).
//! * [`analytic`] / [`scaling`] — the closed-form lane.

pub mod analytic;
pub mod channel;
pub mod config;
pub mod detection;
pub mod geometry;
pub mod montecarlo;
pub mod quad;
pub mod real;
pub mod scaling;
pub mod seeding;
pub mod special;
pub mod stats;

pub use config::{CsirMode, Detector, SystemConfig};
pub use geometry::{NetworkRealization, DEFAULT_WINDOW_RADIUS};
pub use montecarlo::SpectralEfficiencyEstimate;
pub use quad::QuadratureResult;
pub use real::Real;

/// Complex scalar used by the simulator lane.
pub type Complex64 = num_complex::Complex<f64>;
/// Column vector of [`Complex64`].
pub type CVector = nalgebra::DVector<Complex64>;
/// Dense matrix of [`Complex64`] (receive antennas x transmit antennas).
pub type CMatrix = nalgebra::DMatrix<Complex64>;
