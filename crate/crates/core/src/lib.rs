//! Exact Lie-theoretic invariants of complex flag manifolds and numerical
//! verification of the explicit geometric structures living on their
//! principal circle bundles: normal almost contact frames, Morimoto and
//! Tsukada Hermitian structures, Calabi-Yau-with-torsion balances,
//! Vaisman identities, and astheno-Kähler loci.
//!
//! The combinatorial layer (root systems, parabolic data, bundle lattices)
//! is exact integer/rational arithmetic. The numerical layer is generic
//! over the floating scalar through [`scalar::Scalar`]; the `f64` aliases
//! below are what the CLI and the test suites use.

pub mod bundles;
pub mod cdual;
pub mod chart;
pub mod error;
pub mod kt_cyt;
pub mod linalg;
pub mod parabolic;
pub mod poly;
pub mod product_hermitian;
pub mod report;
pub mod rootsystem;
pub mod sampling;
pub mod scalar;
pub mod typea_reps;

pub use error::{Error, Result};

/// Concrete `f64` aliases for the generic numerical types.
pub type C64 = scalar::C<f64>;
pub type Point64 = chart::PointZ<f64>;
pub type Exponents64 = chart::ExponentMap<f64>;
pub type Hermitian64 = chart::HermitianFormAtPoint<f64>;
pub type Covector64 = chart::CovectorAtPoint<f64>;
pub type Fd64 = chart::FdConfig<f64>;
pub type Frame64 = product_hermitian::ContactFrameAtPoint<f64>;
