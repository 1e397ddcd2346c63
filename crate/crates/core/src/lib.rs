//! Numerical toolkit for the geodesic dynamics of nonpositively curved
//! harmonic-type manifold models.
//!
//! Everything operates along a single geodesic in a parallel orthonormal
//! frame: a model reduces to the Jacobi operator field `t -> R(t)` (see
//! [`model`]), the engine in [`jacobi`] integrates the tensor equation
//! `Y'' + R(t) Y = 0` with renormalization, and the diagnostic layers in
//! [`rank`], [`flow`] and [`hyperbolicity`] compute volume density, rank,
//! Anosov certificates and Gromov-hyperbolicity estimates from it.
//!
//! Core numerics are generic over the scalar type; concrete `f64` aliases
//! are exported at the crate root.

pub mod config;
pub mod error;
pub mod flow;
pub mod hyperbolicity;
pub mod jacobi;
pub mod linalg;
pub mod model;
pub mod rank;
pub mod summary;

pub use error::{Error, Result};

/// Scalar type the toolkit is generic over: `f32` or `f64`.
///
/// Bundles the linear-algebra field operations with the num-traits
/// conversions used to move literals and RNG output (always drawn in
/// `f64`) into the working precision.
pub trait Real:
    nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
    /// Converts a finite `f64` literal into the working scalar.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }

    /// Widens the scalar back to `f64` (for reporting and serialization).
    fn as_f64(self) -> f64 {
        self.to_f64().expect("real scalar representable as f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Dynamically sized matrix over the working scalar.
pub type Mat<T> = nalgebra::DMatrix<T>;
/// Dynamically sized column vector over the working scalar.
pub type Col<T> = nalgebra::DVector<T>;

pub type Mat64 = Mat<f64>;
pub type Col64 = Col<f64>;
pub type Model64 = model::Model<f64>;
pub type CurvatureField64 = model::CurvatureField<f64>;
pub type TensorTrajectory64 = jacobi::TensorTrajectory<f64>;
pub type DensityProfile64 = rank::DensityProfile<f64>;
