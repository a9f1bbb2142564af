//! Exact arithmetic substrate: rationals, the field Q(ω) with ω a primitive cube
//! root of unity, dense exact matrices, and a float eigen solver whose output is
//! residual-checked.

mod cyclo3;
mod eigen;
mod error;
mod field;
mod matrix;
pub mod rational;

pub use cyclo3::Cyclo3;
pub use eigen::{float_eigen, EigenCluster, DEFAULT_EIGEN_TOL};
pub use error::MathError;
pub use field::Field;
pub use matrix::{ExactMatrix, Matrix, RationalMatrix, Solution};
pub use num_bigint::BigInt;
pub use rational::{rat, Rational};
