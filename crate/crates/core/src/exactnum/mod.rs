//! Exact scalars and dense square matrices.

mod gaussian;
mod matrix;
mod surd;

pub use gaussian::{scalar_arith, GaussianRational, ScalarOp};
pub use matrix::{mat_compare, ExactMatrix, Matrix, MatrixRelation, UnaryOp};
pub use surd::Surd;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Default ceiling on matrix dimension.
pub const DEFAULT_DIM_CAP: usize = 256;

/// Ring operations shared by every matrix entry type.
pub trait Scalar: Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Complex conjugate.
    fn conj(&self) -> Self;
    fn from_gaussian(g: GaussianRational) -> Self;
}
