//! Coefficient bound for the generic polynomial and series types.

use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// An exact field scalar with by-value arithmetic.
///
/// `Zero` and `One` bring addition and multiplication; the remaining bounds
/// supply subtraction, division, and negation. Division must be exact, which
/// is what makes series inversion and affine composition safe; approximate
/// types such as `f64` technically satisfy the bounds but lose the exactness
/// guarantees the rest of the crate is built on.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> + Div<Output = T>
{
}
