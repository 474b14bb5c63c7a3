use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Commutative ring scalar: enough structure for products, sums and equality.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// A field whose arithmetic is exact, so that `is_zero` is a decision and
/// not a tolerance test. Elimination routines are only offered for these.
pub trait ExactField: Scalar + Div<Output = Self> {}

impl<T> ExactField for Ratio<T> where T: Clone + Integer + Signed + Debug {}
