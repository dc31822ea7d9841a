//! Coefficient rings for the polynomial kernel.

use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact commutative ring usable as a Laurent coefficient.
///
/// Only ring operations are needed: every division the kernel performs is by a
/// monic binomial, so no coefficient division is ever required.
pub trait Coeff:
    Clone
    + Eq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + Eq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + AddAssign
        + SubAssign
        + Send
        + Sync
        + 'static
{
}

/// Arbitrary-precision integer coefficients used by every invariant.
pub type Integer = BigInt;
/// Arbitrary-precision rational scalars of bracket forms.
pub type Rational = BigRational;
