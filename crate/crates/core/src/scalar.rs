//! Scalar traits the generic code is written against.
//!
//! Everything that does linear algebra or slope arithmetic is generic over
//! [`Scalar`] (a field) or [`ExactInteger`] (a Euclidean ring). The crate root
//! fixes the concrete exact choices (`BigRational`, `BigInt`, `Rational64`).
//! Kernel and rank computations compare against zero exactly, so they are
//! only meaningful for exact types.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// A field element usable by the generic kernels.
pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

/// An exact integer type (Euclidean ring) for lattice computations.
pub trait ExactInteger: Clone + Debug + Display + Integer + Signed + FromPrimitive {}

impl<T> ExactInteger for T where T: Clone + Debug + Display + Integer + Signed + FromPrimitive {}

pub(crate) fn from_i64<S: Scalar>(v: i64) -> S {
    S::from_i64(v).expect("scalar type cannot represent a small integer")
}

/// Serialize any displayable scalar as its string form, e.g. `"13/2"`.
pub(crate) fn serialize_display<S: Display, Ser: serde::Serializer>(v: &S, ser: Ser) -> Result<Ser::Ok, Ser::Error> {
    ser.collect_str(v)
}

pub(crate) fn serialize_display_vec<S: Display, Ser: serde::Serializer>(
    v: &[S],
    ser: Ser,
) -> Result<Ser::Ok, Ser::Error> {
    ser.collect_seq(v.iter().map(|x| x.to_string()))
}
