//! Weight combinatorics for GSp(2g) and its dual GSpin(2g+1).
//!
//! The crate covers the based root datum and its dual, the Weyl group with
//! its Kostant coset representatives, the BGG/Hodge bookkeeping built on the
//! dot action, exact tensor-power constructions of Weyl modules, and the
//! valuation arithmetic of unramified parameters.
//!
//! Linear algebra and slope arithmetic are generic over [`scalar::Scalar`];
//! the aliases below fix the exact types used by the rest of the crate and
//! by the command line tool.

pub mod bgg_hodge;
pub mod cli;
pub mod error;
pub mod hecke_params;
pub mod linalg;
pub mod root_datum;
pub mod scalar;
pub mod verify;
pub mod weyl;
pub mod weyl_modules;

pub use error::{Error, Result};
pub use root_datum::{HalfWeight, Root, RootDatum, Weight};
pub use weyl::{CosetTable, Parabolic, WeylElement};

/// Arbitrary-precision rational, the default field everywhere.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer for lattice computations.
pub type Integer = num_bigint::BigInt;
/// Dense matrix over [`Rational`].
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Dense matrix over [`Integer`].
pub type IntegerMatrix = linalg::Matrix<Integer>;
/// Slope system over [`Rational`].
pub type SlopeSystem = hecke_params::SlopeSystem<Rational>;
/// Unramified parameter over [`Rational`].
pub type UnramifiedParameter = hecke_params::UnramifiedParameter<Rational>;
