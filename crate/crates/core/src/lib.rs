//! Exact computations in colored combinatorial Hopf algebras: free
//! quasi-symmetric functions, noncommutative and quasi-symmetric functions
//! of level `l`, the Mantaci–Reutenauer algebra, colored parking functions
//! and colored planar binary trees.

pub mod colorcore;
pub mod enumerate;
pub mod error;
pub mod fqsym;
pub mod linear;
pub mod pbt;
pub mod pqsym;
pub mod special;
pub mod symql;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer polynomial coefficients.
pub type ZPoly = linear::Poly<BigInt>;
/// Rational polynomial coefficients.
pub type QPoly = linear::Poly<BigRational>;
/// Elements with integer coefficients.
pub type ZElement<K> = linear::Element<K, BigInt>;
/// Elements with rational coefficients.
pub type QElement<K> = linear::Element<K, BigRational>;
/// Elements with integer polynomial coefficients.
pub type PolyElement<K> = linear::Element<K, ZPoly>;
