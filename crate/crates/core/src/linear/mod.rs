//! Exact sparse linear algebra: coefficients, elements over basis keys,
//! tensors, pairings and truncated power series.

pub mod algebra;
pub mod coeff;
pub mod element;
pub mod laws;
pub mod poly;
pub mod series;

pub use algebra::Bialgebra;
pub use coeff::{Coeff, Promote};
pub use element::{bilinear, pairing, regroup, swap, tensor, BasisKey, Element, Tensor};
pub use poly::{Monomial, Poly, Var};
pub use series::Series;
