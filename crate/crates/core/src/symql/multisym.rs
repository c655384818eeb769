//! Commutative multisymmetric functions `h^{n_1} h^{n_2} ...`, the image of
//! `Sym^(ℓ)` when the letters commute.

use std::fmt;

use crate::colorcore::ColorMonoid;
use crate::error::Result;
use crate::linear::{BasisKey, Coeff, Element};

use super::sym::s_internal;
use super::vector::{PartiteNumber, VectorComposition};

/// A multiset of nonzero columns, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColumnMultiset(Vec<PartiteNumber>);

impl ColumnMultiset {
    pub fn new(mut cols: Vec<PartiteNumber>) -> Self {
        cols.retain(|c| !c.is_zero());
        cols.sort();
        ColumnMultiset(cols)
    }

    pub fn columns(&self) -> &[PartiteNumber] {
        &self.0
    }

    /// One noncommutative lift.
    pub fn lift(&self) -> VectorComposition {
        VectorComposition::from_columns_lossy(self.0.iter().cloned())
    }
}

impl BasisKey for ColumnMultiset {
    fn degree(&self) -> usize {
        self.0.iter().map(PartiteNumber::weight).sum()
    }

    fn unit() -> Self {
        ColumnMultiset::default()
    }
}

impl fmt::Display for ColumnMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

pub fn commutative_image<R: Coeff>(x: &Element<VectorComposition, R>) -> Element<ColumnMultiset, R> {
    x.map_keys(|k| ColumnMultiset::new(k.columns().to_vec()))
}

/// Internal product of multisymmetric functions: lift, multiply in
/// `Sym^(ℓ)`, project.
pub fn multisym_internal<R: Coeff>(
    x: &Element<ColumnMultiset, R>,
    y: &Element<ColumnMultiset, R>,
    monoid: ColorMonoid,
) -> Result<Element<ColumnMultiset, R>> {
    let lift = |x: &Element<ColumnMultiset, R>| x.map_keys(ColumnMultiset::lift);
    Ok(commutative_image(&s_internal(&lift(x), &lift(y), monoid)?))
}
