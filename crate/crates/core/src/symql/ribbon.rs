//! Ribbon and complete bases of level 1 noncommutative symmetric functions.

use crate::colorcore::Composition;
use crate::linear::{Coeff, Element};

use super::vector::{PartiteNumber, VectorComposition};

/// `R_I = Σ_{J ≽ I} (-1)^{ℓ(I)-ℓ(J)} S^J`.
pub fn ribbon_to_s<R: Coeff>(i: &Composition) -> Element<Composition, R> {
    Element::from_terms(i.coarsenings().into_iter().map(|j| {
        let sign = if (i.length() - j.length()) % 2 == 0 { R::one() } else { -R::one() };
        (j, sign)
    }))
}

/// `S^I = Σ_{J ≽ I} R_J`.
pub fn s_to_ribbon<R: Coeff>(i: &Composition) -> Element<Composition, R> {
    Element::sum_of(i.coarsenings())
}

/// Linear extension of [`ribbon_to_s`].
pub fn ribbon_to_s_element<R: Coeff>(x: &Element<Composition, R>) -> Element<Composition, R> {
    x.map_linear(ribbon_to_s)
}

/// Linear extension of [`s_to_ribbon`].
pub fn s_to_ribbon_element<R: Coeff>(x: &Element<Composition, R>) -> Element<Composition, R> {
    x.map_linear(s_to_ribbon)
}

/// A composition as a one-row vector composition.
pub fn composition_to_vector(i: &Composition) -> VectorComposition {
    VectorComposition::from_columns_lossy(i.parts().iter().map(|&p| PartiteNumber::new(vec![p])))
}
