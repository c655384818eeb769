use super::coeff::Coeff;
use super::element::{bilinear, BasisKey, Element, Tensor};

/// A graded connected bialgebra given by structure constants on a basis.
pub trait Bialgebra: Sync {
    type Key: BasisKey;

    fn product_keys<R: Coeff>(&self, a: &Self::Key, b: &Self::Key) -> Element<Self::Key, R>;

    fn coproduct_key<R: Coeff>(&self, a: &Self::Key) -> Tensor<Self::Key, R>;

    /// The basis keys of degree `n` (for finite color palettes).
    fn basis(&self, n: usize) -> Vec<Self::Key>;

    fn product<R: Coeff>(&self, x: &Element<Self::Key, R>, y: &Element<Self::Key, R>) -> Element<Self::Key, R> {
        bilinear(x, y, |a, b| self.product_keys(a, b))
    }

    fn coproduct<R: Coeff>(&self, x: &Element<Self::Key, R>) -> Tensor<Self::Key, R> {
        x.map_linear(|a| self.coproduct_key(a))
    }

    /// Product of a sequence of elements, left to right.
    fn product_all<R: Coeff>(&self, xs: &[Element<Self::Key, R>]) -> Element<Self::Key, R> {
        xs.iter().fold(Element::one(), |acc, x| self.product(&acc, x))
    }
}
