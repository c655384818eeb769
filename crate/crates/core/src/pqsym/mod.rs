//! Colored parking quasi-symmetric functions `PQSym^(ℓ)` in the `G` basis
//! (convolution product, value-splitting coproduct) and the dual `F` basis
//! (shifted shuffle, deconcatenation with parkization).

pub mod typeb;

use crate::colorcore::parking::{colored_parkize, is_parking, pf_convolution};
use crate::colorcore::perm::is_connected;
use crate::colorcore::word::{shifted_shuffle, ColoredWord};
use crate::colorcore::{Color, ColorMonoid, ColoredPf};
use crate::fqsym::value_splits;
use crate::linear::{Bialgebra, Coeff, Element, Tensor};

#[derive(Clone, Debug)]
pub struct PGBasis {
    pub palette: Vec<Color>,
}

#[derive(Clone, Debug)]
pub struct PFBasis {
    pub palette: Vec<Color>,
}

impl PGBasis {
    pub fn new(monoid: ColorMonoid) -> Self {
        PGBasis { palette: monoid.palette(2) }
    }
}

impl PFBasis {
    pub fn new(monoid: ColorMonoid) -> Self {
        PFBasis { palette: monoid.palette(2) }
    }
}

pub fn pg_product<R: Coeff>(a: &ColoredPf, b: &ColoredPf) -> Element<ColoredPf, R> {
    let mut colors = a.colors().to_vec();
    colors.extend_from_slice(b.colors());
    Element::sum_of(
        pf_convolution(a.letters(), b.letters())
            .into_iter()
            .map(|w| ColoredPf::from_word_unchecked(ColoredWord { letters: w, colors: colors.clone() })),
    )
}

pub fn pg_coproduct<R: Coeff>(a: &ColoredPf) -> Tensor<ColoredPf, R> {
    Element::sum_of(
        value_splits(a.as_word(), is_parking)
            .into_iter()
            .map(|(l, h)| (ColoredPf::from_word_unchecked(l), ColoredPf::from_word_unchecked(h))),
    )
}

pub fn pf_product<R: Coeff>(a: &ColoredPf, b: &ColoredPf) -> Element<ColoredPf, R> {
    Element::sum_of(shifted_shuffle(a.as_word(), b.as_word()).into_iter().map(ColoredPf::from_word_unchecked))
}

pub fn pf_coproduct<R: Coeff>(a: &ColoredPf) -> Tensor<ColoredPf, R> {
    let w = a.as_word();
    Element::sum_of((0..=w.len()).map(|i| {
        let l = colored_parkize(&w.slice(0..i));
        let r = colored_parkize(&w.slice(i..w.len()));
        (ColoredPf::from_word_unchecked(l), ColoredPf::from_word_unchecked(r))
    }))
}

/// Colored parking functions of size `n` that are not a nontrivial shifted
/// concatenation.
pub fn connected_colored_pfs(n: usize, palette: &[Color]) -> Vec<ColoredPf> {
    ColoredPf::all(n, palette).into_iter().filter(|a| is_connected(a.letters())).collect()
}

pub fn connected_pf_count(n: usize, l: u32) -> usize {
    let palette: Vec<Color> = (0..l as Color).collect();
    connected_colored_pfs(n, &palette).len()
}

impl Bialgebra for PGBasis {
    type Key = ColoredPf;

    fn product_keys<R: Coeff>(&self, a: &ColoredPf, b: &ColoredPf) -> Element<ColoredPf, R> {
        pg_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredPf) -> Tensor<ColoredPf, R> {
        pg_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredPf> {
        ColoredPf::all(n, &self.palette)
    }
}

impl Bialgebra for PFBasis {
    type Key = ColoredPf;

    fn product_keys<R: Coeff>(&self, a: &ColoredPf, b: &ColoredPf) -> Element<ColoredPf, R> {
        pf_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredPf) -> Tensor<ColoredPf, R> {
        pf_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredPf> {
        ColoredPf::all(n, &self.palette)
    }
}
