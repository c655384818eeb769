//! The Mantaci-Reutenauer algebra `MR^(ℓ)`, generated by the monochromatic
//! complete functions `S_n^{(i)}`, and its dual.

use crate::colorcore::ColorMonoid;
use crate::error::{Error, Result};
use crate::linear::{bilinear, Bialgebra, Coeff, Element, Tensor};

use super::qsym::quasi_shuffle;
use super::sym::s_internal;
use super::vector::ColoredComposition;

/// `MR^(ℓ)` in the basis `S^{(I,u)}`.
#[derive(Clone, Debug)]
pub struct MRBasis {
    pub l: u32,
}

/// The dual of `MR^(ℓ)` in the monochromatic monomial basis `M_{(I,u)}`.
#[derive(Clone, Debug)]
pub struct MRDualBasis {
    pub l: u32,
}

pub fn mr_product<R: Coeff>(a: &ColoredComposition, b: &ColoredComposition) -> Element<ColoredComposition, R> {
    Element::basis(a.concat(b))
}

/// Divided powers on each part: `Δ S_n^{(i)} = Σ_{a+b=n} S_a^{(i)} ⊗ S_b^{(i)}`.
pub fn mr_coproduct<R: Coeff>(a: &ColoredComposition) -> Tensor<ColoredComposition, R> {
    let mut terms: Vec<(Vec<(u32, i64)>, Vec<(u32, i64)>)> = vec![(Vec::new(), Vec::new())];
    for (p, c) in a.pairs() {
        terms = terms
            .into_iter()
            .flat_map(|(l, r)| {
                (0..=p).map(move |k| {
                    let (mut l, mut r) = (l.clone(), r.clone());
                    l.push((k, c));
                    r.push((p - k, c));
                    (l, r)
                })
            })
            .collect();
    }
    Element::sum_of(terms.into_iter().map(|(l, r)| (ColoredComposition::from_pairs(l), ColoredComposition::from_pairs(r))))
}

/// Internal product over `ℤ/ℓ`, computed in `Sym^(ℓ)`.
pub fn mr_internal<R: Coeff>(
    x: &Element<ColoredComposition, R>,
    y: &Element<ColoredComposition, R>,
    l: u32,
) -> Result<Element<ColoredComposition, R>> {
    let to_s = |x: &Element<ColoredComposition, R>| x.map_keys(|k| k.to_vector());
    let prod = s_internal(&to_s(x), &to_s(y), ColorMonoid::Cyclic(l))?;
    let mut out = Element::zero();
    for (k, c) in prod.iter() {
        let key = ColoredComposition::from_vector(k).ok_or_else(|| Error::NotInSubspace(format!("S[{k}] is not in MR")))?;
        out.add_term(key, c.clone());
    }
    Ok(out)
}

/// `M_{(I,u)} M_{(J,v)}`: quasi-shuffle where only parts of equal colors
/// may overlap.
pub fn mr_dual_product<R: Coeff>(a: &ColoredComposition, b: &ColoredComposition) -> Element<ColoredComposition, R> {
    let a: Vec<(u32, i64)> = a.pairs().collect();
    let b: Vec<(u32, i64)> = b.pairs().collect();
    let merge = |x: &(u32, i64), y: &(u32, i64)| (x.1 == y.1).then_some((x.0 + y.0, x.1));
    Element::sum_of(quasi_shuffle(&a, &b, &merge).into_iter().map(ColoredComposition::from_pairs))
}

pub fn mr_dual_coproduct<R: Coeff>(a: &ColoredComposition) -> Tensor<ColoredComposition, R> {
    let p: Vec<(u32, i64)> = a.pairs().collect();
    Element::sum_of((0..=p.len()).map(|i| {
        (ColoredComposition::from_pairs(p[..i].iter().copied()), ColoredComposition::from_pairs(p[i..].iter().copied()))
    }))
}

/// Linear extension of [`mr_product`] to elements.
pub fn mr_product_elements<R: Coeff>(
    x: &Element<ColoredComposition, R>,
    y: &Element<ColoredComposition, R>,
) -> Element<ColoredComposition, R> {
    bilinear(x, y, |a, b| mr_product(a, b))
}

impl Bialgebra for MRBasis {
    type Key = ColoredComposition;

    fn product_keys<R: Coeff>(&self, a: &ColoredComposition, b: &ColoredComposition) -> Element<ColoredComposition, R> {
        mr_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredComposition) -> Tensor<ColoredComposition, R> {
        mr_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredComposition> {
        ColoredComposition::all(n, self.l)
    }
}

impl Bialgebra for MRDualBasis {
    type Key = ColoredComposition;

    fn product_keys<R: Coeff>(&self, a: &ColoredComposition, b: &ColoredComposition) -> Element<ColoredComposition, R> {
        mr_dual_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredComposition) -> Tensor<ColoredComposition, R> {
        mr_dual_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredComposition> {
        ColoredComposition::all(n, self.l)
    }
}
