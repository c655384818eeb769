//! Level `ℓ` quasi-symmetric functions: monomial basis `M_I`, quasi-ribbon
//! functions, and expansion over commuting colored variables.

use std::fmt;

use crate::colorcore::word::subsets;
use crate::colorcore::{Color, ColoredWord};
use crate::linear::{BasisKey, Bialgebra, Coeff, Element, Tensor};

use super::vector::{PartiteNumber, VectorComposition};

/// `QSym` of level `rows` in the `M` basis.
#[derive(Clone, Debug)]
pub struct QSymBasis {
    pub rows: usize,
}

/// Quasi-shuffles of `u` and `v`; `merge` decides whether two letters may
/// be combined into one. Results are listed with multiplicity.
pub fn quasi_shuffle<T: Clone>(u: &[T], v: &[T], merge: &impl Fn(&T, &T) -> Option<T>) -> Vec<Vec<T>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    fn prepend<T: Clone>(x: &T, ws: Vec<Vec<T>>) -> impl Iterator<Item = Vec<T>> + '_ {
        ws.into_iter().map(move |w| {
            let mut out = Vec::with_capacity(w.len() + 1);
            out.push(x.clone());
            out.extend(w);
            out
        })
    }
    let mut out: Vec<Vec<T>> = prepend(&u[0], quasi_shuffle(&u[1..], v, merge)).collect();
    out.extend(prepend(&v[0], quasi_shuffle(u, &v[1..], merge)));
    if let Some(m) = merge(&u[0], &v[0]) {
        out.extend(prepend(&m, quasi_shuffle(&u[1..], &v[1..], merge)));
    }
    out
}

/// `M_I M_J`: quasi-shuffle of the columns, overlapping columns added.
pub fn m_product<R: Coeff>(a: &VectorComposition, b: &VectorComposition) -> Element<VectorComposition, R> {
    Element::sum_of(
        quasi_shuffle(a.columns(), b.columns(), &|x: &PartiteNumber, y: &PartiteNumber| Some(x.add(y)))
            .into_iter()
            .map(VectorComposition::from_columns_lossy),
    )
}

/// Deconcatenation of the column sequence.
pub fn m_coproduct<R: Coeff>(a: &VectorComposition) -> Tensor<VectorComposition, R> {
    let cols = a.columns();
    Element::sum_of((0..=cols.len()).map(|i| {
        (
            VectorComposition::from_columns_lossy(cols[..i].iter().cloned()),
            VectorComposition::from_columns_lossy(cols[i..].iter().cloned()),
        )
    }))
}

/// `F_I = Σ M_{I'}` over `I'` with `c(I') = c(I)` and `d(I') ⊇ d(I)`.
pub fn quasi_ribbon<R: Coeff>(i: &VectorComposition) -> Element<VectorComposition, R> {
    let (d, c) = i.recode();
    let n = c.len();
    let free: Vec<usize> = (1..n).filter(|k| !d.contains(k)).collect();
    let mut out = Element::zero();
    for k in 0..=free.len() {
        for s in subsets(free.len(), k) {
            let mut d2: Vec<usize> = d.iter().copied().chain(s.into_iter().map(|j| free[j])).collect();
            d2.sort_unstable();
            out.add_term(VectorComposition::decode(&d2, &c).expect("refinement of a valid code"), R::one());
        }
    }
    out
}

/// A monomial in commuting colored variables `x_j^{(c)}`, stored as sorted
/// `(j, c, exponent)` triples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColoredMonomial(Vec<(u32, Color, u32)>);

impl ColoredMonomial {
    pub fn from_factors(it: impl IntoIterator<Item = (u32, Color, u32)>) -> Self {
        let mut v: Vec<(u32, Color, u32)> = Vec::new();
        let mut items: Vec<_> = it.into_iter().filter(|t| t.2 > 0).collect();
        items.sort_unstable();
        for (j, c, e) in items {
            match v.last_mut() {
                Some(last) if last.0 == j && last.1 == c => last.2 += e,
                _ => v.push((j, c, e)),
            }
        }
        ColoredMonomial(v)
    }

    pub fn factors(&self) -> &[(u32, Color, u32)] {
        &self.0
    }
}

impl BasisKey for ColoredMonomial {
    fn degree(&self) -> usize {
        self.0.iter().map(|t| t.2 as usize).sum()
    }

    fn unit() -> Self {
        ColoredMonomial::default()
    }
}

impl fmt::Display for ColoredMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(j, c, e)| format!("x{j}^({c})^{e}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `M_I` over the letters `1..=k`.
pub fn m_expand<R: Coeff>(i: &VectorComposition, k: u32) -> Element<ColoredMonomial, R> {
    let m = i.length();
    let mut out = Element::zero();
    for js in subsets(k as usize, m) {
        let factors = js.iter().zip(i.columns()).flat_map(|(&j, col)| {
            col.entries().iter().enumerate().map(move |(c, &e)| (j as u32 + 1, c as Color, e))
        });
        out.add_term(ColoredMonomial::from_factors(factors), R::one());
    }
    out
}

/// Linear extension of [`m_expand`].
pub fn m_expand_element<R: Coeff>(x: &Element<VectorComposition, R>, k: u32) -> Element<ColoredMonomial, R> {
    x.map_linear(|i| m_expand(i, k))
}

/// Commutative image of a sum of colored words.
pub fn commutative_image<R: Coeff>(x: &Element<ColoredWord, R>) -> Element<ColoredMonomial, R> {
    x.map_keys(|w| ColoredMonomial::from_factors(w.biletters().map(|(a, c)| (a, c, 1))))
}

impl Bialgebra for QSymBasis {
    type Key = VectorComposition;

    fn product_keys<R: Coeff>(&self, a: &VectorComposition, b: &VectorComposition) -> Element<VectorComposition, R> {
        m_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &VectorComposition) -> Tensor<VectorComposition, R> {
        m_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<VectorComposition> {
        VectorComposition::all(n, self.rows)
    }
}
