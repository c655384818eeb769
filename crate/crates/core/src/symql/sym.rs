//! The complete basis `S^I` of level `ℓ` noncommutative symmetric functions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::colorcore::util::{multinomial, multiset_permutations};
use crate::colorcore::{Color, ColorMonoid, ColoredPerm};
use crate::error::{Error, Result};
use crate::fqsym::{g_internal_keys, g_product};
use crate::linear::{bilinear, Bialgebra, Coeff, Element, Tensor};

use super::vector::{PartiteNumber, VectorComposition};

/// `Sym` of level `rows` over `monoid`, in the `S` basis.
#[derive(Clone, Debug)]
pub struct SymBasis {
    pub monoid: ColorMonoid,
    pub rows: usize,
}

impl SymBasis {
    pub fn new(monoid: ColorMonoid, rows: usize) -> Self {
        SymBasis { monoid, rows }
    }

    pub fn cyclic(l: u32) -> Self {
        SymBasis { monoid: ColorMonoid::Cyclic(l), rows: l as usize }
    }
}

/// `S^I S^J = S^{I·J}`.
pub fn s_product<R: Coeff>(a: &VectorComposition, b: &VectorComposition) -> Element<VectorComposition, R> {
    Element::basis(a.concat(b))
}

/// Every way of writing each column `j_k` as `a_k + b_k`, as the pair of
/// compositions `(a_1 a_2 ..., b_1 b_2 ...)` with zero columns dropped.
/// Pairs are listed with multiplicity.
pub(crate) fn column_splits(j: &VectorComposition) -> Vec<(VectorComposition, VectorComposition)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for col in j.columns() {
        let mut next = Vec::new();
        for (l, r) in &out {
            for a in col.sub_vectors() {
                let b = col.sub(&a);
                let (mut l2, mut r2): (Vec<PartiteNumber>, Vec<PartiteNumber>) = (l.clone(), r.clone());
                l2.push(a);
                r2.push(b);
                next.push((l2, r2));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r)| (VectorComposition::from_columns_lossy(l), VectorComposition::from_columns_lossy(r)))
        .collect()
}

/// `Δ S^I`, multiplicative with `Δ S_n = Σ_{i+j=n} S_i ⊗ S_j`.
pub fn s_coproduct<R: Coeff>(a: &VectorComposition) -> Tensor<VectorComposition, R> {
    Element::sum_of(column_splits(a))
}

fn check_height(i: &VectorComposition, monoid: ColorMonoid) -> Result<()> {
    if let Some(l) = monoid.order() {
        if i.height() > l as usize {
            return Err(Error::InvalidColor { color: i.height() as Color - 1, monoid: monoid.to_string() });
        }
    }
    Ok(())
}

/// `S_n` as the sum of all colorings of the identity with content `n`.
fn embed_column<R: Coeff>(n: &PartiteNumber) -> Element<ColoredPerm, R> {
    Element::sum_of(multiset_permutations(&n.color_word()).into_iter().map(ColoredPerm::identity))
}

/// The image of `S^I` in the `G` basis of free quasi-symmetric functions.
pub fn s_embed<R: Coeff>(i: &VectorComposition, monoid: ColorMonoid) -> Result<Element<ColoredPerm, R>> {
    check_height(i, monoid)?;
    let mut acc = Element::one();
    for col in i.columns() {
        acc = bilinear(&acc, &embed_column(col), |a, b| g_product(a, b));
    }
    Ok(acc)
}

/// Linear extension of [`s_embed`].
pub fn s_embed_element<R: Coeff>(x: &Element<VectorComposition, R>, monoid: ColorMonoid) -> Result<Element<ColoredPerm, R>> {
    let mut out = Element::zero();
    for (k, c) in x.iter() {
        out.add_scaled(&s_embed(k, monoid)?, c);
    }
    Ok(out)
}

/// The block permutation `[n-b_1+1..n, n-b_1-b_2+1..n-b_1, ...]`, the
/// `G`-key of `S^I` with the most descents for column weights `b`.
fn block_permutation(blocks: &[usize]) -> Vec<u32> {
    let mut top = blocks.iter().sum::<usize>() as u32;
    let mut out = Vec::new();
    for &b in blocks {
        out.extend(top - b as u32 + 1..=top);
        top -= b as u32;
    }
    out
}

fn blocks_of(sigma: &[u32]) -> Option<Vec<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=sigma.len() {
        if i == sigma.len() || sigma[i] != sigma[i - 1] + 1 {
            blocks.push(i - start);
            start = i;
        }
    }
    (block_permutation(&blocks) == sigma).then_some(blocks)
}

/// Rewrites a `G`-expansion lying in `Sym` in the `S` basis. Each step
/// removes the `S^J` whose block permutation has the most blocks; that key
/// occurs in no other remaining `S^K`.
pub fn g_to_s<R: Coeff>(x: &Element<ColoredPerm, R>, monoid: ColorMonoid) -> Result<Element<VectorComposition, R>> {
    let not_in_sym = |rest: &Element<ColoredPerm, R>| {
        Error::NotInSubspace(format!("{} is not in Sym", rest.render_with(|k| format!("G[{k}]"))))
    };
    let mut rest = x.clone();
    let mut out = Element::zero();
    let mut seen = std::collections::HashSet::new();
    while !rest.is_empty() {
        let blocked: Vec<(Vec<usize>, &ColoredPerm, &R)> =
            rest.iter().filter_map(|(k, c)| blocks_of(k.perm()).map(|b| (b, k, c))).collect();
        let most = blocked.iter().map(|(b, _, _)| b.len()).max().ok_or_else(|| not_in_sym(&rest))?;
        let lead = blocked.into_iter().find(|(b, k, _)| {
            let mut pos = 0;
            b.len() == most
                && b.iter().all(|&len| {
                    let block = &k.colors()[pos..pos + len];
                    pos += len;
                    block.windows(2).all(|w| w[0] <= w[1])
                })
        });
        let (blocks, key, c) = lead.ok_or_else(|| not_in_sym(&rest))?;
        let mut pos = 0;
        let cols = blocks
            .iter()
            .map(|&b| {
                let col = PartiteNumber::content(&key.colors()[pos..pos + b]);
                pos += b;
                col
            })
            .collect();
        let j = VectorComposition::new(cols)?;
        if !seen.insert(j.clone()) {
            return Err(not_in_sym(&rest));
        }
        let c = c.clone();
        rest -= &s_embed::<R>(&j, monoid)?.scale(&c);
        out.add_term(j, c);
    }
    Ok(out)
}

type Partition = Vec<u32>;

/// `m_α m_β` over exactly `n` commuting variables, expanded in monomial
/// symmetric functions by enumerating exponent vectors. Partitions are
/// weakly decreasing; zero parts are ignored.
pub fn monomial_product_oracle(alpha: &[u32], beta: &[u32], n: usize) -> Result<BTreeMap<Partition, u64>> {
    let pad = |p: &[u32]| -> Result<Vec<u32>> {
        let mut v: Vec<u32> = p.iter().copied().filter(|&x| x > 0).collect();
        if v.len() > n {
            return Err(Error::InvalidComposition(format!("{p:?} has more than {n} nonzero parts")));
        }
        v.resize(n, 0);
        Ok(v)
    };
    let (a, b) = (pad(alpha)?, pad(beta)?);
    let mut out = BTreeMap::new();
    let bs = multiset_permutations(&b);
    for pa in multiset_permutations(&a) {
        for pb in &bs {
            let e: Vec<u32> = pa.iter().zip(pb).map(|(x, y)| x + y).collect();
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let mu: Partition = e.into_iter().filter(|&x| x > 0).collect();
                *out.entry(mu).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

thread_local! {
    static DIJ: RefCell<HashMap<(PartiteNumber, PartiteNumber), Vec<(PartiteNumber, u64)>>> = RefCell::new(HashMap::new());
}

/// `S_i * S_j = Σ d_{ij}^n S_n` over `C = ℕ`: the coefficient of `m_μ` in
/// `m_α m_β` where the colors of `i`, `j`, `n` are read as parts.
pub fn dij(i: &PartiteNumber, j: &PartiteNumber) -> Vec<(PartiteNumber, u64)> {
    if i.weight() != j.weight() {
        return Vec::new();
    }
    let key = (i.clone(), j.clone());
    if let Some(v) = DIJ.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let parts = |p: &PartiteNumber| -> Vec<u32> {
        let mut v: Vec<u32> = p.color_word().into_iter().map(|c| c as u32).collect();
        v.reverse();
        v
    };
    let n = i.weight();
    let prod = monomial_product_oracle(&parts(i), &parts(j), n).expect("weights match");
    let v: Vec<(PartiteNumber, u64)> = prod
        .into_iter()
        .map(|(mu, c)| {
            let mut colors: Vec<Color> = mu.iter().map(|&x| x as Color).collect();
            colors.resize(n, 0);
            (PartiteNumber::content(&colors), c)
        })
        .collect();
    DIJ.with(|m| m.borrow_mut().insert(key, v.clone()));
    v
}

/// Internal product `S^I * S^J` over `C = ℕ`, by the splitting formula
/// `(S_i S^{I'}) * G = μ[(S_i ⊗ S^{I'}) * ΔG]`, commutation with one-column
/// factors and [`dij`].
pub fn s_internal_nat<R: Coeff>(a: &VectorComposition, b: &VectorComposition) -> Element<VectorComposition, R> {
    if a.weight() != b.weight() {
        return Element::zero();
    }
    if a.length() == 0 {
        return Element::one();
    }
    if a.length() == 1 && b.length() == 1 {
        return Element::from_terms(
            dij(&a.columns()[0], &b.columns()[0])
                .into_iter()
                .map(|(n, c)| (VectorComposition::column(n), R::from_i64(c as i64))),
        );
    }
    if a.length() == 1 {
        return s_internal_nat(b, a);
    }
    let first = VectorComposition::column(a.columns()[0].clone());
    let rest = VectorComposition::from_columns_lossy(a.columns()[1..].iter().cloned());
    let w = first.weight();
    let mut out = Element::zero();
    for (l, r) in column_splits(b) {
        if l.weight() != w {
            continue;
        }
        let left = s_internal_nat::<R>(&first, &l);
        let right = s_internal_nat::<R>(&rest, &r);
        out += &bilinear(&left, &right, |x, y| s_product(x, y));
    }
    out
}

/// Reduces the colors of an `ℕ`-colored `S`-expansion modulo `l`. Merging
/// colorings of the identity multiplies by a multinomial factor per column.
pub fn fold_colors<R: Coeff>(x: &Element<VectorComposition, R>, l: u32) -> Element<VectorComposition, R> {
    let mut out = Element::zero();
    for (k, c) in x.iter() {
        let mut factor = BigInt::from(1);
        let cols: Vec<PartiteNumber> = k
            .columns()
            .iter()
            .map(|col| {
                let colors: Vec<Color> = col.color_word().into_iter().map(|x| x % l as Color).collect();
                let folded = PartiteNumber::content(&colors);
                let entries = |p: &PartiteNumber| p.entries().iter().map(|&x| x as u64).collect::<Vec<_>>();
                factor *= multinomial(&entries(col)) / multinomial(&entries(&folded));
                folded
            })
            .collect();
        out.add_term(VectorComposition::from_columns_lossy(cols), c.clone() * R::from_bigint(&factor));
    }
    out
}

/// Internal product of two `S`-basis elements over `monoid`. Over `ℤ/ℓ` the
/// product is computed over `ℕ` and folded with [`fold_colors`].
pub fn s_internal<R: Coeff>(
    x: &Element<VectorComposition, R>,
    y: &Element<VectorComposition, R>,
    monoid: ColorMonoid,
) -> Result<Element<VectorComposition, R>> {
    for k in x.keys().chain(y.keys()) {
        check_height(k, monoid)?;
    }
    let nat = |x: &Element<VectorComposition, R>, y: &Element<VectorComposition, R>| bilinear(x, y, |a, b| s_internal_nat(a, b));
    match monoid {
        ColorMonoid::Naturals => Ok(nat(x, y)),
        ColorMonoid::Cyclic(l) => Ok(fold_colors(&nat(x, y), l)),
        ColorMonoid::Integers => Err(Error::InvalidMonoid("Sym needs colors in ℕ or ℤ/ℓ".into())),
    }
}

/// The same product computed in free quasi-symmetric functions: embed both
/// factors, multiply with `G_h * G_h' = G_{h'h}`, and eliminate back.
pub fn s_internal_via_embedding<R: Coeff>(
    x: &Element<VectorComposition, R>,
    y: &Element<VectorComposition, R>,
    monoid: ColorMonoid,
) -> Result<Element<VectorComposition, R>> {
    let (ex, ey) = (s_embed_element(x, monoid)?, s_embed_element(y, monoid)?);
    let prod = bilinear(&ex, &ey, |a, b| match g_internal_keys(a, b, monoid) {
        Some(k) => Element::basis(k),
        None => Element::zero(),
    });
    g_to_s(&prod, monoid)
}

impl Bialgebra for SymBasis {
    type Key = VectorComposition;

    fn product_keys<R: Coeff>(&self, a: &VectorComposition, b: &VectorComposition) -> Element<VectorComposition, R> {
        s_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &VectorComposition) -> Tensor<VectorComposition, R> {
        s_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<VectorComposition> {
        VectorComposition::all(n, self.rows)
    }
}
