//! Free quasi-symmetric functions of level `l` in the `G` (dual free
//! quasi-ribbon) and `F` (free quasi-ribbon) bases.

use crate::colorcore::perm::{compose, convolution, inverse, is_connected, wreath_multiply_unchecked, word_right_action};
use crate::colorcore::word::{colored_standardize, shifted_shuffle, standardize, ColoredWord};
use crate::colorcore::{Color, ColorMonoid, ColoredPerm};
use crate::error::{Error, Result};
use crate::linear::{Bialgebra, Coeff, Element, Tensor};

/// Relabeling `φ` of colors used to define `F` from `G`:
/// `F_{σ,u} = G_{σ^{-1}, φ(u)·σ^{-1}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Phi {
    #[default]
    Identity,
    /// `γ -> γ^{-1}`; only for color groups. Then `F_h = G_{h^{-1}}`.
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    F,
    G,
}

/// The `G` basis over a color monoid, with the colors enumerated by
/// [`Bialgebra::basis`] taken from `palette`.
#[derive(Clone, Debug)]
pub struct GBasis {
    pub monoid: ColorMonoid,
    pub palette: Vec<Color>,
}

/// The `F` basis; same conventions as [`GBasis`].
#[derive(Clone, Debug)]
pub struct FBasis {
    pub monoid: ColorMonoid,
    pub palette: Vec<Color>,
}

fn default_palette(monoid: ColorMonoid) -> Vec<Color> {
    monoid.palette(2)
}

impl GBasis {
    pub fn new(monoid: ColorMonoid) -> Self {
        GBasis { monoid, palette: default_palette(monoid) }
    }
}

impl FBasis {
    pub fn new(monoid: ColorMonoid) -> Self {
        FBasis { monoid, palette: default_palette(monoid) }
    }
}

/// `G_{σ',u'} G_{σ'',u''} = Σ_{σ ∈ σ'*σ''} G_{σ, u'u''}`.
pub fn g_product<R: Coeff>(a: &ColoredPerm, b: &ColoredPerm) -> Element<ColoredPerm, R> {
    let mut colors = a.colors().to_vec();
    colors.extend_from_slice(b.colors());
    Element::sum_of(
        convolution(a.perm(), b.perm())
            .into_iter()
            .map(|s| ColoredPerm::from_word_unchecked(ColoredWord { letters: s, colors: colors.clone() })),
    )
}

/// Splits of `w` into the subwords of letters `<= k` and `> k` (shifted back
/// to start at 1), for every `k` at which both subwords are again of the
/// right kind. Colors follow their positions.
pub(crate) fn value_splits(w: &ColoredWord, valid: impl Fn(&[u32]) -> bool) -> Vec<(ColoredWord, ColoredWord)> {
    let n = w.len();
    let mut out = Vec::new();
    for k in 0..=n as u32 {
        let (mut lo, mut hi) = (ColoredWord::empty(), ColoredWord::empty());
        for (a, c) in w.biletters() {
            if a <= k {
                lo.letters.push(a);
                lo.colors.push(c);
            } else {
                hi.letters.push(a - k);
                hi.colors.push(c);
            }
        }
        if lo.len() == k as usize && valid(&lo.letters) && valid(&hi.letters) {
            out.push((lo, hi));
        }
    }
    out
}

/// `Δ G_{σ,u}`: the pairs whose shifted shuffle contains `(σ,u)`.
pub fn g_coproduct<R: Coeff>(a: &ColoredPerm) -> Tensor<ColoredPerm, R> {
    Element::sum_of(value_splits(a.as_word(), |_| true).into_iter().map(|(l, h)| {
        (ColoredPerm::from_word_unchecked(l), ColoredPerm::from_word_unchecked(h))
    }))
}

/// `F_{σ'} F_{σ''}`: shifted shuffle, colors attached to letters.
pub fn f_product<R: Coeff>(a: &ColoredPerm, b: &ColoredPerm) -> Element<ColoredPerm, R> {
    Element::sum_of(shifted_shuffle(a.as_word(), b.as_word()).into_iter().map(ColoredPerm::from_word_unchecked))
}

/// `Δ F_σ`: deconcatenation followed by colored standardization.
pub fn f_coproduct<R: Coeff>(a: &ColoredPerm) -> Tensor<ColoredPerm, R> {
    let w = a.as_word();
    Element::sum_of((0..=w.len()).map(|i| {
        let l = colored_standardize(&w.slice(0..i));
        let r = colored_standardize(&w.slice(i..w.len()));
        (ColoredPerm::from_word_unchecked(l), ColoredPerm::from_word_unchecked(r))
    }))
}

fn apply_phi(colors: &[Color], monoid: ColorMonoid, phi: Phi) -> Result<Vec<Color>> {
    match phi {
        Phi::Identity => Ok(colors.to_vec()),
        Phi::Inverse => colors.iter().map(|&c| monoid.inverse(c)).collect(),
    }
}

/// The `G` key equal to `F_{σ,u}`: `(σ^{-1}, φ(u)·σ^{-1})`.
pub fn f_to_g(k: &ColoredPerm, monoid: ColorMonoid, phi: Phi) -> Result<ColoredPerm> {
    if phi == Phi::Inverse && !monoid.is_group() {
        return Err(Error::NotAGroup { monoid: monoid.to_string() });
    }
    let inv = inverse(k.perm());
    let colors = word_right_action(&apply_phi(k.colors(), monoid, phi)?, &inv)?;
    ColoredPerm::new(inv, colors)
}

/// Inverse of [`f_to_g`]: the `F` key equal to `G_{a,w}`, namely
/// `(a^{-1}, φ^{-1}(w·a^{-1}))`.
pub fn g_to_f(k: &ColoredPerm, monoid: ColorMonoid, phi: Phi) -> Result<ColoredPerm> {
    if phi == Phi::Inverse && !monoid.is_group() {
        return Err(Error::NotAGroup { monoid: monoid.to_string() });
    }
    let inv = inverse(k.perm());
    let colors = apply_phi(&word_right_action(k.colors(), &inv)?, monoid, phi)?;
    ColoredPerm::new(inv, colors)
}

/// Rewrites an `F`-expansion in the `G` basis.
pub fn f_to_g_element<R: Coeff>(x: &Element<ColoredPerm, R>, monoid: ColorMonoid, phi: Phi) -> Result<Element<ColoredPerm, R>> {
    let mut out = Element::zero();
    for (k, c) in x.iter() {
        out.add_term(f_to_g(k, monoid, phi)?, c.clone());
    }
    Ok(out)
}

/// Rewrites a `G`-expansion in the `F` basis.
pub fn g_to_f_element<R: Coeff>(x: &Element<ColoredPerm, R>, monoid: ColorMonoid, phi: Phi) -> Result<Element<ColoredPerm, R>> {
    let mut out = Element::zero();
    for (k, c) in x.iter() {
        out.add_term(g_to_f(k, monoid, phi)?, c.clone());
    }
    Ok(out)
}

/// `F_{(σ,u)} * F_{(τ,v)} = F_{(στ, (uτ)·v)}`: the wreath product law.
/// `None` when the sizes differ.
pub fn f_internal_keys(a: &ColoredPerm, b: &ColoredPerm, monoid: ColorMonoid) -> Option<ColoredPerm> {
    (a.size() == b.size()).then(|| wreath_multiply_unchecked(a, b, monoid))
}

/// `G_{(σ,u)} * G_{(τ,v)} = G_{(τσ, u·(vσ))}`. `None` when the sizes differ.
pub fn g_internal_keys(a: &ColoredPerm, b: &ColoredPerm, monoid: ColorMonoid) -> Option<ColoredPerm> {
    if a.size() != b.size() {
        return None;
    }
    let letters = compose(b.perm(), a.perm());
    let colors = a
        .colors()
        .iter()
        .zip(a.perm())
        .map(|(&u, &s)| monoid.add(u, b.colors()[s as usize - 1]))
        .collect();
    Some(ColoredPerm::from_word_unchecked(ColoredWord { letters, colors }))
}

/// Internal product extended bilinearly; terms of different degrees
/// multiply to zero.
pub fn internal_product<R: Coeff>(
    x: &Element<ColoredPerm, R>,
    y: &Element<ColoredPerm, R>,
    basis: Basis,
    monoid: ColorMonoid,
) -> Element<ColoredPerm, R> {
    let rule = match basis {
        Basis::F => f_internal_keys,
        Basis::G => g_internal_keys,
    };
    let mut out = Element::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            if let Some(k) = rule(a, b, monoid) {
                out.add_term(k, ca.clone() * cb.clone());
            }
        }
    }
    out
}

/// Like [`internal_product`] but refusing inhomogeneous degree pairs.
pub fn internal_product_strict<R: Coeff>(
    x: &Element<ColoredPerm, R>,
    y: &Element<ColoredPerm, R>,
    basis: Basis,
    monoid: ColorMonoid,
) -> Result<Element<ColoredPerm, R>> {
    for a in x.keys() {
        for b in y.keys() {
            if a.size() != b.size() {
                return Err(Error::DegreeMismatch { left: a.size(), right: b.size() });
            }
        }
    }
    Ok(internal_product(x, y, basis, monoid))
}

/// The unit `Σ_u`-free identity `F[id_n; 0^n]` of the internal product in degree `n`.
pub fn internal_unit<R: Coeff>(n: usize) -> Element<ColoredPerm, R> {
    Element::basis(ColoredPerm::identity(vec![0; n]))
}

/// Associativity of the internal product and the two-sided unit
/// `F[id_n; 0^n]`, on every key of size `1..=max` with colors in `palette`.
pub fn internal_suite(basis: Basis, monoid: ColorMonoid, palette: &[Color], max: usize) -> std::result::Result<(), String> {
    let rule = match basis {
        Basis::F => f_internal_keys,
        Basis::G => g_internal_keys,
    };
    for n in 1..=max {
        let keys = ColoredPerm::all(n, palette);
        let unit = ColoredPerm::identity(vec![0; n]);
        for a in &keys {
            if rule(a, &unit, monoid).as_ref() != Some(a) || rule(&unit, a, monoid).as_ref() != Some(a) {
                return Err(format!("[{unit}] is not a unit for [{a}]"));
            }
            for b in &keys {
                let ab = rule(a, b, monoid).ok_or_else(|| format!("[{a}] * [{b}] undefined"))?;
                for c in &keys {
                    let bc = rule(b, c, monoid).ok_or_else(|| format!("[{b}] * [{c}] undefined"))?;
                    if rule(&ab, c, monoid) != rule(a, &bc, monoid) {
                        return Err(format!("internal product not associative on [{a}], [{b}], [{c}]"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All colored words over the letters `1..=k` with colored standardization
/// `(σ,u)`: the noncommutative polynomial `G_{σ,u}` truncated to `k`
/// letters, as a sum of colored words.
pub fn expand_g_to_words<R: Coeff>(x: &Element<ColoredPerm, R>, k: u32) -> Element<ColoredWord, R> {
    x.map_linear(|h| {
        let n = h.size();
        let mut words = Vec::new();
        let mut w = vec![1u32; n];
        loop {
            if standardize(&w) == h.perm() {
                words.push(ColoredWord { letters: w.clone(), colors: h.colors().to_vec() });
            }
            let mut i = 0;
            while i < n && w[i] == k {
                w[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            w[i] += 1;
        }
        Element::sum_of(words)
    })
}

/// Colored permutations `(σ,u)` of size `n` with `σ` connected.
pub fn connected_colored_perms(n: usize, palette: &[Color]) -> Vec<ColoredPerm> {
    ColoredPerm::all(n, palette).into_iter().filter(|h| is_connected(h.perm())).collect()
}

impl Bialgebra for GBasis {
    type Key = ColoredPerm;

    fn product_keys<R: Coeff>(&self, a: &ColoredPerm, b: &ColoredPerm) -> Element<ColoredPerm, R> {
        g_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredPerm) -> Tensor<ColoredPerm, R> {
        g_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredPerm> {
        ColoredPerm::all(n, &self.palette)
    }
}

impl Bialgebra for FBasis {
    type Key = ColoredPerm;

    fn product_keys<R: Coeff>(&self, a: &ColoredPerm, b: &ColoredPerm) -> Element<ColoredPerm, R> {
        f_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredPerm) -> Tensor<ColoredPerm, R> {
        f_coproduct(a)
    }

    fn basis(&self, n: usize) -> Vec<ColoredPerm> {
        ColoredPerm::all(n, &self.palette)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::laws;

    type E = Element<ColoredPerm, i64>;

    fn k(s: &str) -> ColoredPerm {
        s.parse().unwrap()
    }

    fn e(terms: &[&str]) -> E {
        E::sum_of(terms.iter().map(|s| k(s)))
    }

    fn t(pairs: &[(&str, &str)]) -> Tensor<ColoredPerm, i64> {
        Element::sum_of(pairs.iter().map(|(a, b)| (k(a), k(b))))
    }

    const Z: ColorMonoid = ColorMonoid::Integers;

    #[test]
    fn g_product_example() {
        let got: E = g_product(&k("21;41"), &k("12;31"));
        let want = e(&["2134;4131", "3124;4131", "4123;4131", "3214;4131", "4213;4131", "4312;4131"]);
        assert_eq!(got, want);
        assert_eq!(g_product::<i64>(&k(""), &k("21;41")), e(&["21;41"]));
        assert_eq!(g_product::<i64>(&k("1;0"), &k("1;0")), e(&["12;00", "21;00"]));
    }

    #[test]
    fn g_coproduct_example() {
        let got = g_coproduct::<i64>(&k("3142;2412"));
        let want = t(&[("", "3142;2412"), ("1;4", "231;212"), ("12;42", "12;21"), ("312;242", "1;1"), ("3142;2412", "")]);
        assert_eq!(got, want);
        assert_eq!(g_coproduct::<i64>(&k("")), t(&[("", "")]));
        assert_eq!(g_coproduct::<i64>(&k("1;3")), t(&[("", "1;3"), ("1;3", "")]));
    }

    #[test]
    fn f_examples() {
        let got: E = f_product(&k("21;14"), &k("12;31"));
        let want = e(&["2134;1431", "2314;1341", "2341;1314", "3214;3141", "3241;3114", "3421;3114"]);
        assert_eq!(got, want);
        let got = f_coproduct::<i64>(&k("23514;14212"));
        let want = t(&[
            ("", "23514;14212"),
            ("1;1", "2413;4212"),
            ("12;14", "312;212"),
            ("123;142", "12;12"),
            ("2341;1421", "1;2"),
            ("23514;14212", ""),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn conversions() {
        assert_eq!(f_to_g(&k("21;14"), Z, Phi::Identity).unwrap(), k("21;41"));
        assert_eq!(f_to_g(&k("3142;2142"), Z, Phi::Identity).unwrap(), k("2413;1224"));
        assert_eq!(f_to_g(&k("123;201"), Z, Phi::Identity).unwrap(), k("123;201"));
        assert!(f_to_g(&k("1;1"), ColorMonoid::Naturals, Phi::Inverse).is_err());
        let m = ColorMonoid::Cyclic(3);
        for phi in [Phi::Identity, Phi::Inverse] {
            for h in ColoredPerm::all(3, &m.palette(3)) {
                assert_eq!(g_to_f(&f_to_g(&h, m, phi).unwrap(), m, phi).unwrap(), h);
                assert_eq!(f_to_g(&g_to_f(&h, m, phi).unwrap(), m, phi).unwrap(), h);
            }
        }
        // Under φ = inverse, F_h = G_{h^{-1}} in the wreath group.
        let h = k("3142;2102");
        let g = f_to_g(&h, m, Phi::Inverse).unwrap();
        assert_eq!(wreath_multiply_unchecked(&h, &g, m), ColoredPerm::identity(vec![0; 4]));
    }

    #[test]
    fn f_product_is_g_product_transported() {
        let m = ColorMonoid::Cyclic(2);
        let keys: Vec<ColoredPerm> = (0..=2).flat_map(|n| ColoredPerm::all(n, &[0, 1])).collect();
        for a in &keys {
            for b in &keys {
                let via_g = g_product::<i64>(&f_to_g(a, m, Phi::Identity).unwrap(), &f_to_g(b, m, Phi::Identity).unwrap());
                let direct = f_to_g_element(&f_product::<i64>(a, b), m, Phi::Identity).unwrap();
                assert_eq!(via_g, direct);
            }
        }
    }

    #[test]
    fn internal_product_examples() {
        let f = |a: &str, b: &str, m| f_internal_keys(&k(a), &k(b), m).unwrap();
        assert_eq!(f("1324;1011", "2413;3200", Z), k("3412;3311"));
        assert_eq!(f("165324;102011", "625413;322011", Z), k("462315;423023"));
        assert_eq!(f("165324;102011", "625413;022011", ColorMonoid::Cyclic(3)), k("462315;120020"));
        assert!(f_internal_keys(&k("1;0"), &k("12;00"), Z).is_none());
        let x = e(&["1;0"]);
        assert!(internal_product_strict(&x, &e(&["12;00"]), Basis::F, Z).is_err());
        assert!(internal_product(&x, &e(&["12;00"]), Basis::F, Z).is_empty());
    }

    #[test]
    fn internal_products_intertwine_under_inverse_phi() {
        let m = ColorMonoid::Cyclic(3);
        let all = ColoredPerm::all(3, &m.palette(3));
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(7) {
                let gf = g_internal_keys(&f_to_g(a, m, Phi::Inverse).unwrap(), &f_to_g(b, m, Phi::Inverse).unwrap(), m).unwrap();
                let fg = f_to_g(&f_internal_keys(a, b, m).unwrap(), m, Phi::Inverse).unwrap();
                assert_eq!(gf, fg);
            }
        }
    }

    #[test]
    fn internal_product_monoid_laws() {
        for l in 1..=3u32 {
            let m = ColorMonoid::Cyclic(l);
            for n in 0..=3 {
                let all = ColoredPerm::all(n, &m.palette(l));
                let id = ColoredPerm::identity(vec![0; n]);
                for basis in [Basis::F, Basis::G] {
                    let rule = |a: &ColoredPerm, b: &ColoredPerm| match basis {
                        Basis::F => f_internal_keys(a, b, m).unwrap(),
                        Basis::G => g_internal_keys(a, b, m).unwrap(),
                    };
                    let stride = if n == 3 && l == 3 { 5 } else { 1 };
                    for a in all.iter().step_by(stride) {
                        assert_eq!(&rule(a, &id), a);
                        assert_eq!(&rule(&id, a), a);
                        for b in all.iter().step_by(stride) {
                            let ab = rule(a, b);
                            for c in all.iter().step_by(stride) {
                                assert_eq!(rule(&ab, c), rule(a, &rule(b, c)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hopf_laws() {
        let m = ColorMonoid::Cyclic(2);
        laws::bialgebra_suite(&GBasis::new(m), 2, 4, 60, 11).unwrap();
        laws::bialgebra_suite(&FBasis::new(m), 2, 4, 60, 12).unwrap();
        laws::adjunction_exhaustive(&FBasis::new(m), &GBasis::new(m), 3).unwrap();
        laws::adjunction_exhaustive(&GBasis::new(m), &FBasis::new(m), 3).unwrap();
    }

    #[test]
    fn word_realization() {
        let m = ColorMonoid::Cyclic(2);
        let keys: Vec<ColoredPerm> = (0..=2).flat_map(|n| ColoredPerm::all(n, &[0, 1])).collect();
        let concat = |x: &Element<ColoredWord, i64>, y: &Element<ColoredWord, i64>| {
            crate::linear::bilinear(x, y, |a, b| Element::basis(a.concat(b)))
        };
        for a in &keys {
            for b in &keys {
                let (ea, eb) = (e(&[&a.to_string()]), e(&[&b.to_string()]));
                let lhs = concat(&expand_g_to_words(&ea, 4), &expand_g_to_words(&eb, 4));
                let rhs = expand_g_to_words(&g_product(a, b), 4);
                assert_eq!(lhs, rhs);
                let fa = f_to_g_element(&ea, m, Phi::Identity).unwrap();
                let fb = f_to_g_element(&eb, m, Phi::Identity).unwrap();
                let lhs = concat(&expand_g_to_words(&fa, 4), &expand_g_to_words(&fb, 4));
                let fab = f_to_g_element(&f_product::<i64>(a, b), m, Phi::Identity).unwrap();
                assert_eq!(lhs, expand_g_to_words(&fab, 4));
            }
        }
        let words = expand_g_to_words(&e(&["12;01"]), 2);
        assert_eq!(words.len(), 3);
        assert_eq!(expand_g_to_words(&e(&["1;1"]), 3).len(), 3);
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_colored_perms(n, &[0, 1]).len()).collect();
        assert_eq!(counts, vec![2, 4, 24, 208, 2272]);
    }

    #[test]
    fn internal_product_laws() {
        for basis in [Basis::F, Basis::G] {
            internal_suite(basis, ColorMonoid::Cyclic(2), &[0, 1], 3).unwrap();
            internal_suite(basis, ColorMonoid::Integers, &[-1, 2], 2).unwrap();
        }
    }
}
