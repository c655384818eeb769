//! Level 2 (type B) parking functions and the cocommutative subalgebra
//! spanned by the `P^π`, `π` a nondecreasing parking function with one color
//! per prime factor.

use std::fmt;
use std::str::FromStr;

use crate::colorcore::parking::{is_parking, matches, nondecreasing_parking_functions};
use crate::colorcore::perm::shifted_split_points;
use crate::colorcore::util::multiset_permutations;
use crate::colorcore::word::{format_colors, format_letters, parse_integers, ColoredWord};
use crate::colorcore::{Color, ColoredPf};
use crate::error::{Error, Result};
use crate::linear::{regroup, BasisKey, Bialgebra, Coeff, Element, Tensor};

use super::{pf_coproduct, pf_product, pg_coproduct};

/// Level 2 rules: only matches carry color 1; a letter colored 1 forces
/// every equal letter to its left to be colored 1; every value occurs at
/// least once with color 0.
pub fn is_level2_pf(a: &[u32], u: &[Color]) -> bool {
    if a.len() != u.len() || !is_parking(a) || u.iter().any(|&c| c != 0 && c != 1) {
        return false;
    }
    let ma = matches(a).expect("parking");
    for (i, (&x, &c)) in a.iter().zip(u).enumerate() {
        if c == 1 && (!ma.contains(&(x as usize)) || (0..i).any(|j| a[j] == x && u[j] == 0)) {
            return false;
        }
    }
    a.iter().all(|x| a.iter().zip(u).any(|(y, &c)| y == x && c == 0))
}

pub fn is_level2(a: &ColoredPf) -> bool {
    is_level2_pf(a.letters(), a.colors())
}

/// Level 2 parking functions of size `n`, sorted.
pub fn enumerate_level2(n: usize) -> Vec<ColoredPf> {
    ColoredPf::all(n, &[0, 1]).into_iter().filter(is_level2).collect()
}

/// Checks that `F` products of level 2 keys and `G` coproducts of level 2
/// keys stay level 2, up to total size `max`.
pub fn typeb_closure_check(max: usize) -> std::result::Result<(), String> {
    let levels: Vec<Vec<ColoredPf>> = (0..=max).map(enumerate_level2).collect();
    for p in 0..=max {
        for q in 0..=max - p {
            for a in &levels[p] {
                for b in &levels[q] {
                    if let Some(bad) = pf_product::<i64>(a, b).keys().find(|k| !is_level2(k)) {
                        return Err(format!("F[{a}]·F[{b}] contains F[{bad}]"));
                    }
                }
            }
        }
        for a in &levels[p] {
            for (l, r) in pg_coproduct::<i64>(a).keys() {
                if !is_level2(l) || !is_level2(r) {
                    return Err(format!("ΔG[{a}] contains G[{l}]⊗G[{r}]"));
                }
            }
        }
    }
    Ok(())
}

/// A nondecreasing parking function with one color per prime factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NcbKey {
    letters: Vec<u32>,
    colors: Vec<Color>,
}

fn factor_bounds(letters: &[u32]) -> Vec<usize> {
    let mut b = vec![0];
    b.extend(shifted_split_points(letters));
    if !letters.is_empty() {
        b.push(letters.len());
    }
    b
}

impl NcbKey {
    pub fn new(letters: Vec<u32>, colors: Vec<Color>) -> Result<Self> {
        if !is_parking(&letters) || letters.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotParking(letters));
        }
        let factors = factor_bounds(&letters).len() - 1;
        if colors.len() != factors {
            return Err(Error::LengthMismatch { expected: factors, found: colors.len() });
        }
        Ok(NcbKey { letters, colors })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// One color per prime factor.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// `π` as a colored word, each letter carrying the color of its factor.
    pub fn colored_word(&self) -> ColoredWord {
        let bounds = factor_bounds(&self.letters);
        let mut colors = Vec::with_capacity(self.letters.len());
        for (w, &c) in bounds.windows(2).zip(&self.colors) {
            colors.extend(std::iter::repeat(c).take(w[1] - w[0]));
        }
        ColoredWord { letters: self.letters.clone(), colors }
    }

    /// The key whose `P` element contains `F_a`, if any.
    pub fn of_rearrangement(a: &ColoredWord) -> Option<NcbKey> {
        let mut bl: Vec<(u32, Color)> = a.biletters().collect();
        bl.sort_unstable();
        let sorted = ColoredWord::from_biletters(bl);
        let bounds = factor_bounds(&sorted.letters);
        let mut colors = Vec::new();
        for w in bounds.windows(2) {
            let c = sorted.colors[w[0]];
            if sorted.colors[w[0]..w[1]].iter().any(|&d| d != c) {
                return None;
            }
            colors.push(c);
        }
        Some(NcbKey { letters: sorted.letters, colors })
    }

    /// All keys of size `n` with colors `0..l`.
    pub fn all(n: usize, l: u32) -> Vec<NcbKey> {
        let mut out = Vec::new();
        for letters in nondecreasing_parking_functions(n) {
            let f = factor_bounds(&letters).len() - 1;
            for colors in crate::colorcore::perm::color_words(f, &(0..l as Color).collect::<Vec<_>>()) {
                out.push(NcbKey { letters: letters.clone(), colors });
            }
        }
        out.sort();
        out
    }
}

impl BasisKey for NcbKey {
    fn degree(&self) -> usize {
        self.letters.len()
    }

    fn unit() -> Self {
        NcbKey::default()
    }
}

impl fmt::Display for NcbKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", format_letters(&self.letters), format_colors(&self.colors))
    }
}

/// Colors may be digits or signs (`+` for 0, `-` for 1). A color word of
/// full length is accepted when it is constant on each prime factor.
impl FromStr for NcbKey {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (l, c) = s.split_once(';').unwrap_or((s, ""));
        let letters = parse_integers(l)?
            .into_iter()
            .map(|a| u32::try_from(a).map_err(|_| format!("bad letter {a}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let c = c.trim();
        let colors: Vec<Color> = if c.chars().all(|ch| matches!(ch, '+' | '-' | '−')) {
            c.chars().map(|ch| if ch == '+' { 0 } else { 1 }).collect()
        } else {
            parse_integers(c)?
        };
        let factors = factor_bounds(&letters).len() - 1;
        if colors.len() == letters.len() && colors.len() != factors {
            let w = ColoredWord::new(letters.clone(), colors).map_err(|e| e.to_string())?;
            return match NcbKey::of_rearrangement(&w) {
                Some(k) if k.letters == letters => Ok(k),
                _ => Err(format!("colors of `{s}` are not constant on prime factors")),
            };
        }
        NcbKey::new(letters, colors).map_err(|e| e.to_string())
    }
}

/// `P^π = Σ F_a` over the distinct rearrangements `a` of `π`.
pub fn p_to_f<R: Coeff>(k: &NcbKey) -> Element<ColoredPf, R> {
    let bl: Vec<(u32, Color)> = k.colored_word().biletters().collect();
    Element::sum_of(
        multiset_permutations(&bl)
            .into_iter()
            .map(|w| ColoredPf::from_word_unchecked(ColoredWord::from_biletters(w))),
    )
}

pub fn p_to_f_element<R: Coeff>(x: &Element<NcbKey, R>) -> Element<ColoredPf, R> {
    x.map_linear(p_to_f)
}

/// Inverse of [`p_to_f_element`] on its image.
pub fn f_to_p<R: Coeff>(x: &Element<ColoredPf, R>) -> Result<Element<NcbKey, R>> {
    regroup(x, |a| NcbKey::of_rearrangement(a.as_word()), p_to_f)
        .ok_or_else(|| Error::NotInSubspace(format!("{} is not a combination of P elements", x.render_with(|k| format!("F[{k}]")))))
}

/// `P^π P^ρ = P^{π ρ[n]}`: shifted shuffles of rearrangements are the
/// rearrangements of the shifted concatenation, each once.
pub fn p_product<R: Coeff>(a: &NcbKey, b: &NcbKey) -> Element<NcbKey, R> {
    let n = a.letters.len() as u32;
    let mut k = a.clone();
    k.letters.extend(b.letters.iter().map(|x| x + n));
    k.colors.extend_from_slice(&b.colors);
    Element::basis(k)
}

/// [`p_product`] computed in the `F` basis and regrouped.
pub fn p_product_via_f<R: Coeff>(a: &NcbKey, b: &NcbKey) -> Result<Element<NcbKey, R>> {
    let (fa, fb) = (p_to_f::<R>(a), p_to_f::<R>(b));
    f_to_p(&crate::linear::bilinear(&fa, &fb, pf_product))
}

pub fn p_coproduct<R: Coeff>(a: &NcbKey) -> Result<Tensor<NcbKey, R>> {
    let t = p_to_f::<R>(a).map_linear(pf_coproduct);
    let canon = |(l, r): &(ColoredPf, ColoredPf)| {
        Some((NcbKey::of_rearrangement(l.as_word())?, NcbKey::of_rearrangement(r.as_word())?))
    };
    let expand = |(l, r): &(NcbKey, NcbKey)| crate::linear::tensor(&p_to_f::<R>(l), &p_to_f::<R>(r));
    regroup(&t, canon, expand).ok_or_else(|| Error::NotInSubspace(format!("ΔP[{a}] does not regroup")))
}

/// The `P` basis over `l` colors.
#[derive(Clone, Debug)]
pub struct NcbBasis {
    pub l: u32,
}

impl Bialgebra for NcbBasis {
    type Key = NcbKey;

    fn product_keys<R: Coeff>(&self, a: &NcbKey, b: &NcbKey) -> Element<NcbKey, R> {
        p_product(a, b)
    }

    fn coproduct_key<R: Coeff>(&self, a: &NcbKey) -> Tensor<NcbKey, R> {
        p_coproduct(a).expect("P elements are closed under coproduct")
    }

    fn basis(&self, n: usize) -> Vec<NcbKey> {
        NcbKey::all(n, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorcore::util::binomial;
    use crate::linear::{laws, swap};

    fn pf(s: &str) -> ColoredPf {
        s.parse().unwrap()
    }

    #[test]
    fn level2_rules() {
        let nontrivial: Vec<String> =
            enumerate_level2(3).iter().filter(|a| a.colors().contains(&1)).map(|a| a.to_string()).collect();
        let mut want: Vec<String> = [
            "111;100", "111;110", "112;100", "121;100", "211;010", "113;100", "131;100", "311;010", "122;010",
            "212;100", "221;100",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        want.sort_by_key(|s| pf(s));
        assert_eq!(nontrivial, want);
        assert!(!is_level2(&pf("1122;0010")));
        assert!(!is_level2(&pf("1122;1010")));
        assert!(is_level2(&pf("1133;0010")));
        assert!(is_level2(&pf("1133;1010")));
        for n in 0..=5 {
            assert_eq!(enumerate_level2(n).len(), n.pow(n as u32));
        }
    }

    #[test]
    fn closure() {
        typeb_closure_check(4).unwrap();
    }

    #[test]
    fn ncb_keys() {
        for n in 0..=6 {
            assert_eq!(NcbKey::all(n, 2).len() as u64, binomial(2 * n as u64, n as u64));
        }
        let k: NcbKey = "12;+-".parse().unwrap();
        assert_eq!(k.to_string(), "12;01");
        assert_eq!("1122;0".parse::<NcbKey>().unwrap().colored_word().colors, vec![0; 4]);
        assert!("1122;+-".parse::<NcbKey>().is_err());
        assert!("1133;0011".parse::<NcbKey>().is_ok());
        assert!("1133;0111".parse::<NcbKey>().is_err());
    }

    #[test]
    fn p_products() {
        let a: NcbKey = "1;0".parse().unwrap();
        let b: NcbKey = "1;1".parse().unwrap();
        let got = p_product_via_f::<i64>(&a, &b).unwrap();
        assert_eq!(got, Element::basis("12;01".parse().unwrap()));
        for p in 0..=4 {
            for q in 0..=4 - p {
                for a in NcbKey::all(p, 2) {
                    for b in NcbKey::all(q, 2) {
                        assert_eq!(p_product_via_f::<i64>(&a, &b).unwrap(), p_product(&a, &b));
                    }
                }
            }
        }
        let x = p_to_f::<i64>(&"1133;01".parse().unwrap());
        assert_eq!(x.len(), 6);
        assert!(f_to_p(&Element::<ColoredPf, i64>::basis(pf("21;01"))).is_err());
    }

    #[test]
    fn hopf_and_cocommutative() {
        let alg = NcbBasis { l: 2 };
        laws::bialgebra_suite(&alg, 2, 3, 30, 5).unwrap();
        for n in 0..=4 {
            for k in NcbKey::all(n, 2) {
                let d = p_coproduct::<i64>(&k).unwrap();
                assert_eq!(swap(&d), d, "{k}");
                assert!(d.iter().all(|(_, &c)| c > 0));
            }
        }
    }
}
