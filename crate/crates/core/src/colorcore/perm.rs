//! Permutations, colored permutations and the wreath product `C ≀ S_n`.
//!
//! Conventions: permutations are 1-based words, composed as
//! `(στ)(i) = σ(τ(i))`, and act on the right of words by
//! `(u·π)_i = u_{π(i)}`.

use std::fmt;
use std::str::FromStr;

use super::color::{Color, ColorMonoid};
use super::util::permutations;
use super::word::{format_colors, format_letters, parse_colored, subsets, ColoredWord};
use crate::error::{Error, Result};

pub fn is_permutation(w: &[u32]) -> bool {
    let mut seen = vec![false; w.len()];
    w.iter().all(|&a| {
        let i = a as usize;
        if i == 0 || i > w.len() || seen[i - 1] {
            return false;
        }
        seen[i - 1] = true;
        true
    })
}

pub fn identity(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

pub fn inverse(p: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; p.len()];
    for (i, &a) in p.iter().enumerate() {
        out[a as usize - 1] = i as u32 + 1;
    }
    out
}

/// `(στ)(i) = σ(τ(i))`.
pub fn compose(sigma: &[u32], tau: &[u32]) -> Vec<u32> {
    tau.iter().map(|&t| sigma[t as usize - 1]).collect()
}

/// Right action of a permutation on the positions of a word:
/// `(u·π)_i = u_{π(i)}`.
pub fn word_right_action<T: Clone>(u: &[T], pi: &[u32]) -> Result<Vec<T>> {
    if u.len() != pi.len() {
        return Err(Error::LengthMismatch { expected: pi.len(), found: u.len() });
    }
    Ok(pi.iter().map(|&p| u[p as usize - 1].clone()).collect())
}

/// Descent positions `i` (1-based) with `σ_i > σ_{i+1}`.
pub fn descents(w: &[u32]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// Convolution `p1 * p2`: the permutations whose first `|p1|` letters
/// standardize to `p1` and whose remaining letters standardize to `p2`.
/// Sorted, of size `binom(n1+n2, n1)`.
pub fn convolution(p1: &[u32], p2: &[u32]) -> Vec<Vec<u32>> {
    let n = p1.len() + p2.len();
    let mut out: Vec<Vec<u32>> = subsets(n, p1.len())
        .into_iter()
        .map(|chosen| {
            let mut in_first = vec![false; n];
            for &c in &chosen {
                in_first[c] = true;
            }
            let rest: Vec<u32> = (0..n).filter(|&v| !in_first[v]).map(|v| v as u32 + 1).collect();
            let mut tau = Vec::with_capacity(n);
            tau.extend(p1.iter().map(|&a| chosen[a as usize - 1] as u32 + 1));
            tau.extend(p2.iter().map(|&a| rest[a as usize - 1]));
            tau
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Positions `k` (0 < k < n) at which `w` splits as a shifted concatenation:
/// every letter of the prefix is `<= k` and every letter of the suffix `> k`.
pub fn shifted_split_points(w: &[u32]) -> Vec<usize> {
    let n = w.len();
    let mut suffix_min = vec![u32::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(w[i]);
    }
    let mut prefix_max = 0u32;
    let mut out = Vec::new();
    for k in 1..n {
        prefix_max = prefix_max.max(w[k - 1]);
        if prefix_max as usize <= k && suffix_min[k] as usize > k {
            out.push(k);
        }
    }
    out
}

/// Unique maximal factorization of a colored word into connected factors
/// under shifted concatenation. Factors are returned standardized back to
/// start at 1; shifted concatenation of the factors reproduces `w`.
pub fn connected_factorization(w: &ColoredWord) -> Vec<ColoredWord> {
    let mut cuts = vec![0];
    cuts.extend(shifted_split_points(&w.letters));
    cuts.push(w.len());
    cuts.windows(2)
        .filter(|c| c[0] < c[1])
        .map(|c| {
            let mut f = w.slice(c[0]..c[1]);
            for a in f.letters.iter_mut() {
                *a -= c[0] as u32;
            }
            f
        })
        .collect()
}

pub fn is_connected(w: &[u32]) -> bool {
    !w.is_empty() && shifted_split_points(w).is_empty()
}

/// A colored permutation `(σ, u)`: basis key of `FQSym^(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColoredPerm(ColoredWord);

impl ColoredPerm {
    pub fn new(perm: Vec<u32>, colors: Vec<Color>) -> Result<Self> {
        if !is_permutation(&perm) {
            return Err(Error::NotAPermutation(perm));
        }
        Ok(ColoredPerm(ColoredWord::new(perm, colors)?))
    }

    pub fn from_word(w: ColoredWord) -> Result<Self> {
        Self::new(w.letters, w.colors)
    }

    /// Caller guarantees `w.letters` is a permutation of matching length.
    pub(crate) fn from_word_unchecked(w: ColoredWord) -> Self {
        debug_assert!(is_permutation(&w.letters) && w.letters.len() == w.colors.len());
        ColoredPerm(w)
    }

    pub fn empty() -> Self {
        ColoredPerm(ColoredWord::empty())
    }

    pub fn identity(colors: Vec<Color>) -> Self {
        ColoredPerm(ColoredWord { letters: identity(colors.len()), colors })
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn perm(&self) -> &[u32] {
        &self.0.letters
    }

    pub fn colors(&self) -> &[Color] {
        &self.0.colors
    }

    pub fn as_word(&self) -> &ColoredWord {
        &self.0
    }

    pub fn into_word(self) -> ColoredWord {
        self.0
    }

    pub fn reduce_colors(&self, monoid: ColorMonoid) -> Self {
        let colors = self.colors().iter().map(|&c| monoid.reduce(c)).collect();
        ColoredPerm(ColoredWord { letters: self.perm().to_vec(), colors })
    }

    /// All colored permutations of size `n` with colors from `palette`.
    pub fn all(n: usize, palette: &[Color]) -> Vec<ColoredPerm> {
        let words = color_words(n, palette);
        let mut out = Vec::with_capacity(words.len() * (1..=n).product::<usize>());
        for p in permutations(n) {
            for u in &words {
                out.push(ColoredPerm(ColoredWord { letters: p.clone(), colors: u.clone() }));
            }
        }
        out.sort();
        out
    }
}

/// All words of length `n` over `palette`, lexicographic.
pub fn color_words(n: usize, palette: &[Color]) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                palette.iter().map(move |&c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Group law of `C ≀ S_n`:
/// `(σ; c)(τ; d) = (στ; c_{τ(1)} d_1, ..., c_{τ(n)} d_n)`.
pub fn wreath_multiply(h1: &ColoredPerm, h2: &ColoredPerm, monoid: ColorMonoid) -> Result<ColoredPerm> {
    if h1.size() != h2.size() {
        return Err(Error::SizeMismatch { left: h1.size(), right: h2.size() });
    }
    Ok(wreath_multiply_unchecked(h1, h2, monoid))
}

pub(crate) fn wreath_multiply_unchecked(h1: &ColoredPerm, h2: &ColoredPerm, monoid: ColorMonoid) -> ColoredPerm {
    let (sigma, c) = (h1.perm(), h1.colors());
    let (tau, d) = (h2.perm(), h2.colors());
    let letters = compose(sigma, tau);
    let colors = tau
        .iter()
        .zip(d)
        .map(|(&t, &di)| monoid.add(c[t as usize - 1], di))
        .collect();
    ColoredPerm(ColoredWord { letters, colors })
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", format_letters(self.perm()), format_colors(self.colors()))
    }
}

impl FromStr for ColoredPerm {
    type Err = String;

    /// Parses `3142;2412` (or comma separated `10,1,...;0,1,...`).
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ColoredPerm::from_word(parse_colored(s)?).map_err(|e| e.to_string())
    }
}
