//! Parking functions: parkization, breakpoints, matches, and the convolution
//! dual to the shifted shuffle.

use std::fmt;
use std::str::FromStr;

use super::color::{Color, ColorMonoid};
use super::perm::color_words;
use super::word::{format_colors, format_letters, parse_colored, subsets, ColoredWord};
use crate::error::{Error, Result};

/// `a` is a parking function iff its nondecreasing rearrangement satisfies
/// `a'_i <= i`.
pub fn is_parking(a: &[u32]) -> bool {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &x)| x >= 1 && x as usize <= i + 1)
}

fn count_at_most(w: &[u32], i: u32) -> usize {
    w.iter().filter(|&&x| x <= i).count()
}

/// `d(w) = min{i : #{j : w_j <= i} < i}`.
fn first_gap(w: &[u32]) -> usize {
    (1..=w.len() + 1).find(|&i| count_at_most(w, i as u32) < i).unwrap_or(w.len() + 1)
}

/// Decrements every letter above `d(w)` until `d(w) = n + 1`.
pub fn parkize(w: &[u32]) -> Vec<u32> {
    let mut w = w.to_vec();
    loop {
        let d = first_gap(&w);
        if d == w.len() + 1 {
            return w;
        }
        for x in w.iter_mut() {
            if *x as usize > d {
                *x -= 1;
            }
        }
    }
}

pub fn colored_parkize(w: &ColoredWord) -> ColoredWord {
    ColoredWord { letters: parkize(&w.letters), colors: w.colors.clone() }
}

fn check(a: &[u32]) -> Result<()> {
    if is_parking(a) {
        Ok(())
    } else {
        Err(Error::NotParking(a.to_vec()))
    }
}

/// `BP(a) = {b : #{a_i <= b} = b}`.
pub fn breakpoints(a: &[u32]) -> Result<Vec<usize>> {
    check(a)?;
    Ok((1..=a.len()).filter(|&b| count_at_most(a, b as u32) == b).collect())
}

/// `Ma(a) = {b : #{a_i < b} = b - 1 and #{a_i <= b} >= b}`.
pub fn matches(a: &[u32]) -> Result<Vec<usize>> {
    check(a)?;
    Ok((1..=a.len())
        .filter(|&b| {
            let below = a.iter().filter(|&&x| (x as usize) < b).count();
            below == b - 1 && count_at_most(a, b as u32) >= b
        })
        .collect())
}

pub fn is_prime_pf(a: &[u32]) -> Result<bool> {
    Ok(breakpoints(a)? == vec![a.len()])
}

/// All parking functions of length `n`, lexicographic.
pub fn parking_functions(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for sorted in nondecreasing_parking_functions(n) {
        out.extend(super::util::multiset_permutations(&sorted));
    }
    out.sort();
    out
}

/// Nondecreasing parking functions of length `n` (a Catalan family).
pub fn nondecreasing_parking_functions(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for x in lo..=cur.len() as u32 + 1 {
            cur.push(x);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Words of `[n]^k` whose parkization is `a`. Parkization preserves the
/// relative order (ties included) of letters, so these are obtained by
/// sending the distinct values of `a` increasingly into `[n]`.
fn park_preimages(a: &[u32], n: usize) -> Vec<Vec<u32>> {
    let mut values = a.to_vec();
    values.sort_unstable();
    values.dedup();
    subsets(n, values.len())
        .into_iter()
        .filter_map(|chosen| {
            let w: Vec<u32> = a
                .iter()
                .map(|x| chosen[values.binary_search(x).unwrap()] as u32 + 1)
                .collect();
            (parkize(&w) == a).then_some(w)
        })
        .collect()
}

/// Convolution `a' * a''`: parking functions `a = uv` of size `|a'| + |a''|`
/// with `Park(u) = a'` and `Park(v) = a''`. Sorted.
pub fn pf_convolution(a1: &[u32], a2: &[u32]) -> Vec<Vec<u32>> {
    let n = a1.len() + a2.len();
    let lefts = park_preimages(a1, n);
    let rights = park_preimages(a2, n);
    let mut out = Vec::new();
    for u in &lefts {
        for v in &rights {
            let mut w = u.clone();
            w.extend_from_slice(v);
            if is_parking(&w) {
                out.push(w);
            }
        }
    }
    out.sort();
    out
}

/// A colored parking function: basis key of `PQSym^(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColoredPf(ColoredWord);

impl ColoredPf {
    pub fn new(letters: Vec<u32>, colors: Vec<Color>) -> Result<Self> {
        check(&letters)?;
        Ok(ColoredPf(ColoredWord::new(letters, colors)?))
    }

    pub fn from_word(w: ColoredWord) -> Result<Self> {
        Self::new(w.letters, w.colors)
    }

    pub(crate) fn from_word_unchecked(w: ColoredWord) -> Self {
        debug_assert!(is_parking(&w.letters));
        ColoredPf(w)
    }

    pub fn empty() -> Self {
        ColoredPf::default()
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0.letters
    }

    pub fn colors(&self) -> &[Color] {
        &self.0.colors
    }

    pub fn as_word(&self) -> &ColoredWord {
        &self.0
    }

    /// All colored parking functions of size `n` over `palette`.
    pub fn all(n: usize, palette: &[Color]) -> Vec<ColoredPf> {
        let words = color_words(n, palette);
        let mut out = Vec::new();
        for a in parking_functions(n) {
            for u in &words {
                out.push(ColoredPf(ColoredWord { letters: a.clone(), colors: u.clone() }));
            }
        }
        out.sort();
        out
    }

    pub fn validate(&self, monoid: ColorMonoid) -> Result<()> {
        monoid.validate_word(self.colors())
    }
}

impl fmt::Display for ColoredPf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", format_letters(self.letters()), format_colors(self.colors()))
    }
}

impl FromStr for ColoredPf {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ColoredPf::from_word(parse_colored(s)?).map_err(|e| e.to_string())
    }
}
