//! Colored words and the word-level operations everything else is built on:
//! standardization, shifted concatenation and shifted shuffle.

use std::cmp::Ordering;
use std::fmt;

use super::color::Color;
use crate::error::{Error, Result};

/// A word over the positive integers together with a color word of the same
/// length. Colored words are ordered by length, then letters, then colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ColoredWord {
    pub letters: Vec<u32>,
    pub colors: Vec<Color>,
}

impl ColoredWord {
    pub fn new(letters: Vec<u32>, colors: Vec<Color>) -> Result<Self> {
        if letters.len() != colors.len() {
            return Err(Error::LengthMismatch { expected: letters.len(), found: colors.len() });
        }
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(ColoredWord { letters, colors })
    }

    pub fn empty() -> Self {
        ColoredWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Adds `k` to every letter; colors are untouched.
    pub fn shifted(&self, k: u32) -> ColoredWord {
        ColoredWord {
            letters: self.letters.iter().map(|&a| a + k).collect(),
            colors: self.colors.clone(),
        }
    }

    pub fn concat(&self, other: &ColoredWord) -> ColoredWord {
        let mut out = self.clone();
        out.letters.extend_from_slice(&other.letters);
        out.colors.extend_from_slice(&other.colors);
        out
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> ColoredWord {
        ColoredWord {
            letters: self.letters[range.clone()].to_vec(),
            colors: self.colors[range].to_vec(),
        }
    }

    /// Biletters `(letter, color)`.
    pub fn biletters(&self) -> impl Iterator<Item = (u32, Color)> + '_ {
        self.letters.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn from_biletters(it: impl IntoIterator<Item = (u32, Color)>) -> ColoredWord {
        let (letters, colors) = it.into_iter().unzip();
        ColoredWord { letters, colors }
    }
}

impl Ord for ColoredWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.colors.cmp(&other.colors))
    }
}

impl PartialOrd for ColoredWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", format_letters(&self.letters), format_colors(&self.colors))
    }
}

/// The usual standardization: the permutation with the same inversions as
/// `word`, equal letters numbered from left to right.
pub fn standardize(word: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    out
}

/// Standardizes the letters, keeping the colors in place.
pub fn colored_standardize(w: &ColoredWord) -> ColoredWord {
    ColoredWord { letters: standardize(&w.letters), colors: w.colors.clone() }
}

/// `u • v`: letters of `v` shifted by `|u|`, colors concatenated unshifted.
pub fn shifted_concat(u: &ColoredWord, v: &ColoredWord) -> ColoredWord {
    u.concat(&v.shifted(u.len() as u32))
}

/// All `k`-subsets of `0..n`, each sorted increasingly, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=(n - need) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Shuffle of two colored words, colors travelling with their letters. The
/// result is the sorted multiset of all `binom(|u|+|v|, |u|)` interleavings.
pub fn shuffle(u: &ColoredWord, v: &ColoredWord) -> Vec<ColoredWord> {
    let n = u.len() + v.len();
    let mut out: Vec<ColoredWord> = subsets(n, u.len())
        .into_iter()
        .map(|positions| {
            let mut w = ColoredWord {
                letters: Vec::with_capacity(n),
                colors: Vec::with_capacity(n),
            };
            let (mut i, mut j, mut p) = (0, 0, 0);
            for pos in 0..n {
                if p < positions.len() && positions[p] == pos {
                    w.letters.push(u.letters[i]);
                    w.colors.push(u.colors[i]);
                    i += 1;
                    p += 1;
                } else {
                    w.letters.push(v.letters[j]);
                    w.colors.push(v.colors[j]);
                    j += 1;
                }
            }
            w
        })
        .collect();
    out.sort();
    out
}

/// `u ⋒ v = u ш v[|u|]`.
pub fn shifted_shuffle(u: &ColoredWord, v: &ColoredWord) -> Vec<ColoredWord> {
    shuffle(u, &v.shifted(u.len() as u32))
}

/// Compact text form of a letter word: digits run together when every letter
/// is a single digit, comma separated otherwise.
pub fn format_letters(w: &[u32]) -> String {
    if w.iter().all(|&a| a <= 9) {
        w.iter().map(|a| char::from(b'0' + *a as u8)).collect()
    } else {
        joined(w.iter().map(|a| a.to_string()).collect())
    }
}

fn joined(parts: Vec<String>) -> String {
    let mut s = parts.join(",");
    if parts.len() == 1 {
        s.push(',');
    }
    s
}

pub fn format_colors(c: &[Color]) -> String {
    if c.iter().all(|&a| (0..=9).contains(&a)) {
        c.iter().map(|a| char::from(b'0' + *a as u8)).collect()
    } else {
        joined(c.iter().map(|a| a.to_string()).collect())
    }
}

/// Inverse of [`format_letters`] / [`format_colors`]: comma separated integers
/// (a single one carries a trailing comma), or a run of single digits. `ε` and the empty string denote the empty word.
pub fn parse_integers(s: &str) -> std::result::Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() || s == "ε" || s == "e" {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.strip_suffix(',')
            .unwrap_or(s)
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
            .collect()
    } else {
        s.chars()
            .map(|ch| ch.to_digit(10).map(i64::from).ok_or_else(|| format!("bad digit `{ch}`")))
            .collect()
    }
}

/// Parses `letters;colors`. A missing color word means all colors 0.
pub fn parse_colored(s: &str) -> std::result::Result<ColoredWord, String> {
    let (l, c) = s.split_once(';').unwrap_or((s, ""));
    let letters = parse_integers(l)?
        .into_iter()
        .map(|a| u32::try_from(a).map_err(|_| format!("bad letter {a}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let colors = if c.trim().is_empty() { vec![0; letters.len()] } else { parse_integers(c)? };
    ColoredWord::new(letters, colors).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(l: &str, c: &str) -> ColoredWord {
        let letters = parse_integers(l).unwrap().into_iter().map(|a| a as u32).collect();
        ColoredWord::new(letters, parse_integers(c).unwrap()).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 2, 3, 1, 4, 2, 4, 1, 1]), vec![1, 5, 7, 2, 8, 6, 9, 3, 4]);
        assert_eq!(standardize(&[1, 1, 1]), vec![1, 2, 3]);
        assert_eq!(standardize(&[3, 2, 1]), vec![3, 2, 1]);
        assert!(standardize(&[]).is_empty());
    }

    #[test]
    fn colored_standardize_examples() {
        assert_eq!(colored_standardize(&cw("123142411", "144120100")), cw("157286934", "144120100"));
        assert_eq!(colored_standardize(&cw("11", "01")), cw("12", "01"));
        assert_eq!(colored_standardize(&cw("212", "010")), cw("213", "010"));
    }

    #[test]
    fn shifted_concat_examples() {
        assert_eq!(shifted_concat(&cw("13241", "00322"), &cw("12", "23")), cw("1324167", "0032223"));
        assert_eq!(shifted_concat(&ColoredWord::empty(), &cw("21", "14")), cw("21", "14"));
        assert_eq!(shifted_concat(&cw("1", "5"), &cw("1", "7")), cw("12", "57"));
    }

    #[test]
    fn shifted_shuffle_examples() {
        let got = shifted_shuffle(&cw("21", "14"), &cw("12", "31"));
        let mut want = vec![
            cw("2134", "1431"),
            cw("2314", "1341"),
            cw("2341", "1314"),
            cw("3214", "3141"),
            cw("3241", "3114"),
            cw("3421", "3114"),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(shifted_shuffle(&cw("21", "14"), &ColoredWord::empty()), vec![cw("21", "14")]);
        assert_eq!(shifted_shuffle(&cw("1", "0"), &cw("1", "1")), vec![cw("12", "01"), cw("21", "10")]);
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn zero_letters_rejected() {
        assert_eq!(ColoredWord::new(vec![0], vec![0]), Err(Error::ZeroLetter));
        assert!(ColoredWord::new(vec![1], vec![]).is_err());
    }

    fn inversions(w: &[u32]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn standardize_preserves_inversions_exhaustive() {
        for len in 0..=6usize {
            let total = 4usize.pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let w: Vec<u32> = (0..len)
                    .map(|_| {
                        let a = (c % 4) as u32 + 1;
                        c /= 4;
                        a
                    })
                    .collect();
                assert_eq!(inversions(&standardize(&w)), inversions(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn shuffle_sizes_and_contents() {
        use crate::colorcore::util::binomial;
        let u = cw("312", "012");
        let v = cw("21", "33");
        let sh = shifted_shuffle(&u, &v);
        assert_eq!(sh.len() as u64, binomial(5, 3));
        for w in &sh {
            let mut letters = w.letters.clone();
            letters.sort();
            assert_eq!(letters, vec![1, 2, 3, 4, 5]);
        }
    }
}
