use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::colorcore::util::weak_compositions;
use crate::colorcore::Color;
use crate::error::{Error, Result};
use crate::linear::BasisKey;

/// An `ℓ`-partite number, stored without trailing zeros so that the same
/// vector has one representation for every `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartiteNumber(Vec<u32>);

impl PartiteNumber {
    pub fn new(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        PartiteNumber(v)
    }

    /// `n·e_color`.
    pub fn unit_vector(color: usize, n: u32) -> Self {
        let mut v = vec![0; color + 1];
        v[color] = n;
        PartiteNumber::new(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry for color `i` (zero past the stored length).
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of rows actually used.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn padded(&self, rows: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(rows.max(v.len()), 0);
        v
    }

    pub fn add(&self, other: &PartiteNumber) -> PartiteNumber {
        let h = self.height().max(other.height());
        PartiteNumber::new((0..h).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// The color word `0^{n_0} 1^{n_1} ...`.
    pub fn color_word(&self) -> Vec<Color> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(c, &k)| std::iter::repeat(c as Color).take(k as usize))
            .collect()
    }

    /// Color content of a word.
    pub fn content(colors: &[Color]) -> PartiteNumber {
        let mut v = Vec::new();
        for &c in colors {
            let c = c as usize;
            if v.len() <= c {
                v.resize(c + 1, 0);
            }
            v[c] += 1;
        }
        PartiteNumber::new(v)
    }

    /// All vectors `a` with `0 <= a <= self` componentwise.
    pub fn sub_vectors(&self) -> Vec<PartiteNumber> {
        let mut out = vec![Vec::new()];
        for &k in &self.0 {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=k).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(PartiteNumber::new).collect()
    }

    pub fn sub(&self, other: &PartiteNumber) -> PartiteNumber {
        PartiteNumber::new((0..self.height()).map(|i| self.get(i) - other.get(i)).collect())
    }

    /// Nonzero vectors of weight `n` with `rows` entries.
    pub fn all(n: usize, rows: usize) -> Vec<PartiteNumber> {
        weak_compositions(n as u32, rows).into_iter().map(PartiteNumber::new).collect()
    }
}

/// A vector composition: a sequence of nonzero `ℓ`-partite columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VectorComposition(Vec<PartiteNumber>);

impl VectorComposition {
    pub fn new(cols: Vec<PartiteNumber>) -> Result<Self> {
        if cols.iter().any(PartiteNumber::is_zero) {
            return Err(Error::InvalidComposition("zero column".into()));
        }
        Ok(VectorComposition(cols))
    }

    /// From raw columns, e.g. `[[1,0],[0,2]]`.
    pub fn from_columns(cols: Vec<Vec<u32>>) -> Result<Self> {
        VectorComposition::new(cols.into_iter().map(PartiteNumber::new).collect())
    }

    /// Drops zero columns.
    pub fn from_columns_lossy(cols: impl IntoIterator<Item = PartiteNumber>) -> Self {
        VectorComposition(cols.into_iter().filter(|c| !c.is_zero()).collect())
    }

    pub fn column(c: PartiteNumber) -> Self {
        VectorComposition::from_columns_lossy([c])
    }

    pub fn empty() -> Self {
        VectorComposition(Vec::new())
    }

    pub fn columns(&self) -> &[PartiteNumber] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(PartiteNumber::weight).sum()
    }

    /// Number of rows needed to display every column.
    pub fn height(&self) -> usize {
        self.0.iter().map(PartiteNumber::height).max().unwrap_or(0)
    }

    /// Row sums.
    pub fn row_sums(&self) -> PartiteNumber {
        self.0.iter().fold(PartiteNumber::default(), |a, c| a.add(c))
    }

    pub fn concat(&self, other: &VectorComposition) -> VectorComposition {
        let mut cols = self.0.clone();
        cols.extend_from_slice(&other.0);
        VectorComposition(cols)
    }

    /// All vector compositions of weight `n` with `rows` rows.
    pub fn all(n: usize, rows: usize) -> Vec<VectorComposition> {
        if n == 0 {
            return vec![VectorComposition::empty()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for c in PartiteNumber::all(first, rows) {
                if c.is_zero() {
                    continue;
                }
                for rest in VectorComposition::all(n - first, rows) {
                    let mut cols = vec![c.clone()];
                    cols.extend(rest.0);
                    out.push(VectorComposition(cols));
                }
            }
        }
        out.sort();
        out
    }

    /// `(d(I), c(I))`: partial column weights (ending with the total) and the
    /// color word read column by column, top to bottom.
    pub fn recode(&self) -> (Vec<usize>, Vec<Color>) {
        let mut d = Vec::with_capacity(self.0.len());
        let mut c = Vec::with_capacity(self.weight());
        let mut acc = 0;
        for col in &self.0 {
            acc += col.weight();
            d.push(acc);
            c.extend(col.color_word());
        }
        (d, c)
    }

    /// Inverse of [`recode`](Self::recode). Needs `Des(c) ⊆ d`, `d` strictly
    /// increasing and ending at `|c|`.
    pub fn decode(d: &[usize], c: &[Color]) -> Result<Self> {
        let n = c.len();
        if n == 0 && d.is_empty() {
            return Ok(VectorComposition::empty());
        }
        if d.last() != Some(&n) || d.windows(2).any(|w| w[0] >= w[1]) || d.first() == Some(&0) {
            return Err(Error::Decode(format!("{d:?} is not a valid set for a word of length {n}")));
        }
        if c.iter().any(|&x| x < 0) {
            return Err(Error::Decode("negative color".into()));
        }
        for i in 1..n {
            if c[i - 1] > c[i] && !d.contains(&i) {
                return Err(Error::Decode(format!("descent {i} of the color word is not in {d:?}")));
            }
        }
        let mut prev = 0;
        let cols = d
            .iter()
            .map(|&e| {
                let col = PartiteNumber::content(&c[prev..e]);
                prev = e;
                col
            })
            .collect();
        Ok(VectorComposition(cols))
    }

    pub fn fmt_padded(&self, rows: usize) -> String {
        let rows = rows.max(self.height()).max(1);
        let cols: Vec<String> = self
            .0
            .iter()
            .map(|c| format!("[{}]", c.padded(rows).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        cols.join(",")
    }
}

impl Ord for VectorComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VectorComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for VectorComposition {
    fn degree(&self) -> usize {
        self.weight()
    }

    fn unit() -> Self {
        VectorComposition::empty()
    }
}

impl fmt::Display for VectorComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_padded(self.height()))
    }
}

/// Parses `[1,0,2]` or `[1,0],[0,2]` (columns left to right); the empty
/// string is the empty composition.
impl FromStr for VectorComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidComposition(s.to_string());
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(VectorComposition::empty());
        }
        let body = if inner.starts_with('[') { inner.to_string() } else { format!("[{inner}]") };
        let mut cols = Vec::new();
        for chunk in body.split(']') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let nums = chunk.strip_prefix('[').ok_or_else(bad)?;
            let col: std::result::Result<Vec<u32>, _> = nums.split(',').map(|x| x.trim().parse::<u32>()).collect();
            cols.push(col.map_err(|_| bad())?);
        }
        VectorComposition::from_columns(cols)
    }
}

/// A composition with one color per part; the labels of the
/// Mantaci-Reutenauer bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ColoredComposition {
    parts: Vec<u32>,
    colors: Vec<Color>,
}

impl ColoredComposition {
    pub fn new(parts: Vec<u32>, colors: Vec<Color>) -> Result<Self> {
        if parts.len() != colors.len() {
            return Err(Error::LengthMismatch { expected: parts.len(), found: colors.len() });
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("zero part".into()));
        }
        if colors.iter().any(|&c| c < 0) {
            return Err(Error::InvalidComposition("negative color".into()));
        }
        Ok(ColoredComposition { parts, colors })
    }

    pub fn empty() -> Self {
        ColoredComposition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, Color)> + '_ {
        self.parts.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn from_pairs(it: impl IntoIterator<Item = (u32, Color)>) -> Self {
        let (parts, colors) = it.into_iter().filter(|&(p, _)| p > 0).unzip();
        ColoredComposition { parts, colors }
    }

    pub fn concat(&self, other: &ColoredComposition) -> ColoredComposition {
        ColoredComposition::from_pairs(self.pairs().chain(other.pairs()))
    }

    /// The vector composition with columns `i_k·e_{u_k}`.
    pub fn to_vector(&self) -> VectorComposition {
        VectorComposition::from_columns_lossy(self.pairs().map(|(p, c)| PartiteNumber::unit_vector(c as usize, p)))
    }

    /// Inverse of [`to_vector`](Self::to_vector), when every column is
    /// monochromatic.
    pub fn from_vector(v: &VectorComposition) -> Option<Self> {
        let mut pairs = Vec::new();
        for col in v.columns() {
            let nz: Vec<(usize, u32)> = col.entries().iter().copied().enumerate().filter(|&(_, x)| x > 0).collect();
            match nz.as_slice() {
                [(c, p)] => pairs.push((*p, *c as Color)),
                _ => return None,
            }
        }
        Some(ColoredComposition::from_pairs(pairs))
    }

    /// All colored compositions of `n` with colors `0..l`.
    pub fn all(n: usize, l: u32) -> Vec<ColoredComposition> {
        if n == 0 {
            return vec![ColoredComposition::empty()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for c in 0..l as Color {
                for rest in ColoredComposition::all(n - first, l) {
                    out.push(ColoredComposition::from_pairs(std::iter::once((first as u32, c)).chain(rest.pairs())));
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for ColoredComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.len().cmp(&other.parts.len()))
            .then_with(|| self.parts.cmp(&other.parts))
            .then_with(|| self.colors.cmp(&other.colors))
    }
}

impl PartialOrd for ColoredComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for ColoredComposition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        ColoredComposition::empty()
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().map(|(p, c)| format!("({p};{c})")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `(2;0),(1;1)`.
impl FromStr for ColoredComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidComposition(s.to_string());
        let mut pairs: Vec<(u32, Color)> = Vec::new();
        for chunk in s.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('(').ok_or_else(bad)?;
            let (p, c) = body.split_once(';').ok_or_else(bad)?;
            pairs.push((p.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?));
        }
        let (parts, colors) = pairs.into_iter().unzip();
        ColoredComposition::new(parts, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vc(s: &str) -> VectorComposition {
        s.parse().unwrap()
    }

    #[test]
    fn recode_example() {
        let i = vc("[1,0,4],[0,3,2],[2,1,1],[1,1,3]");
        assert_eq!(i.weight(), 19);
        assert_eq!(i.row_sums(), PartiteNumber::new(vec![4, 5, 10]));
        let (d, c) = i.recode();
        assert_eq!(d, vec![5, 10, 14, 19]);
        let printed: String = c.iter().map(|x| (x + 1).to_string()).collect();
        assert_eq!(printed, "1333322233112312333");
        assert_eq!(VectorComposition::decode(&d, &c).unwrap(), i);
        assert_eq!(vc("[1,1]").recode(), (vec![2], vec![0, 1]));
        assert!(VectorComposition::decode(&[2], &[1, 0]).is_err());
        assert!(VectorComposition::decode(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn decode_inverts_recode() {
        for rows in 1..=3 {
            for n in 0..=4 {
                for i in VectorComposition::all(n, rows) {
                    let (d, c) = i.recode();
                    assert_eq!(VectorComposition::decode(&d, &c).unwrap(), i);
                }
            }
        }
    }

    #[test]
    fn counts() {
        let dims: Vec<usize> = (0..=5).map(|n| VectorComposition::all(n, 2).len()).collect();
        assert_eq!(dims, vec![1, 2, 7, 24, 82, 280]);
        let mr: Vec<usize> = (0..=4).map(|n| ColoredComposition::all(n, 2).len()).collect();
        assert_eq!(mr, vec![1, 2, 6, 18, 54]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(vc("[1,0],[0,2]").to_string(), "[1,0],[0,2]");
        assert_eq!(vc("[[1,0,2]]").fmt_padded(3), "[1,0,2]");
        assert_eq!(vc("[1,0]"), vc("[1]"));
        assert_eq!(vc(""), VectorComposition::empty());
        assert!("[0,0]".parse::<VectorComposition>().is_err());
        let m: ColoredComposition = "(2;0),(1;1)".parse().unwrap();
        assert_eq!(m.to_string(), "(2;0),(1;1)");
        assert_eq!(m.to_vector(), vc("[2],[0,1]"));
        assert_eq!(ColoredComposition::from_vector(&m.to_vector()), Some(m));
        assert_eq!(ColoredComposition::from_vector(&vc("[1,1]")), None);
    }
}
