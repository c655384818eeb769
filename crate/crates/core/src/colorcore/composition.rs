use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::word::subsets;
use crate::error::{Error, Result};

/// An integer composition `(i_1, ..., i_m)`, all parts positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Partial sums `i_1, i_1+i_2, ...` excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]; `set` must lie in `1..n`.
    pub fn from_descent_set(n: usize, set: &[usize]) -> Result<Self> {
        if n == 0 && set.is_empty() {
            return Ok(Composition::empty());
        }
        let mut prev = 0;
        let mut parts = Vec::with_capacity(set.len() + 1);
        for &d in set.iter().chain(std::iter::once(&n)) {
            if d <= prev || d > n {
                return Err(Error::InvalidComposition(format!("bad descent set {set:?} for {n}")));
            }
            parts.push((d - prev) as u32);
            prev = d;
        }
        Ok(Composition(parts))
    }

    /// `maj(I)`: the sum of the descent set.
    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// All compositions of `n`, ordered by descent set size then lexicographically.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<Composition> = (0..n)
            .flat_map(|k| subsets(n - 1, k))
            .map(|s| {
                let set: Vec<usize> = s.into_iter().map(|x| x + 1).collect();
                Composition::from_descent_set(n, &set).unwrap()
            })
            .collect();
        out.sort();
        out
    }

    /// Compositions `J` coarser than `self` (including itself): descent sets
    /// contained in that of `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let d = self.descent_set();
        let n = self.size();
        (0..=d.len())
            .flat_map(|k| subsets(d.len(), k))
            .map(|s| {
                let set: Vec<usize> = s.into_iter().map(|i| d[i]).collect();
                Composition::from_descent_set(n, &set).unwrap()
            })
            .collect()
    }

    pub fn is_finer_than(&self, other: &Composition) -> bool {
        self.size() == other.size()
            && other.descent_set().iter().all(|d| self.descent_set().contains(d))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = super::word::parse_integers(s)
            .map_err(Error::InvalidComposition)?
            .into_iter()
            .map(|p| u32::try_from(p).map_err(|_| Error::InvalidComposition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}
