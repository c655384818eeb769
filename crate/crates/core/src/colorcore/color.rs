use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A color. Colors of every monoid are stored as machine integers; cyclic
/// colors are kept reduced to `0..l`.
pub type Color = i64;

/// The commutative color monoid `C` used to label letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorMonoid {
    /// `(N, +)`.
    Naturals,
    /// `(Z, +)`.
    Integers,
    /// `Z/lZ`, `l >= 1`.
    Cyclic(u32),
}

impl ColorMonoid {
    pub fn cyclic(l: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidMonoid("Z/0Z".into()));
        }
        Ok(ColorMonoid::Cyclic(l))
    }

    /// Canonical representative of `c`. Only cyclic monoids change anything.
    pub fn reduce(&self, c: Color) -> Color {
        match *self {
            ColorMonoid::Cyclic(l) => c.rem_euclid(l as Color),
            _ => c,
        }
    }

    pub fn add(&self, a: Color, b: Color) -> Color {
        self.reduce(a + b)
    }

    pub fn contains(&self, c: Color) -> bool {
        match *self {
            ColorMonoid::Naturals => c >= 0,
            ColorMonoid::Integers => true,
            ColorMonoid::Cyclic(l) => (0..l as Color).contains(&c),
        }
    }

    pub fn check(&self, c: Color) -> Result<Color> {
        if self.contains(c) {
            Ok(c)
        } else {
            Err(Error::InvalidColor { color: c, monoid: self.to_string() })
        }
    }

    pub fn is_group(&self) -> bool {
        !matches!(self, ColorMonoid::Naturals)
    }

    pub fn inverse(&self, c: Color) -> Result<Color> {
        match *self {
            ColorMonoid::Naturals if c != 0 => {
                Err(Error::NotAGroup { monoid: self.to_string() })
            }
            _ => Ok(self.reduce(-c)),
        }
    }

    /// Number of colors, when finite.
    pub fn order(&self) -> Option<u32> {
        match *self {
            ColorMonoid::Cyclic(l) => Some(l),
            _ => None,
        }
    }

    /// Colors `0..l` for cyclic monoids, or the first `l` naturals otherwise.
    pub fn palette(&self, l: u32) -> Vec<Color> {
        let l = self.order().unwrap_or(l);
        (0..l as Color).collect()
    }

    pub fn validate_word(&self, colors: &[Color]) -> Result<()> {
        colors.iter().try_for_each(|&c| self.check(c).map(|_| ()))
    }
}

impl fmt::Display for ColorMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorMonoid::Naturals => write!(f, "nat"),
            ColorMonoid::Integers => write!(f, "int"),
            ColorMonoid::Cyclic(l) => write!(f, "mod:{l}"),
        }
    }
}

impl FromStr for ColorMonoid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "nat" | "N" => Ok(ColorMonoid::Naturals),
            "int" | "Z" => Ok(ColorMonoid::Integers),
            other => {
                let l = other
                    .strip_prefix("mod:")
                    .and_then(|l| l.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidMonoid(other.to_string()))?;
                ColorMonoid::cyclic(l)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_reduces_eagerly() {
        let m = ColorMonoid::Cyclic(3);
        assert_eq!(m.add(2, 2), 1);
        assert_eq!(m.reduce(-1), 2);
        assert!(!m.contains(3));
        assert_eq!(m.inverse(1).unwrap(), 2);
    }

    #[test]
    fn naturals_have_no_inverses() {
        let m = ColorMonoid::Naturals;
        assert!(m.inverse(2).is_err());
        assert_eq!(m.inverse(0).unwrap(), 0);
        assert!(!m.contains(-1));
    }

    #[test]
    fn parse_round_trip() {
        for m in [ColorMonoid::Naturals, ColorMonoid::Integers, ColorMonoid::Cyclic(4)] {
            assert_eq!(m.to_string().parse::<ColorMonoid>().unwrap(), m);
        }
        assert!("mod:0".parse::<ColorMonoid>().is_err());
        assert!("bogus".parse::<ColorMonoid>().is_err());
    }

    #[test]
    fn monoid_laws_exhaustive() {
        for m in [ColorMonoid::Cyclic(1), ColorMonoid::Cyclic(2), ColorMonoid::Cyclic(5)] {
            let cs = m.palette(0);
            for &a in &cs {
                assert_eq!(m.add(a, 0), a);
                for &b in &cs {
                    assert_eq!(m.add(a, b), m.add(b, a));
                    for &c in &cs {
                        assert_eq!(m.add(m.add(a, b), c), m.add(a, m.add(b, c)));
                    }
                }
            }
        }
    }
}
