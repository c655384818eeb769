//! Univariate power series with rational coefficients, truncated at a fixed
//! order `N` (coefficients of `t^0 .. t^N` are kept).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::colorcore::util::{divisors, mobius};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(q(1), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Series::monomial(q(1), 1, order)
    }

    pub fn monomial(c: BigRational, n: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> BigRational) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn from_integers(order: usize, f: impl Fn(usize) -> BigInt) -> Self {
        Series::from_fn(order, |n| BigRational::from_integer(f(n)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients as integers; fails if any is not integral.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Series(format!("non-integral coefficient {c}")))
                }
            })
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn check_order(&self, other: &Series) {
        assert_eq!(self.order(), other.order(), "series of different orders");
    }

    /// Substitutes `t -> c t`.
    pub fn dilate(&self, c: &BigRational) -> Self {
        let mut p = q(1);
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = &*a * &p;
            p *= c;
        }
        out
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Series("reciprocal of a series without constant term".into()));
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = inv0.clone();
        for k in 1..=n {
            let s = (1..=k).fold(BigRational::zero(), |acc, i| acc + &self.coeffs[i] * &b[k - i]);
            b[k] = -s * &inv0;
        }
        Ok(Series { coeffs: b })
    }

    /// Square root with the positive rational root of the constant term.
    pub fn sqrt(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let root = rational_sqrt(a0)
            .ok_or_else(|| Error::Series(format!("constant term {a0} is not a rational square")))?;
        let n = self.order();
        let mut b = vec![BigRational::zero(); n + 1];
        b[0] = root.clone();
        let two_root = &root * q(2);
        for k in 1..=n {
            let s = (1..k).fold(BigRational::zero(), |acc, i| acc + &b[i] * &b[k - i]);
            b[k] = (&self.coeffs[k] - s) / &two_root;
        }
        Ok(Series { coeffs: b })
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        self.check_order(inner);
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series("inner series has a constant term".into()));
        }
        let mut out = Series::zero(self.order());
        for c in self.coeffs.iter().rev() {
            out = &(&out * inner) + &Series::constant(c.clone(), self.order());
        }
        Ok(out)
    }

    /// Integer power (negative exponents need an invertible constant term).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut acc = Series::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("log needs constant term 1".into()));
        }
        let d = self.derivative();
        let quotient = &d * &self.reciprocal()?;
        Ok(quotient.integral())
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        Series::from_fn(n, |k| if k < n { &self.coeffs[k + 1] * q(k as i64 + 1) } else { BigRational::zero() })
    }

    pub fn integral(&self) -> Self {
        Series::from_fn(self.order(), |k| if k == 0 { BigRational::zero() } else { &self.coeffs[k - 1] / q(k as i64) })
    }

    /// `Π_{n>=1} (1 - t^n)^{-d_n}` for integer exponents `d_1, d_2, ...`.
    pub fn product_power(exponents: &[BigInt], order: usize) -> Self {
        let mut acc = Series::one(order);
        for (i, d) in exponents.iter().enumerate() {
            let n = i + 1;
            if n > order || d.is_zero() {
                continue;
            }
            // (1 - t^n)^{-d} = Σ_k binom(d + k - 1, k) t^{nk}, valid for all integers d.
            let mut factor = Series::zero(order);
            let mut c = q(1);
            let dq = BigRational::from_integer(d.clone());
            for k in 0..=order / n {
                factor.coeffs[n * k] = c.clone();
                c = c * (&dq + q(k as i64)) / q(k as i64 + 1);
            }
            acc = &acc * &factor;
        }
        acc
    }

    /// Recovers `d_n` with `self = Π (1 - t^n)^{-d_n}` (constant term 1), by
    /// Möbius inversion of the logarithm: `n d_n = Σ_{m|n} μ(n/m) m [t^m] log`.
    pub fn free_generators(&self) -> Result<Vec<BigRational>> {
        let log = self.log()?;
        let n = self.order();
        Ok((1..=n)
            .map(|k| {
                let s = divisors(k as u64).into_iter().fold(BigRational::zero(), |acc, m| {
                    acc + q(mobius(k as u64 / m)) * q(m as i64) * &log.coeffs[m as usize]
                });
                s / q(k as i64)
            })
            .collect())
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.check_order(rhs);
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.check_order(rhs);
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        self.check_order(rhs);
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

impl Add for Series {
    type Output = Series;

    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;

    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;

    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match n {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            if n == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Convenience: the coefficients as `i64`, panicking on non-integers.
pub fn as_i64(s: &Series) -> Vec<i64> {
    s.coeffs.iter().map(|c| c.to_integer().to_i64().expect("coefficient fits i64")).collect()
}
