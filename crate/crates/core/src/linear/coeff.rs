use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact coefficient ring of an [`Element`](super::Element).
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    /// Whether the printed form must be parenthesized when used as a factor.
    fn needs_parens(&self) -> bool {
        false
    }

    /// Whether the printed form starts with a minus sign.
    fn is_negative_form(&self) -> bool {
        self.to_string().starts_with('-')
    }
}

impl Coeff for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.to_i64().expect("integer coefficient overflows i64")
    }

    fn is_negative_form(&self) -> bool {
        *self < 0
    }
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn is_negative_form(&self) -> bool {
        self.is_negative()
    }
}

impl Coeff for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_negative_form(&self) -> bool {
        self.is_negative()
    }
}

/// Explicit coefficient promotion (`Z -> Q -> polynomials`).
pub trait Promote<T> {
    fn promote(&self) -> T;
}

impl Promote<BigInt> for i64 {
    fn promote(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Promote<BigRational> for i64 {
    fn promote(&self) -> BigRational {
        BigRational::from_i64(*self)
    }
}

impl Promote<BigRational> for BigInt {
    fn promote(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl<T: Clone> Promote<T> for T {
    fn promote(&self) -> T {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_signs() {
        let x = BigRational::new(BigInt::from(-3), BigInt::from(6));
        assert!(x.is_negative_form());
        assert_eq!(x.to_string(), "-1/2");
        assert!(!BigInt::from(4).is_negative_form());
        let p: BigRational = 3i64.promote();
        assert_eq!(p, BigRational::from_i64(3));
    }
}
