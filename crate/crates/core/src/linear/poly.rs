//! Sparse multivariate Laurent polynomials over an exact ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coeff::Coeff;
use crate::colorcore::util::mobius;

/// An indeterminate such as `q`, `q3`, `y1` or `z2`. Index 0 prints bare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: char,
    pub index: u32,
}

impl Var {
    pub const fn new(family: char, index: u32) -> Self {
        Var { family, index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 0 {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}{}", self.family, self.index)
        }
    }
}

/// A monomial: variables with nonzero (possibly negative) exponents, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: i32) -> Self {
        Monomial::from_pairs([(v, e)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut map: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A polynomial `Σ c_m m` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Coeff> Poly<R> {
    pub fn constant(c: R) -> Self {
        let mut p = Poly { terms: BTreeMap::new() };
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v, 1), R::one())
    }

    pub fn monomial(m: Monomial, c: R) -> Self {
        let mut p = Poly { terms: BTreeMap::new() };
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Maximal exponent of `v` among the terms (0 for constants in `v`).
    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Replaces `v` by `value` (nonnegative exponents of `v` only).
    pub fn substitute(&self, v: Var, value: &Poly<R>) -> Poly<R> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            assert!(e >= 0, "substitution into a negative power");
            let rest = Poly::monomial(m.without(v), c.clone());
            out = out + rest * value.pow(e as u32);
        }
        out
    }

    /// Applies `f` to every variable (a ring homomorphism on monomials).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly<R> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::from_pairs(m.0.iter().map(|&(v, e)| (f(v), e))), c.clone());
        }
        out
    }

    /// Remainder of division by a polynomial in `v` alone that is monic in `v`.
    /// All exponents of `v` in `self` must be nonnegative.
    pub fn rem_monic(&self, v: Var, modulus: &Poly<R>) -> Poly<R> {
        let d = modulus.degree_in(v);
        assert!(d > 0, "modulus must have positive degree");
        assert!(modulus.coefficient(&Monomial::var(v, d)).is_one(), "modulus must be monic");
        let mut p = self.clone();
        loop {
            let top = p.degree_in(v);
            if top < d || p.is_zero() {
                return p;
            }
            let lead: Vec<(Monomial, R)> = p
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (m, c) in lead {
                let shift = Monomial::from_pairs(m.without(v).0.into_iter().chain([(v, top - d)]));
                p = p - Poly::monomial(shift, c) * modulus.clone();
            }
        }
    }
}

impl<R: Coeff> Poly<R> {
    /// The cyclotomic polynomial `Φ_n` in `v`, via `Π_{d|n} (v^d − 1)^{μ(n/d)}`.
    pub fn cyclotomic(n: u64, v: Var) -> Poly<R> {
        let mut num: Vec<BigInt> = vec![BigInt::one()];
        let mut den: Vec<BigInt> = vec![BigInt::one()];
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let target = match mobius(n / d) {
                1 => &mut num,
                -1 => &mut den,
                _ => continue,
            };
            let mut next = vec![BigInt::zero(); target.len() + d as usize];
            for (i, c) in target.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            *target = next;
        }
        let quotient = divide_exact(&num, &den);
        let mut p = Poly::zero();
        for (i, c) in quotient.iter().enumerate() {
            p.add_term(Monomial::var(v, i as i32), R::from_bigint(c));
        }
        p
    }
}

/// Exact division of integer polynomials given by ascending coefficients.
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut q = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dd] / &lead;
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    while q.len() > 1 && q.last().is_some_and(|c| c.is_zero()) {
        q.pop();
    }
    q
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Coeff> Add for Poly<R> {
    type Output = Poly<R>;

    fn add(mut self, rhs: Poly<R>) -> Poly<R> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<R: Coeff> Sub for Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self + (-rhs)
    }
}

impl<R: Coeff> Neg for Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<R: Coeff> Mul for Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_form();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let c_str = if abs.needs_parens() { format!("({abs})") } else { abs.to_string() };
            match (m.is_one(), abs.is_one()) {
                (true, _) => write!(f, "{c_str}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{c_str}*{m}")?,
            }
        }
        Ok(())
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }

    fn needs_parens(&self) -> bool {
        self.terms.len() > 1
            || self.terms.iter().any(|(m, c)| !m.is_one() && c.needs_parens())
    }

    fn is_negative_form(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.is_negative_form())
    }
}

/// Parses a polynomial such as `3*q1^2*q2 - y + 1/2` into `Poly<R>` using
/// `parse_scalar` for numeric literals.
pub fn parse_poly<R: Coeff>(
    s: &str,
    parse_scalar: impl Fn(&str) -> Option<R>,
) -> Result<Poly<R>, String> {
    let mut out = Poly::zero();
    let s = s.replace(' ', "");
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-1, &term[1..]),
            Some(b'+') => (1, &term[1..]),
            _ => (1, term),
        };
        let mut c = R::from_i64(sign);
        let mut mono = Monomial::one();
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(format!("empty factor in `{term}`"));
            }
            if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
                c = c * parse_scalar(factor).ok_or_else(|| format!("bad number `{factor}`"))?;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| format!("bad exponent in `{factor}`"))?),
                None => (factor, 1),
            };
            let mut chars = name.chars();
            let family = chars.next().filter(|c| c.is_alphabetic()).ok_or_else(|| format!("bad variable `{name}`"))?;
            let rest: String = chars.collect();
            let index = if rest.is_empty() { 0 } else { rest.parse::<u32>().map_err(|_| format!("bad variable `{name}`"))? };
            mono = mono.mul(&Monomial::var(Var::new(family, index), e));
        }
        out.add_term(mono, c);
    }
    Ok(out)
}
