//! Tokenizing element literals such as `2*F[12;01] - (1/2)*F[21;10]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// One summand: a coefficient and either a tagged key or the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub tag: Option<String>,
    pub body: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.msg)
    }
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0, src }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<BigRational, SyntaxError> {
        let neg = self.eat('-');
        let num = self.integer()?;
        let den = if self.eat('/') { self.integer()? } else { BigInt::one() };
        if den.is_zero() {
            return self.err("zero denominator");
        }
        let q = BigRational::new(num, den);
        Ok(if neg { -q } else { q })
    }

    fn coefficient(&mut self) -> Result<BigRational, SyntaxError> {
        if self.eat('(') {
            let q = self.rational()?;
            if !self.eat(')') {
                return self.err("expected `)`");
            }
            Ok(q)
        } else {
            self.rational()
        }
    }

    fn tag(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn bracket_body(&mut self) -> Result<String, SyntaxError> {
        if !self.eat('[') {
            return self.err("expected `[`");
        }
        let start = self.pos;
        let mut depth = 1;
        while let Some(c) = self.peek() {
            match c {
                '[' => depth += 1,
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        let body = self.chars[start..self.pos].iter().collect();
                        self.pos += 1;
                        return Ok(body);
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        self.err("unclosed `[`")
    }

    fn term(&mut self, sign: BigRational) -> Result<Term, SyntaxError> {
        self.skip_ws();
        let mut coeff = sign;
        let starts_number = self.peek().is_some_and(|c| c.is_ascii_digit() || c == '(');
        if starts_number {
            coeff *= self.coefficient()?;
            if !self.eat('*') {
                return Ok(Term { coeff, tag: None, body: String::new() });
            }
        }
        match self.tag() {
            Some(tag) => {
                let body = self.bracket_body()?;
                Ok(Term { coeff, tag: Some(tag), body })
            }
            None => self.err("expected a basis tag such as `F` or `G`"),
        }
    }

    fn expression(&mut self) -> Result<Vec<Term>, SyntaxError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -BigRational::one() } else { BigRational::one() };
        loop {
            terms.push(self.term(sign)?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(terms),
                Some('+') => sign = BigRational::one(),
                Some('-') => sign = -BigRational::one(),
                Some(c) => return self.err(format!("unexpected `{c}`")),
            }
            self.pos += 1;
        }
    }
}

/// Splits `src` into signed terms. `0` alone is the empty sum.
pub fn parse_terms(src: &str) -> Result<Vec<Term>, SyntaxError> {
    let mut lx = Lexer::new(src);
    lx.skip_ws();
    if lx.peek().is_none() {
        return lx.err(format!("empty element `{}`", lx.src));
    }
    let terms = lx.expression()?;
    Ok(terms.into_iter().filter(|t| !t.coeff.is_zero()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn terms() {
        let t = parse_terms("2*F[12;01] + F[21;10]").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].coeff, q(2, 1));
        assert_eq!(t[1].tag.as_deref(), Some("F"));
        assert_eq!(t[1].body, "21;10");
        let t = parse_terms("-(3/2)*S[[1,0],[0,2]] - 1").unwrap();
        assert_eq!(t[0].coeff, q(-3, 2));
        assert_eq!(t[0].body, "[1,0],[0,2]");
        assert_eq!(t[1].tag, None);
        assert_eq!(t[1].coeff, q(-1, 1));
        assert!(parse_terms("0").unwrap().is_empty());
        assert_eq!(parse_terms("3/4*P[((•,•),•);01]").unwrap()[0].body, "((•,•),•);01");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_terms("F[12;01").unwrap_err().pos, 7);
        assert_eq!(parse_terms("F[1;0] * 2").unwrap_err().pos, 7);
        assert_eq!(parse_terms("2*[1]").unwrap_err().pos, 2);
        assert!(parse_terms("").is_err());
        assert!(parse_terms("1/0*F[1;0]").is_err());
    }
}
