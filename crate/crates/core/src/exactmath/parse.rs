//! Recursive-descent parser for scalar expressions such as `(3*q^2-1)/(q+1)`.

use super::scalar::{FieldDesc, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Parser<'a> {
    field: &'a FieldDesc,
    chars: Vec<char>,
    pos: usize,
}

pub(crate) fn parse_scalar(field: &FieldDesc, text: &str) -> Result<Scalar> {
    let mut p = Parser { field, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let v = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at position {} in `{s}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                '/' => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.unary()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| self.err("integer out of range"))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = s.parse().map_err(|_| self.err("bad number"))?;
                Ok(Scalar::from_rational(self.field, BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.field.variable() {
                    Some(v) if v == name => Scalar::var(self.field),
                    _ => Err(Error::Parse(format!(
                        "unknown symbol `{name}` for field {}",
                        self.field
                    ))),
                }
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_precedence() {
        let f = FieldDesc::rational_functions("q").unwrap();
        let a = parse_scalar(&f, "3/2*q+1").unwrap();
        let b = parse_scalar(&f, "(3*q+2)/2").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_scalar(&f, "q^-1").unwrap(), parse_scalar(&f, "1/q").unwrap());
        assert_eq!(parse_scalar(&f, "-q^2").unwrap().to_string(), "-q^2");
    }

    #[test]
    fn rejects_bad_input() {
        let f = FieldDesc::Rationals;
        assert!(parse_scalar(&f, "q").is_err());
        assert!(parse_scalar(&f, "1/0").is_err());
        assert!(parse_scalar(&f, "(1").is_err());
        assert!(parse_scalar(&f, "").is_err());
    }
}
