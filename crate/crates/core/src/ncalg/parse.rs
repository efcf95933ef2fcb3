//! Parser for free-algebra expressions like `u11*v11 + (q-1)*u12^2 - 1`.
//!
//! Identifiers resolve to the field variable first, then to generators.
//! Division is only allowed by scalar expressions.

use super::ncpoly::NCPoly;
use super::word::GenSet;
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Parser<'a> {
    gens: &'a GenSet,
    field: &'a FieldDesc,
    chars: Vec<char>,
    pos: usize,
}

pub(crate) fn parse_ncpoly(gens: &GenSet, field: &FieldDesc, text: &str) -> Result<NCPoly> {
    let mut p = Parser { gens, field, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
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

    fn sum(&mut self) -> Result<NCPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.unary()?)?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let s = d.as_scalar().ok_or_else(|| self.err("division by a non-scalar"))?;
                    acc = acc.scale(&s.inv()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<NCPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<NCPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let e: i32 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.err("expected exponent"))?;
        if neg {
            let s = base.as_scalar().ok_or_else(|| self.err("negative power of a non-scalar"))?;
            return Ok(NCPoly::constant(self.gens, s.pow(-e)?));
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<NCPoly> {
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
                Ok(NCPoly::constant(self.gens, Scalar::from_rational(self.field, BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if self.field.variable() == Some(name.as_str()) {
                    return Ok(NCPoly::constant(self.gens, Scalar::var(self.field)?));
                }
                NCPoly::named(self.gens, self.field, &name)
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_division_and_powers() {
        let g = GenSet::new(&["x", "y"]).unwrap();
        let f = FieldDesc::rational_functions("q").unwrap();
        let a = parse_ncpoly(&g, &f, "x*y/q").unwrap();
        let b = parse_ncpoly(&g, &f, "q^-1*x*y").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_ncpoly(&g, &f, "x^2").unwrap(), parse_ncpoly(&g, &f, "x*x").unwrap());
        assert!(parse_ncpoly(&g, &f, "x/y").is_err());
        assert!(matches!(parse_ncpoly(&g, &f, "z"), Err(Error::UnknownGenerator(_))));
    }
}
