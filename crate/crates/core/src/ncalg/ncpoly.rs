use super::word::{GenSet, Word};
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Element of the free algebra over a generator set.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    gens: GenSet,
    field: FieldDesc,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(gens: &GenSet, field: &FieldDesc) -> Self {
        NCPoly { gens: gens.clone(), field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &GenSet, field: &FieldDesc) -> Self {
        Self::constant(gens, Scalar::one(field))
    }

    pub fn constant(gens: &GenSet, c: Scalar) -> Self {
        Self::monomial(gens, Word::empty(), c)
    }

    pub fn monomial(gens: &GenSet, w: Word, c: Scalar) -> Self {
        let mut p = Self::zero(gens, c.field());
        if !c.is_zero() {
            p.terms.insert(w, c);
        }
        p
    }

    pub fn generator(gens: &GenSet, field: &FieldDesc, g: u32) -> Self {
        Self::monomial(gens, Word::letter(g), Scalar::one(field))
    }

    pub fn named(gens: &GenSet, field: &FieldDesc, name: &str) -> Result<Self> {
        Ok(Self::generator(gens, field, gens.index_of(name)?))
    }

    pub fn from_terms(gens: &GenSet, field: &FieldDesc, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = Self::zero(gens, field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn parse(gens: &GenSet, field: &FieldDesc, text: &str) -> Result<Self> {
        super::parse::parse_ncpoly(gens, field, text)
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    /// The constant term, when the polynomial is a scalar.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero(&self.field)),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn compatible(&self, other: &NCPoly) -> Result<()> {
        if self.gens != other.gens {
            return Err(Error::GenSetMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.gens, &self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> NCPoly {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        NCPoly { gens: self.gens.clone(), field: self.field.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return Self::zero(&self.gens, &self.field);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        NCPoly { gens: self.gens.clone(), field: self.field.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut out = Self::one(&self.gens, &self.field);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides by the leading coefficient (largest word).
    pub fn monic(&self) -> NCPoly {
        match self.terms.values().next_back() {
            Some(c) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }

    /// Canonical text, largest word first, e.g. `u11*v11+u12*v12-1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let word = w.render(&self.gens);
            let (neg, body) = render_coeff(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            match (body, w.is_empty()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&word),
                (Some(b), true) => out.push_str(&b),
                (Some(b), false) => {
                    out.push_str(&b);
                    out.push('*');
                    out.push_str(&word);
                }
            }
        }
        out
    }
}

/// Sign and absolute body of a coefficient; `None` body means one.
fn render_coeff(c: &Scalar) -> (bool, Option<String>) {
    if let Some(r) = c.to_rational() {
        let neg = r < &num_rational::BigRational::from_integer(0.into());
        let a = if neg { -r.clone() } else { r.clone() };
        if a == num_rational::BigRational::from_integer(1.into()) {
            return (neg, None);
        }
        return (neg, Some(a.to_string()));
    }
    let s = c.to_string();
    let simple = s.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '^' || ch == '*');
    if simple {
        (false, Some(s))
    } else if let Some(rest) = s.strip_prefix('-') {
        if rest.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '^' || ch == '*') {
            (true, Some(rest.to_string()))
        } else {
            (false, Some(format!("({s})")))
        }
    } else {
        (false, Some(format!("({s})")))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({})", self.render())
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl std::ops::$tr<&NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: &NCPoly) -> NCPoly {
                self.$via(rhs).expect("operands share generators and field")
            }
        }
        impl std::ops::$tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$via(&rhs).expect("operands share generators and field")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (GenSet, FieldDesc) {
        (GenSet::new(&["u11", "u12", "v11"]).unwrap(), FieldDesc::rational_functions("q").unwrap())
    }

    #[test]
    fn distributes() {
        let (g, f) = setup();
        let p = NCPoly::parse(&g, &f, "u11+u12").unwrap();
        let v = NCPoly::parse(&g, &f, "v11").unwrap();
        assert_eq!(&p * &v, NCPoly::parse(&g, &f, "u11*v11+u12*v11").unwrap());
        assert_eq!(&NCPoly::one(&g, &f) * &p, p);
    }

    #[test]
    fn render_round_trips() {
        let (g, f) = setup();
        for s in ["u11*v11+u12*v12", "-q*u11+(q+1)*v11-1/2", "(1/q)*u11*u12-2", "0", "1"] {
            let s = s.replace("v12", "v11");
            let p = NCPoly::parse(&g, &f, &s).unwrap();
            let back = NCPoly::parse(&g, &f, &p.render()).unwrap();
            assert_eq!(p, back, "{s} -> {}", p.render());
        }
        let p = NCPoly::parse(&g, &f, "u11*v11 - 1 + 2*u12").unwrap();
        assert_eq!(p.render(), "u11*v11+2*u12-1");
    }

    #[test]
    fn mismatch_detected() {
        let (g, f) = setup();
        let h = GenSet::new(&["x"]).unwrap();
        let a = NCPoly::one(&g, &f);
        let b = NCPoly::one(&h, &f);
        assert_eq!(a.try_mul(&b), Err(Error::GenSetMismatch));
    }
}
