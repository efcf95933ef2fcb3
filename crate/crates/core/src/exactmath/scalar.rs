//! Exact scalars in Q or in the rational function field Q(q).

use super::poly::Poly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// The base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    Rationals,
    RationalFunctions(Arc<str>),
}

impl FieldDesc {
    pub fn rationals() -> Self {
        FieldDesc::Rationals
    }

    pub fn rational_functions(var: &str) -> Result<Self> {
        let ok = !var.is_empty()
            && var.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Parse(format!("invalid field variable name `{var}`")));
        }
        Ok(FieldDesc::RationalFunctions(Arc::from(var)))
    }

    pub fn variable(&self) -> Option<&str> {
        match self {
            FieldDesc::Rationals => None,
            FieldDesc::RationalFunctions(v) => Some(v),
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::RationalFunctions(v) => write!(f, "Q({v})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    /// Constants, in either field.
    Rat(BigRational),
    /// A non-constant reduced fraction with monic denominator.
    Frac(Box<(Poly, Poly)>),
}

/// An exact field element.
///
/// Non-constant elements of Q(q) are kept as `num/den` with `gcd = 1` and
/// `den` monic; constants are stored as plain rationals. Equality is
/// structural, which is sound because the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldDesc,
    value: Value,
}

fn mismatch(a: &FieldDesc, b: &FieldDesc) -> Error {
    Error::FieldMismatch(a.to_string(), b.to_string())
}

impl Scalar {
    pub fn zero(field: &FieldDesc) -> Self {
        Self::from_rational(field, BigRational::zero())
    }

    pub fn one(field: &FieldDesc) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_int(field: &FieldDesc, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(field: &FieldDesc, n: i64, d: i64) -> Self {
        Self::from_rational(field, BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(field: &FieldDesc, r: BigRational) -> Self {
        Scalar { field: field.clone(), value: Value::Rat(r) }
    }

    /// The field variable `q`. Fails over Q.
    pub fn var(field: &FieldDesc) -> Result<Self> {
        match field {
            FieldDesc::Rationals => Err(Error::FieldMismatch(
                "Q".into(),
                "a rational function field".into(),
            )),
            FieldDesc::RationalFunctions(_) => Self::from_polys(field, Poly::var(), Poly::one()),
        }
    }

    /// Builds and normalizes `num/den`.
    pub fn from_polys(field: &FieldDesc, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if field == &FieldDesc::Rationals && !(num.is_constant() && den.is_constant()) {
            return Err(Error::FieldMismatch(
                "Q".into(),
                "a non-constant rational function".into(),
            ));
        }
        Ok(Self::normalize(field, num, den))
    }

    fn normalize(field: &FieldDesc, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero(field);
        }
        if den.is_constant() && num.is_constant() {
            return Self::from_rational(field, num.constant_term() / den.constant_term());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = d.leading().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        if d.is_constant() && n.is_constant() {
            return Self::from_rational(field, n.constant_term());
        }
        Scalar { field: field.clone(), value: Value::Frac(Box::new((n, d))) }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.value, Value::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.value, Value::Rat(r) if r.is_one())
    }

    /// The value as a rational if it is a constant.
    pub fn to_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            Value::Frac(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
    }

    pub fn numer(&self) -> Poly {
        match &self.value {
            Value::Rat(r) => Poly::constant(r.clone()),
            Value::Frac(b) => b.0.clone(),
        }
    }

    pub fn denom(&self) -> Poly {
        match &self.value {
            Value::Rat(_) => Poly::one(),
            Value::Frac(b) => b.1.clone(),
        }
    }

    /// Evaluates the field variable at `x`; `None` at a pole.
    pub fn eval_at(&self, x: &BigRational) -> Option<BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r.clone()),
            Value::Frac(b) => {
                let d = b.1.eval(x);
                if d.is_zero() {
                    None
                } else {
                    Some(b.0.eval(x) / d)
                }
            }
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(mismatch(&self.field, &other.field))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Self::from_rational(&self.field, a + b),
            _ => {
                let (an, ad) = (self.numer(), self.denom());
                let (bn, bd) = (other.numer(), other.denom());
                if ad == bd {
                    Self::normalize(&self.field, an.add(&bn), ad)
                } else {
                    Self::normalize(&self.field, an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
                }
            }
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Self::from_rational(&self.field, a * b),
            (Value::Rat(a), Value::Frac(f)) | (Value::Frac(f), Value::Rat(a)) => {
                if a.is_zero() {
                    Self::zero(&self.field)
                } else {
                    Scalar {
                        field: self.field.clone(),
                        value: Value::Frac(Box::new((f.0.scale(a), f.1.clone()))),
                    }
                }
            }
            (Value::Frac(x), Value::Frac(y)) => {
                let g1 = x.0.gcd(&y.1);
                let g2 = y.0.gcd(&x.1);
                let (xn, yd) = (x.0.div_rem(&g1).0, y.1.div_rem(&g1).0);
                let (yn, xd) = (y.0.div_rem(&g2).0, x.1.div_rem(&g2).0);
                Self::normalize(&self.field, xn.mul(&yn), xd.mul(&yd))
            }
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        match &self.value {
            Value::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Value::Rat(r) => Ok(Self::from_rational(&self.field, r.recip())),
            Value::Frac(f) => Ok(Self::normalize(&self.field, f.1.clone(), f.0.clone())),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match &self.value {
            Value::Rat(r) => Self::from_rational(&self.field, -r),
            Value::Frac(f) => Scalar {
                field: self.field.clone(),
                value: Value::Frac(Box::new((f.0.neg(), f.1.clone()))),
            },
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(&self.field);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Re-tags a constant for another field. Fails for non-constants.
    pub fn cast_constant(&self, field: &FieldDesc) -> Result<Scalar> {
        match &self.value {
            Value::Rat(r) => Ok(Self::from_rational(field, r.clone())),
            Value::Frac(_) => Err(mismatch(&self.field, field)),
        }
    }

    /// Parses the textual form produced by `Display`, and more generally any
    /// expression over integers and the field variable built from
    /// `+ - * / ^` and parentheses.
    pub fn parse(field: &FieldDesc, text: &str) -> Result<Scalar> {
        super::parse::parse_scalar(field, text)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Frac(b) => {
                let var = self.field.variable().unwrap_or("q");
                let scale = b.1.primitive_scale();
                let num = b.0.scale(&scale);
                let den = b.1.scale(&scale);
                let ns = num.render(var);
                let ns = if num.term_count() > 1 { format!("({ns})") } else { ns };
                if den.is_constant() && den.constant_term().is_one() {
                    return write!(f, "{}", num.render(var));
                }
                let ds = den.render(var);
                let single_plain = den.term_count() == 1
                    && den.leading().is_some_and(|l| l.is_one() && !l.is_negative());
                if single_plain {
                    write!(f, "{ns}/{ds}")
                } else {
                    write!(f, "{ns}/({ds})")
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// Panics if the operands live in different fields; use the
        /// `checked_*` methods when that is not already guaranteed.
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qf() -> FieldDesc {
        FieldDesc::rational_functions("q").unwrap()
    }

    #[test]
    fn reduces_common_factor() {
        let f = qf();
        let a = Scalar::from_polys(&f, Poly::from_i64s(&[-1, 1]), Poly::from_i64s(&[-1, 0, 1]))
            .unwrap();
        let expect = Scalar::from_polys(&f, Poly::one(), Poly::from_i64s(&[1, 1])).unwrap();
        assert_eq!(a, expect);
        assert_eq!(a.to_string(), "1/(q+1)");
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = qf();
        let x = Scalar::parse(&f, "(3*q^2-1)/(q+2)").unwrap();
        assert_eq!(&x + &Scalar::zero(&f), x);
    }

    #[test]
    fn one_plus_q_times_one_plus_q_inverse() {
        let f = qf();
        let q = Scalar::var(&f).unwrap();
        let one = Scalar::one(&f);
        let prod = (&one + &q) * (&one + &q.inv().unwrap());
        let expect =
            Scalar::from_polys(&f, Poly::from_i64s(&[1, 2, 1]), Poly::from_i64s(&[0, 1])).unwrap();
        assert_eq!(prod, expect);
        let two = BigRational::from_integer(2.into());
        assert_eq!(prod.eval_at(&two), Some(BigRational::new(9.into(), 2.into())));
    }

    #[test]
    fn field_mismatch_and_division_by_zero() {
        let f = qf();
        let a = Scalar::one(&f);
        let b = Scalar::one(&FieldDesc::Rationals);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert_eq!(a.checked_div(&Scalar::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        let f = qf();
        for s in ["q+1", "(q+1)/q", "-q", "1/q^2", "2*q/(2*q+1)", "3/2", "-1", "0"] {
            let x = Scalar::parse(&f, s).unwrap();
            assert_eq!(x.to_string(), s, "round trip of {s}");
        }
        let x = Scalar::parse(&f, "1/(2*q+1)").unwrap();
        assert_eq!(x.to_string(), "1/(2*q+1)");
    }
}
