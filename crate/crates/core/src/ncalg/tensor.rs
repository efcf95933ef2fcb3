use super::ncpoly::NCPoly;
use super::word::{GenSet, Word};
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Element of `F ⊗ F` for the free algebra `F`, stored on pairs of words.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    gens: GenSet,
    field: FieldDesc,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero(gens: &GenSet, field: &FieldDesc) -> Self {
        TensorPoly { gens: gens.clone(), field: field.clone(), terms: BTreeMap::new() }
    }

    /// `a ⊗ b`.
    pub fn pure(a: &NCPoly, b: &NCPoly) -> Result<Self> {
        if a.gens() != b.gens() {
            return Err(Error::GenSetMismatch);
        }
        let mut t = Self::zero(a.gens(), a.field());
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                t.add_term(w1.clone(), w2.clone(), c1 * c2);
            }
        }
        Ok(t)
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length on each leg.
    pub fn leg_degrees(&self) -> (usize, usize) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), (w1, w2)| (a.max(w1.len()), b.max(w2.len())))
    }

    pub fn add_term(&mut self, w1: Word, w2: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w1, w2);
        match self.terms.get_mut(&key) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn compatible(&self, other: &TensorPoly) -> Result<()> {
        if self.gens != other.gens {
            return Err(Error::GenSetMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.try_add(&other.scale(&-Scalar::one(&self.field)))
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn try_mul(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.gens, &self.field);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut out = Self::zero(&self.gens, &self.field);
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }

    /// Exchanges the two legs.
    pub fn flip(&self) -> TensorPoly {
        let mut out = Self::zero(&self.gens, &self.field);
        for ((a, b), x) in &self.terms {
            out.add_term(b.clone(), a.clone(), x.clone());
        }
        out
    }

    /// Terms grouped as `Σ left ⊗ right` with the left legs monomials.
    pub fn legs(&self) -> Vec<(NCPoly, NCPoly)> {
        let mut grouped: BTreeMap<&Word, NCPoly> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            grouped
                .entry(a)
                .or_insert_with(|| NCPoly::zero(&self.gens, &self.field))
                .add_term(b.clone(), c.clone());
        }
        grouped
            .into_iter()
            .map(|(a, r)| (NCPoly::monomial(&self.gens, a.clone(), Scalar::one(&self.field)), r))
            .collect()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.legs()
            .iter()
            .rev()
            .map(|(a, b)| format!("{} ⊗ ({})", a.render(), b.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn componentwise_product() {
        let g = GenSet::new(&["a", "b"]).unwrap();
        let f = FieldDesc::Rationals;
        let p = |s| NCPoly::parse(&g, &f, s).unwrap();
        let x = TensorPoly::pure(&p("a"), &p("1+b")).unwrap();
        let y = TensorPoly::pure(&p("b"), &p("a")).unwrap();
        let z = TensorPoly::pure(&p("a*b"), &(p("1+b") * p("a"))).unwrap();
        assert_eq!(x.try_mul(&y).unwrap(), z);
        assert_eq!(x.leg_degrees(), (1, 1));
        assert_eq!(x.flip().flip(), x);
    }
}
