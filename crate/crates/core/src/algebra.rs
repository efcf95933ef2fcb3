//! Common interface of finite-dimensional and presented Hopf algebras, so
//! that characters, convolution and corepresentations are written once.

use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Scalar};
use crate::ncalg::NCPoly;
use crate::verdict::{Bound, Verdict};
use std::fmt;

/// Character given by its values on algebra generators (basis vectors in the
/// finite-dimensional case, presentation generators otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCharacter {
    pub label: String,
    pub values: Vec<Scalar>,
}

impl GenCharacter {
    pub fn new(label: impl Into<String>, values: Vec<Scalar>) -> Self {
        GenCharacter { label: label.into(), values }
    }

    pub fn value(&self, i: usize) -> Result<&Scalar> {
        self.values.get(i).ok_or_else(|| Error::MissingValue(format!("{} has no value for generator {i}", self.label)))
    }
}

pub type TensorElem<E> = Vec<(E, E)>;

pub trait HopfAlgebra {
    type Elem: Clone + fmt::Debug;

    fn label(&self) -> &str;
    fn field(&self) -> &FieldDesc;
    /// Named algebra generators; maps that are (anti-)multiplicative are
    /// determined by their values here.
    fn generators(&self) -> Vec<(String, Self::Elem)>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Scalar) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn comult(&self, a: &Self::Elem) -> Result<TensorElem<Self::Elem>>;
    fn counit(&self, a: &Self::Elem) -> Result<Scalar>;
    fn antipode(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn antipode_inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn char_eval(&self, chi: &GenCharacter, a: &Self::Elem) -> Result<Scalar>;
    fn check_character(&self, chi: &GenCharacter) -> Result<Verdict>;
    fn counit_character(&self) -> GenCharacter;
    /// Decides `a = 0` in the algebra, soundly.
    fn vanishes(&self, a: &Self::Elem, bound: Bound) -> Result<Verdict>;
    /// Decides `Σ l⊗r = 0` in `A⊗A`, soundly.
    fn tensor_vanishes(&self, t: &[(Self::Elem, Self::Elem)], bound: Bound) -> Result<Verdict>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Coefficients on the underlying free basis (structure basis or words).
    fn coords(&self, a: &Self::Elem) -> Vec<(Vec<u32>, Scalar)>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(b, &-Scalar::one(self.field())))
    }

    fn unit_scaled(&self, c: &Scalar) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    /// Evaluates a free-algebra polynomial on the given generator images.
    fn eval_poly(&self, images: &[Self::Elem], p: &NCPoly) -> Self::Elem {
        let mut acc = self.zero();
        for (w, c) in p.terms() {
            let mut m = self.unit_scaled(c);
            for &g in w.letters() {
                m = self.mul(&m, &images[g as usize]);
            }
            acc = self.add(&acc, &m);
        }
        acc
    }

    /// `(id⊗Δ)Δ(a)` as triples.
    fn comult2(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, Self::Elem, Self::Elem)>> {
        let mut out = Vec::new();
        for (x, y) in self.comult(a)? {
            for (y1, y2) in self.comult(&y)? {
                out.push((x.clone(), y1, y2));
            }
        }
        Ok(out)
    }
}
