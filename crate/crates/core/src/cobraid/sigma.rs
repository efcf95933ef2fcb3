//! Recursive evaluation of a bilinear form `σ` (or `σ⁻¹`) on words from its
//! values on generator pairs.
//!
//! `σ(xy, z) = Σ σ(x, z₁) σ(y, z₂)`, `σ(x, yz) = Σ σ(x₁, z) σ(x₂, y)`,
//! `σ⁻¹(xy, z) = Σ σ⁻¹(y, z₁) σ⁻¹(x, z₂)`, `σ⁻¹(x, yz) = Σ σ⁻¹(x₁, y) σ⁻¹(x₂, z)`
//! and `σ(1, x) = ε(x) = σ(x, 1)`. Each step shortens one argument.

use super::polysys::MPoly;
use crate::error::Result;
use crate::exactmath::Scalar;
use crate::hopf_pres::PresentedHopf;
use crate::ncalg::{NCPoly, Word};
use parking_lot::Mutex;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Coefficient ring for the evaluator: exact scalars, or polynomials in
/// unknown table entries when solving for a cobraiding.
pub trait Coeff: Clone + fmt::Debug + Send {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coeff for Scalar {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl Coeff for MPoly {
    fn add(&self, other: &Self) -> Self {
        MPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MPoly::mul(self, other)
    }
    fn scale(&self, c: &Scalar) -> Self {
        MPoly::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Sigma,
    SigmaInv,
}

/// Which letter is peeled: the first (left-first) or the last (right-first).
/// Both orders agree by coassociativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    LeftFirst,
    RightFirst,
}

pub type Legs = Arc<Vec<(Word, Word, Scalar)>>;

/// Shared memo of coproducts of words.
#[derive(Clone)]
pub struct CoproductCache {
    hopf: Arc<PresentedHopf>,
    memo: Arc<Mutex<HashMap<Word, Legs>>>,
}

impl fmt::Debug for CoproductCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoproductCache({})", self.hopf.label)
    }
}

impl CoproductCache {
    pub fn new(hopf: Arc<PresentedHopf>) -> Self {
        CoproductCache { hopf, memo: Arc::new(Mutex::new(HashMap::new())) }
    }

    pub fn hopf(&self) -> &PresentedHopf {
        &self.hopf
    }

    pub fn delta(&self, w: &Word) -> Result<Legs> {
        if let Some(l) = self.memo.lock().get(w) {
            return Ok(l.clone());
        }
        let h = &self.hopf;
        let field = h.presentation().field();
        let m = NCPoly::monomial(h.gens(), w.clone(), Scalar::one(field));
        let t = h.comult_poly(&m)?;
        let legs: Legs = Arc::new(t.terms().iter().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect());
        self.memo.lock().insert(w.clone(), legs.clone());
        Ok(legs)
    }

    /// `Δ⁽²⁾(w) = (Δ⊗id)Δ(w)` as triples.
    pub fn delta2(&self, w: &Word) -> Result<Vec<(Word, Word, Word, Scalar)>> {
        let mut out = Vec::new();
        for (a, b, c) in self.delta(w)?.iter() {
            for (a1, a2, d) in self.delta(a)?.iter() {
                out.push((a1.clone(), a2.clone(), b.clone(), c * d));
            }
        }
        Ok(out)
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        let field = self.hopf.presentation().field();
        let mut c = Scalar::one(field);
        for &g in w.letters() {
            c = &c * &self.hopf.counit_values()[g as usize];
        }
        c
    }
}

pub struct SigmaEvaluator<C: Coeff> {
    deltas: CoproductCache,
    table: Vec<C>,
    one: C,
    kind: Kind,
    order: Order,
    memo: Mutex<HashMap<(Word, Word), C>>,
}

impl<C: Coeff> fmt::Debug for SigmaEvaluator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SigmaEvaluator({:?}, {:?})", self.kind, self.order)
    }
}

impl<C: Coeff> SigmaEvaluator<C> {
    /// `table[i·n + j]` is the value on generator pair `(i, j)`; `one` is the
    /// unit of the coefficient ring.
    pub fn new(deltas: CoproductCache, table: Vec<C>, one: C, kind: Kind, order: Order) -> Self {
        SigmaEvaluator { deltas, table, one, kind, order, memo: Mutex::new(HashMap::new()) }
    }

    pub fn table(&self) -> &[C] {
        &self.table
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn zero(&self) -> C {
        self.one.scale(&Scalar::zero(self.deltas.hopf().presentation().field()))
    }

    pub fn words(&self, w: &Word, z: &Word) -> Result<C> {
        if let Some(v) = self.memo.lock().get(&(w.clone(), z.clone())) {
            return Ok(v.clone());
        }
        let v = self.compute(w, z)?;
        self.memo.lock().insert((w.clone(), z.clone()), v.clone());
        Ok(v)
    }

    fn compute(&self, w: &Word, z: &Word) -> Result<C> {
        if w.is_empty() {
            return Ok(self.one.scale(&self.deltas.counit_word(z)));
        }
        if z.is_empty() {
            return Ok(self.one.scale(&self.deltas.counit_word(w)));
        }
        let n = self.deltas.hopf().gens().len();
        if w.len() == 1 && z.len() == 1 {
            return Ok(self.table[w.letters()[0] as usize * n + z.letters()[0] as usize].clone());
        }
        let inv = self.kind == Kind::SigmaInv;
        let mut acc = self.zero();
        if w.len() >= 2 {
            // peel a letter of the left argument, expand the right one
            let (x, rest) = match self.order {
                Order::LeftFirst => {
                    let (g, r) = w.split_first().unwrap();
                    (Word::letter(g), r)
                }
                Order::RightFirst => {
                    let (r, g) = w.split_last().unwrap();
                    (Word::letter(g), r)
                }
            };
            // left-first: w = x·rest; right-first: w = rest·x
            let (first, second) = match self.order {
                Order::LeftFirst => (&x, &rest),
                Order::RightFirst => (&rest, &x),
            };
            for (z1, z2, c) in self.deltas.delta(z)?.iter() {
                let v = if inv {
                    self.words(second, z1)?.mul(&self.words(first, z2)?)
                } else {
                    self.words(first, z1)?.mul(&self.words(second, z2)?)
                };
                if !v.is_zero() {
                    acc = acc.add(&v.scale(c));
                }
            }
        } else {
            let (y, rest) = match self.order {
                Order::LeftFirst => {
                    let (g, r) = z.split_first().unwrap();
                    (Word::letter(g), r)
                }
                Order::RightFirst => {
                    let (r, g) = z.split_last().unwrap();
                    (Word::letter(g), r)
                }
            };
            let (first, second) = match self.order {
                Order::LeftFirst => (&y, &rest),
                Order::RightFirst => (&rest, &y),
            };
            // z = first·second; σ(x, first·second) = Σ σ(x₁, second) σ(x₂, first)
            for (x1, x2, c) in self.deltas.delta(w)?.iter() {
                let v = if inv {
                    self.words(x1, first)?.mul(&self.words(x2, second)?)
                } else {
                    self.words(x1, second)?.mul(&self.words(x2, first)?)
                };
                if !v.is_zero() {
                    acc = acc.add(&v.scale(c));
                }
            }
        }
        Ok(acc)
    }

    /// Bilinear extension to polynomials.
    pub fn eval(&self, p: &NCPoly, r: &NCPoly) -> Result<C> {
        let mut acc = self.zero();
        for (w, a) in p.terms() {
            for (z, b) in r.terms() {
                acc = acc.add(&self.words(w, z)?.scale(&(a * b)));
            }
        }
        Ok(acc)
    }

    pub fn eval_word_poly(&self, w: &Word, r: &NCPoly) -> Result<C> {
        let mut acc = self.zero();
        for (z, b) in r.terms() {
            acc = acc.add(&self.words(w, z)?.scale(b));
        }
        Ok(acc)
    }

    pub fn eval_poly_word(&self, p: &NCPoly, z: &Word) -> Result<C> {
        let mut acc = self.zero();
        for (w, a) in p.terms() {
            acc = acc.add(&self.words(w, z)?.scale(a));
        }
        Ok(acc)
    }
}
