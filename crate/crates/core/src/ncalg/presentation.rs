use super::membership::SpanCache;
use super::ncpoly::NCPoly;
use super::tensor::TensorPoly;
use super::word::GenSet;
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Matrix};
use std::fmt;
use std::sync::Arc;

/// Finite presentation: free algebra on `gens` modulo the two-sided ideal
/// generated by `relations`.
///
/// Relations are stored monic (leading coefficient one) so that presentations
/// differing by nonzero rescalings of relations compare equal.
#[derive(Clone)]
pub struct Presentation {
    gens: GenSet,
    field: FieldDesc,
    relations: Vec<NCPoly>,
    witnesses: Vec<Representation>,
    pub(crate) cache: Arc<SpanCache>,
}

impl Presentation {
    pub fn new(gens: &GenSet, field: &FieldDesc, relations: Vec<NCPoly>) -> Result<Self> {
        if let Some(v) = field.variable() {
            if gens.names().iter().any(|n| n == v) {
                return Err(Error::InvalidPresentation(format!("generator `{v}` shadows the field variable")));
            }
        }
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.gens() != gens {
                return Err(Error::GenSetMismatch);
            }
            if r.field() != field {
                return Err(Error::FieldMismatch(r.field().to_string(), field.to_string()));
            }
            if r.is_zero() {
                return Err(Error::InvalidPresentation("zero relation".into()));
            }
            if r.degree() == 0 {
                return Err(Error::InvalidPresentation("constant relation".into()));
            }
            let m = r.monic();
            if !rels.contains(&m) {
                rels.push(m);
            }
        }
        Ok(Presentation {
            gens: gens.clone(),
            field: field.clone(),
            relations: rels,
            witnesses: Vec::new(),
            cache: Arc::new(SpanCache::default()),
        })
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(NCPoly::degree).max().unwrap_or(0)
    }

    pub fn witnesses(&self) -> &[Representation] {
        &self.witnesses
    }

    /// Registers a representation used to certify non-membership. It must
    /// annihilate every relation.
    pub fn add_witness(&mut self, rep: Representation) -> Result<()> {
        if rep.images.len() != self.gens.len() {
            return Err(Error::ShapeMismatch("witness needs one matrix per generator".into()));
        }
        for r in &self.relations {
            if !rep.eval(r)?.is_zero() {
                return Err(Error::NotARepresentation(format!(
                    "`{}` does not annihilate {}",
                    rep.label,
                    r.render()
                )));
            }
        }
        self.witnesses.push(rep);
        Ok(())
    }

    pub fn with_witness(mut self, rep: Representation) -> Result<Self> {
        self.add_witness(rep)?;
        Ok(self)
    }

    /// A witness whose image of `p` is nonzero, proving `p` is not in the
    /// ideal.
    pub fn refute(&self, p: &NCPoly) -> Option<String> {
        self.witnesses.iter().find_map(|w| match w.eval(p) {
            Ok(m) if !m.is_zero() => Some(format!("{} maps it to {}", w.label, m)),
            _ => None,
        })
    }

    /// Same for `I⊗F + F⊗I`, using pairs of witnesses.
    pub fn refute_tensor(&self, t: &TensorPoly) -> Option<String> {
        for a in &self.witnesses {
            for b in &self.witnesses {
                if let Ok(m) = a.eval_tensor(b, t) {
                    if !m.is_zero() {
                        return Some(format!("{} ⊗ {} maps it to {}", a.label, b.label, m));
                    }
                }
            }
        }
        None
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.field == other.field && self.relations == other.relations
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("gens", &self.gens)
            .field("field", &self.field.to_string())
            .field("relations", &self.relations.iter().map(NCPoly::render).collect::<Vec<_>>())
            .finish()
    }
}

/// Matrix images of generators; a representation of the presented algebra
/// once it kills the relations.
#[derive(Clone, Debug)]
pub struct Representation {
    pub label: String,
    pub dim: usize,
    pub images: Vec<Matrix>,
}

impl Representation {
    pub fn new(label: &str, images: Vec<Matrix>) -> Result<Self> {
        let dim = images.first().map_or(1, Matrix::rows);
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch("witness matrices must share one square size".into()));
        }
        Ok(Representation { label: label.to_string(), dim, images })
    }

    pub fn eval(&self, p: &NCPoly) -> Result<Matrix> {
        let f = p.field();
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (w, c) in p.terms() {
            let mut m = Matrix::identity(f, self.dim);
            for &g in w.letters() {
                m = m.mul(&self.images[g as usize])?;
            }
            acc = acc.add(&m.scale(c))?;
        }
        Ok(acc)
    }

    /// `(self ⊗ other)(t)` as a Kronecker product.
    pub fn eval_tensor(&self, other: &Representation, t: &TensorPoly) -> Result<Matrix> {
        let f = t.field();
        let n = self.dim * other.dim;
        let mut acc = Matrix::zeros(f, n, n);
        for ((a, b), c) in t.terms() {
            let pa = NCPoly::monomial(t.gens(), a.clone(), c.clone());
            let pb = NCPoly::monomial(t.gens(), b.clone(), crate::exactmath::Scalar::one(f));
            acc = acc.add(&self.eval(&pa)?.kron(&other.eval(&pb)?))?;
        }
        Ok(acc)
    }
}
