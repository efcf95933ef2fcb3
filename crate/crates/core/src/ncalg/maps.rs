use super::ncpoly::NCPoly;
use super::tensor::TensorPoly;
use super::word::{GenSet, Word};
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Scalar};

/// Generator images defining an algebra (or anti-algebra) map out of a free
/// algebra. Missing images are allowed until a word uses them.
#[derive(Clone, Debug)]
pub struct GenMap {
    source: GenSet,
    images: Vec<Option<NCPoly>>,
    target: GenSet,
    field: FieldDesc,
}

impl GenMap {
    pub fn new(source: &GenSet, target: &GenSet, field: &FieldDesc, images: Vec<Option<NCPoly>>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.len()
            )));
        }
        for im in images.iter().flatten() {
            if im.gens() != target {
                return Err(Error::GenSetMismatch);
            }
            if im.field() != field {
                return Err(Error::FieldMismatch(im.field().to_string(), field.to_string()));
            }
        }
        Ok(GenMap { source: source.clone(), images, target: target.clone(), field: field.clone() })
    }

    /// Complete map from a full list of images.
    pub fn total(source: &GenSet, target: &GenSet, field: &FieldDesc, images: Vec<NCPoly>) -> Result<Self> {
        Self::new(source, target, field, images.into_iter().map(Some).collect())
    }

    pub fn identity(gens: &GenSet, field: &FieldDesc) -> Self {
        let images = (0..gens.len() as u32).map(|g| Some(NCPoly::generator(gens, field, g))).collect();
        GenMap { source: gens.clone(), images, target: gens.clone(), field: field.clone() }
    }

    pub fn source(&self) -> &GenSet {
        &self.source
    }

    pub fn target(&self) -> &GenSet {
        &self.target
    }

    pub fn image(&self, g: u32) -> Result<&NCPoly> {
        self.images[g as usize]
            .as_ref()
            .ok_or_else(|| Error::MissingImage(self.source.name(g).to_string()))
    }

    fn word_image(&self, w: &Word, reverse: bool) -> Result<NCPoly> {
        let mut acc = NCPoly::one(&self.target, &self.field);
        let letters: Box<dyn Iterator<Item = &u32>> =
            if reverse { Box::new(w.letters().iter().rev()) } else { Box::new(w.letters().iter()) };
        for &g in letters {
            acc = acc.try_mul(self.image(g)?)?;
        }
        Ok(acc)
    }

    fn apply_with(&self, p: &NCPoly, reverse: bool) -> Result<NCPoly> {
        if p.gens() != &self.source {
            return Err(Error::GenSetMismatch);
        }
        let mut out = NCPoly::zero(&self.target, &self.field);
        for (w, c) in p.terms() {
            out = out.try_add(&self.word_image(w, reverse)?.scale(c))?;
        }
        Ok(out)
    }

    /// Multiplicative linear extension.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        self.apply_with(p, false)
    }

    /// Linear extension that reverses the order of letters.
    pub fn apply_anti(&self, p: &NCPoly) -> Result<NCPoly> {
        self.apply_with(p, true)
    }

    /// Applies the map to both legs of a tensor.
    pub fn apply_tensor(&self, t: &TensorPoly, reverse: bool) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero(&self.target, &self.field);
        for ((a, b), c) in t.terms() {
            let l = self.word_image(a, reverse)?.scale(c);
            let r = self.word_image(b, reverse)?;
            out = out.try_add(&TensorPoly::pure(&l, &r)?)?;
        }
        Ok(out)
    }

    /// `self ∘ other` as generator images (both taken as algebra maps).
    pub fn compose(&self, other: &GenMap) -> Result<GenMap> {
        if other.target != self.source {
            return Err(Error::GenSetMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|im| im.as_ref().map(|p| self.apply(p)).transpose())
            .collect::<Result<Vec<_>>>()?;
        GenMap::new(&other.source, &self.target, &self.field, images)
    }
}

/// Evaluates a word by substituting scalars and multiplying.
pub fn eval_scalar(values: &[Scalar], p: &NCPoly) -> Scalar {
    let mut acc = Scalar::zero(p.field());
    for (w, c) in p.terms() {
        let mut m = c.clone();
        for &g in w.letters() {
            m = &m * &values[g as usize];
        }
        acc = &acc + &m;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anti_map_reverses() {
        let g = GenSet::new(&["a", "b"]).unwrap();
        let f = FieldDesc::Rationals;
        let p = |s| NCPoly::parse(&g, &f, s).unwrap();
        let m = GenMap::total(&g, &g, &f, vec![p("a+b"), p("2*a")]).unwrap();
        assert_eq!(m.apply(&p("a*b")).unwrap(), p("(a+b)*2*a"));
        assert_eq!(m.apply_anti(&p("a*b")).unwrap(), p("2*a*(a+b)"));
        assert_eq!(m.apply(&p("a")).unwrap(), m.apply_anti(&p("a")).unwrap());
        assert_eq!(m.apply(&p("3")).unwrap(), p("3"));
    }

    #[test]
    fn missing_image_reported() {
        let g = GenSet::new(&["a", "b"]).unwrap();
        let f = FieldDesc::Rationals;
        let m = GenMap::new(&g, &g, &f, vec![Some(NCPoly::generator(&g, &f, 0)), None]).unwrap();
        let b = NCPoly::generator(&g, &f, 1);
        assert_eq!(m.apply(&b), Err(Error::MissingImage("b".into())));
    }
}
