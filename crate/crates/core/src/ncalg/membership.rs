//! Degree-truncated two-sided ideal membership.
//!
//! For a bound `D` the span of all `x·r·y` with `deg ≤ D` is kept as a sparse
//! echelon basis keyed by leading word. A polynomial lies in the span iff top
//! reduction empties it. Complete reduction gives a normal form whose kernel is
//! exactly the span, which also decides membership in `I⊗F + F⊗I`.

use super::ncpoly::NCPoly;
use super::presentation::Presentation;
use super::tensor::TensorPoly;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exactmath::Scalar;
use parking_lot::Mutex;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    Inconclusive { degree: usize },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

/// Write-once cache of span bases, one per degree bound.
#[derive(Default)]
pub struct SpanCache {
    slots: Mutex<HashMap<usize, Arc<OnceLock<Arc<SpanBasis>>>>>,
}

impl SpanCache {
    fn get(&self, pres: &Presentation, degree: usize) -> Arc<SpanBasis> {
        let slot = self.slots.lock().entry(degree).or_default().clone();
        slot.get_or_init(|| Arc::new(SpanBasis::build(pres, degree))).clone()
    }
}

/// Order-preserving integer ids for words of length at most a bound.
struct WordIndex {
    base: u64,
    offsets: Vec<u64>,
}

impl WordIndex {
    fn new(ngens: usize, max_len: usize) -> Self {
        let base = ngens as u64;
        let mut offsets = Vec::with_capacity(max_len + 2);
        let mut acc = 0u64;
        let mut pow = 1u64;
        for _ in 0..=max_len + 1 {
            offsets.push(acc);
            acc += pow;
            pow = pow.saturating_mul(base.max(1));
        }
        WordIndex { base, offsets }
    }

    fn rank(&self, w: &Word) -> u64 {
        let v = w.letters().iter().fold(0u64, |acc, &g| acc * self.base + g as u64);
        self.offsets[w.len()] + v
    }

    fn unrank(&self, id: u64) -> Word {
        let len = self.offsets.partition_point(|&o| o <= id) - 1;
        let mut v = id - self.offsets[len];
        let mut letters = vec![0u32; len];
        for slot in letters.iter_mut().rev() {
            *slot = (v % self.base) as u32;
            v /= self.base;
        }
        Word::from_letters(letters)
    }
}

type Row = Vec<(u64, Scalar)>;

/// Echelon basis of the degree-truncated ideal span.
pub struct SpanBasis {
    degree: usize,
    index: WordIndex,
    rows: Vec<Row>,
    pivots: HashMap<u64, usize>,
}

impl SpanBasis {
    fn build(pres: &Presentation, degree: usize) -> Self {
        let ngens = pres.gens().len();
        let mut basis = SpanBasis {
            degree,
            index: WordIndex::new(ngens, degree),
            rows: Vec::new(),
            pivots: HashMap::new(),
        };
        for r in pres.relations() {
            let dr = r.degree();
            if dr > degree {
                continue;
            }
            for extra in 0..=degree - dr {
                for left in 0..=extra {
                    let xs = Word::all_of_length(ngens, left);
                    let ys = Word::all_of_length(ngens, extra - left);
                    for x in &xs {
                        for y in &ys {
                            let mut work = BTreeMap::new();
                            for (w, c) in r.terms() {
                                work.insert(basis.index.rank(&x.concat(w).concat(y)), c.clone());
                            }
                            basis.insert(work);
                        }
                    }
                }
            }
        }
        basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn axpy(work: &mut BTreeMap<u64, Scalar>, c: &Scalar, row: &Row) {
        for (k, v) in row {
            let d = c * v;
            match work.get_mut(k) {
                Some(old) => {
                    let s = &*old - &d;
                    if s.is_zero() {
                        work.remove(k);
                    } else {
                        *old = s;
                    }
                }
                None => {
                    work.insert(*k, -d);
                }
            }
        }
    }

    fn top_reduce(&self, work: &mut BTreeMap<u64, Scalar>) {
        while let Some((&lead, c)) = work.iter().next_back() {
            let Some(&i) = self.pivots.get(&lead) else { break };
            let c = c.clone();
            Self::axpy(work, &c, &self.rows[i]);
        }
    }

    fn insert(&mut self, mut work: BTreeMap<u64, Scalar>) {
        self.top_reduce(&mut work);
        let Some((&lead, c)) = work.iter().next_back() else { return };
        let inv = c.inv().expect("nonzero lead");
        let row: Row = work.iter().rev().map(|(k, v)| (*k, v * &inv)).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(row);
    }

    fn load(&self, p: &NCPoly) -> BTreeMap<u64, Scalar> {
        p.terms().iter().map(|(w, c)| (self.index.rank(w), c.clone())).collect()
    }

    pub fn contains(&self, p: &NCPoly) -> bool {
        let mut work = self.load(p);
        self.top_reduce(&mut work);
        work.is_empty()
    }

    /// Complete reduction against the basis.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        let mut work = self.load(p);
        let mut done: Vec<(u64, Scalar)> = Vec::new();
        while let Some((&k, c)) = work.iter().next_back() {
            let c = c.clone();
            match self.pivots.get(&k) {
                Some(&i) => Self::axpy(&mut work, &c, &self.rows[i]),
                None => {
                    work.remove(&k);
                    done.push((k, c));
                }
            }
        }
        NCPoly::from_terms(p.gens(), p.field(), done.into_iter().map(|(k, c)| (self.index.unrank(k), c)))
    }
}

fn span(pres: &Presentation, degree: usize) -> Arc<SpanBasis> {
    pres.cache.get(pres, degree)
}

fn check_poly(p: &NCPoly, pres: &Presentation, degree: usize) -> Result<()> {
    if p.gens() != pres.gens() {
        return Err(Error::GenSetMismatch);
    }
    if p.field() != pres.field() {
        return Err(Error::FieldMismatch(p.field().to_string(), pres.field().to_string()));
    }
    if p.degree() > degree {
        return Err(Error::DegreeExceeded { degree: p.degree(), bound: degree });
    }
    Ok(())
}

/// Sound test for `p ∈ I` using multiples of relations up to degree `degree`.
pub fn ideal_membership(p: &NCPoly, pres: &Presentation, degree: usize) -> Result<Membership> {
    check_poly(p, pres, degree)?;
    if p.is_zero() || span(pres, degree).contains(p) {
        Ok(Membership::Member)
    } else {
        Ok(Membership::Inconclusive { degree })
    }
}

/// Normal form of `p` modulo the degree-truncated span.
pub fn normal_form(p: &NCPoly, pres: &Presentation, degree: usize) -> Result<NCPoly> {
    check_poly(p, pres, degree)?;
    Ok(span(pres, degree).normal_form(p))
}

/// Sound test for `t ∈ I⊗F + F⊗I` with both legs truncated at `degree`.
pub fn tensor_ideal_membership(t: &TensorPoly, pres: &Presentation, degree: usize) -> Result<Membership> {
    if t.gens() != pres.gens() {
        return Err(Error::GenSetMismatch);
    }
    let (d1, d2) = t.leg_degrees();
    if d1.max(d2) > degree {
        return Err(Error::DegreeExceeded { degree: d1.max(d2), bound: degree });
    }
    if t.is_zero() {
        return Ok(Membership::Member);
    }
    let basis = span(pres, degree);
    let one = Scalar::one(pres.field());
    let mut nf_cache: HashMap<&Word, NCPoly> = HashMap::new();
    let nf = |w: &'_ Word| -> NCPoly {
        basis.normal_form(&NCPoly::monomial(pres.gens(), w.clone(), one.clone()))
    };
    let mut reduced = TensorPoly::zero(pres.gens(), pres.field());
    for ((a, b), c) in t.terms() {
        let na = nf_cache.entry(a).or_insert_with(|| nf(a)).clone();
        let nb = nf_cache.entry(b).or_insert_with(|| nf(b)).clone();
        if na.is_zero() || nb.is_zero() {
            continue;
        }
        reduced = reduced.try_add(&TensorPoly::pure(&na.scale(c), &nb)?)?;
    }
    if reduced.is_zero() {
        Ok(Membership::Member)
    } else {
        Ok(Membership::Inconclusive { degree })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldDesc;
    use crate::ncalg::GenSet;

    #[test]
    fn word_index_round_trips() {
        let idx = WordIndex::new(3, 4);
        let words = Word::all_up_to(3, 4);
        for (i, w) in words.iter().enumerate() {
            assert_eq!(idx.rank(w), i as u64);
            assert_eq!(&idx.unrank(i as u64), w);
        }
        let one = WordIndex::new(1, 3);
        assert_eq!(one.unrank(one.rank(&Word::from_letters(vec![0, 0]))).len(), 2);
    }

    #[test]
    fn laurent_relations() {
        let g = GenSet::new(&["t", "s"]).unwrap();
        let f = FieldDesc::Rationals;
        let p = |x| NCPoly::parse(&g, &f, x).unwrap();
        let pres = Presentation::new(&g, &f, vec![p("t*s-1"), p("s*t-1")]).unwrap();
        assert!(ideal_membership(&p("t*t*s*s-1"), &pres, 4).unwrap().is_member());
        assert_eq!(ideal_membership(&p("t-1"), &pres, 4).unwrap(), Membership::Inconclusive { degree: 4 });
        assert!(matches!(ideal_membership(&p("t^3"), &pres, 2), Err(Error::DegreeExceeded { .. })));
        let nf = normal_form(&p("t*s+t"), &pres, 2).unwrap();
        assert_eq!(nf, p("1+t"));
        let r = TensorPoly::pure(&p("t*s-1"), &p("t")).unwrap();
        assert!(tensor_ideal_membership(&r, &pres, 2).unwrap().is_member());
        let n = TensorPoly::pure(&p("t"), &p("t")).unwrap();
        assert!(!tensor_ideal_membership(&n, &pres, 2).unwrap().is_member());
    }
}
