//! Hopf structures on finitely presented algebras.

use crate::algebra::{GenCharacter, HopfAlgebra, TensorElem};
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Matrix, Scalar};
use crate::hopf_fd::builtin_sweedler;
use crate::ncalg::{
    eval_scalar, ideal_membership, tensor_ideal_membership, GenMap, GenSet, NCPoly, Presentation, Representation,
    TensorPoly,
};
use crate::verdict::{Bound, Report, Verdict};

#[derive(Clone, Debug)]
pub struct PresentedHopf {
    pub label: String,
    pres: Presentation,
    comult: Vec<TensorPoly>,
    counit: Vec<Scalar>,
    antipode: GenMap,
    antipode_inv: Option<GenMap>,
    pub notes: Vec<String>,
}

/// Group-like candidate with an explicit two-sided inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikeElement {
    pub element: NCPoly,
    pub inverse: NCPoly,
}

impl PresentedHopf {
    /// Assembles the structure. When the counit kills every relation it is
    /// registered as a refutation witness.
    pub fn new(
        label: &str,
        pres: Presentation,
        comult: Vec<TensorPoly>,
        counit: Vec<Scalar>,
        antipode: Vec<NCPoly>,
        antipode_inv: Option<Vec<NCPoly>>,
    ) -> Result<Self> {
        let gens = pres.gens().clone();
        let field = pres.field().clone();
        let n = gens.len();
        for (what, len) in [("comult", comult.len()), ("counit", counit.len()), ("antipode", antipode.len())] {
            if len != n {
                return Err(Error::MissingImage(format!("{what} given on {len} of {n} generators")));
            }
        }
        if comult.iter().any(|t| t.gens() != &gens) {
            return Err(Error::GenSetMismatch);
        }
        let antipode = GenMap::total(&gens, &gens, &field, antipode)?;
        let antipode_inv = match antipode_inv {
            Some(v) if v.len() != n => {
                return Err(Error::MissingImage(format!("antipode_inv given on {} of {n} generators", v.len())))
            }
            Some(v) => Some(GenMap::total(&gens, &gens, &field, v)?),
            None => None,
        };
        let mut pres = pres;
        if pres.relations().iter().all(|r| eval_scalar(&counit, r).is_zero()) {
            let images = counit.iter().map(|c| Matrix::diag(&field, std::slice::from_ref(c))).collect();
            pres.add_witness(Representation::new("ε", images)?)?;
        }
        Ok(PresentedHopf { label: label.to_string(), pres, comult, counit, antipode, antipode_inv, notes: Vec::new() })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn gens(&self) -> &GenSet {
        self.pres.gens()
    }

    pub fn add_witness(&mut self, rep: Representation) -> Result<()> {
        self.pres.add_witness(rep)
    }

    pub fn gen(&self, name: &str) -> Result<NCPoly> {
        NCPoly::named(self.pres.gens(), self.pres.field(), name)
    }

    pub fn parse(&self, text: &str) -> Result<NCPoly> {
        NCPoly::parse(self.pres.gens(), self.pres.field(), text)
    }

    pub fn comult_of_gen(&self, g: u32) -> &TensorPoly {
        &self.comult[g as usize]
    }

    pub fn counit_values(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_map(&self) -> &GenMap {
        &self.antipode
    }

    pub fn antipode_inv_map(&self) -> Option<&GenMap> {
        self.antipode_inv.as_ref()
    }

    /// Multiplicative extension of Δ.
    pub fn comult_poly(&self, p: &NCPoly) -> Result<TensorPoly> {
        let gens = self.pres.gens();
        let field = self.pres.field();
        let mut out = TensorPoly::zero(gens, field);
        let unit = TensorPoly::pure(&NCPoly::one(gens, field), &NCPoly::one(gens, field))?;
        for (w, c) in p.terms() {
            let mut acc = unit.clone();
            for &g in w.letters() {
                acc = acc.try_mul(&self.comult[g as usize])?;
            }
            out = out.try_add(&acc.scale(c))?;
        }
        Ok(out)
    }

    pub fn counit_poly(&self, p: &NCPoly) -> Scalar {
        eval_scalar(&self.counit, p)
    }

    pub fn antipode_poly(&self, p: &NCPoly) -> Result<NCPoly> {
        self.antipode.apply_anti(p)
    }

    pub fn antipode_inv_poly(&self, p: &NCPoly) -> Result<NCPoly> {
        self.antipode_inv.as_ref().ok_or(Error::MissingInverse)?.apply_anti(p)
    }

    /// Sound zero test in the quotient: witness refutation, then truncated
    /// membership at the smallest useful degree and at the resolved bound.
    pub fn vanish_poly(&self, p: &NCPoly, bound: Bound) -> Result<Verdict> {
        if p.is_zero() {
            return Ok(Verdict::Pass);
        }
        if let Some(w) = self.pres.refute(p) {
            return Ok(Verdict::fail(format!("{} ≠ 0: {w}", p.render())));
        }
        let deg = p.degree();
        let target = bound.resolve(deg)?;
        let first = deg.max(self.pres.max_relation_degree()).min(target);
        for d in [first, target] {
            if ideal_membership(p, &self.pres, d)?.is_member() {
                return Ok(Verdict::Pass);
            }
        }
        Ok(Verdict::Inconclusive { degree: target, detail: format!("residual {} not reduced", p.render()) })
    }

    pub fn vanish_tensor(&self, t: &TensorPoly, bound: Bound) -> Result<Verdict> {
        if t.is_zero() {
            return Ok(Verdict::Pass);
        }
        if let Some(w) = self.pres.refute_tensor(t) {
            return Ok(Verdict::fail(format!("tensor residual ≠ 0: {w}")));
        }
        let (a, b) = t.leg_degrees();
        let deg = a.max(b);
        let target = bound.resolve(deg)?;
        let first = deg.max(self.pres.max_relation_degree()).min(target);
        for d in [first, target] {
            if tensor_ideal_membership(t, &self.pres, d)?.is_member() {
                return Ok(Verdict::Pass);
            }
        }
        Ok(Verdict::Inconclusive { degree: target, detail: format!("tensor residual {} not reduced", t.render()) })
    }

    fn each_relation(&self, f: impl Fn(&NCPoly) -> Result<Verdict>) -> Result<Verdict> {
        let mut v = Verdict::Pass;
        for r in self.pres.relations() {
            v = v.and(f(r)?.context(&format!("relation {}", r.render())));
        }
        Ok(v)
    }

    fn each_generator(&self, f: impl Fn(u32, &NCPoly) -> Result<Verdict>) -> Result<Verdict> {
        let gens = self.pres.gens();
        let mut v = Verdict::Pass;
        for g in 0..gens.len() as u32 {
            let x = NCPoly::generator(gens, self.pres.field(), g);
            v = v.and(f(g, &x)?.context(&format!("generator {}", gens.name(g))));
        }
        Ok(v)
    }

    pub fn check_comult_well_defined(&self, bound: Bound) -> Result<Verdict> {
        self.each_relation(|r| self.vanish_tensor(&self.comult_poly(r)?, bound))
    }

    pub fn check_counit_well_defined(&self) -> Result<Verdict> {
        self.each_relation(|r| {
            let e = self.counit_poly(r);
            Ok(Verdict::from_bool(e.is_zero(), || format!("ε = {e}")))
        })
    }

    pub fn check_antipode_well_defined(&self, bound: Bound) -> Result<Verdict> {
        self.each_relation(|r| self.vanish_poly(&self.antipode_poly(r)?, bound))
    }

    pub fn check_antipode_inv_well_defined(&self, bound: Bound) -> Result<Verdict> {
        self.each_relation(|r| self.vanish_poly(&self.antipode_inv_poly(r)?, bound))
    }

    pub fn check_antipode_axiom(&self, bound: Bound) -> Result<Verdict> {
        self.each_generator(|g, x| {
            let eps = NCPoly::constant(self.gens(), self.counit[g as usize].clone());
            let mut left = eps.neg();
            let mut right = eps.neg();
            for ((a, b), c) in self.comult_poly(x)?.terms() {
                let a = NCPoly::monomial(self.gens(), a.clone(), c.clone());
                let b = NCPoly::monomial(self.gens(), b.clone(), Scalar::one(self.pres.field()));
                left = &left + &(&self.antipode_poly(&a)? * &b);
                right = &right + &(&a * &self.antipode_poly(&b)?);
            }
            Ok(self.vanish_poly(&left, bound)?.context("m(S⊗id)Δ").and(self.vanish_poly(&right, bound)?.context("m(id⊗S)Δ")))
        })
    }

    pub fn check_antipode_inverse(&self, bound: Bound) -> Result<Verdict> {
        if self.antipode_inv.is_none() {
            return Err(Error::MissingInverse);
        }
        self.each_generator(|_, x| {
            let a = &self.antipode_poly(&self.antipode_inv_poly(x)?)? - x;
            let b = &self.antipode_inv_poly(&self.antipode_poly(x)?)? - x;
            Ok(self.vanish_poly(&a, bound)?.context("S∘S⁻¹").and(self.vanish_poly(&b, bound)?.context("S⁻¹∘S")))
        })
    }

    pub fn check_group_like(&self, g: &GroupLikeElement, bound: Bound) -> Result<Verdict> {
        let t = TensorPoly::pure(&g.element, &g.element)?;
        let delta = self.comult_poly(&g.element)?.try_sub(&t)?;
        let eps = self.counit_poly(&g.element);
        let one = NCPoly::one(self.gens(), self.pres.field());
        let mut v = self.vanish_tensor(&delta, bound)?.context("Δ(g) = g⊗g");
        v = v.and(Verdict::from_bool(eps.is_one(), || format!("ε(g) = {eps}")));
        v = v.and(self.vanish_poly(&(&(&g.element * &g.inverse) - &one), bound)?.context("g·g⁻¹ = 1"));
        v = v.and(self.vanish_poly(&(&(&g.inverse * &g.element) - &one), bound)?.context("g⁻¹·g = 1"));
        Ok(v)
    }

    /// `S⁻¹(x) ≡ g S(x) g⁻¹` on every generator (group-likeness checked too).
    pub fn check_sovereign_element(&self, g: &GroupLikeElement, bound: Bound) -> Result<Verdict> {
        let gl = self.check_group_like(g, bound)?;
        let sov = self.each_generator(|_, x| {
            let r = &self.antipode_inv_poly(x)? - &(&(&g.element * &self.antipode_poly(x)?) * &g.inverse);
            self.vanish_poly(&r, bound)
        })?;
        Ok(gl.and(sov))
    }

    /// The whole well-definedness and axiom suite.
    pub fn verify(&self, bound: Bound) -> Result<Report> {
        let mut rep = Report::new(self.label.clone());
        rep.push("counit_well_defined", self.check_counit_well_defined()?);
        rep.push("comult_well_defined", self.check_comult_well_defined(bound)?);
        rep.push("antipode_well_defined", self.check_antipode_well_defined(bound)?);
        rep.push("antipode_axiom", self.check_antipode_axiom(bound)?);
        if self.antipode_inv.is_some() {
            rep.push("antipode_inv_well_defined", self.check_antipode_inv_well_defined(bound)?);
            rep.push("antipode_inverse", self.check_antipode_inverse(bound)?);
        }
        for n in &self.notes {
            rep.note(n.clone());
        }
        Ok(rep)
    }
}

impl HopfAlgebra for PresentedHopf {
    type Elem = NCPoly;

    fn label(&self) -> &str {
        &self.label
    }

    fn field(&self) -> &FieldDesc {
        self.pres.field()
    }

    fn generators(&self) -> Vec<(String, NCPoly)> {
        let gens = self.pres.gens();
        (0..gens.len() as u32)
            .map(|g| (gens.name(g).to_string(), NCPoly::generator(gens, self.pres.field(), g)))
            .collect()
    }

    fn zero(&self) -> NCPoly {
        NCPoly::zero(self.pres.gens(), self.pres.field())
    }

    fn one(&self) -> NCPoly {
        NCPoly::one(self.pres.gens(), self.pres.field())
    }

    fn add(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a + b
    }

    fn scale(&self, a: &NCPoly, c: &Scalar) -> NCPoly {
        a.scale(c)
    }

    fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a * b
    }

    fn comult(&self, a: &NCPoly) -> Result<TensorElem<NCPoly>> {
        Ok(self.comult_poly(a)?.legs())
    }

    fn counit(&self, a: &NCPoly) -> Result<Scalar> {
        Ok(self.counit_poly(a))
    }

    fn antipode(&self, a: &NCPoly) -> Result<NCPoly> {
        self.antipode_poly(a)
    }

    fn antipode_inv(&self, a: &NCPoly) -> Result<NCPoly> {
        self.antipode_inv_poly(a)
    }

    fn char_eval(&self, chi: &GenCharacter, a: &NCPoly) -> Result<Scalar> {
        if chi.values.len() != self.pres.gens().len() {
            return Err(Error::MissingValue(format!(
                "{} has {} values for {} generators",
                chi.label,
                chi.values.len(),
                self.pres.gens().len()
            )));
        }
        Ok(eval_scalar(&chi.values, a))
    }

    fn check_character(&self, chi: &GenCharacter) -> Result<Verdict> {
        let mut v = Verdict::Pass;
        for r in self.pres.relations() {
            let x = self.char_eval(chi, r)?;
            v = v.and(Verdict::from_bool(x.is_zero(), || {
                format!("{} maps relation {} to {x}", chi.label, r.render())
            }));
        }
        Ok(v)
    }

    fn counit_character(&self) -> GenCharacter {
        GenCharacter::new("ε", self.counit.clone())
    }

    fn vanishes(&self, a: &NCPoly, bound: Bound) -> Result<Verdict> {
        self.vanish_poly(a, bound)
    }

    fn tensor_vanishes(&self, t: &[(NCPoly, NCPoly)], bound: Bound) -> Result<Verdict> {
        let mut acc = TensorPoly::zero(self.pres.gens(), self.pres.field());
        for (l, r) in t {
            acc = acc.try_add(&TensorPoly::pure(l, r)?)?;
        }
        self.vanish_tensor(&acc, bound)
    }

    fn coords(&self, a: &NCPoly) -> Vec<(Vec<u32>, Scalar)> {
        a.terms().iter().map(|(w, c)| (w.letters().to_vec(), c.clone())).collect()
    }

    fn render(&self, a: &NCPoly) -> String {
        a.render()
    }
}

/// Tensor `Σ lᵢ⊗rᵢ` from parsed leg pairs.
pub fn tensor_from_legs(gens: &GenSet, field: &FieldDesc, legs: &[(&str, &str)]) -> Result<TensorPoly> {
    let mut t = TensorPoly::zero(gens, field);
    for (l, r) in legs {
        let l = NCPoly::parse(gens, field, l)?;
        let r = NCPoly::parse(gens, field, r)?;
        t = t.try_add(&TensorPoly::pure(&l, &r)?)?;
    }
    Ok(t)
}

/// `X₁…X_n, Φ, Φ⁻¹` with `ΦΦ⁻¹ = 1 = Φ⁻¹Φ`, `Δ(X_i) = 1⊗X_i + X_i⊗Φ`,
/// `Δ(Φ) = Φ⊗Φ`, `ε(X_i) = 0`, `ε(Φ) = 1`.
///
/// The antipode compatible with this coproduct is `S(X_i) = −X_iΦ⁻¹`, with
/// inverse `S⁻¹(X_i) = −Φ⁻¹X_i`. Then `S²(X_i) = ΦX_iΦ⁻¹`, so the sovereign
/// element is `Φ⁻¹`, which is what the second return value holds.
pub fn builtin_hn(n: usize) -> Result<(PresentedHopf, GroupLikeElement)> {
    if n == 0 {
        return Err(Error::InvalidPresentation("H_n needs n ≥ 1".into()));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    names.push("Phi".into());
    names.push("Phi_inv".into());
    let gens = GenSet::new(&names)?;
    let f = FieldDesc::Rationals;
    let p = |s: &str| NCPoly::parse(&gens, &f, s);
    let pres = Presentation::new(&gens, &f, vec![p("Phi*Phi_inv-1")?, p("Phi_inv*Phi-1")?])?;
    let mut comult = Vec::new();
    let mut counit = Vec::new();
    let mut s = Vec::new();
    let mut s_inv = Vec::new();
    for i in 1..=n {
        let x = format!("X{i}");
        comult.push(tensor_from_legs(&gens, &f, &[("1", &x), (&x, "Phi")])?);
        counit.push(Scalar::zero(&f));
        s.push(p(&format!("-{x}*Phi_inv"))?);
        s_inv.push(p(&format!("-Phi_inv*{x}"))?);
    }
    comult.push(tensor_from_legs(&gens, &f, &[("Phi", "Phi")])?);
    comult.push(tensor_from_legs(&gens, &f, &[("Phi_inv", "Phi_inv")])?);
    counit.extend([Scalar::one(&f), Scalar::one(&f)]);
    s.extend([p("Phi_inv")?, p("Phi")?]);
    s_inv.extend([p("Phi_inv")?, p("Phi")?]);
    let mut h = PresentedHopf::new(&format!("H_{n}"), pres, comult, counit, s, Some(s_inv))?;
    // Φ ↦ diag(1,2), every X_i ↦ E12
    let int = |k| Scalar::from_int(&f, k);
    let e12 = Matrix::from_i64(&f, &[&[0, 1], &[0, 0]]);
    let mut images = vec![e12; n];
    images.push(Matrix::diag(&f, &[int(1), int(2)]));
    images.push(Matrix::diag(&f, &[int(1), Scalar::from_ratio(&f, 1, 2)]));
    h.add_witness(Representation::new("ρ(X↦E12, Φ↦diag(1,2))", images)?)?;
    h.notes.push("S(X_i) = -X_i*Phi_inv and S^-1(X_i) = -Phi_inv*X_i are derived from Δ(X_i) = 1⊗X_i + X_i⊗Phi".into());
    h.notes.push("S^2(X_i) = Phi*X_i*Phi_inv, so the sovereign element is Phi_inv".into());
    let sov = GroupLikeElement { element: p("Phi_inv")?, inverse: p("Phi")? };
    Ok((h, sov))
}

/// Sweedler's algebra as the presentation `g² = 1, x² = 0, xg = −gx`, with
/// its regular representation as a refutation witness.
pub fn builtin_sweedler_pres() -> Result<PresentedHopf> {
    let gens = GenSet::new(&["g", "x"])?;
    let f = FieldDesc::Rationals;
    let p = |s: &str| NCPoly::parse(&gens, &f, s);
    let pres = Presentation::new(&gens, &f, vec![p("g*g-1")?, p("x*x")?, p("x*g+g*x")?])?;
    let comult = vec![tensor_from_legs(&gens, &f, &[("g", "g")])?, tensor_from_legs(&gens, &f, &[("1", "x"), ("x", "g")])?];
    let counit = vec![Scalar::one(&f), Scalar::zero(&f)];
    let mut h = PresentedHopf::new(
        "sweedler_pres",
        pres,
        comult,
        counit,
        vec![p("g")?, p("-x*g")?],
        Some(vec![p("g")?, p("x*g")?]),
    )?;
    let fd = builtin_sweedler();
    let left_mult = |i: usize| {
        let mut m = Matrix::zeros(&f, 4, 4);
        for j in 0..4 {
            for k in 0..4 {
                m.set(k, j, fd.mult_const(i, j, k).clone());
            }
        }
        m
    };
    h.add_witness(Representation::new("regular", vec![left_mult(1), left_mult(2)])?)?;
    Ok(h)
}

/// Laurent polynomials `k[t, t⁻¹]` with `t` group-like.
pub fn builtin_laurent() -> Result<PresentedHopf> {
    let gens = GenSet::new(&["t", "t_inv"])?;
    let f = FieldDesc::Rationals;
    let p = |s: &str| NCPoly::parse(&gens, &f, s);
    let pres = Presentation::new(&gens, &f, vec![p("t*t_inv-1")?, p("t_inv*t-1")?])?;
    let comult = vec![tensor_from_legs(&gens, &f, &[("t", "t")])?, tensor_from_legs(&gens, &f, &[("t_inv", "t_inv")])?];
    let s = vec![p("t_inv")?, p("t")?];
    let mut h =
        PresentedHopf::new("laurent", pres, comult, vec![Scalar::one(&f), Scalar::one(&f)], s.clone(), Some(s))?;
    let two = Matrix::diag(&f, &[Scalar::from_int(&f, 2)]);
    let half = Matrix::diag(&f, &[Scalar::from_ratio(&f, 1, 2)]);
    h.add_witness(Representation::new("t↦2", vec![two, half])?)?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_passes() {
        let h = builtin_laurent().unwrap();
        let r = h.verify(Bound::default()).unwrap();
        assert!(r.overall().is_pass(), "{r:?}");
        let t = GroupLikeElement { element: h.gen("t").unwrap(), inverse: h.gen("t_inv").unwrap() };
        assert!(h.check_group_like(&t, Bound::default()).unwrap().is_pass());
    }

    #[test]
    fn hn_structure() {
        let (h, sov) = builtin_hn(1).unwrap();
        assert_eq!(h.gens().len(), 3);
        assert_eq!(h.presentation().relations().len(), 2);
        assert!(h.verify(Bound::Fixed(3)).unwrap().overall().is_pass());
        assert!(h.check_sovereign_element(&sov, Bound::default()).unwrap().is_pass());
        let phi = GroupLikeElement { element: h.gen("Phi").unwrap(), inverse: h.gen("Phi_inv").unwrap() };
        assert!(h.check_group_like(&phi, Bound::Fixed(3)).unwrap().is_pass());
        assert!(h.check_sovereign_element(&phi, Bound::default()).unwrap().is_fail());
        let one = GroupLikeElement { element: h.parse("1").unwrap(), inverse: h.parse("1").unwrap() };
        assert!(h.check_group_like(&one, Bound::Fixed(3)).unwrap().is_pass());
        assert!(h.check_sovereign_element(&one, Bound::default()).unwrap().is_fail());
    }

    #[test]
    fn wrong_antipode_is_refuted() {
        let h = builtin_sweedler_pres().unwrap();
        let mut bad = h.clone();
        bad.antipode = GenMap::identity(h.gens(), h.presentation().field());
        assert!(bad.check_antipode_axiom(Bound::default()).unwrap().is_fail());
        assert!(h.verify(Bound::default()).unwrap().overall().is_pass());
    }
}
