//! Characters, their convolution group and the sovereign-character checks.
//!
//! Everything here is generic over [`HopfAlgebra`]. Both sides of the
//! sovereign identities are (anti-)multiplicative once `Φ` is a character, so
//! comparing them on algebra generators decides them everywhere.

use crate::algebra::{GenCharacter, HopfAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Scalar};
use crate::hopf_fd::FinHopf;
use crate::verdict::{Bound, Verdict};

/// Per-generator comparison of two maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionWitness {
    pub lhs: String,
    pub rhs: String,
    pub residuals: Vec<(String, Verdict)>,
    pub verdict: Verdict,
}

pub fn check_character<A: HopfAlgebra>(a: &A, chi: &GenCharacter) -> Result<Verdict> {
    a.check_character(chi)
}

/// `(Φ∗Ψ)(g) = Σ Φ(g₁)Ψ(g₂)` on generators.
pub fn convolve_characters<A: HopfAlgebra>(a: &A, phi: &GenCharacter, psi: &GenCharacter) -> Result<GenCharacter> {
    let mut values = Vec::new();
    for (_, g) in a.generators() {
        let mut v = Scalar::zero(a.field());
        for (x, y) in a.comult(&g)? {
            v = &v + &(&a.char_eval(phi, &x)? * &a.char_eval(psi, &y)?);
        }
        values.push(v);
    }
    Ok(GenCharacter::new(format!("{}∗{}", phi.label, psi.label), values))
}

/// `Φ⁻¹ = Φ∘S`, checked against `Φ∗Φ⁻¹ = ε = Φ⁻¹∗Φ` on generators.
pub fn character_inverse<A: HopfAlgebra>(a: &A, phi: &GenCharacter) -> Result<GenCharacter> {
    let mut values = Vec::new();
    for (_, g) in a.generators() {
        values.push(a.char_eval(phi, &a.antipode(&g)?)?);
    }
    let inv = GenCharacter::new(format!("{}⁻¹", phi.label), values);
    let eps = a.counit_character();
    for (l, r) in [(phi, &inv), (&inv, phi)] {
        if convolve_characters(a, l, r)?.values != eps.values {
            return Err(Error::InverseCheckFailed(format!("{} ∗ {} ≠ ε", l.label, r.label)));
        }
    }
    Ok(inv)
}

fn compare<A: HopfAlgebra>(
    a: &A,
    lhs: &str,
    rhs: &str,
    bound: Bound,
    f: impl Fn(&A::Elem) -> Result<(A::Elem, A::Elem)>,
) -> Result<ConvolutionWitness> {
    let mut residuals = Vec::new();
    let mut verdict = Verdict::Pass;
    for (name, g) in a.generators() {
        let (l, r) = f(&g)?;
        let v = a.vanishes(&a.sub(&l, &r), bound)?.context(&format!("on {name}"));
        verdict = verdict.and(v.clone());
        residuals.push((name, v));
    }
    Ok(ConvolutionWitness { lhs: lhs.into(), rhs: rhs.into(), residuals, verdict })
}

/// `Σ f(x₁) S(x₂) g(x₃)` for characters `f`, `g`.
pub fn sandwich<A: HopfAlgebra>(
    a: &A,
    f: &GenCharacter,
    middle: impl Fn(&A::Elem) -> Result<A::Elem>,
    g: &GenCharacter,
    x: &A::Elem,
) -> Result<A::Elem> {
    let mut acc = a.zero();
    for (x1, x2, x3) in a.comult2(x)? {
        let c = &a.char_eval(f, &x1)? * &a.char_eval(g, &x3)?;
        if !c.is_zero() {
            acc = a.add(&acc, &a.scale(&middle(&x2)?, &c));
        }
    }
    Ok(acc)
}

/// `S⁻¹ = Φ∗S∗Φ⁻¹`, compared generator by generator.
pub fn verify_sovereign_detailed<A: HopfAlgebra>(a: &A, phi: &GenCharacter, bound: Bound) -> Result<ConvolutionWitness> {
    let ch = a.check_character(phi)?;
    if !ch.is_pass() {
        return Ok(ConvolutionWitness {
            lhs: "S⁻¹".into(),
            rhs: format!("{0}∗S∗{0}⁻¹", phi.label),
            residuals: Vec::new(),
            verdict: ch.context("not a character"),
        });
    }
    let inv = character_inverse(a, phi)?;
    compare(a, "S⁻¹", &format!("{0}∗S∗{0}⁻¹", phi.label), bound, |g| {
        Ok((a.antipode_inv(g)?, sandwich(a, phi, |x| a.antipode(x), &inv, g)?))
    })
}

pub fn verify_sovereign<A: HopfAlgebra>(a: &A, phi: &GenCharacter, bound: Bound) -> Result<Verdict> {
    Ok(verify_sovereign_detailed(a, phi, bound)?.verdict)
}

/// Finite-dimensional form: the matrix of `x ↦ Σ Φ(x₁)S(x₂)Φ⁻¹(x₃)` against
/// the stored inverse antipode.
pub fn verify_sovereign_fd(a: &FinHopf, phi: &GenCharacter) -> Result<Verdict> {
    let ch = a.check_character(phi)?;
    if !ch.is_pass() {
        return Ok(ch.context("not a character"));
    }
    let s_inv = a.antipode_inverse_matrix().ok_or(Error::MissingInverse)?;
    let inv = character_inverse(a, phi)?;
    let m: Matrix = a.sandwich_matrix(phi, a.antipode_matrix(), &inv)?;
    if &m == s_inv {
        return Ok(Verdict::Pass);
    }
    let j = (0..a.dim()).find(|&j| (0..a.dim()).any(|i| m.get(i, j) != s_inv.get(i, j))).unwrap_or(0);
    Ok(Verdict::fail(format!("S⁻¹ ≠ {0}∗S∗{0}⁻¹ on {1}", phi.label, a.basis[j])))
}

pub fn verify_sovereign_pres<A: HopfAlgebra>(a: &A, phi: &GenCharacter, bound: Bound) -> Result<Verdict> {
    verify_sovereign(a, phi, bound)
}

/// `S² = Φ⁻¹∗id∗Φ`, compared generator by generator.
pub fn verify_remark_38_detailed<A: HopfAlgebra>(a: &A, phi: &GenCharacter, bound: Bound) -> Result<ConvolutionWitness> {
    let ch = a.check_character(phi)?;
    if !ch.is_pass() {
        return Ok(ConvolutionWitness {
            lhs: "S²".into(),
            rhs: format!("{0}⁻¹∗id∗{0}", phi.label),
            residuals: Vec::new(),
            verdict: ch.context("not a character"),
        });
    }
    let inv = character_inverse(a, phi)?;
    compare(a, "S²", &format!("{0}⁻¹∗id∗{0}", phi.label), bound, |g| {
        Ok((a.antipode(&a.antipode(g)?)?, sandwich(a, &inv, |x| Ok(x.clone()), phi, g)?))
    })
}

pub fn verify_remark_38<A: HopfAlgebra>(a: &A, phi: &GenCharacter, bound: Bound) -> Result<Verdict> {
    Ok(verify_remark_38_detailed(a, phi, bound)?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_fd::{builtin_group_algebra, builtin_sweedler, cyclic_table};

    fn sweedler_phi(h: &FinHopf, gx: i64) -> GenCharacter {
        let f = h.field().clone();
        let s = |n| Scalar::from_int(&f, n);
        GenCharacter::new("Φ", vec![s(1), s(-1), s(gx), s(-gx)])
    }

    #[test]
    fn sweedler_sovereign_character() {
        let h = builtin_sweedler();
        let phi = sweedler_phi(&h, 0);
        assert!(check_character(&h, &phi).unwrap().is_pass());
        assert!(check_character(&h, &sweedler_phi(&h, 1)).unwrap().is_fail());
        assert!(verify_sovereign_fd(&h, &phi).unwrap().is_pass());
        assert!(verify_sovereign(&h, &phi, Bound::default()).unwrap().is_pass());
        assert!(verify_remark_38(&h, &phi, Bound::default()).unwrap().is_pass());
        let eps = h.counit_character();
        assert!(verify_sovereign_fd(&h, &eps).unwrap().is_fail());
        assert!(verify_remark_38(&h, &eps, Bound::default()).unwrap().is_fail());
        let sq = convolve_characters(&h, &phi, &phi).unwrap();
        assert_eq!(sq.values, eps.values);
        assert_eq!(character_inverse(&h, &phi).unwrap().values, phi.values);
    }

    #[test]
    fn involutory_group_algebra() {
        let z3 = builtin_group_algebra("Z3", &cyclic_table(3)).unwrap();
        let eps = z3.counit_character();
        assert!(verify_sovereign_fd(&z3, &eps).unwrap().is_pass());
        assert_eq!(character_inverse(&z3, &eps).unwrap().values, eps.values);
    }
}
