//! The universal cosovereign Hopf algebras `H(F)`.
//!
//! Generators `u_ij`, `v_ij` with `u·ᵗv = ᵗv·u = 1` and
//! `v·F·ᵗu·F⁻¹ = F·ᵗu·F⁻¹·v = 1`; `Δ` is the matrix coproduct on `u` and `v`,
//! `S(u) = ᵗv`, `S(v) = F·ᵗu·F⁻¹`, `S⁻¹(u) = ᵗF·ᵗv·ᵗF⁻¹`, `S⁻¹(v) = ᵗu`, and
//! the sovereign character is `Φ_F(u) = ᵗF`, `Φ_F(v) = F⁻¹`.

use crate::algebra::{GenCharacter, HopfAlgebra};
use crate::corep::{check_corep, dims, DimensionPair, MatrixCorep};
use crate::error::{Error, Result};
use crate::exactmath::{solve_linear, FieldDesc, Matrix, Scalar};
use crate::forms::verify_sovereign;
use crate::hopf_pres::PresentedHopf;
use crate::ncalg::{GenMap, GenSet, NCPoly, Presentation, Representation, TensorPoly};
use crate::verdict::{Bound, Report, Verdict};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct HFAlgebra {
    pub f: Matrix,
    pub hopf: PresentedHopf,
    pub character: GenCharacter,
    pub corep_u: MatrixCorep<NCPoly>,
    pub corep_v: MatrixCorep<NCPoly>,
}

fn gen_name(letter: char, n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("{letter}{}{}", i + 1, j + 1)
    } else {
        format!("{letter}{}_{}", i + 1, j + 1)
    }
}

/// Generator names `u11..unn, v11..vnn`.
pub fn hf_genset(n: usize) -> Result<GenSet> {
    let mut names = Vec::with_capacity(2 * n * n);
    for letter in ['u', 'v'] {
        for i in 0..n {
            for j in 0..n {
                names.push(gen_name(letter, n, i, j));
            }
        }
    }
    GenSet::new(&names)
}

/// Matrix of generator polynomials `u` or `v`.
fn gen_matrix(gens: &GenSet, field: &FieldDesc, n: usize, letter: char) -> Vec<Vec<NCPoly>> {
    let base = if letter == 'u' { 0 } else { n * n };
    (0..n)
        .map(|i| (0..n).map(|j| NCPoly::generator(gens, field, (base + i * n + j) as u32)).collect())
        .collect()
}

type PMat = Vec<Vec<NCPoly>>;

fn ptranspose(a: &PMat) -> PMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

fn pmul(a: &PMat, b: &PMat) -> PMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = NCPoly::zero(a[0][0].gens(), a[0][0].field());
                    for k in 0..n {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn scal(gens: &GenSet, m: &Matrix) -> PMat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| NCPoly::constant(gens, m.get(i, j).clone())).collect())
        .collect()
}

fn flat(m: PMat) -> Vec<NCPoly> {
    m.into_iter().flatten().collect()
}

pub fn build_hf(f: &Matrix) -> Result<HFAlgebra> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("F must be square".into()));
    }
    let finv = f.inverse()?;
    let n = f.rows();
    let field = f.field().clone();
    let gens = hf_genset(n)?;
    let u = gen_matrix(&gens, &field, n, 'u');
    let v = gen_matrix(&gens, &field, n, 'v');
    let (fm, fim) = (scal(&gens, f), scal(&gens, &finv));
    let (ut, vt) = (ptranspose(&u), ptranspose(&v));
    let one = NCPoly::one(&gens, &field);
    let mut relations = Vec::with_capacity(4 * n * n);
    let products = [
        pmul(&u, &vt),
        pmul(&vt, &u),
        pmul(&pmul(&pmul(&v, &fm), &ut), &fim),
        pmul(&pmul(&pmul(&fm, &ut), &fim), &v),
    ];
    for m in &products {
        for (i, row) in m.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                relations.push(if i == j { p - &one } else { p.clone() });
            }
        }
    }
    let pres = Presentation::new(&gens, &field, relations)?;

    let mut comult = Vec::with_capacity(2 * n * n);
    for m in [&u, &v] {
        for i in 0..n {
            for j in 0..n {
                let mut t = TensorPoly::zero(&gens, &field);
                for k in 0..n {
                    t = t.try_add(&TensorPoly::pure(&m[i][k], &m[k][j])?)?;
                }
                comult.push(t);
            }
        }
    }
    let delta = |i: usize, j: usize| if i == j { Scalar::one(&field) } else { Scalar::zero(&field) };
    let counit: Vec<Scalar> = (0..2).flat_map(|_| (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))).map(|(i, j)| delta(i, j)).collect();
    let tf = scal(&gens, &f.transpose());
    let tfi = scal(&gens, &finv.transpose());
    let mut s = flat(vt.clone());
    s.extend(flat(pmul(&pmul(&fm, &ut), &fim)));
    let mut s_inv = flat(pmul(&pmul(&tf, &vt), &tfi));
    s_inv.extend(flat(ut.clone()));

    let mut values = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            values.push(f.get(j, i).clone());
        }
    }
    for i in 0..n {
        for j in 0..n {
            values.push(finv.get(i, j).clone());
        }
    }
    let character = GenCharacter::new("Φ_F", values);
    let mut hopf = PresentedHopf::new(&format!("H({f})"), pres, comult, counit, s, Some(s_inv))?;
    let images = character.values.iter().map(|c| Matrix::diag(&field, std::slice::from_ref(c))).collect();
    hopf.add_witness(Representation::new("Φ_F", images)?)?;
    Ok(HFAlgebra {
        f: f.clone(),
        hopf,
        character,
        corep_u: MatrixCorep::new("U", u)?,
        corep_v: MatrixCorep::new("V", v)?,
    })
}

#[derive(Clone, Debug)]
pub struct HFVerification {
    pub report: Report,
    pub dims: DimensionPair,
    pub trace_flag: bool,
}

/// Full suite: Hopf axioms, `Φ_F` character and sovereign identity, `U` a
/// corepresentation, and `dims(U) = (Tr F, Tr F⁻¹)`.
pub fn verify_hf(h: &HFAlgebra, bound: Bound) -> Result<HFVerification> {
    let mut report = h.hopf.verify(bound)?;
    report.push("character", h.hopf.check_character(&h.character)?);
    report.push("sovereign", verify_sovereign(&h.hopf, &h.character, bound)?);
    report.push("corep_u", check_corep(&h.hopf, &h.corep_u, bound)?);
    let d = dims(&h.hopf, &h.corep_u, &h.character)?;
    let (tr, tri) = (h.f.trace()?, h.f.inverse()?.trace()?);
    report.push(
        "dims",
        Verdict::from_bool(d.left == tr && d.right == tri, || {
            format!("dims ({}, {}) but traces ({tr}, {tri})", d.left, d.right)
        }),
    );
    let trace_flag = tr.is_zero() || tri.is_zero();
    if trace_flag {
        report.note("trace flag: Tr(F) = 0 or Tr(F^-1) = 0, so H(F) is not cosemisimple");
    }
    Ok(HFVerification { report, dims: d, trace_flag })
}

/// Checks that generator images define an algebra map `src → dst` preserving
/// the matrix coproduct and counit.
fn check_morphism(src: &HFAlgebra, dst: &HFAlgebra, map: &GenMap, bound: Bound) -> Result<Verdict> {
    let mut v = Verdict::Pass;
    for r in src.hopf.presentation().relations() {
        let img = map.apply(r)?;
        v = v.and(dst.hopf.vanish_poly(&img, bound)?.context(&format!("relation {}", r.render())));
    }
    let gens = src.hopf.gens();
    for g in 0..gens.len() as u32 {
        let x = NCPoly::generator(gens, src.hopf.presentation().field(), g);
        let lhs = dst.hopf.comult_poly(&map.apply(&x)?)?;
        let rhs = map.apply_tensor(src.hopf.comult_of_gen(g), false)?;
        v = v.and(Verdict::from_bool(lhs == rhs, || format!("Δ not preserved on {}", gens.name(g))));
        let e1 = dst.hopf.counit_poly(&map.apply(&x)?);
        let e2 = &src.hopf.counit_values()[g as usize];
        v = v.and(Verdict::from_bool(&e1 == e2, || format!("ε not preserved on {}", gens.name(g))));
    }
    Ok(v)
}

fn images_uv(gens: &GenSet, field: &FieldDesc, u_img: PMat, v_img: PMat) -> Result<GenMap> {
    let mut images = flat(u_img);
    images.extend(flat(v_img));
    GenMap::total(gens, gens, field, images)
}

/// `φ(u) = ᵗK·u·ᵗK⁻¹`, `φ(v) = K⁻¹·v·K` into `H(KFK⁻¹)`.
pub fn conjugation_map(n: usize, field: &FieldDesc, k: &Matrix) -> Result<GenMap> {
    let kinv = k.inverse()?;
    let gens = hf_genset(n)?;
    let u = gen_matrix(&gens, field, n, 'u');
    let v = gen_matrix(&gens, field, n, 'v');
    let (tk, tki) = (scal(&gens, &k.transpose()), scal(&gens, &kinv.transpose()));
    let (km, kim) = (scal(&gens, k), scal(&gens, &kinv));
    images_uv(&gens, field, pmul(&pmul(&tk, &u), &tki), pmul(&pmul(&kim, &v), &km))
}

/// `φ: H(F) → H(KFK⁻¹)` and its inverse `H(KFK⁻¹) → H(F)` (conjugation by
/// `K⁻¹`), both checked as Hopf morphisms, and their composite checked to be
/// the identity on generators.
pub fn iso_conjugate(h: &HFAlgebra, k: &Matrix, bound: Bound) -> Result<Verdict> {
    let n = h.f.rows();
    let field = h.f.field().clone();
    let kinv = k.inverse()?;
    let target = build_hf(&k.mul(&h.f)?.mul(&kinv)?)?;
    let phi = conjugation_map(n, &field, k)?;
    let back = conjugation_map(n, &field, &kinv)?;
    let mut v = check_morphism(h, &target, &phi, bound)?.context("φ");
    v = v.and(check_morphism(&target, h, &back, bound)?.context("φ⁻¹"));
    let id = back.compose(&phi)?;
    let gens = h.hopf.gens();
    for g in 0..gens.len() as u32 {
        let x = NCPoly::generator(gens, &field, g);
        v = v.and(Verdict::from_bool(id.apply(&x)? == x, || format!("φ⁻¹∘φ moves {}", gens.name(g))));
    }
    Ok(v)
}

/// `ψ(u) = v`, `ψ(v) = F·u·F⁻¹` into `H(ᵗF⁻¹)`.
pub fn transpose_inverse_map(f: &Matrix) -> Result<GenMap> {
    let n = f.rows();
    let field = f.field().clone();
    let gens = hf_genset(n)?;
    let u = gen_matrix(&gens, &field, n, 'u');
    let v = gen_matrix(&gens, &field, n, 'v');
    let (fm, fim) = (scal(&gens, f), scal(&gens, &f.inverse()?));
    images_uv(&gens, &field, v, pmul(&pmul(&fm, &u), &fim))
}

/// `ψ: H(F) → H(ᵗF⁻¹)` and the map of the same shape back, both checked as
/// Hopf morphisms; their composite is conjugation by `K = F⁻¹`.
pub fn iso_transpose_inverse(h: &HFAlgebra, bound: Bound) -> Result<Verdict> {
    let g = h.f.inverse()?.transpose();
    let target = build_hf(&g)?;
    let psi = transpose_inverse_map(&h.f)?;
    let back = transpose_inverse_map(&g)?;
    let mut v = check_morphism(h, &target, &psi, bound)?.context("ψ");
    v = v.and(check_morphism(&target, h, &back, bound)?.context("ψ'"));
    let composite = back.compose(&psi)?;
    let inner = conjugation_map(h.f.rows(), h.f.field(), &h.f.inverse()?)?;
    let gens = h.hopf.gens();
    for i in 0..gens.len() as u32 {
        let x = NCPoly::generator(gens, h.f.field(), i);
        v = v.and(Verdict::from_bool(composite.apply(&x)? == inner.apply(&x)?, || {
            format!("ψ'∘ψ differs from conjugation on {}", gens.name(i))
        }));
    }
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct FindF {
    pub f: Matrix,
    /// `ᵗS(a)·F − F·ᵗS⁻¹(a) = 0` coefficient-wise.
    pub certified: Verdict,
    /// `π(u) = a`, `π(v) = ᵗS(a)` kills the relations of `H(F)`.
    pub pi: Verdict,
    pub kernel_dim: usize,
}

const SCAN: [i64; 5] = [0, 1, -1, 2, -2];
const SCAN_LIMIT: usize = 200_000;

/// Solves `ᵗS(a)·F = F·ᵗS⁻¹(a)` for an invertible `F` and certifies the
/// morphism `π: H(F) → A`.
pub fn find_f<A: HopfAlgebra>(a: &A, corep: &MatrixCorep<A::Elem>, bound: Bound) -> Result<FindF> {
    let n = corep.size();
    let field = a.field().clone();
    let s: Vec<Vec<A::Elem>> =
        (0..n).map(|i| (0..n).map(|j| a.antipode(corep.get(i, j))).collect()).collect::<Result<_>>()?;
    let si: Vec<Vec<A::Elem>> =
        (0..n).map(|i| (0..n).map(|j| a.antipode_inv(corep.get(i, j))).collect()).collect::<Result<_>>()?;
    // unknown F_kl has index k*n + l; equation rows keyed by (i, j, monomial)
    let mut rows: BTreeMap<(usize, usize, Vec<u32>), Vec<Scalar>> = BTreeMap::new();
    let zero_row = || vec![Scalar::zero(&field); n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // (ᵗS(a)F)_ij = Σ_k S(a_ki) F_kj
                for (w, c) in a.coords(&s[k][i]) {
                    let r = rows.entry((i, j, w)).or_insert_with(zero_row);
                    r[k * n + j] = &r[k * n + j] + &c;
                }
                // (F·ᵗS⁻¹(a))_ij = Σ_k F_ik S⁻¹(a_jk)
                for (w, c) in a.coords(&si[j][k]) {
                    let r = rows.entry((i, j, w)).or_insert_with(zero_row);
                    r[i * n + k] = &r[i * n + k] - &c;
                }
            }
        }
    }
    let rows: Vec<Vec<Scalar>> = rows.into_values().collect();
    let sol = if rows.is_empty() {
        let mut kernel = Vec::new();
        for t in 0..n * n {
            let mut e = zero_row();
            e[t] = Scalar::one(&field);
            kernel.push(e);
        }
        crate::exactmath::SolutionSpace { particular: zero_row(), kernel }
    } else {
        let m = Matrix::from_rows(&field, rows.clone())?;
        solve_linear(&m, &Matrix::zeros(&field, rows.len(), 1))?
    };
    let k = sol.kernel.len();
    if k == 0 {
        return Err(Error::NoSolution);
    }
    let mut found = None;
    let mut coeffs = vec![0usize; k];
    for _ in 0..SCAN_LIMIT {
        let c: Vec<Scalar> = coeffs.iter().map(|&i| Scalar::from_int(&field, SCAN[i])).collect();
        let x = sol.combine(&c);
        let f = Matrix::from_rows(&field, x.chunks(n).map(|r| r.to_vec()).collect())?;
        if f.is_invertible() {
            found = Some(f);
            break;
        }
        // lexicographic increment, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < SCAN.len() {
                break;
            }
            coeffs[pos] = 0;
        }
        if coeffs.iter().all(|&c| c == 0) {
            break;
        }
    }
    let f = found.ok_or(Error::NoInvertibleSolution { kernel_dim: k })?;
    let (certified, pi) = certify_f(a, corep, &f, bound)?;
    Ok(FindF { f, certified, pi, kernel_dim: k })
}

/// Checks `ᵗS(a)·F = F·ᵗS⁻¹(a)` coefficient-wise and that `π(u) = a`,
/// `π(v) = ᵗS(a)` kills the relations of `H(F)`.
pub fn certify_f<A: HopfAlgebra>(a: &A, corep: &MatrixCorep<A::Elem>, f: &Matrix, bound: Bound) -> Result<(Verdict, Verdict)> {
    let n = corep.size();
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch(format!("F is {}x{}, corep has size {n}", f.rows(), f.cols())));
    }
    let s: Vec<Vec<A::Elem>> =
        (0..n).map(|i| (0..n).map(|j| a.antipode(corep.get(i, j))).collect()).collect::<Result<_>>()?;
    let si: Vec<Vec<A::Elem>> =
        (0..n).map(|i| (0..n).map(|j| a.antipode_inv(corep.get(i, j))).collect()).collect::<Result<_>>()?;
    let mut certified = Verdict::Pass;
    for i in 0..n {
        for j in 0..n {
            let mut e = a.zero();
            for k in 0..n {
                e = a.add(&e, &a.scale(&s[k][i], f.get(k, j)));
                e = a.sub(&e, &a.scale(&si[j][k], f.get(i, k)));
            }
            if !a.coords(&e).is_empty() {
                certified = certified.and(Verdict::fail(format!("entry ({i},{j}) = {}", a.render(&e))));
            }
        }
    }
    // π(u_ij) = a_ij, π(v_ij) = S(a_ji)
    let hf = build_hf(f)?;
    let mut images = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            images.push(corep.get(i, j).clone());
        }
    }
    for i in 0..n {
        for j in 0..n {
            images.push(s[j][i].clone());
        }
    }
    let mut pi = Verdict::Pass;
    for r in hf.hopf.presentation().relations() {
        let img = a.eval_poly(&images, r);
        pi = pi.and(a.vanishes(&img, bound)?.context(&format!("π({})", r.render())));
    }
    pi = pi.and(check_corep(a, corep, bound)?);
    Ok((certified, pi))
}

/// Convolution of two characters on the `u`, `v` blocks as matrix products of
/// their value matrices.
pub fn convolve_matrix_shortcut(n: usize, phi: &GenCharacter, psi: &GenCharacter) -> Result<GenCharacter> {
    let field = phi.values.first().map(|s| s.field().clone()).ok_or(Error::MissingValue("empty character".into()))?;
    let block = |c: &GenCharacter, b: usize| -> Result<Matrix> {
        Matrix::from_rows(&field, (0..n).map(|i| c.values[b * n * n + i * n..b * n * n + (i + 1) * n].to_vec()).collect())
    };
    let mut values = Vec::with_capacity(2 * n * n);
    for b in 0..2 {
        let m = block(phi, b)?.mul(&block(psi, b)?)?;
        values.extend(m.to_rows().into_iter().flatten());
    }
    Ok(GenCharacter::new(format!("{}∗{}", phi.label, psi.label), values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::convolve_characters;
    use crate::ncalg::ideal_membership;

    fn qf() -> FieldDesc {
        FieldDesc::rational_functions("q").unwrap()
    }

    #[test]
    fn relation_counts_and_counit() {
        let h = build_hf(&Matrix::identity(&FieldDesc::Rationals, 1)).unwrap();
        assert_eq!(h.hopf.gens().len(), 2);
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        assert_eq!(h.hopf.gens().len(), 8);
        assert_eq!(h.hopf.presentation().relations().len(), 16);
        assert!(h.hopf.check_counit_well_defined().unwrap().is_pass());
        let s = h.hopf.antipode_poly(&h.hopf.parse("u11*u22").unwrap()).unwrap();
        assert_eq!(s, h.hopf.parse("v22*v11").unwrap());
    }

    #[test]
    fn entry_of_v_f_tu_finv() {
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        // (v F ᵗu F⁻¹)_12 = Σ_k v_1k F_kk u_2k / q
        let p = h.hopf.parse("v11*u21/q + v12*u22").unwrap();
        assert!(ideal_membership(&p, h.hopf.presentation(), 2).unwrap().is_member());
    }

    #[test]
    fn matrix_shortcut_matches_generic_convolution() {
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        let a = convolve_characters(&h.hopf, &h.character, &h.character).unwrap();
        let b = convolve_matrix_shortcut(2, &h.character, &h.character).unwrap();
        assert_eq!(a.values, b.values);
        let tf = f.transpose();
        let sq = tf.mul(&tf).unwrap();
        assert_eq!(a.values[..4], sq.to_rows().concat()[..]);
    }

    #[test]
    fn scalar_multiple_gives_same_presentation() {
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        for lam in ["2", "q"] {
            let l = Scalar::parse(&qf(), lam).unwrap();
            let a = build_hf(&f).unwrap();
            let b = build_hf(&f.scale(&l)).unwrap();
            assert_eq!(a.hopf.presentation(), b.hopf.presentation());
        }
    }

    #[test]
    fn find_f_recovers_f() {
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        let r = find_f(&h.hopf, &h.corep_u, Bound::Fixed(2)).unwrap();
        assert!(r.certified.is_pass());
        assert!(r.pi.is_pass(), "{:?}", r.pi);
        assert_eq!(r.kernel_dim, 1);
        let ratio = r.f.get(0, 0).inv().unwrap();
        assert_eq!(r.f.scale(&ratio), f);
    }

    #[test]
    fn verify_identity_and_diag() {
        let cases: [&[&[&str]]; 2] = [&[&["1", "0"], &["0", "1"]], &[&["1", "0"], &["0", "q"]]];
        for rows in cases {
            let f = Matrix::parse(&qf(), rows).unwrap();
            let h = build_hf(&f).unwrap();
            let r = verify_hf(&h, Bound::Fixed(4)).unwrap();
            assert!(r.report.overall().is_pass(), "{:?}", r.report);
            assert!(!r.trace_flag);
            assert_eq!(r.dims.left, f.trace().unwrap());
        }
    }

    #[test]
    fn antidiagonal_f() {
        let f = Matrix::parse(&FieldDesc::Rationals, &[&["0", "1"], &["1", "0"]]).unwrap();
        let h = build_hf(&f).unwrap();
        let r = verify_hf(&h, Bound::Fixed(4)).unwrap();
        assert!(r.report.overall().is_pass(), "{:?}", r.report);
        assert!(r.trace_flag);
    }

    #[test]
    fn isomorphisms() {
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        let k = Matrix::parse(&qf(), &[&["1", "1"], &["0", "1"]]).unwrap();
        assert!(iso_conjugate(&h, &k, Bound::Fixed(4)).unwrap().is_pass());
        assert!(iso_transpose_inverse(&h, Bound::Fixed(4)).unwrap().is_pass());
    }

    #[test]
    fn small_cases() {
        let one = Matrix::identity(&FieldDesc::Rationals, 1);
        let h = build_hf(&one).unwrap();
        assert_eq!(h.hopf.presentation().relations().len(), 2);
        assert!(iso_transpose_inverse(&h, Bound::Fixed(2)).unwrap().is_pass());
        let f = Matrix::parse(&qf(), &[&["1", "0"], &["0", "q"]]).unwrap();
        let h = build_hf(&f).unwrap();
        assert!(iso_conjugate(&h, &Matrix::identity(&qf(), 2), Bound::Fixed(2)).unwrap().is_pass());
        let k = Matrix::parse(&qf(), &[&["1", "1"], &["0", "1"]]).unwrap();
        assert!(iso_conjugate(&h, &k, Bound::Fixed(2)).unwrap().is_pass());
        assert!(iso_transpose_inverse(&h, Bound::Fixed(2)).unwrap().is_pass());
        let sing = Matrix::parse(&qf(), &[&["1", "1"], &["1", "1"]]).unwrap();
        assert!(build_hf(&sing).is_err());
    }

    #[test]
    fn antidiagonal_dims_vanish() {
        let f = Matrix::parse(&FieldDesc::Rationals, &[&["0", "1"], &["1", "0"]]).unwrap();
        let r = verify_hf(&build_hf(&f).unwrap(), Bound::Fixed(2)).unwrap();
        assert!(r.dims.left.is_zero() && r.dims.right.is_zero());
    }

    #[test]
    fn find_f_group_like_and_involutory() {
        use crate::corep::regular_corep;
        use crate::hopf_fd::{builtin_group_algebra, cyclic_table};
        use crate::hopf_pres::builtin_laurent;
        let l = builtin_laurent().unwrap();
        let t = l.parse("t").unwrap();
        let c = MatrixCorep::new("t", vec![vec![t]]).unwrap();
        let r = find_f(&l, &c, Bound::default()).unwrap();
        assert!(r.f.is_identity() && r.certified.is_pass() && r.pi.is_pass());
        let z3 = builtin_group_algebra("Z3", &cyclic_table(3)).unwrap();
        let c = regular_corep(&z3);
        let (cert, pi) = certify_f(&z3, &c, &Matrix::identity(z3.field(), 3), Bound::default()).unwrap();
        assert!(cert.is_pass() && pi.is_pass());
        assert!(find_f(&z3, &c, Bound::default()).unwrap().certified.is_pass());
    }
}
