//! `SL(E)` for a multilinear form `E: V^{⊗N} → k` with `V = kⁿ`.
//!
//! Generators `a_ij`; relations
//! `Σ_j E(j₁…j_N) a_{j₁i₁}…a_{j_Ni_N} = E(i₁…i_N)` and
//! `Σ_j E(j₁…j_N) a_{i₁j₁}…a_{i_Nj_N} = E(i₁…i_N)`.
//! The antipode is read off from the left-invertibility argument: with `λ`
//! solving `Σ_J λ(i,J) E(J,k) = δ_ik`,
//! `S(a_kj) = Σ λ(k,i₁…i_{N-1}) E(j₁…j_{N-1},j) a_{j₁i₁}…a_{j_{N-1}i_{N-1}}`;
//! `S⁻¹` comes the same way from `μ` (`Σ_J E(k,J) μ(J,i) = δ_ik`) as the
//! right inverse of `ᵗa`.

use crate::algebra::{GenCharacter, HopfAlgebra};
use crate::corep::{dims, DimensionPair, MatrixCorep};
use crate::error::{Error, Result};
use crate::exactmath::{solve_linear, FieldDesc, Matrix, Scalar};
use crate::forms::verify_sovereign;
use crate::hopf_pres::PresentedHopf;
use crate::ncalg::{GenSet, NCPoly, Presentation, Representation, TensorPoly, Word};
use crate::verdict::{Bound, Verdict};

/// Dense `n^N` array, first index most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETensor {
    pub n: usize,
    pub arity: usize,
    pub field: FieldDesc,
    values: Vec<Scalar>,
}

/// All tuples in `{0..n}^len`, first index most significant.
pub fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

impl ETensor {
    pub fn new(n: usize, arity: usize, field: &FieldDesc, values: Vec<Scalar>) -> Result<Self> {
        if n == 0 || arity < 2 {
            return Err(Error::ShapeMismatch(format!("need n ≥ 1 and N ≥ 2, got n={n}, N={arity}")));
        }
        let len = n.checked_pow(arity as u32).ok_or_else(|| Error::ShapeMismatch("tensor too large".into()))?;
        if values.len() != len {
            return Err(Error::ShapeMismatch(format!("expected {len} values, got {}", values.len())));
        }
        if values.iter().all(|v| v.is_zero()) {
            return Err(Error::Degenerate("E is identically zero".into()));
        }
        Ok(ETensor { n, arity, field: field.clone(), values })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.values[self.offset(idx)]
    }

    fn left_matrix(&self) -> Result<Matrix> {
        let rows = tuples(self.n, self.arity - 1)
            .into_iter()
            .map(|j| {
                (0..self.n)
                    .map(|k| {
                        let mut idx = j.clone();
                        idx.push(k);
                        self.get(&idx).clone()
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&self.field, rows)
    }

    fn right_matrix(&self) -> Result<Matrix> {
        let rows = tuples(self.n, self.arity - 1)
            .into_iter()
            .map(|j| {
                (0..self.n)
                    .map(|k| {
                        let mut idx = vec![k];
                        idx.extend(&j);
                        self.get(&idx).clone()
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(&self.field, rows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nondegeneracy {
    pub left: bool,
    pub right: bool,
}

pub fn check_nondegenerate(e: &ETensor) -> Result<Nondegeneracy> {
    Ok(Nondegeneracy { left: e.left_matrix()?.rank() == e.n, right: e.right_matrix()?.rank() == e.n })
}

/// `λ` with `Σ_J λ(i,J) E(J,k) = δ_ik`, stored as `λ[i·n^{N-1} + J]`.
pub fn solve_star(e: &ETensor) -> Result<Vec<Scalar>> {
    // M[k][J] = E(J,k)
    Ok(solve_columns(&e.left_matrix()?.transpose(), e.n)?.concat())
}

/// `μ` with `Σ_J E(k,J) μ(J,i) = δ_ik`, stored as `μ[J·n + i]`.
pub fn solve_starstar(e: &ETensor) -> Result<Vec<Scalar>> {
    let m = e.right_matrix()?.transpose();
    let per_i = solve_columns(&m, e.n)?;
    Ok((0..m.cols()).flat_map(|j| per_i.iter().map(move |sol| sol[j].clone())).collect())
}

/// Particular solutions of `M x = e_i` for each `i`.
fn solve_columns(m: &Matrix, n: usize) -> Result<Vec<Vec<Scalar>>> {
    let field = m.field().clone();
    (0..n)
        .map(|i| {
            let mut b = Matrix::zeros(&field, n, 1);
            b.set(i, 0, Scalar::one(&field));
            Ok(solve_linear(m, &b)?.particular)
        })
        .collect()
}

/// Substitution check for `λ` and `μ`.
pub fn check_star_solutions(e: &ETensor, lambda: &[Scalar], mu: &[Scalar]) -> bool {
    let n = e.n;
    let js = tuples(n, e.arity - 1);
    let m = js.len();
    for i in 0..n {
        for k in 0..n {
            let mut l = Scalar::zero(&e.field);
            let mut r = Scalar::zero(&e.field);
            for (t, j) in js.iter().enumerate() {
                let mut a = j.clone();
                a.push(k);
                l = &l + &(&lambda[i * m + t] * e.get(&a));
                let mut b = vec![k];
                b.extend(j);
                r = &r + &(e.get(&b) * &mu[t * n + i]);
            }
            let d = if i == k { Scalar::one(&e.field) } else { Scalar::zero(&e.field) };
            if l != d || r != d {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct SLEAlgebra {
    pub e: ETensor,
    pub lambda: Vec<Scalar>,
    pub mu: Vec<Scalar>,
    pub hopf: PresentedHopf,
    pub beta: Option<Vec<Scalar>>,
    pub character: Option<GenCharacter>,
    pub corep: MatrixCorep<NCPoly>,
}

fn a_index(n: usize, i: usize, j: usize) -> u32 {
    (i * n + j) as u32
}

fn word_of(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Word {
    Word::from_letters(pairs.map(|(i, j)| a_index(n, i, j)).collect())
}

pub fn sle_genset(n: usize) -> Result<GenSet> {
    let mut names = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            names.push(if n <= 9 { format!("a{}{}", i + 1, j + 1) } else { format!("a{}_{}", i + 1, j + 1) });
        }
    }
    GenSet::new(&names)
}

pub fn build_sle(e: &ETensor) -> Result<SLEAlgebra> {
    let nd = check_nondegenerate(e)?;
    if !nd.left || !nd.right {
        return Err(Error::Degenerate(format!("left {} right {}", nd.left, nd.right)));
    }
    let (n, big_n) = (e.n, e.arity);
    let field = e.field.clone();
    let gens = sle_genset(n)?;
    let lambda = solve_star(e)?;
    let mu = solve_starstar(e)?;
    let all = tuples(n, big_n);

    let mut relations = Vec::new();
    for transposed in [false, true] {
        for i in &all {
            let mut p = NCPoly::zero(&gens, &field);
            for j in &all {
                let c = e.get(j);
                if c.is_zero() {
                    continue;
                }
                let w = if transposed {
                    word_of(n, i.iter().copied().zip(j.iter().copied()))
                } else {
                    word_of(n, j.iter().copied().zip(i.iter().copied()))
                };
                p.add_term(w, c.clone());
            }
            if p.is_zero() {
                if !e.get(i).is_zero() {
                    return Err(Error::Degenerate(format!("relation at {i:?} reads 0 = E(i)")));
                }
                continue;
            }
            p.add_term(Word::empty(), -e.get(i).clone());
            relations.push(p);
        }
    }
    let pres = Presentation::new(&gens, &field, relations)?;

    let mut comult = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut t = TensorPoly::zero(&gens, &field);
            for k in 0..n {
                let l = NCPoly::generator(&gens, &field, a_index(n, i, k));
                let r = NCPoly::generator(&gens, &field, a_index(n, k, j));
                t = t.try_add(&TensorPoly::pure(&l, &r)?)?;
            }
            comult.push(t);
            counit.push(if i == j { Scalar::one(&field) } else { Scalar::zero(&field) });
        }
    }

    let short = tuples(n, big_n - 1);
    let m = short.len();
    let mut s = vec![NCPoly::zero(&gens, &field); n * n];
    let mut s_inv = vec![NCPoly::zero(&gens, &field); n * n];
    for k in 0..n {
        for j in 0..n {
            let out = &mut s[k * n + j];
            for (ti, ii) in short.iter().enumerate() {
                let l = &lambda[k * m + ti];
                if l.is_zero() {
                    continue;
                }
                for jj in &short {
                    let mut idx = jj.clone();
                    idx.push(j);
                    let c = e.get(&idx);
                    if !c.is_zero() {
                        out.add_term(word_of(n, jj.iter().copied().zip(ii.iter().copied())), l * c);
                    }
                }
            }
        }
    }
    // S⁻¹(a_{l j₁}) = Σ E(j₁,J) a_{J,I} μ(I,l)
    for l in 0..n {
        for j1 in 0..n {
            let out = &mut s_inv[l * n + j1];
            for (ti, ii) in short.iter().enumerate() {
                let mu_v = &mu[ti * n + l];
                if mu_v.is_zero() {
                    continue;
                }
                for jj in &short {
                    let mut idx = vec![j1];
                    idx.extend(jj);
                    let c = e.get(&idx);
                    if !c.is_zero() {
                        out.add_term(word_of(n, jj.iter().copied().zip(ii.iter().copied())), c * mu_v);
                    }
                }
            }
        }
    }

    let mut hopf = PresentedHopf::new(&format!("SL(E) n={n} N={big_n}"), pres, comult, counit, s, Some(s_inv))?;
    hopf.notes.push("antipode derived from λ and μ; certified by the antipode checks".into());
    if n == 1 {
        hopf.notes.push("n = 1 is outside the nondegenerate setting with N ≥ 2 generators per index".into());
    }
    let beta = find_beta(e);
    let character = match &beta {
        Some(b) => {
            let values = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| if i == j { b[i].clone() } else { Scalar::zero(&field) })
                .collect::<Vec<_>>();
            let chi = GenCharacter::new("Φ_β", values);
            if hopf.check_character(&chi)?.is_pass() {
                let images = chi.values.iter().map(|c| Matrix::diag(&field, std::slice::from_ref(c))).collect();
                hopf.add_witness(Representation::new("Φ_β", images)?)?;
            }
            Some(chi)
        }
        None => None,
    };
    let entries = (0..n)
        .map(|i| (0..n).map(|j| NCPoly::generator(&gens, &field, a_index(n, i, j))).collect())
        .collect();
    Ok(SLEAlgebra {
        e: e.clone(),
        lambda,
        mu,
        hopf,
        beta,
        character,
        corep: MatrixCorep::new("a", entries)?,
    })
}

/// `β` with `E(J,i) = β_i E(i,J)` for all `J`, if one exists with every `β_i`
/// invertible.
pub fn find_beta(e: &ETensor) -> Option<Vec<Scalar>> {
    let short = tuples(e.n, e.arity - 1);
    let mut beta = Vec::with_capacity(e.n);
    for i in 0..e.n {
        let mut b: Option<Scalar> = None;
        for j in &short {
            let mut front = vec![i];
            front.extend(j);
            let mut back = j.clone();
            back.push(i);
            let (f, k) = (e.get(&front), e.get(&back));
            match (&b, f.is_zero()) {
                (None, false) => b = Some(k.checked_div(f).ok()?),
                (None, true) if !k.is_zero() => return None,
                (Some(bv), _) if &(bv * f) != k => return None,
                _ => {}
            }
        }
        match b {
            Some(v) if !v.is_zero() => beta.push(v),
            _ => return None,
        }
    }
    Some(beta)
}

/// `Φ_β` is a character and satisfies `S⁻¹ = Φ_β∗S∗Φ_β⁻¹`.
pub fn sovereign_char_beta(a: &SLEAlgebra, bound: Bound) -> Result<Verdict> {
    let chi = a.character.as_ref().ok_or(Error::BetaMissing)?;
    let ch = a.hopf.check_character(chi)?.context("Φ_β character");
    Ok(ch.and(verify_sovereign(&a.hopf, chi, bound)?.context("Φ_β sovereign")))
}

/// `S(a)·a ≡ 1` and `a·S(a) ≡ 1` entrywise. The first is a combination of
/// relations in degree `N`; the second goes through `L = L·a·R = R` and needs
/// degree `2N` in general.
pub fn check_invertibility(a: &SLEAlgebra, left_bound: Bound, right_bound: Bound) -> Result<(Verdict, Verdict)> {
    Ok((check_left_inverse(a, left_bound)?, check_right_inverse(a, right_bound)?))
}

/// `S(a)·a ≡ 1` entrywise.
pub fn check_left_inverse(a: &SLEAlgebra, bound: Bound) -> Result<Verdict> {
    inverse_side(a, bound, true)
}

/// `a·S(a) ≡ 1` entrywise.
pub fn check_right_inverse(a: &SLEAlgebra, bound: Bound) -> Result<Verdict> {
    inverse_side(a, bound, false)
}

fn inverse_side(a: &SLEAlgebra, bound: Bound, left: bool) -> Result<Verdict> {
    let h = &a.hopf;
    let n = a.e.n;
    let field = h.presentation().field().clone();
    let gens = h.gens().clone();
    let s: Vec<NCPoly> = (0..n * n)
        .map(|g| h.antipode_poly(&NCPoly::generator(&gens, &field, g as u32)))
        .collect::<Result<_>>()?;
    let gen = |i: usize, j: usize| NCPoly::generator(&gens, &field, a_index(n, i, j));
    let mut v = Verdict::Pass;
    for i in 0..n {
        for j in 0..n {
            let d = NCPoly::constant(&gens, if i == j { Scalar::one(&field) } else { Scalar::zero(&field) });
            let mut p = d.neg();
            for k in 0..n {
                p = if left { &p + &(&s[i * n + k] * &gen(k, j)) } else { &p + &(&gen(i, k) * &s[k * n + j]) };
            }
            let what = if left { "(S(a)·a)" } else { "(a·S(a))" };
            v = v.and(h.vanish_poly(&p, bound)?.context(&format!("{what}_{}{}", i + 1, j + 1)));
        }
    }
    Ok(v)
}

pub fn sle_dims(a: &SLEAlgebra) -> Result<DimensionPair> {
    let chi = a.character.as_ref().ok_or(Error::BetaMissing)?;
    dims(&a.hopf, &a.corep, chi)
}

fn inversions(p: &[usize]) -> Option<u32> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return None;
        }
        seen[x] = true;
    }
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    Some(inv)
}

/// `E_q(i₁…i_n) = (−q)^{ℓ(σ)}` for `σ(k) = i_k`, zero on repeated indices.
pub fn build_eq(n: usize, q: &Scalar) -> Result<ETensor> {
    if n < 2 {
        return Err(Error::ShapeMismatch("E_q needs n ≥ 2".into()));
    }
    let field = q.field().clone();
    let mq = -q.clone();
    let values = tuples(n, n)
        .iter()
        .map(|t| match inversions(t) {
            Some(l) => mq.pow(l as i32),
            None => Ok(Scalar::zero(&field)),
        })
        .collect::<Result<_>>()?;
    ETensor::new(n, n, &field, values)
}

/// `(−q)^{n+1−2i}` for `i = 1..n`.
pub fn expected_beta_eq(n: usize, q: &Scalar) -> Result<Vec<Scalar>> {
    let mq = -q.clone();
    (1..=n).map(|i| mq.pow(n as i32 + 1 - 2 * i as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::var(&FieldDesc::rational_functions("q").unwrap()).unwrap()
    }

    #[test]
    fn eq_values() {
        let e2 = build_eq(2, &q()).unwrap();
        assert!(e2.get(&[0, 1]).is_one());
        assert_eq!(e2.get(&[1, 0]), &-q());
        assert!(e2.get(&[1, 1]).is_zero());
        let e3 = build_eq(3, &q()).unwrap();
        assert_eq!(e3.get(&[2, 1, 0]), &(-q()).pow(3).unwrap());
        assert!(e3.get(&[0, 2, 0]).is_zero());
    }

    #[test]
    fn nondegeneracy() {
        let e2 = build_eq(2, &q()).unwrap();
        assert_eq!(check_nondegenerate(&e2).unwrap(), Nondegeneracy { left: true, right: true });
        let f = FieldDesc::Rationals;
        let mut v = vec![Scalar::zero(&f); 4];
        v[0] = Scalar::one(&f);
        let e = ETensor::new(2, 2, &f, v).unwrap();
        assert_eq!(check_nondegenerate(&e).unwrap(), Nondegeneracy { left: false, right: false });
        assert!(solve_star(&e).is_err());
        assert!(matches!(build_sle(&e), Err(Error::Degenerate(_))));
        // E(i,1) = 0 for all i: zero slice in the last index
        let v = ["0", "1", "0", "1"].iter().map(|s| Scalar::parse(&f, s).unwrap()).collect();
        let e = ETensor::new(2, 2, &f, v).unwrap();
        assert!(!check_nondegenerate(&e).unwrap().left);
    }

    #[test]
    fn star_solutions_substitute() {
        for n in [2, 3] {
            let e = build_eq(n, &q()).unwrap();
            let (l, m) = (solve_star(&e).unwrap(), solve_starstar(&e).unwrap());
            assert!(check_star_solutions(&e, &l, &m));
        }
    }

    #[test]
    fn one_dimensional() {
        let f = FieldDesc::Rationals;
        let e = ETensor::new(1, 3, &f, vec![Scalar::from_int(&f, 5)]).unwrap();
        let a = build_sle(&e).unwrap();
        assert_eq!(a.lambda, vec![Scalar::from_ratio(&f, 1, 5)]);
        let s = a.hopf.antipode_poly(&a.hopf.parse("a11").unwrap()).unwrap();
        assert_eq!(s, a.hopf.parse("a11^2").unwrap());
        assert_eq!(a.hopf.presentation().relations().len(), 1);
    }

    #[test]
    fn eq2_structure() {
        let e = build_eq(2, &q()).unwrap();
        let a = build_sle(&e).unwrap();
        assert_eq!(a.hopf.presentation().relations().len(), 8);
        assert!(a.hopf.check_counit_well_defined().unwrap().is_pass());
        let (l, r) = check_invertibility(&a, Bound::Fixed(3), Bound::Fixed(3)).unwrap();
        assert!(l.is_pass() && r.is_pass(), "{l:?} {r:?}");
        assert_eq!(a.beta.clone().unwrap(), expected_beta_eq(2, &q()).unwrap());
        assert!(sovereign_char_beta(&a, Bound::Fixed(4)).unwrap().is_pass());
        let rep = a.hopf.verify(Bound::Fixed(4)).unwrap();
        assert!(rep.overall().is_pass(), "{rep:?}");
        let d = sle_dims(&a).unwrap();
        let qq = q();
        assert_eq!(d.left, &-qq.clone() + &(-qq.clone()).pow(-1).unwrap());
        assert_eq!(d.right, d.left);
    }

    #[test]
    fn symmetric_form_has_unit_beta() {
        let f = FieldDesc::Rationals;
        let v = ["1", "2", "2", "3"].iter().map(|s| Scalar::parse(&f, s).unwrap()).collect();
        let e = ETensor::new(2, 2, &f, v).unwrap();
        assert_eq!(find_beta(&e).unwrap(), vec![Scalar::one(&f); 2]);
        let a = build_sle(&e).unwrap();
        assert!(sovereign_char_beta(&a, Bound::default()).unwrap().is_pass());
    }

    #[test]
    fn missing_beta() {
        let f = FieldDesc::Rationals;
        let v = ["1", "1", "0", "1"].iter().map(|s| Scalar::parse(&f, s).unwrap()).collect();
        let e = ETensor::new(2, 2, &f, v).unwrap();
        assert!(find_beta(&e).is_none());
        let a = build_sle(&e).unwrap();
        assert_eq!(sovereign_char_beta(&a, Bound::default()), Err(Error::BetaMissing));
    }
}
