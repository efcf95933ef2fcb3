//! Matrix corepresentations in the column convention `α(v_i) = Σ_j v_j ⊗ a_ji`.

use crate::algebra::{GenCharacter, HopfAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Scalar};
use crate::hopf_fd::FinHopf;
use crate::verdict::{Bound, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCorep<E> {
    pub label: String,
    pub entries: Vec<Vec<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionPair {
    pub left: Scalar,
    pub right: Scalar,
}

impl<E: Clone> MatrixCorep<E> {
    pub fn new(label: impl Into<String>, entries: Vec<Vec<E>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("corepresentation matrix must be square and nonempty".into()));
        }
        Ok(MatrixCorep { label: label.into(), entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i][j]
    }
}

/// `Δ(a_ij) ≡ Σ_k a_ik⊗a_kj` and `ε(a_ij) = δ_ij`.
pub fn check_corep<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>, bound: Bound) -> Result<Verdict> {
    let n = v.size();
    let mut verdict = Verdict::Pass;
    for i in 0..n {
        for j in 0..n {
            let e = a.counit(v.get(i, j))?;
            let expect = if i == j { Scalar::one(a.field()) } else { Scalar::zero(a.field()) };
            if e != expect {
                return Ok(Verdict::fail(format!("{}: ε(a_{i}{j}) = {e}", v.label)));
            }
            let mut t = a.comult(v.get(i, j))?;
            for k in 0..n {
                t.push((a.scale(v.get(i, k), &-Scalar::one(a.field())), v.get(k, j).clone()));
            }
            verdict = verdict.and(a.tensor_vanishes(&t, bound)?.context(&format!("{}: Δ(a_{i}{j})", v.label)));
        }
    }
    Ok(verdict)
}

pub fn trivial_corep<A: HopfAlgebra>(a: &A) -> MatrixCorep<A::Elem> {
    MatrixCorep { label: "1".into(), entries: vec![vec![a.one()]] }
}

fn map_transposed<A: HopfAlgebra>(
    v: &MatrixCorep<A::Elem>,
    label: String,
    f: impl Fn(&A::Elem) -> Result<A::Elem>,
) -> Result<MatrixCorep<A::Elem>> {
    let n = v.size();
    let entries = (0..n).map(|i| (0..n).map(|j| f(v.get(j, i))).collect()).collect::<Result<_>>()?;
    Ok(MatrixCorep { label, entries })
}

/// Entry `(i,j)` is `S(a_ji)`.
pub fn left_dual<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>) -> Result<MatrixCorep<A::Elem>> {
    map_transposed::<A>(v, format!("∨{}", v.label), |x| a.antipode(x))
}

/// Entry `(i,j)` is `S⁻¹(a_ji)`.
pub fn right_dual<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>) -> Result<MatrixCorep<A::Elem>> {
    map_transposed::<A>(v, format!("{}∨", v.label), |x| a.antipode_inv(x))
}

/// Entry `((j,l),(i,k)) = a_ji·b_lk` with pair index `(p,q) ↦ p·m + q`.
pub fn tensor_corep<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>, w: &MatrixCorep<A::Elem>) -> MatrixCorep<A::Elem> {
    let (n, m) = (v.size(), w.size());
    let entries = (0..n * m)
        .map(|r| (0..n * m).map(|c| a.mul(v.get(r / m, c / m), w.get(r % m, c % m))).collect())
        .collect();
    MatrixCorep { label: format!("{}⊗{}", v.label, w.label), entries }
}

pub fn direct_sum<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>, w: &MatrixCorep<A::Elem>) -> MatrixCorep<A::Elem> {
    let (n, m) = (v.size(), w.size());
    let entries = (0..n + m)
        .map(|r| {
            (0..n + m)
                .map(|c| match (r < n, c < n) {
                    (true, true) => v.get(r, c).clone(),
                    (false, false) => w.get(r - n, c - n).clone(),
                    _ => a.zero(),
                })
                .collect()
        })
        .collect();
    MatrixCorep { label: format!("{}⊕{}", v.label, w.label), entries }
}

/// `K·V·K⁻¹` for an invertible scalar matrix `K`; `K` intertwines `V` with it.
pub fn conjugate_corep<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>, k: &Matrix) -> Result<MatrixCorep<A::Elem>> {
    let kinv = k.inverse()?;
    let kv = scalar_times(a, k, v)?;
    let entries = times_scalar(a, &kv, &kinv)?;
    Ok(MatrixCorep { label: format!("K{}K⁻¹", v.label), entries })
}

fn scalar_times<A: HopfAlgebra>(a: &A, m: &Matrix, v: &MatrixCorep<A::Elem>) -> Result<Vec<Vec<A::Elem>>> {
    let n = v.size();
    if m.cols() != n {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix against size {n} corep", m.rows(), m.cols())));
    }
    Ok((0..m.rows())
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(a.zero(), |acc, k| a.add(&acc, &a.scale(v.get(k, j), m.get(i, k)))))
                .collect()
        })
        .collect())
}

fn times_scalar<A: HopfAlgebra>(a: &A, v: &[Vec<A::Elem>], m: &Matrix) -> Result<Vec<Vec<A::Elem>>> {
    let n = v.first().map_or(0, Vec::len);
    if m.rows() != n {
        return Err(Error::DimensionMismatch("intertwiner shape".into()));
    }
    Ok(v.iter()
        .map(|row| {
            (0..m.cols())
                .map(|j| (0..n).fold(a.zero(), |acc, k| a.add(&acc, &a.scale(&row[k], m.get(k, j)))))
                .collect()
        })
        .collect())
}

/// Checks `M·X = Y·M` entrywise modulo the ideal.
pub fn check_intertwiner<A: HopfAlgebra>(
    a: &A,
    m: &Matrix,
    x: &MatrixCorep<A::Elem>,
    y: &MatrixCorep<A::Elem>,
    bound: Bound,
) -> Result<Verdict> {
    let mx = scalar_times(a, m, x)?;
    let ym = times_scalar(a, &y.entries, m)?;
    let mut v = Verdict::Pass;
    for (i, (r1, r2)) in mx.iter().zip(&ym).enumerate() {
        for (j, (p, q)) in r1.iter().zip(r2).enumerate() {
            v = v.and(a.vanishes(&a.sub(p, q), bound)?.context(&format!("entry ({i},{j})")));
        }
    }
    Ok(v)
}

/// The matrix `(Φ(a_ij))`, after checking `Σ_k S⁻¹(a_ik)Φ(a_kj) ≡ Σ_k Φ(a_ik)S(a_kj)`.
pub fn sovereign_iso<A: HopfAlgebra>(
    a: &A,
    v: &MatrixCorep<A::Elem>,
    phi: &GenCharacter,
    bound: Bound,
) -> Result<Matrix> {
    let n = v.size();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        rows.push((0..n).map(|j| a.char_eval(phi, v.get(i, j))).collect::<Result<Vec<_>>>()?);
    }
    let m = Matrix::from_rows(a.field(), rows)?;
    for i in 0..n {
        for j in 0..n {
            let mut diff = a.zero();
            for k in 0..n {
                let l = a.scale(&a.antipode_inv(v.get(i, k))?, m.get(k, j));
                let r = a.scale(&a.antipode(v.get(k, j))?, m.get(i, k));
                diff = a.add(&diff, &a.sub(&l, &r));
            }
            let verdict = a.vanishes(&diff, bound)?;
            if !verdict.is_pass() {
                return Err(Error::IntertwinerCheckFailed(format!("{} entry ({i},{j}): {verdict}", v.label)));
            }
        }
    }
    Ok(m)
}

/// `(Σ Φ(a_ii), Σ Φ(S(a_ii)))`.
pub fn dims<A: HopfAlgebra>(a: &A, v: &MatrixCorep<A::Elem>, phi: &GenCharacter) -> Result<DimensionPair> {
    let mut left = Scalar::zero(a.field());
    let mut right = Scalar::zero(a.field());
    for i in 0..v.size() {
        left = &left + &a.char_eval(phi, v.get(i, i))?;
        right = &right + &a.char_eval(phi, &a.antipode(v.get(i, i))?)?;
    }
    Ok(DimensionPair { left, right })
}

/// An isomorphism certificate: `m` intertwines `from` into `to`.
pub struct Iso<E> {
    pub from: MatrixCorep<E>,
    pub to: MatrixCorep<E>,
    pub m: Matrix,
}

/// Unit dims, duals swapping dims, multiplicativity on tensor squares and
/// pairs, and invariance under the supplied isomorphisms.
pub fn check_dim_properties<A: HopfAlgebra>(
    a: &A,
    examples: &[MatrixCorep<A::Elem>],
    phi: &GenCharacter,
    isos: &[Iso<A::Elem>],
    bound: Bound,
) -> Result<Verdict> {
    let one = Scalar::one(a.field());
    let mut v = Verdict::Pass;
    let unit = dims(a, &trivial_corep(a), phi)?;
    v = v.and(Verdict::from_bool(unit.left == one && unit.right == one, || {
        format!("unit dims ({}, {})", unit.left, unit.right)
    }));
    for x in examples {
        let d = dims(a, x, phi)?;
        for dual in [left_dual(a, x)?, right_dual(a, x)?] {
            let dd = dims(a, &dual, phi)?;
            v = v.and(Verdict::from_bool(dd.left == d.right && dd.right == d.left, || {
                format!("{}: dims ({}, {}) vs ({}, {})", dual.label, dd.left, dd.right, d.left, d.right)
            }));
        }
        for y in examples {
            let e = dims(a, y, phi)?;
            let t = dims(a, &tensor_corep(a, x, y), phi)?;
            v = v.and(Verdict::from_bool(t.left == &d.left * &e.left && t.right == &d.right * &e.right, || {
                format!("{}⊗{}: dims not multiplicative", x.label, y.label)
            }));
        }
    }
    for iso in isos {
        if !iso.m.is_invertible() {
            v = v.and(Verdict::fail(format!("intertwiner {} → {} is singular", iso.from.label, iso.to.label)));
            continue;
        }
        v = v.and(check_intertwiner(a, &iso.m, &iso.from, &iso.to, bound)?);
        let (d1, d2) = (dims(a, &iso.from, phi)?, dims(a, &iso.to, phi)?);
        v = v.and(Verdict::from_bool(d1 == d2, || format!("{} and {} have different dims", iso.from.label, iso.to.label)));
    }
    Ok(v)
}

/// `A` coacting on itself through `Δ`, on the structure basis.
pub fn regular_corep(h: &FinHopf) -> MatrixCorep<Vec<Scalar>> {
    let n = h.dim();
    let entries = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| (0..n).map(|k| h.comult_const(i, j, k).clone()).collect())
                .collect()
        })
        .collect();
    MatrixCorep { label: "regular".into(), entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_fd::builtin_sweedler;

    #[test]
    fn sweedler_regular_dims_vanish() {
        let h = builtin_sweedler();
        let f = h.field().clone();
        let s = |n| Scalar::from_int(&f, n);
        let phi = GenCharacter::new("Φ", vec![s(1), s(-1), s(0), s(0)]);
        let reg = regular_corep(&h);
        assert!(check_corep(&h, &reg, Bound::default()).unwrap().is_pass());
        let d = dims(&h, &reg, &phi).unwrap();
        assert_eq!((d.left, d.right), (s(0), s(0)));
        let m = sovereign_iso(&h, &reg, &phi, Bound::default()).unwrap();
        assert!(m.is_invertible());
        assert!(check_dim_properties(&h, &[reg], &phi, &[], Bound::default()).unwrap().is_pass());
    }
}
