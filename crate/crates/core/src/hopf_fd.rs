//! Finite-dimensional Hopf algebras given by structure constants.

use crate::algebra::{GenCharacter, HopfAlgebra, TensorElem};
use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Matrix, Scalar};
use crate::verdict::{Bound, Verdict};

/// Structure constants on a fixed basis `e_0..e_{n-1}`.
///
/// `mult[(i,j,k)]` is the coefficient of `e_k` in `e_i e_j`, `comult[(i,j,k)]`
/// the coefficient of `e_j⊗e_k` in `Δ(e_i)`. Column `j` of `antipode` holds
/// `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf {
    pub label: String,
    pub basis: Vec<String>,
    field: FieldDesc,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inv: Option<Matrix>,
}

pub type Vector = Vec<Scalar>;

impl FinHopf {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        label: &str,
        basis: Vec<String>,
        field: &FieldDesc,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Matrix,
        antipode_inv: Option<Matrix>,
    ) -> Result<Self> {
        let n = basis.len();
        let shape = |what: &str, got: usize, want: usize| {
            if got == want {
                Ok(())
            } else {
                Err(Error::ShapeMismatch(format!("{what} has {got} entries, expected {want}")))
            }
        };
        if n == 0 {
            return Err(Error::ShapeMismatch("empty basis".into()));
        }
        shape("mult", mult.len(), n * n * n)?;
        shape("comult", comult.len(), n * n * n)?;
        shape("unit", unit.len(), n)?;
        shape("counit", counit.len(), n)?;
        for m in std::iter::once(&antipode).chain(antipode_inv.as_ref()) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::ShapeMismatch(format!("antipode must be {n}x{n}")));
            }
        }
        let all = mult.iter().chain(&unit).chain(&comult).chain(&counit);
        if let Some(bad) = all.into_iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(bad.field().to_string(), field.to_string()));
        }
        Ok(FinHopf {
            label: label.to_string(),
            basis,
            field: field.clone(),
            dim: n,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse_matrix(&self) -> Option<&Matrix> {
        self.antipode_inv.as_ref()
    }

    pub fn mult_const(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_const(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    /// Mutable access to one multiplication constant, for negative controls.
    pub fn mult_const_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult_const_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_antipode(&mut self, s: Matrix, s_inv: Option<Matrix>) {
        self.antipode = s;
        self.antipode_inv = s_inv;
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(&self.field); self.dim];
        v[i] = Scalar::one(&self.field);
        v
    }

    fn zero_vec(&self) -> Vector {
        vec![Scalar::zero(&self.field); self.dim]
    }

    fn mat_vec(&self, m: &Matrix, v: &[Scalar]) -> Vector {
        (0..self.dim)
            .map(|i| (0..self.dim).fold(Scalar::zero(&self.field), |acc, j| &acc + &(m.get(i, j) * &v[j])))
            .collect()
    }

    /// Dense `n×n` coefficient table of a tensor `Σ l⊗r`.
    fn tensor_table(&self, t: &[(Vector, Vector)]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(&self.field); n * n];
        for (l, r) in t {
            for (j, a) in l.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, b) in r.iter().enumerate() {
                    if !b.is_zero() {
                        out[j * n + k] = &out[j * n + k] + &(a * b);
                    }
                }
            }
        }
        out
    }

    fn name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn verify_algebra(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..n {
                    let l = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.mul(&self.basis_vector(j), &self.basis_vector(k));
                    let r = self.mul(&self.basis_vector(i), &jk);
                    if l != r {
                        return Verdict::fail(format!(
                            "associativity fails on ({}, {}, {})",
                            self.name(i),
                            self.name(j),
                            self.name(k)
                        ));
                    }
                }
            }
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Verdict::fail(format!("unit axiom fails on {}", self.name(i)));
            }
        }
        Verdict::Pass
    }

    pub fn verify_coalgebra(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis_vector(i);
            let d = self.comult(&e).expect("finite comult");
            // (Δ⊗id)Δ and (id⊗Δ)Δ as n³ tables
            let mut left = vec![Scalar::zero(&self.field); n * n * n];
            let mut right = left.clone();
            for (a, b) in &d {
                for (a1, a2) in self.comult(a).expect("finite comult") {
                    add_triple(&mut left, n, &a1, &a2, b);
                }
                for (b1, b2) in self.comult(b).expect("finite comult") {
                    add_triple(&mut right, n, a, &b1, &b2);
                }
            }
            if left != right {
                return Verdict::fail(format!("coassociativity fails on {}", self.name(i)));
            }
            let mut lc = self.zero_vec();
            let mut rc = self.zero_vec();
            for (a, b) in &d {
                lc = self.add(&lc, &self.scale(b, &self.counit(a).expect("counit")));
                rc = self.add(&rc, &self.scale(a, &self.counit(b).expect("counit")));
            }
            if lc != e || rc != e {
                return Verdict::fail(format!("counit axiom fails on {}", self.name(i)));
            }
        }
        Verdict::Pass
    }

    pub fn verify_bialgebra(&self) -> Verdict {
        let n = self.dim;
        let one = Scalar::one(&self.field);
        if self.tensor_table(&self.comult(&self.unit).expect("comult")) != self.tensor_table(&[(self.unit.clone(), self.unit.clone())]) {
            return Verdict::fail("Δ(1) ≠ 1⊗1");
        }
        if self.counit(&self.unit).expect("counit") != one {
            return Verdict::fail("ε(1) ≠ 1");
        }
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (self.basis_vector(i), self.basis_vector(j));
                let prod = self.mul(&ei, &ej);
                let lhs = self.tensor_table(&self.comult(&prod).expect("comult"));
                let mut rhs_terms = Vec::new();
                for (a1, a2) in self.comult(&ei).expect("comult") {
                    for (b1, b2) in self.comult(&ej).expect("comult") {
                        rhs_terms.push((self.mul(&a1, &b1), self.mul(&a2, &b2)));
                    }
                }
                if lhs != self.tensor_table(&rhs_terms) {
                    return Verdict::fail(format!("Δ not multiplicative on ({}, {})", self.name(i), self.name(j)));
                }
                let e = self.counit(&prod).expect("counit");
                if e != &self.counit[i] * &self.counit[j] {
                    return Verdict::fail(format!("ε not multiplicative on ({}, {})", self.name(i), self.name(j)));
                }
            }
        }
        Verdict::Pass
    }

    pub fn verify_antipode(&self) -> Verdict {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            let target = self.scale(&self.unit, &self.counit[i]);
            let mut l = self.zero_vec();
            let mut r = self.zero_vec();
            for (a, b) in self.comult(&e).expect("comult") {
                l = self.add(&l, &self.mul(&self.mat_vec(&self.antipode, &a), &b));
                r = self.add(&r, &self.mul(&a, &self.mat_vec(&self.antipode, &b)));
            }
            if l != target {
                return Verdict::fail(format!("m(S⊗id)Δ ≠ uε on {}", self.name(i)));
            }
            if r != target {
                return Verdict::fail(format!("m(id⊗S)Δ ≠ uε on {}", self.name(i)));
            }
        }
        if let Some(inv) = &self.antipode_inv {
            if !self.antipode.mul(inv).map(|m| m.is_identity()).unwrap_or(false) {
                return Verdict::fail("antipode_inverse is not the inverse of the antipode");
            }
        }
        Verdict::Pass
    }

    /// All structural verifiers in order.
    pub fn verify_all(&self) -> Vec<(&'static str, Verdict)> {
        vec![
            ("algebra", self.verify_algebra()),
            ("coalgebra", self.verify_coalgebra()),
            ("bialgebra", self.verify_bialgebra()),
            ("antipode", self.verify_antipode()),
        ]
    }

    pub fn is_involutory(&self) -> bool {
        self.antipode.mul(&self.antipode).map(|m| m.is_identity()).unwrap_or(false)
    }

    /// The dual Hopf algebra on the dual basis.
    pub fn dual_hopf(&self) -> FinHopf {
        let n = self.dim;
        let mut mult = Vec::with_capacity(n * n * n);
        let mut comult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.push(self.comult_const(k, i, j).clone());
                    comult.push(self.mult_const(j, k, i).clone());
                }
            }
        }
        FinHopf {
            label: format!("dual({})", self.label),
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            field: self.field.clone(),
            dim: n,
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
            antipode_inv: self.antipode_inv.as_ref().map(Matrix::transpose),
        }
    }

    /// The map `x ↦ Σ f(x₁) S(x₂) g(x₃)` as a matrix on the basis.
    pub fn sandwich_matrix(&self, f: &GenCharacter, s: &Matrix, g: &GenCharacter) -> Result<Matrix> {
        let n = self.dim;
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let mut col = self.zero_vec();
            for (a, b, c) in self.comult2(&self.basis_vector(j))? {
                let coeff = &self.char_eval(f, &a)? * &self.char_eval(g, &c)?;
                col = self.add(&col, &self.scale(&self.mat_vec(s, &b), &coeff));
            }
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }
}

fn add_triple(t: &mut [Scalar], n: usize, a: &[Scalar], b: &[Scalar], c: &[Scalar]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            for (k, z) in c.iter().enumerate() {
                if !z.is_zero() {
                    let idx = (i * n + j) * n + k;
                    t[idx] = &t[idx] + &(&xy * z);
                }
            }
        }
    }
}

impl HopfAlgebra for FinHopf {
    type Elem = Vector;

    fn label(&self) -> &str {
        &self.label
    }

    fn field(&self) -> &FieldDesc {
        &self.field
    }

    fn generators(&self) -> Vec<(String, Vector)> {
        (0..self.dim).map(|i| (self.basis[i].clone(), self.basis_vector(i))).collect()
    }

    fn zero(&self) -> Vector {
        self.zero_vec()
    }

    fn one(&self) -> Vector {
        self.unit.clone()
    }

    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn scale(&self, a: &Vector, c: &Scalar) -> Vector {
        a.iter().map(|x| x * c).collect()
    }

    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.mult_const(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&xy * c);
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        out
    }

    fn comult(&self, a: &Vector) -> Result<TensorElem<Vector>> {
        let n = self.dim;
        let mut out = Vec::new();
        for j in 0..n {
            let mut right = self.zero_vec();
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, r) in right.iter_mut().enumerate() {
                    let c = self.comult_const(i, j, k);
                    if !c.is_zero() {
                        *r = &*r + &(x * c);
                    }
                }
            }
            if right.iter().any(|x| !x.is_zero()) {
                out.push((self.basis_vector(j), right));
            }
        }
        Ok(out)
    }

    fn counit(&self, a: &Vector) -> Result<Scalar> {
        Ok(a.iter().zip(&self.counit).fold(Scalar::zero(&self.field), |acc, (x, e)| &acc + &(x * e)))
    }

    fn antipode(&self, a: &Vector) -> Result<Vector> {
        Ok(self.mat_vec(&self.antipode, a))
    }

    fn antipode_inv(&self, a: &Vector) -> Result<Vector> {
        match &self.antipode_inv {
            Some(m) => Ok(self.mat_vec(m, a)),
            None => Err(Error::MissingInverse),
        }
    }

    fn char_eval(&self, chi: &GenCharacter, a: &Vector) -> Result<Scalar> {
        if chi.values.len() != self.dim {
            return Err(Error::MissingValue(format!("{} needs {} basis values", chi.label, self.dim)));
        }
        Ok(a.iter().zip(&chi.values).fold(Scalar::zero(&self.field), |acc, (x, v)| &acc + &(x * v)))
    }

    fn check_character(&self, chi: &GenCharacter) -> Result<Verdict> {
        if self.char_eval(chi, &self.unit)? != Scalar::one(&self.field) {
            return Ok(Verdict::fail(format!("{}(1) ≠ 1", chi.label)));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                if self.char_eval(chi, &p)? != &chi.values[i] * &chi.values[j] {
                    return Ok(Verdict::fail(format!(
                        "{} not multiplicative on ({}, {})",
                        chi.label,
                        self.name(i),
                        self.name(j)
                    )));
                }
            }
        }
        Ok(Verdict::Pass)
    }

    fn counit_character(&self) -> GenCharacter {
        GenCharacter::new("ε", self.counit.clone())
    }

    fn vanishes(&self, a: &Vector, _bound: Bound) -> Result<Verdict> {
        Ok(Verdict::from_bool(a.iter().all(Scalar::is_zero), || format!("residual {}", self.render(a))))
    }

    fn tensor_vanishes(&self, t: &[(Vector, Vector)], _bound: Bound) -> Result<Verdict> {
        let table = self.tensor_table(t);
        Ok(Verdict::from_bool(table.iter().all(Scalar::is_zero), || "nonzero tensor residual".to_string()))
    }

    fn coords(&self, a: &Vector) -> Vec<(Vec<u32>, Scalar)> {
        a.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (vec![i as u32], x.clone())).collect()
    }

    fn render(&self, a: &Vector) -> String {
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| if x.is_one() { self.basis[i].clone() } else { format!("({x})*{}", self.basis[i]) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Sweedler's four-dimensional Hopf algebra on the basis `(1, g, x, gx)` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(x) = 1⊗x + x⊗g`.
pub fn builtin_sweedler() -> FinHopf {
    let f = FieldDesc::Rationals;
    let s = |n: i64| Scalar::from_int(&f, n);
    // basis element g^a x^b has index a + 2b
    let idx = |a: usize, b: usize| a + 2 * b;
    let n = 4;
    let mut mult = vec![s(0); n * n * n];
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d >= 2 {
                continue;
            }
            // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
            let sign = if b * c == 1 { -1 } else { 1 };
            mult[(idx(a, b) * n + idx(c, d)) * n + idx((a + c) % 2, b + d)] = s(sign);
        }
    }
    let mut comult = vec![s(0); n * n * n];
    let mut put = |i: usize, j: usize, k: usize| comult[(i * n + j) * n + k] = s(1);
    put(0, 0, 0);
    put(1, 1, 1);
    put(2, 0, 2);
    put(2, 2, 1);
    put(3, 1, 3);
    put(3, 3, 0);
    let antipode = Matrix::from_i64(&f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let antipode_inv = antipode.inverse().expect("invertible");
    FinHopf::new(
        "sweedler",
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        &f,
        mult,
        vec![s(1), s(0), s(0), s(0)],
        comult,
        vec![s(1), s(1), s(0), s(0)],
        antipode,
        Some(antipode_inv),
    )
    .expect("well-formed")
}

/// Group algebra from a multiplication table `table[i][j] = index of g_i g_j`.
pub fn builtin_group_algebra(label: &str, table: &[Vec<usize>]) -> Result<FinHopf> {
    let n = table.len();
    let not_group = |m: &str| Err(Error::NotAGroup(m.to_string()));
    if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
        return not_group("table is not a closed square table");
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return not_group(&format!("not associative on ({a}, {b}, {c})"));
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
        return not_group("no identity element");
    };
    let mut inv = vec![0; n];
    for (a, slot) in inv.iter_mut().enumerate() {
        match (0..n).find(|&b| table[a][b] == e && table[b][a] == e) {
            Some(b) => *slot = b,
            None => return not_group(&format!("element {a} has no inverse")),
        }
    }
    let f = FieldDesc::Rationals;
    let s = |x: i64| Scalar::from_int(&f, x);
    let mut mult = vec![s(0); n * n * n];
    let mut comult = vec![s(0); n * n * n];
    let mut antipode = Matrix::zeros(&f, n, n);
    for a in 0..n {
        for b in 0..n {
            mult[(a * n + b) * n + table[a][b]] = s(1);
        }
        comult[(a * n + a) * n + a] = s(1);
        antipode.set(inv[a], a, s(1));
    }
    let mut unit = vec![s(0); n];
    unit[e] = s(1);
    let s_inv = antipode.clone();
    FinHopf::new(
        label,
        (0..n).map(|i| format!("g{i}")).collect(),
        &f,
        mult,
        unit,
        comult,
        vec![s(1); n],
        antipode,
        Some(s_inv),
    )
}

/// Multiplication table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_products() {
        let h = builtin_sweedler();
        let (g, x, gx) = (h.basis_vector(1), h.basis_vector(2), h.basis_vector(3));
        let neg = |v: &Vector| h.scale(v, &Scalar::from_int(h.field(), -1));
        assert_eq!(h.mul(&x, &g), neg(&gx));
        assert_eq!(h.mul(&gx, &g), neg(&x));
        assert_eq!(h.mul(&g, &gx), x);
        assert!(h.mul(&x, &x).iter().all(Scalar::is_zero));
        assert_eq!(h.antipode(&x).unwrap(), gx);
    }

    #[test]
    fn group_algebra_rejects_bad_tables() {
        assert!(matches!(builtin_group_algebra("bad", &[vec![0, 1], vec![1, 1]]), Err(Error::NotAGroup(_))));
        assert!(matches!(builtin_group_algebra("bad", &[vec![0, 2]]), Err(Error::NotAGroup(_))));
        let z3 = builtin_group_algebra("Z3", &cyclic_table(3)).unwrap();
        assert_eq!(z3.dim(), 3);
        assert!(z3.is_involutory());
    }
}
