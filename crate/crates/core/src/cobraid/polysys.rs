//! Small exact solver for polynomial systems in a handful of unknowns.
//!
//! Linear equations are eliminated first; an equation left in one unknown is
//! split over its rational roots. Unknowns no equation constrains stay free
//! and take caller-supplied defaults.

use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Polynomial in `nvars` commuting unknowns, keyed by exponent vector.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    field: FieldDesc,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("z{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

impl MPoly {
    pub fn zero(nvars: usize, field: &FieldDesc) -> Self {
        MPoly { nvars, field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MPoly::zero(nvars, &c.field().clone());
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, field: &FieldDesc, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars, field);
        p.terms.insert(e, Scalar::one(field));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero(&self.field)),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|e| e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i)).collect()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.scale(&-Scalar::one(&self.field)))
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars, &self.field);
        }
        MPoly { nvars: self.nvars, field: self.field.clone(), terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars, &self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::constant(self.nvars, Scalar::one(&self.field));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces unknown `i` by `value`.
    pub fn substitute(&self, i: usize, value: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars, &self.field);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest[i], 0);
            let mut mono = MPoly::zero(self.nvars, &self.field);
            mono.terms.insert(rest, c.clone());
            out = out.add(&mono.mul(&value.pow(k)));
        }
        out
    }

    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero(&self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t = &t * v;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients as a polynomial in its only unknown, if it has one.
    fn univariate(&self) -> Option<(usize, Vec<Scalar>)> {
        let vars = self.variables();
        if vars.len() != 1 {
            return None;
        }
        let i = *vars.iter().next().unwrap();
        let deg = self.terms.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
        let mut cs = vec![Scalar::zero(&self.field); deg + 1];
        for (e, c) in &self.terms {
            cs[e[i] as usize] = c.clone();
        }
        Some((i, cs))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
                .collect();
            parts.push(if mono.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{}", mono.join("*"))
            });
        }
        parts.join(" + ")
    }
}

/// Rational roots of a polynomial with rational coefficients, ascending.
pub fn rational_roots(p: &Poly) -> Result<Vec<BigRational>> {
    let mut roots = BTreeSet::new();
    let mut p = p.clone();
    if p.is_zero() {
        return Err(Error::Unsolved("zero polynomial has every root".into()));
    }
    while p.degree().unwrap_or(0) > 0 && p.constant_term().is_zero() {
        roots.insert(BigRational::zero());
        p = Poly::from_coeffs(p.coeffs()[1..].to_vec());
    }
    if p.degree().unwrap_or(0) > 0 {
        let s = p.primitive_scale();
        let ints: Vec<BigInt> = p.scale(&s).coeffs().iter().map(|c| c.to_integer()).collect();
        let a0 = divisors(ints.first().unwrap())?;
        let an = divisors(ints.last().unwrap())?;
        for num in &a0 {
            for den in &an {
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(sign) * num, den.clone());
                    if p.eval(&r).is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs().to_u64().ok_or_else(|| Error::Unsolved("coefficient too large for the rational root test".into()))?;
    if n > 1 << 40 {
        return Err(Error::Unsolved("coefficient too large for the rational root test".into()));
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PolySystem {
    pub names: Vec<String>,
    pub field: FieldDesc,
    pub equations: Vec<MPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySolution {
    pub values: Vec<Scalar>,
    /// Unknowns left unconstrained and bound to defaults.
    pub free: Vec<String>,
}

impl PolySystem {
    pub fn new(names: Vec<String>, field: &FieldDesc) -> Self {
        PolySystem { names, field: field.clone(), equations: Vec::new() }
    }

    pub fn var(&self, i: usize) -> MPoly {
        MPoly::var(self.names.len(), &self.field, i)
    }

    pub fn push(&mut self, eq: MPoly) {
        if !eq.is_zero() && !self.equations.contains(&eq) {
            self.equations.push(eq);
        }
    }

    /// First solution in branch order; free unknowns take `defaults` by name,
    /// else 1.
    pub fn solve(&self, defaults: &BTreeMap<String, Scalar>) -> Result<PolySolution> {
        self.solve_with(&BTreeMap::new(), defaults)
    }

    /// As [`PolySystem::solve`], with some unknowns fixed up front (a branch
    /// choice where root finding over the base field is not available).
    pub fn solve_with(&self, fixed: &BTreeMap<String, Scalar>, defaults: &BTreeMap<String, Scalar>) -> Result<PolySolution> {
        let n = self.names.len();
        let mut subst: Vec<Option<MPoly>> = vec![None; n];
        let mut eqs = self.equations.clone();
        for (name, v) in fixed {
            let i = self
                .names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| Error::Unsolved(format!("unknown `{name}` cannot be fixed")))?;
            let value = MPoly::constant(n, v.clone());
            eqs = eqs.iter().map(|e| e.substitute(i, &value)).collect();
            subst[i] = Some(value);
        }
        let sol = self
            .search(eqs, subst, 0)?
            .ok_or_else(|| Error::Unsolved("the system has no solution over the base field".into()))?;
        let (subst, free_idx) = sol;
        let mut values: Vec<Option<Scalar>> = vec![None; n];
        let mut free = Vec::new();
        for &i in &free_idx {
            let v = defaults.get(&self.names[i]).cloned().unwrap_or_else(|| Scalar::one(&self.field));
            values[i] = Some(v);
            free.push(self.names[i].clone());
        }
        // substitutions may refer to later-eliminated unknowns; resolve to a fixpoint
        for _ in 0..=n {
            for i in 0..n {
                if values[i].is_some() {
                    continue;
                }
                let Some(p) = &subst[i] else { continue };
                let vars = p.variables();
                if vars.iter().all(|&j| values[j].is_some()) {
                    let vs: Vec<Scalar> = values.iter().map(|v| v.clone().unwrap_or_else(|| Scalar::zero(&self.field))).collect();
                    values[i] = Some(p.eval(&vs));
                }
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Unsolved(format!("could not resolve {}", self.names[i]))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(eq) = self.equations.iter().find(|e| !e.eval(&values).is_zero()) {
            return Err(Error::Unsolved(format!("back substitution violates {}", eq.render(&self.names))));
        }
        Ok(PolySolution { values, free })
    }

    #[allow(clippy::type_complexity)]
    fn search(
        &self,
        eqs: Vec<MPoly>,
        subst: Vec<Option<MPoly>>,
        depth: usize,
    ) -> Result<Option<(Vec<Option<MPoly>>, Vec<usize>)>> {
        if depth > 4 * self.names.len() + 4 {
            return Err(Error::Unsolved("branching too deep".into()));
        }
        let mut eqs: Vec<MPoly> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
        if eqs.iter().any(|e| e.as_constant().is_some()) {
            return Ok(None);
        }
        if eqs.is_empty() {
            let free = (0..self.names.len()).filter(|&i| subst[i].is_none()).collect();
            return Ok(Some((subst, free)));
        }
        if let Some(k) = eqs.iter().position(|e| e.total_degree() == 1) {
            let eq = eqs.swap_remove(k);
            let i = *eq.variables().iter().next().unwrap();
            let mut e = vec![0; self.names.len()];
            e[i] = 1;
            let c = eq.terms[&e].clone();
            let rest = eq.sub(&MPoly::var(self.names.len(), &self.field, i).scale(&c));
            let value = rest.scale(&-c.inv()?);
            return self.assign(eqs, subst, i, value, depth);
        }
        if let Some((k, (i, cs))) = eqs.iter().enumerate().find_map(|(k, e)| e.univariate().map(|u| (k, u))) {
            let rs: Option<Vec<BigRational>> = cs.iter().map(|c| c.to_rational().cloned()).collect();
            let rs = rs.ok_or_else(|| Error::Unsolved("root finding needs rational coefficients".into()))?;
            let roots = rational_roots(&Poly::from_coeffs(rs))?;
            let mut rest = eqs.clone();
            rest.swap_remove(k);
            for r in roots {
                let value = MPoly::constant(self.names.len(), Scalar::from_rational(&self.field, r));
                if let Some(sol) = self.assign(rest.clone(), subst.clone(), i, value, depth)? {
                    return Ok(Some(sol));
                }
            }
            return Ok(None);
        }
        Err(Error::Unsolved(format!(
            "no linear or univariate equation among {}",
            eqs.iter().map(|e| e.render(&self.names)).collect::<Vec<_>>().join("; ")
        )))
    }

    #[allow(clippy::type_complexity)]
    fn assign(
        &self,
        eqs: Vec<MPoly>,
        mut subst: Vec<Option<MPoly>>,
        i: usize,
        value: MPoly,
        depth: usize,
    ) -> Result<Option<(Vec<Option<MPoly>>, Vec<usize>)>> {
        let eqs = eqs.iter().map(|e| e.substitute(i, &value)).collect();
        for s in subst.iter_mut().flatten() {
            *s = s.substitute(i, &value);
        }
        subst[i] = Some(value);
        self.search(eqs, subst, depth + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(&FieldDesc::Rationals, n)
    }

    #[test]
    fn roots() {
        let p = Poly::from_i64s(&[-1, 0, 1]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r, vec![BigRational::from_integer((-1).into()), BigRational::from_integer(1.into())]);
        let p = Poly::from_i64s(&[0, -3, 2]);
        assert_eq!(rational_roots(&p).unwrap().len(), 2);
        assert!(rational_roots(&Poly::from_i64s(&[2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn sweedler_like_system() {
        // a² = 1, b(1 + a) = 0, (1 + a) = 0, d free
        let f = FieldDesc::Rationals;
        let mut sys = PolySystem::new(vec!["a".into(), "b".into(), "d".into()], &f);
        let (a, b) = (sys.var(0), sys.var(1));
        let one = MPoly::constant(3, s(1));
        sys.push(a.mul(&a).sub(&one));
        sys.push(b.mul(&one.add(&a)));
        sys.push(one.add(&a));
        let mut defaults = BTreeMap::new();
        defaults.insert("d".to_string(), s(5));
        let sol = sys.solve(&defaults).unwrap();
        assert_eq!(sol.values, vec![s(-1), s(1), s(5)]);
        assert_eq!(sol.free, vec!["b".to_string(), "d".to_string()]);
    }

    #[test]
    fn inconsistent() {
        let f = FieldDesc::Rationals;
        let mut sys = PolySystem::new(vec!["a".into()], &f);
        let a = sys.var(0);
        sys.push(a.mul(&a).add(&MPoly::constant(1, s(1))));
        assert!(sys.solve(&BTreeMap::new()).is_err());
    }
}
