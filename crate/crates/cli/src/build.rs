//! `build` kinds: each returns a self-contained input that `verify` accepts.

use crate::error::{schema, CliError, CliResult};
use crate::model::{finite_spec, parse_field, presentation_spec, sle_spec, Workbench};
use crate::schema::*;
use sovhopf::cobraid::sweedler_cobraiding;
use sovhopf::exactmath::{FieldDesc, Scalar};
use sovhopf::hopf_fd::{builtin_group_algebra, builtin_sweedler, cyclic_table};
use sovhopf::hopf_pres::{builtin_hn, builtin_laurent, builtin_sweedler_pres};
use sovhopf::sle::build_eq;
use std::collections::BTreeMap;

fn empty(field: &FieldDesc) -> WorkbenchInput {
    WorkbenchInput {
        field: field.to_string(),
        finite_hopf: None,
        presentation_hopf: None,
        hf_matrix: None,
        sle_tensor: None,
        characters: Vec::new(),
        coreps: Vec::new(),
        cobraiding: None,
        cotwist: Vec::new(),
        options: Options::default(),
    }
}

/// Loads the input, which validates it, and returns the normalized form.
fn finish(input: WorkbenchInput) -> CliResult<WorkbenchInput> {
    Ok(Workbench::load(input)?.input)
}

/// The field for a list of scalar strings: `Q` when they are all rational,
/// otherwise `Q(q)`, unless given.
fn infer_field(given: Option<&str>, entries: &[&str]) -> CliResult<FieldDesc> {
    if let Some(f) = given {
        return parse_field(f);
    }
    if entries.iter().all(|e| Scalar::parse(&FieldDesc::Rationals, e).is_ok()) {
        Ok(FieldDesc::Rationals)
    } else {
        Ok(FieldDesc::rational_functions("q")?)
    }
}

fn table(pairs: &[(&str, &str)]) -> Table {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// `rows` as `"1,0;0,q"`.
pub fn hf(rows: &str, field: Option<&str>) -> CliResult<WorkbenchInput> {
    let m: Vec<Vec<String>> = rows.split(';').map(|r| r.split(',').map(|s| s.trim().to_string()).collect()).collect();
    let flat: Vec<&str> = m.iter().flatten().map(String::as_str).collect();
    let f = infer_field(field, &flat)?;
    let mut input = empty(&f);
    input.hf_matrix = Some(m);
    finish(input)
}

/// `entries` as `"1,2=1;2,1=-q"` with 1-based indices.
pub fn sle(n: usize, arity: usize, entries: &str, field: Option<&str>) -> CliResult<WorkbenchInput> {
    let mut t = Table::new();
    for part in entries.split(';').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| schema(format!("entry {part:?} is not idx=value")))?;
        t.insert(k.trim().to_string(), v.trim().to_string());
    }
    let values: Vec<&str> = t.values().map(String::as_str).collect();
    let f = infer_field(field, &values)?;
    let mut input = empty(&f);
    input.sle_tensor = Some(SleSpec { n, arity, entries: t });
    finish(input)
}

pub fn eq(n: usize, q: &str, field: Option<&str>) -> CliResult<WorkbenchInput> {
    let f = infer_field(field, &[q])?;
    let e = build_eq(n, &Scalar::parse(&f, q)?)?;
    let mut input = empty(&f);
    input.sle_tensor = Some(sle_spec(&e));
    finish(input)
}

pub fn hn(n: usize) -> CliResult<WorkbenchInput> {
    let (h, sov) = builtin_hn(n)?;
    let mut input = empty(&FieldDesc::Rationals);
    input.presentation_hopf = Some(presentation_spec(&h, &[("Phi_inv".to_string(), sov)]));
    finish(input)
}

/// Sweedler's algebra with `Φ: g ↦ −1, x ↦ 0`. The presented form carries the
/// solved cobraiding with `σ(x, x) = t`; the finite form carries the regular
/// corepresentation.
pub fn sweedler(t: &str, finite: bool) -> CliResult<WorkbenchInput> {
    let f = FieldDesc::Rationals;
    let mut input = empty(&f);
    if finite {
        input.finite_hopf = Some(finite_spec(&builtin_sweedler()));
        input.characters.push(CharacterSpec { label: "Phi".into(), values: table(&[("1", "1"), ("g", "-1"), ("x", "0"), ("gx", "0")]) });
        input.coreps.push(CorepSpec { label: "regular".into(), entries: None, regular: true });
        return finish(input);
    }
    let tv = Scalar::parse(&f, t)?;
    let cb = sweedler_cobraiding(&tv)?;
    input.presentation_hopf = Some(presentation_spec(&builtin_sweedler_pres()?, &[]));
    input.characters.push(CharacterSpec { label: "Phi".into(), values: table(&[("g", "-1"), ("x", "0")]) });
    let gens = cb.hopf().gens();
    let n = gens.len();
    let sigma = (0..n)
        .map(|i| {
            let row = (0..n).map(|j| (gens.name(j as u32).to_string(), cb.sigma_table()[i * n + j].to_string())).collect();
            (gens.name(i as u32).to_string(), row)
        })
        .collect();
    let mut defaults = BTreeMap::new();
    defaults.insert("s_x_x".to_string(), tv.to_string());
    input.cobraiding = Some(CobraidingSpec {
        sigma: Some(sigma),
        sigma_inv: None,
        solve: Some(SolveSpec { degree: 4, fixed: Table::new(), defaults }),
    });
    input.cotwist.push(CotwistSpec { label: "tau".into(), tau: vec!["Phi".into(), "beta".into()], tau_inv: vec!["lambda".into(), "Phi^-1".into()] });
    finish(input)
}

/// `k[ℤ/n]` with the counit as its character and the regular corep.
pub fn cyclic(n: usize) -> CliResult<WorkbenchInput> {
    if n == 0 {
        return Err(CliError::Schema("cyclic group needs n ≥ 1".into()));
    }
    let h = builtin_group_algebra(&format!("k[Z/{n}]"), &cyclic_table(n))?;
    let mut input = empty(&FieldDesc::Rationals);
    let eps = h.basis.iter().map(|b| (b.clone(), "1".to_string())).collect();
    input.finite_hopf = Some(finite_spec(&h));
    input.characters.push(CharacterSpec { label: "eps".into(), values: eps });
    input.coreps.push(CorepSpec { label: "regular".into(), entries: None, regular: true });
    finish(input)
}

pub fn laurent() -> CliResult<WorkbenchInput> {
    let mut input = empty(&FieldDesc::Rationals);
    input.presentation_hopf = Some(presentation_spec(&builtin_laurent()?, &[]));
    input.characters.push(CharacterSpec { label: "eps".into(), values: table(&[("t", "1"), ("t_inv", "1")]) });
    finish(input)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sle_entries_parse() {
        let input = sle(2, 2, "1,2=1; 2,1=-q", None).unwrap();
        assert_eq!(input.field, "Q(q)");
        let t = input.sle_tensor.unwrap();
        assert_eq!(t.entries.len(), 2);
        assert!(sle(2, 2, "1,2", None).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(cyclic(0).is_err());
        assert!(hf("1,0;0", None).is_err());
        assert!(eq(2, "q", Some("Q")).is_err());
    }

    #[test]
    fn sweedler_parameter() {
        let s = sweedler("2", false).unwrap();
        let sigma = s.cobraiding.unwrap().sigma.unwrap();
        assert_eq!(sigma["x"]["x"], "2");
        assert_eq!(sigma["g"]["g"], "-1");
    }
}
