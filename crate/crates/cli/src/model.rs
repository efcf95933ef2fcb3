//! Builds library objects from a [`WorkbenchInput`] and renders them back in
//! canonical form.

use crate::error::{schema, CliError, CliResult};
use crate::schema::*;
use sovhopf::cobraid::{solve_cobraiding, Cobraiding, CotwistData, LinearForm};
use sovhopf::corep::{regular_corep, MatrixCorep};
use sovhopf::exactmath::{FieldDesc, Matrix, Scalar};
use sovhopf::forms::character_inverse;
use sovhopf::hopf_fd::FinHopf;
use sovhopf::hopf_pres::{GroupLikeElement, PresentedHopf};
use sovhopf::ncalg::{GenSet, NCPoly, Representation, TensorPoly};
use sovhopf::sle::{build_sle, tuples, ETensor, SLEAlgebra};
use sovhopf::universal::{build_hf, HFAlgebra};
use sovhopf::{GenCharacter, HopfAlgebra};
use std::collections::BTreeMap;

pub enum Object {
    Finite(FinHopf),
    Presented(PresentedHopf),
    Hf(HFAlgebra),
    Sle(SLEAlgebra),
}

impl Object {
    pub fn presented(&self) -> Option<&PresentedHopf> {
        match self {
            Object::Finite(_) => None,
            Object::Presented(h) => Some(h),
            Object::Hf(h) => Some(&h.hopf),
            Object::Sle(a) => Some(&a.hopf),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Object::Finite(h) => h.label.clone(),
            Object::Presented(h) => h.label.clone(),
            Object::Hf(h) => h.hopf.label.clone(),
            Object::Sle(a) => a.hopf.label.clone(),
        }
    }
}

pub enum Coreps {
    Finite(Vec<MatrixCorep<Vec<Scalar>>>),
    Presented(Vec<MatrixCorep<NCPoly>>),
}

impl Coreps {
    pub fn labels(&self) -> Vec<String> {
        match self {
            Coreps::Finite(v) => v.iter().map(|c| c.label.clone()).collect(),
            Coreps::Presented(v) => v.iter().map(|c| c.label.clone()).collect(),
        }
    }
}

pub struct CobraidingModel {
    pub cb: Cobraiding,
    /// The solver's table when both a table and a solve request were given.
    pub solved: Option<Vec<Scalar>>,
}

pub struct Workbench {
    pub input: WorkbenchInput,
    pub field: FieldDesc,
    pub object: Object,
    /// Built-in characters of the object first, then the declared ones.
    pub characters: Vec<GenCharacter>,
    pub coreps: Coreps,
    pub sovereign_elements: Vec<(String, GroupLikeElement)>,
    pub cobraiding: Option<CobraidingModel>,
    pub cotwists: Vec<(String, CotwistData)>,
}

pub fn parse_field(s: &str) -> CliResult<FieldDesc> {
    let s = s.trim();
    if s == "Q" {
        return Ok(FieldDesc::Rationals);
    }
    match s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        Some(var) => Ok(FieldDesc::rational_functions(var.trim())?),
        None => Err(schema(format!("field must be \"Q\" or \"Q(<var>)\", got {s:?}"))),
    }
}

fn scalar(field: &FieldDesc, s: &str) -> CliResult<Scalar> {
    Ok(Scalar::parse(field, s)?)
}

fn poly(gens: &GenSet, field: &FieldDesc, s: &str) -> CliResult<NCPoly> {
    Ok(NCPoly::parse(gens, field, s)?)
}

fn matrix(field: &FieldDesc, rows: &[Vec<String>]) -> CliResult<Matrix> {
    let rows = rows.iter().map(|r| r.iter().map(|s| scalar(field, s)).collect()).collect::<CliResult<_>>()?;
    Ok(Matrix::from_rows(field, rows)?)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

fn lookup(index: &BTreeMap<&str, usize>, name: &str, what: &str) -> CliResult<usize> {
    index.get(name).copied().ok_or_else(|| schema(format!("{what}: unknown name `{name}`")))
}

fn by_name<T: Clone>(names: &[String], table: &BTreeMap<String, T>, what: &str) -> CliResult<Vec<T>> {
    if let Some(extra) = table.keys().find(|k| !names.contains(k)) {
        return Err(schema(format!("{what}: unknown name `{extra}`")));
    }
    names
        .iter()
        .map(|n| table.get(n).cloned().ok_or_else(|| schema(format!("{what}: no value for `{n}`"))))
        .collect()
}

// finite-dimensional algebras

fn build_finite(spec: &FiniteHopfSpec, field: &FieldDesc) -> CliResult<FinHopf> {
    let n = spec.basis.len();
    let index: BTreeMap<&str, usize> = spec.basis.iter().enumerate().map(|(i, b)| (b.as_str(), i)).collect();
    if index.len() != n {
        return Err(schema("finite_hopf: duplicate basis names"));
    }
    let zero = Scalar::zero(field);
    let mut mult = vec![zero.clone(); n * n * n];
    for [a, b, c, k] in &spec.mult {
        let (a, b, c) = (lookup(&index, a, "mult")?, lookup(&index, b, "mult")?, lookup(&index, c, "mult")?);
        mult[(a * n + b) * n + c] = scalar(field, k)?;
    }
    let mut comult = vec![zero.clone(); n * n * n];
    for [a, b, c, k] in &spec.comult {
        let (a, b, c) = (lookup(&index, a, "comult")?, lookup(&index, b, "comult")?, lookup(&index, c, "comult")?);
        comult[(a * n + b) * n + c] = scalar(field, k)?;
    }
    let vector = |t: &Table, what: &str| -> CliResult<Vec<Scalar>> {
        let mut v = vec![zero.clone(); n];
        for (b, k) in t {
            v[lookup(&index, b, what)?] = scalar(field, k)?;
        }
        Ok(v)
    };
    let antipode = |entries: &[[String; 3]], what: &str| -> CliResult<Matrix> {
        let mut m = Matrix::zeros(field, n, n);
        for [a, b, k] in entries {
            m.set(lookup(&index, b, what)?, lookup(&index, a, what)?, scalar(field, k)?);
        }
        Ok(m)
    };
    let s = antipode(&spec.antipode, "antipode")?;
    let s_inv = spec.antipode_inv.as_deref().map(|e| antipode(e, "antipode_inv")).transpose()?;
    Ok(FinHopf::new(
        &spec.label,
        spec.basis.clone(),
        field,
        mult,
        vector(&spec.unit, "unit")?,
        comult,
        vector(&spec.counit, "counit")?,
        s,
        s_inv,
    )?)
}

pub fn finite_spec(h: &FinHopf) -> FiniteHopfSpec {
    let n = h.dim();
    let b = &h.basis;
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let m = h.mult_const(i, j, k);
                if !m.is_zero() {
                    mult.push([b[i].clone(), b[j].clone(), b[k].clone(), m.to_string()]);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = h.comult_const(i, j, k);
                if !c.is_zero() {
                    comult.push([b[i].clone(), b[j].clone(), b[k].clone(), c.to_string()]);
                }
            }
        }
    }
    let table = |v: &[Scalar]| -> Table {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (b[i].clone(), c.to_string())).collect()
    };
    let antipode = |m: &Matrix| -> Vec<[String; 3]> {
        let mut out = Vec::new();
        for a in 0..n {
            for c in 0..n {
                let k = m.get(c, a);
                if !k.is_zero() {
                    out.push([b[a].clone(), b[c].clone(), k.to_string()]);
                }
            }
        }
        out
    };
    FiniteHopfSpec {
        label: h.label.clone(),
        basis: b.clone(),
        mult,
        unit: table(h.unit_vector()),
        comult,
        counit: table(h.counit_vector()),
        antipode: antipode(h.antipode_matrix()),
        antipode_inv: h.antipode_inverse_matrix().map(antipode),
    }
}

// presented algebras

fn build_presented(spec: &PresentationSpec, field: &FieldDesc) -> CliResult<(PresentedHopf, Vec<(String, GroupLikeElement)>)> {
    let gens = GenSet::new(&spec.generators)?;
    let relations = spec.relations.iter().map(|r| poly(&gens, field, r)).collect::<CliResult<_>>()?;
    let pres = sovhopf::ncalg::Presentation::new(&gens, field, relations)?;
    let names = gens.names().to_vec();
    let mut comult = Vec::new();
    for legs in by_name(&names, &spec.comult, "comult")? {
        let mut t = TensorPoly::zero(&gens, field);
        for [l, r] in &legs {
            t = t.try_add(&TensorPoly::pure(&poly(&gens, field, l)?, &poly(&gens, field, r)?)?)?;
        }
        comult.push(t);
    }
    let counit = by_name(&names, &spec.counit, "counit")?.iter().map(|s| scalar(field, s)).collect::<CliResult<_>>()?;
    let images = |t: &Table, what: &str| -> CliResult<Vec<NCPoly>> {
        by_name(&names, t, what)?.iter().map(|s| poly(&gens, field, s)).collect()
    };
    let s = images(&spec.antipode, "antipode")?;
    let s_inv = spec.antipode_inv.as_ref().map(|t| images(t, "antipode_inv")).transpose()?;
    let mut h = PresentedHopf::new(&spec.label, pres, comult, counit, s, s_inv)?;
    for w in &spec.witnesses {
        let mats = by_name(&names, &w.images, "witness")?.iter().map(|m| matrix(field, m)).collect::<CliResult<_>>()?;
        h.add_witness(Representation::new(&w.label, mats)?)?;
    }
    let sov = spec
        .sovereign_elements
        .iter()
        .map(|g| {
            let el = GroupLikeElement { element: poly(&gens, field, &g.element)?, inverse: poly(&gens, field, &g.inverse)? };
            Ok((g.label.clone(), el))
        })
        .collect::<CliResult<_>>()?;
    Ok((h, sov))
}

/// Counit witnesses are re-registered on construction, so they are not
/// written out.
pub fn presentation_spec(h: &PresentedHopf, sovereign: &[(String, GroupLikeElement)]) -> PresentationSpec {
    let gens = h.gens();
    let names = gens.names();
    let field = h.presentation().field();
    let per_gen = |f: &dyn Fn(u32) -> String| -> Table { (0..names.len() as u32).map(|g| (names[g as usize].clone(), f(g))).collect() };
    let comult = (0..names.len() as u32)
        .map(|g| {
            let legs = h.comult_of_gen(g).legs().iter().map(|(l, r)| [l.render(), r.render()]).collect();
            (names[g as usize].clone(), legs)
        })
        .collect();
    let eps_images: Vec<Matrix> = h.counit_values().iter().map(|c| Matrix::diag(field, std::slice::from_ref(c))).collect();
    let witnesses = h
        .presentation()
        .witnesses()
        .iter()
        .filter(|w| w.images != eps_images)
        .map(|w| WitnessSpec {
            label: w.label.clone(),
            images: names.iter().cloned().zip(w.images.iter().map(matrix_rows)).collect(),
        })
        .collect();
    PresentationSpec {
        label: h.label.clone(),
        generators: names.to_vec(),
        relations: h.presentation().relations().iter().map(NCPoly::render).collect(),
        comult,
        counit: per_gen(&|g| h.counit_values()[g as usize].to_string()),
        antipode: per_gen(&|g| h.antipode_map().image(g).map(NCPoly::render).unwrap_or_default()),
        antipode_inv: h.antipode_inv_map().map(|m| per_gen(&|g| m.image(g).map(NCPoly::render).unwrap_or_default())),
        witnesses,
        sovereign_elements: sovereign
            .iter()
            .map(|(l, g)| GroupLikeSpec { label: l.clone(), element: g.element.render(), inverse: g.inverse.render() })
            .collect(),
    }
}

// SL(E)

fn build_tensor(spec: &SleSpec, field: &FieldDesc) -> CliResult<ETensor> {
    let (n, arity) = (spec.n, spec.arity);
    if n == 0 || arity < 2 || n.checked_pow(arity as u32).is_none_or(|l| l > 1 << 20) {
        return Err(schema(format!("sle_tensor: unsupported shape n={n}, arity={arity}")));
    }
    let mut values = vec![Scalar::zero(field); n.pow(arity as u32)];
    for (key, v) in &spec.entries {
        let idx: Vec<usize> = key
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&i| (1..=n).contains(&i)).map(|i| i - 1))
            .collect::<Option<_>>()
            .filter(|v: &Vec<usize>| v.len() == arity)
            .ok_or_else(|| schema(format!("sle_tensor: bad index tuple {key:?}")))?;
        let off = idx.iter().fold(0, |acc, &i| acc * n + i);
        values[off] = scalar(field, v)?;
    }
    Ok(ETensor::new(n, arity, field, values)?)
}

pub fn sle_spec(e: &ETensor) -> SleSpec {
    let entries = tuples(e.n, e.arity)
        .into_iter()
        .filter(|t| !e.get(t).is_zero())
        .map(|t| {
            let key = t.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
            (key, e.get(&t).to_string())
        })
        .collect();
    SleSpec { n: e.n, arity: e.arity, entries }
}

// characters, coreps, cobraidings

fn relabel(c: &GenCharacter, label: &str) -> GenCharacter {
    GenCharacter::new(label, c.values.clone())
}

fn character_names(object: &Object) -> Vec<String> {
    match object {
        Object::Finite(h) => h.basis.clone(),
        _ => object.presented().expect("presented").gens().names().to_vec(),
    }
}

fn sigma_table(gens: &GenSet, field: &FieldDesc, t: &BTreeMap<String, Table>, what: &str) -> CliResult<Vec<Scalar>> {
    let names = gens.names().to_vec();
    let rows = by_name(&names, t, what)?;
    let mut out = Vec::with_capacity(names.len() * names.len());
    for row in rows {
        for v in by_name(&names, &row, what)? {
            out.push(scalar(field, &v)?);
        }
    }
    Ok(out)
}

fn sigma_spec(gens: &GenSet, t: &[Scalar]) -> BTreeMap<String, Table> {
    let names = gens.names();
    let n = names.len();
    (0..n).map(|i| (names[i].clone(), (0..n).map(|j| (names[j].clone(), t[i * n + j].to_string())).collect())).collect()
}

fn form_of(h: &PresentedHopf, chars: &[GenCharacter], factors: &[String]) -> CliResult<LinearForm> {
    let mut parts = Vec::new();
    for f in factors {
        parts.push(match f.as_str() {
            "eps" => LinearForm::Counit,
            "lambda" => LinearForm::Lambda,
            "beta" => LinearForm::Beta,
            other => {
                let (label, inverse) = match other.strip_suffix("^-1") {
                    Some(l) => (l, true),
                    None => (other, false),
                };
                let c = chars.iter().find(|c| c.label == label).ok_or_else(|| CliError::UnknownLabel(label.into()))?;
                LinearForm::Character(if inverse { character_inverse(h, c)? } else { c.clone() })
            }
        });
    }
    match parts.len() {
        0 => Err(schema("cotwist: empty factor list")),
        1 => Ok(parts.pop().expect("one factor")),
        _ => Ok(LinearForm::Convolution(parts)),
    }
}

impl Workbench {
    pub fn load(input: WorkbenchInput) -> CliResult<Self> {
        let field = parse_field(&input.field)?;
        let sections = [
            input.finite_hopf.is_some(),
            input.presentation_hopf.is_some(),
            input.hf_matrix.is_some(),
            input.sle_tensor.is_some(),
        ];
        if sections.iter().filter(|&&b| b).count() != 1 {
            return Err(schema("exactly one of finite_hopf, presentation_hopf, hf_matrix, sle_tensor is required"));
        }
        let mut characters = Vec::new();
        let mut sovereign_elements = Vec::new();
        let mut auto_coreps = Vec::new();
        let object = if let Some(spec) = &input.finite_hopf {
            Object::Finite(build_finite(spec, &field)?)
        } else if let Some(spec) = &input.presentation_hopf {
            let (h, sov) = build_presented(spec, &field)?;
            sovereign_elements = sov;
            Object::Presented(h)
        } else if let Some(rows) = &input.hf_matrix {
            let h = build_hf(&matrix(&field, rows)?)?;
            characters.push(relabel(&h.character, "Phi_F"));
            auto_coreps.push(MatrixCorep::new("u", h.corep_u.entries.clone())?);
            auto_coreps.push(MatrixCorep::new("v", h.corep_v.entries.clone())?);
            Object::Hf(h)
        } else {
            let spec = input.sle_tensor.as_ref().expect("one section");
            let a = build_sle(&build_tensor(spec, &field)?)?;
            if let Some(c) = &a.character {
                characters.push(relabel(c, "Phi_beta"));
            }
            auto_coreps.push(MatrixCorep::new("a", a.corep.entries.clone())?);
            Object::Sle(a)
        };

        let names = character_names(&object);
        for c in &input.characters {
            if characters.iter().any(|x| x.label == c.label) {
                return Err(schema(format!("duplicate character label `{}`", c.label)));
            }
            let values = by_name(&names, &c.values, &format!("character {}", c.label))?;
            let values = values.iter().map(|s| scalar(&field, s)).collect::<CliResult<_>>()?;
            characters.push(GenCharacter::new(c.label.clone(), values));
        }

        let coreps = match &object {
            Object::Finite(h) => {
                let index: BTreeMap<&str, usize> = h.basis.iter().enumerate().map(|(i, b)| (b.as_str(), i)).collect();
                let mut out = Vec::new();
                for c in &input.coreps {
                    if c.regular {
                        let mut r = regular_corep(h);
                        r.label = c.label.clone();
                        out.push(r);
                        continue;
                    }
                    let rows = c.entries.as_ref().ok_or_else(|| schema(format!("corep {}: no entries", c.label)))?;
                    let mut entries = Vec::new();
                    for row in rows {
                        let mut r = Vec::new();
                        for e in row {
                            let ElementSpec::Coords(t) = e else {
                                return Err(schema(format!("corep {}: finite entries are basis coordinate maps", c.label)));
                            };
                            let mut v = vec![Scalar::zero(&field); h.dim()];
                            for (b, k) in t {
                                v[lookup(&index, b, "corep")?] = scalar(&field, k)?;
                            }
                            r.push(v);
                        }
                        entries.push(r);
                    }
                    out.push(MatrixCorep::new(c.label.clone(), entries)?);
                }
                Coreps::Finite(out)
            }
            _ => {
                let h = object.presented().expect("presented");
                let mut out = auto_coreps;
                for c in &input.coreps {
                    if c.regular {
                        return Err(schema(format!("corep {}: regular coreps need a finite_hopf", c.label)));
                    }
                    let rows = c.entries.as_ref().ok_or_else(|| schema(format!("corep {}: no entries", c.label)))?;
                    let mut entries = Vec::new();
                    for row in rows {
                        let mut r = Vec::new();
                        for e in row {
                            let ElementSpec::Poly(s) = e else {
                                return Err(schema(format!("corep {}: entries are polynomial strings", c.label)));
                            };
                            r.push(poly(h.gens(), &field, s)?);
                        }
                        entries.push(r);
                    }
                    out.push(MatrixCorep::new(c.label.clone(), entries)?);
                }
                Coreps::Presented(out)
            }
        };
        let labels = coreps.labels();
        if (1..labels.len()).any(|i| labels[..i].contains(&labels[i])) {
            return Err(schema("duplicate corep labels"));
        }

        let cobraiding = match &input.cobraiding {
            None => None,
            Some(spec) => {
                let h = object.presented().ok_or_else(|| schema("cobraiding needs a presented algebra"))?;
                let inv = spec.sigma_inv.as_ref().map(|t| sigma_table(h.gens(), &field, t, "sigma_inv")).transpose()?;
                let solved = match &spec.solve {
                    Some(s) => {
                        let parse = |t: &Table| -> CliResult<BTreeMap<String, Scalar>> {
                            t.iter().map(|(k, v)| Ok((k.clone(), scalar(&field, v)?))).collect()
                        };
                        Some(solve_cobraiding(h.clone(), s.degree, &parse(&s.fixed)?, &parse(&s.defaults)?)?.0)
                    }
                    None => None,
                };
                match (&spec.sigma, solved) {
                    (Some(t), solved) => {
                        let table = sigma_table(h.gens(), &field, t, "sigma")?;
                        let cb = Cobraiding::new(h.clone(), table, inv)?;
                        Some(CobraidingModel { cb, solved: solved.map(|s| s.sigma_table().to_vec()) })
                    }
                    (None, Some(s)) => {
                        let cb = match inv {
                            Some(inv) => Cobraiding::new(h.clone(), s.sigma_table().to_vec(), Some(inv))?,
                            None => s,
                        };
                        Some(CobraidingModel { cb, solved: None })
                    }
                    (None, None) => return Err(schema("cobraiding needs sigma or solve")),
                }
            }
        };

        let mut cotwists = Vec::new();
        for c in &input.cotwist {
            let h = object.presented().ok_or_else(|| schema("cotwists need a presented algebra"))?;
            if cobraiding.is_none() {
                return Err(schema("cotwists need a cobraiding"));
            }
            let data = CotwistData { tau: form_of(h, &characters, &c.tau)?, tau_inv: form_of(h, &characters, &c.tau_inv)? };
            cotwists.push((c.label.clone(), data));
        }

        let mut wb = Workbench { input, field, object, characters, coreps, sovereign_elements, cobraiding, cotwists };
        wb.input = wb.canonical_input();
        Ok(wb)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        let input: WorkbenchInput = serde_json::from_str(text).map_err(|e| match e.classify() {
            serde_json::error::Category::Data => CliError::Schema(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        })?;
        Self::load(input)
    }

    /// The input with every scalar and polynomial in normal form and the
    /// object section rendered from the built object.
    fn canonical_input(&self) -> WorkbenchInput {
        let f = &self.field;
        let mut out = self.input.clone();
        out.field = f.to_string();
        match &self.object {
            Object::Finite(h) => out.finite_hopf = Some(finite_spec(h)),
            Object::Presented(h) => out.presentation_hopf = Some(presentation_spec(h, &self.sovereign_elements)),
            Object::Hf(h) => out.hf_matrix = Some(matrix_rows(&h.f)),
            Object::Sle(a) => out.sle_tensor = Some(sle_spec(&a.e)),
        }
        let names = character_names(&self.object);
        let skip = self.characters.len() - out.characters.len();
        for (spec, c) in out.characters.iter_mut().zip(&self.characters[skip..]) {
            spec.values = names.iter().cloned().zip(c.values.iter().map(|v| v.to_string())).collect();
        }
        for spec in &mut out.coreps {
            if let Some(rows) = &mut spec.entries {
                for e in rows.iter_mut().flatten() {
                    *e = match std::mem::replace(e, ElementSpec::Poly(String::new())) {
                        ElementSpec::Poly(s) => {
                            let h = self.object.presented().expect("checked on load");
                            ElementSpec::Poly(poly(h.gens(), f, &s).map(|p| p.render()).unwrap_or(s))
                        }
                        ElementSpec::Coords(t) => ElementSpec::Coords(
                            t.into_iter()
                                .filter_map(|(k, v)| {
                                    let s = Scalar::parse(f, &v).ok()?;
                                    (!s.is_zero()).then(|| (k, s.to_string()))
                                })
                                .collect(),
                        ),
                    };
                }
            }
        }
        if let (Some(spec), Some(model)) = (&mut out.cobraiding, &self.cobraiding) {
            let gens = model.cb.hopf().gens();
            if spec.sigma.is_some() {
                spec.sigma = Some(sigma_spec(gens, model.cb.sigma_table()));
            }
            if spec.sigma_inv.is_some() {
                spec.sigma_inv = Some(sigma_spec(gens, model.cb.sigma_inv_table()));
            }
            if let Some(s) = &mut spec.solve {
                for t in [&mut s.fixed, &mut s.defaults] {
                    for v in t.values_mut() {
                        if let Ok(x) = Scalar::parse(f, v) {
                            *v = x.to_string();
                        }
                    }
                }
            }
        }
        out
    }

    pub fn canonical_json(&self) -> String {
        to_canonical_json(&self.input)
    }

    pub fn character(&self, label: &str) -> CliResult<GenCharacter> {
        if let Some(c) = self.characters.iter().find(|c| c.label == label) {
            return Ok(c.clone());
        }
        if label == "eps" {
            return Ok(match &self.object {
                Object::Finite(h) => relabel(&h.counit_character(), "eps"),
                o => relabel(&o.presented().expect("presented").counit_character(), "eps"),
            });
        }
        Err(CliError::UnknownLabel(label.into()))
    }

    /// Sigma tables in the input format, for writing solved cobraidings.
    pub fn sigma_spec(&self) -> Option<BTreeMap<String, Table>> {
        self.cobraiding.as_ref().map(|m| sigma_spec(m.cb.hopf().gens(), m.cb.sigma_table()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), FieldDesc::Rationals);
        assert_eq!(parse_field("Q(t)").unwrap().variable(), Some("t"));
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn exactly_one_object_section() {
        let err = Workbench::from_json(r#"{"field": "Q"}"#).err().unwrap();
        assert_eq!(err.exit_code(), 3);
        let two = r#"{"field": "Q", "hf_matrix": [["1"]], "sle_tensor": {"n": 1, "arity": 2, "entries": {"1,1": "1"}}}"#;
        assert_eq!(Workbench::from_json(two).err().unwrap().exit_code(), 3);
    }

    #[test]
    fn hf_characters_and_coreps_are_derived() {
        let wb = Workbench::from_json(r#"{"field": "Q(q)", "hf_matrix": [["1", "0"], ["0", "q"]]}"#).unwrap();
        assert_eq!(wb.character("Phi_F").unwrap().label, "Phi_F");
        assert_eq!(wb.character("eps").unwrap().values, wb.object.presented().unwrap().counit_character().values);
        assert!(wb.character("Psi").is_err());
    }
}
