//! The verification suite for a loaded workbench, run with the degree
//! escalation policy: an inconclusive check is retried with the bound raised
//! by 2 until the cap.

use crate::error::{CliError, CliResult};
use crate::model::{Coreps, Object, Workbench};
use crate::report::{CheckResult, CliReport, Fact};
use crate::schema::DegreeBound;
use sovhopf::cobraid::{
    check_a5_a7, check_cobraiding, check_cotwist, check_lambda_beta, check_lemma_a2, check_s2, round_trip_character,
    round_trip_cotwist, thm_a3_backward, thm_a3_forward,
};
use sovhopf::corep::{check_corep, dims, MatrixCorep};
use sovhopf::forms::{verify_remark_38, verify_sovereign};
use sovhopf::hopf_pres::PresentedHopf;
use sovhopf::sle::{check_left_inverse, check_right_inverse, sovereign_char_beta};
use sovhopf::universal::iso_transpose_inverse;
use sovhopf::{Bound, Error, GenCharacter, HopfAlgebra, Verdict};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

type CheckFn<'a> = Box<dyn Fn(Bound) -> sovhopf::Result<Verdict> + Send + Sync + 'a>;

pub struct Task<'a> {
    pub name: String,
    run: CheckFn<'a>,
}

fn task<'a>(name: impl Into<String>, run: impl Fn(Bound) -> sovhopf::Result<Verdict> + Send + Sync + 'a) -> Task<'a> {
    Task { name: name.into(), run: Box::new(run) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Policy {
    pub start: Bound,
    pub cap: usize,
}

impl Policy {
    pub fn new(bound: DegreeBound, cap: usize) -> Self {
        let start = match bound {
            DegreeBound::Auto => Bound::Auto { margin: 2, cap },
            DegreeBound::Fixed(d) => Bound::Fixed(d),
        };
        Policy { start, cap }
    }
}

pub fn describe(b: Bound) -> String {
    match b {
        Bound::Auto { margin, cap } => format!("auto+{margin} (cap {cap})"),
        Bound::Fixed(d) => format!("D={d}"),
    }
}

/// Runs one check, escalating while it is inconclusive. A bound below the
/// candidate's degree counts as inconclusive at that bound.
pub fn run_escalating(run: &(dyn Fn(Bound) -> sovhopf::Result<Verdict> + Sync), policy: Policy) -> CliResult<(Verdict, Bound)> {
    let mut bound = policy.start;
    loop {
        let v = match run(bound) {
            Ok(v) => v,
            Err(Error::DegreeExceeded { degree, bound: d }) => {
                Verdict::Inconclusive { degree: d, detail: format!("candidate has degree {degree}") }
            }
            Err(e) => return Err(CliError::Core(e)),
        };
        match (&v, bound.escalate(policy.cap)) {
            (Verdict::Inconclusive { .. }, Some(next)) => bound = next,
            _ => return Ok((v, bound)),
        }
    }
}

/// Runs the tasks on a small thread pool; results keep declaration order.
pub fn run_tasks(tasks: &[Task<'_>], policy: Policy) -> CliResult<Vec<CheckResult>> {
    let slots: Vec<Mutex<Option<CliResult<CheckResult>>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(tasks.len()).max(1);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(t) = tasks.get(i) else { break };
                let r = run_escalating(&*t.run, policy).map(|(v, b)| CheckResult::new(&t.name, &v, &describe(b)));
                *slots[i].lock().expect("unpoisoned") = Some(r);
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().expect("unpoisoned").expect("every task ran")).collect()
}

fn hopf_tasks<'a>(h: &'a PresentedHopf, out: &mut Vec<Task<'a>>) {
    out.push(task("counit_well_defined", move |_| h.check_counit_well_defined()));
    out.push(task("comult_well_defined", move |b| h.check_comult_well_defined(b)));
    out.push(task("antipode_well_defined", move |b| h.check_antipode_well_defined(b)));
    out.push(task("antipode_axiom", move |b| h.check_antipode_axiom(b)));
    if h.antipode_inv_map().is_some() {
        out.push(task("antipode_inv_well_defined", move |b| h.check_antipode_inv_well_defined(b)));
        out.push(task("antipode_inverse", move |b| h.check_antipode_inverse(b)));
    }
}

fn algebra_tasks<'a, A>(a: &'a A, chars: &'a [GenCharacter], coreps: &'a [MatrixCorep<A::Elem>], out: &mut Vec<Task<'a>>)
where
    A: HopfAlgebra + Sync,
    A::Elem: Sync,
{
    for c in chars {
        let l = &c.label;
        out.push(task(format!("character[{l}]"), move |_| a.check_character(c)));
        out.push(task(format!("verify_sovereign[{l}]"), move |b| verify_sovereign(a, c, b)));
        out.push(task(format!("verify_remark_38[{l}]"), move |b| verify_remark_38(a, c, b)));
    }
    for v in coreps {
        out.push(task(format!("corep[{}]", v.label), move |b| check_corep(a, v, b)));
    }
}

fn dims_facts<A: HopfAlgebra>(a: &A, chars: &[GenCharacter], coreps: &[MatrixCorep<A::Elem>], results: &[CheckResult]) -> CliResult<Vec<Fact>> {
    let mut out = Vec::new();
    for c in chars {
        let name = format!("verify_sovereign[{}]", c.label);
        if !results.iter().any(|r| r.name == name && r.verdict == "pass") {
            continue;
        }
        for v in coreps {
            let d = dims(a, v, c)?;
            out.push(Fact::new(format!("dims[{}/{}]", v.label, c.label), format!("left: {}, right: {}", d.left, d.right)));
        }
    }
    Ok(out)
}

impl Workbench {
    /// Policy from the file's options, overridden by a fixed degree or cap.
    pub fn policy(&self, degree: Option<usize>, cap: Option<usize>) -> Policy {
        let o = &self.input.options;
        Policy::new(degree.map_or(o.degree_bound, DegreeBound::Fixed), cap.unwrap_or(o.degree_cap))
    }

    pub fn tasks(&self) -> Vec<Task<'_>> {
        let mut out = Vec::new();
        let d = self.input.options.word_degree;
        match &self.object {
            Object::Finite(h) => {
                for (name, _) in h.verify_all() {
                    out.push(task(name, move |_| {
                        Ok(h.verify_all().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v).expect("listed"))
                    }));
                }
            }
            Object::Presented(h) => {
                hopf_tasks(h, &mut out);
                for (label, g) in &self.sovereign_elements {
                    out.push(task(format!("group_like[{label}]"), move |b| h.check_group_like(g, b)));
                    out.push(task(format!("sovereign_element[{label}]"), move |b| h.check_sovereign_element(g, b)));
                }
            }
            Object::Hf(h) => {
                hopf_tasks(&h.hopf, &mut out);
                out.push(task("hf_dims_are_traces", move |_| {
                    let d = dims(&h.hopf, &h.corep_u, &h.character)?;
                    let (tr, tri) = (h.f.trace()?, h.f.inverse()?.trace()?);
                    Ok(Verdict::from_bool(d.left == tr && d.right == tri, || {
                        format!("dims ({}, {}) but traces ({tr}, {tri})", d.left, d.right)
                    }))
                }));
                out.push(task("iso_transpose_inverse", move |b| iso_transpose_inverse(h, b)));
            }
            Object::Sle(a) => {
                hopf_tasks(&a.hopf, &mut out);
                if a.character.is_some() {
                    out.push(task("sovereign_char_beta", move |b| sovereign_char_beta(a, b)));
                }
                out.push(task("left_inverse", move |b| check_left_inverse(a, b)));
                out.push(task("right_inverse", move |b| check_right_inverse(a, b)));
            }
        }
        match (&self.object, &self.coreps) {
            (Object::Finite(h), Coreps::Finite(cs)) => algebra_tasks(h, &self.characters, cs, &mut out),
            (o, Coreps::Presented(cs)) => algebra_tasks(o.presented().expect("presented"), &self.characters, cs, &mut out),
            _ => unreachable!("coreps match the object"),
        }
        if let Some(model) = &self.cobraiding {
            let cb = &model.cb;
            if let Some(solved) = &model.solved {
                out.push(task("cobraiding_matches_solver", move |_| {
                    Ok(Verdict::from_bool(cb.sigma_table() == solved.as_slice(), || "given table differs from the solved one".into()))
                }));
            }
            out.push(task("cobraiding", move |b| check_cobraiding(cb, b)));
            out.push(task("lambda_beta_inverse", move |_| check_lambda_beta(cb, d)));
            out.push(task("s2_beta_id_lambda", move |b| check_s2(cb, b)));
            out.push(task("a5_a7", move |_| check_a5_a7(cb, d)));
            out.push(task("lemma_a2", move |_| check_lemma_a2(cb, d)));
            for c in &self.characters {
                let l = &c.label;
                out.push(task(format!("cotwist_from[{l}]"), move |_| {
                    Ok(check_cotwist(cb, &thm_a3_forward(cb, c)?, d)?.overall())
                }));
                out.push(task(format!("round_trip_character[{l}]"), move |_| round_trip_character(cb, c)));
            }
            for (l, t) in &self.cotwists {
                out.push(task(format!("cotwist[{l}]"), move |_| Ok(check_cotwist(cb, t, d)?.overall())));
                out.push(task(format!("character_from[{l}]"), move |b| {
                    let phi = thm_a3_backward(cb, t)?;
                    Ok(cb.hopf().check_character(&phi)?.and(verify_sovereign(cb.hopf(), &phi, b)?))
                }));
                out.push(task(format!("round_trip_cotwist[{l}]"), move |_| round_trip_cotwist(cb, t, d)));
            }
        }
        out
    }

    pub fn facts(&self, results: &[CheckResult]) -> CliResult<Vec<Fact>> {
        let mut out = Vec::new();
        match &self.object {
            Object::Finite(h) => out.push(Fact::new("is_involutory", h.is_involutory().to_string())),
            Object::Presented(_) => {}
            Object::Hf(h) => {
                let (tr, tri) = (h.f.trace()?, h.f.inverse()?.trace()?);
                out.push(Fact::new("traces", format!("Tr(F) = {tr}, Tr(F^-1) = {tri}")));
                out.push(Fact::new("trace_flag", (tr.is_zero() || tri.is_zero()).to_string()));
            }
            Object::Sle(a) => {
                let beta = match &a.beta {
                    Some(b) => b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                    None => "none".into(),
                };
                out.push(Fact::new("beta", beta));
            }
        }
        match (&self.object, &self.coreps) {
            (Object::Finite(h), Coreps::Finite(cs)) => out.extend(dims_facts(h, &self.characters, cs, results)?),
            (o, Coreps::Presented(cs)) => {
                out.extend(dims_facts(o.presented().expect("presented"), &self.characters, cs, results)?)
            }
            _ => unreachable!("coreps match the object"),
        }
        if let Some(m) = &self.cobraiding {
            let gens = m.cb.hopf().gens();
            let n = gens.len();
            let t = m.cb.sigma_table();
            let entries: Vec<String> =
                (0..n * n).map(|k| format!("σ({},{}) = {}", gens.name((k / n) as u32), gens.name((k % n) as u32), t[k])).collect();
            out.push(Fact::new("sigma", entries.join(", ")));
        }
        Ok(out)
    }

    pub fn notes(&self) -> Vec<String> {
        let mut notes: Vec<String> = self.object.presented().map(|h| h.notes.clone()).unwrap_or_default();
        if let Some(m) = &self.cobraiding {
            notes.extend(m.cb.notes.iter().cloned());
        }
        if self.cobraiding.is_some() {
            notes.push(format!(
                "cobraiding identities and cotwist centrality are checked on words of length at most {}",
                self.input.options.word_degree
            ));
        }
        notes
    }

    pub fn verify(&self, policy: Policy) -> CliResult<CliReport> {
        let tasks = self.tasks();
        let checks = run_tasks(&tasks, policy)?;
        let facts = self.facts(&checks)?;
        Ok(CliReport::new(self.object.label(), checks, facts, self.notes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policy_and_description() {
        let p = Policy::new(DegreeBound::Auto, 6);
        assert_eq!(describe(p.start), "auto+2 (cap 6)");
        assert_eq!(describe(Policy::new(DegreeBound::Fixed(3), 6).start), "D=3");
    }

    #[test]
    fn escalation_stops_at_cap() {
        let seen = Mutex::new(Vec::new());
        let run = |b: Bound| {
            seen.lock().unwrap().push(describe(b));
            Ok(Verdict::Inconclusive { degree: 0, detail: "open".into() })
        };
        let (v, b) = run_escalating(&run, Policy::new(DegreeBound::Fixed(2), 6)).unwrap();
        assert_eq!(v.kind(), "inconclusive");
        assert_eq!(describe(b), "D=6");
        assert_eq!(*seen.lock().unwrap(), ["D=2", "D=4", "D=6"]);
    }

    #[test]
    fn degree_exceeded_is_inconclusive() {
        let run = |b: Bound| match b {
            Bound::Fixed(d) if d < 4 => Err(Error::DegreeExceeded { degree: 4, bound: d }),
            _ => Ok(Verdict::Pass),
        };
        let (v, b) = run_escalating(&run, Policy::new(DegreeBound::Fixed(2), 6)).unwrap();
        assert!(v.is_pass());
        assert_eq!(describe(b), "D=4");
    }
}
