//! Input schema, builders and verification reports for the `sovhopf`
//! command-line tool.

pub mod build;
pub mod checks;
pub mod error;
pub mod model;
pub mod report;
pub mod schema;

pub use error::{CliError, CliResult};
pub use model::Workbench;
pub use report::CliReport;

use checks::{run_escalating, Policy};
use sovhopf::corep::dims;
use sovhopf::forms::verify_sovereign;
use sovhopf::HopfAlgebra;

pub fn load_file(path: &str) -> CliResult<Workbench> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), message: e.to_string() })?;
    Workbench::from_json(&text)
}

/// `"left: <l>, right: <r>"` once the character is verified sovereign.
pub fn dims_line(wb: &Workbench, corep: &str, character: &str, policy: Policy) -> CliResult<String> {
    let phi = wb.character(character)?;
    let missing = || CliError::UnknownLabel(corep.into());
    let line = |d: sovhopf::corep::DimensionPair| format!("left: {}, right: {}", d.left, d.right);
    match (&wb.object, &wb.coreps) {
        (model::Object::Finite(h), model::Coreps::Finite(cs)) => {
            let v = cs.iter().find(|c| c.label == corep).cloned().or_else(|| (corep == "trivial").then(|| sovhopf::corep::trivial_corep(h))).ok_or_else(missing)?;
            sovereign_or_err(h, &phi, policy)?;
            Ok(line(dims(h, &v, &phi)?))
        }
        (o, model::Coreps::Presented(cs)) => {
            let h = o.presented().expect("presented");
            let v = cs.iter().find(|c| c.label == corep).cloned().or_else(|| (corep == "trivial").then(|| sovhopf::corep::trivial_corep(h))).ok_or_else(missing)?;
            sovereign_or_err(h, &phi, policy)?;
            Ok(line(dims(h, &v, &phi)?))
        }
        _ => unreachable!("coreps match the object"),
    }
}

fn sovereign_or_err<A: HopfAlgebra + Sync>(a: &A, phi: &sovhopf::GenCharacter, policy: Policy) -> CliResult<()>
where
    A::Elem: Sync,
{
    let (v, _) = run_escalating(&|b| verify_sovereign(a, phi, b), policy)?;
    if v.is_pass() {
        Ok(())
    } else {
        Err(CliError::NotSovereign(phi.label.clone(), v.to_string()))
    }
}
