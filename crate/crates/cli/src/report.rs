use serde::Serialize;
use sovhopf::Verdict;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// `pass`, `fail` or `inconclusive`.
    pub verdict: String,
    /// Failure witness or inconclusive detail; empty on pass.
    pub detail: String,
    /// Degree bound in force when the verdict was reached.
    pub degree: String,
}

impl CheckResult {
    pub fn new(name: &str, v: &Verdict, degree: &str) -> Self {
        let detail = match v {
            Verdict::Pass => String::new(),
            Verdict::Fail { witness } => witness.clone(),
            Verdict::Inconclusive { degree, detail } => format!("at D={degree}: {detail}"),
        };
        CheckResult { name: name.into(), verdict: v.kind().into(), detail, degree: degree.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: String,
}

impl Fact {
    pub fn new(name: impl Into<String>, value: impl Into<String>) -> Self {
        Fact { name: name.into(), value: value.into() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliReport {
    pub subject: String,
    pub checks: Vec<CheckResult>,
    pub facts: Vec<Fact>,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub exit_code: i32,
}

impl CliReport {
    pub fn new(subject: String, checks: Vec<CheckResult>, facts: Vec<Fact>, notes: Vec<String>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict.as_str() {
                "pass" => summary.pass += 1,
                "fail" => summary.fail += 1,
                _ => summary.inconclusive += 1,
            }
        }
        let exit_code = if summary.fail > 0 {
            1
        } else if summary.inconclusive > 0 {
            2
        } else {
            0
        };
        CliReport { subject, checks, facts, notes, summary, exit_code }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn fact(&self, name: &str) -> Option<&str> {
        self.facts.iter().find(|f| f.name == name).map(|f| f.value.as_str())
    }

    pub fn to_json(&self) -> String {
        crate::schema::to_canonical_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "subject: {}", self.subject);
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = c.verdict.to_uppercase();
            let pad = width - c.name.chars().count();
            let _ = write!(s, "{tag:<12} {}{} [{}]", c.name, " ".repeat(pad), c.degree);
            if !c.detail.is_empty() {
                let _ = write!(s, "  {}", c.detail);
            }
            s.push('\n');
        }
        if !self.facts.is_empty() {
            s.push_str("facts:\n");
            for f in &self.facts {
                let _ = writeln!(s, "  {} = {}", f.name, f.value);
            }
        }
        if !self.notes.is_empty() {
            s.push_str("notes:\n");
            for n in &self.notes {
                let _ = writeln!(s, "  {n}");
            }
        }
        let m = &self.summary;
        let _ = writeln!(s, "summary: {} pass, {} fail, {} inconclusive", m.pass, m.fail, m.inconclusive);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(name: &str, v: Verdict) -> CheckResult {
        CheckResult::new(name, &v, "D=2")
    }

    #[test]
    fn exit_code_follows_worst_verdict() {
        let ok = CliReport::new("x".into(), vec![check("a", Verdict::Pass)], vec![], vec![]);
        assert_eq!(ok.exit_code, 0);
        let inc = Verdict::Inconclusive { degree: 6, detail: "open".into() };
        let r = CliReport::new("x".into(), vec![check("a", Verdict::Pass), check("b", inc.clone())], vec![], vec![]);
        assert_eq!((r.exit_code, r.summary.inconclusive), (2, 1));
        let r = CliReport::new("x".into(), vec![check("b", inc), check("c", Verdict::fail("w"))], vec![], vec![]);
        assert_eq!(r.exit_code, 1);
        assert_eq!(r.summary, Summary { pass: 0, fail: 1, inconclusive: 1 });
    }

    #[test]
    fn text_rendering() {
        let r = CliReport::new(
            "H".into(),
            vec![check("ab", Verdict::Pass), check("c", Verdict::fail("on x"))],
            vec![Fact::new("k", "v")],
            vec![],
        );
        let t = r.to_text();
        assert_eq!(
            t,
            "subject: H\nPASS         ab [D=2]\nFAIL         c  [D=2]  on x\nfacts:\n  k = v\nsummary: 1 pass, 1 fail, 0 inconclusive\n"
        );
        assert!(r.to_json().contains("\"exit_code\": 1"));
    }
}
