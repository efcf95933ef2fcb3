use crate::error::{Error, Result};
use std::fmt;

/// Outcome of an identity check. `Pass` and `Fail` are both certified;
/// `Inconclusive` means the truncated membership test ran out of degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Inconclusive { degree: usize, detail: String },
}

impl Verdict {
    pub fn fail(witness: impl Into<String>) -> Self {
        Verdict::Fail { witness: witness.into() }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: witness() }
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    /// Fail beats Inconclusive beats Pass; the first of the winning kind is kept.
    pub fn and(self, other: Verdict) -> Verdict {
        match (&self, &other) {
            (Verdict::Fail { .. }, _) => self,
            (_, Verdict::Fail { .. }) => other,
            (Verdict::Inconclusive { .. }, _) => self,
            (_, Verdict::Inconclusive { .. }) => other,
            _ => Verdict::Pass,
        }
    }

    pub fn all(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
        vs.into_iter().fold(Verdict::Pass, Verdict::and)
    }

    /// Prefixes the witness or detail with a location.
    pub fn context(self, what: &str) -> Verdict {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail { witness } => Verdict::Fail { witness: format!("{what}: {witness}") },
            Verdict::Inconclusive { degree, detail } => {
                Verdict::Inconclusive { degree, detail: format!("{what}: {detail}") }
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail { witness } => write!(f, "FAIL ({witness})"),
            Verdict::Inconclusive { degree, detail } => write!(f, "INCONCLUSIVE at D={degree} ({detail})"),
        }
    }
}

/// Degree bound policy for truncated membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `deg(candidate) + margin`, clipped to `cap` but never below the degree.
    Auto { margin: usize, cap: usize },
    Fixed(usize),
}

impl Default for Bound {
    fn default() -> Self {
        Bound::Auto { margin: 2, cap: 6 }
    }
}

impl Bound {
    pub fn resolve(self, degree: usize) -> Result<usize> {
        match self {
            Bound::Auto { margin, cap } => Ok((degree + margin).min(cap).max(degree)),
            Bound::Fixed(d) if degree > d => Err(Error::DegreeExceeded { degree, bound: d }),
            Bound::Fixed(d) => Ok(d),
        }
    }

    /// The next bound in an escalation, or `None` once the cap is reached.
    pub fn escalate(self, cap: usize) -> Option<Bound> {
        match self {
            Bound::Auto { margin, cap: c } if margin + 2 <= c => Some(Bound::Auto { margin: margin + 2, cap: c }),
            Bound::Fixed(d) if d + 2 <= cap => Some(Bound::Fixed(d + 2)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
}

/// Named list of check outcomes plus free-form notes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), ..Default::default() }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.checks.push(Check { name: name.into(), verdict });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn overall(&self) -> Verdict {
        Verdict::all(self.checks.iter().map(|c| c.verdict.clone()))
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.verdict)
    }
}
