use lace_poly::{rational_serde, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    RealRooted,
    NotRealRooted,
    Interlaces,
    NotInterlaces,
    InterlacingSequence,
    NotInterlacingSequence,
    StrongInterlacing,
    NotStrongInterlacing,
    NonnegSymDecomp,
    InterlacingSymDecomp,
    NotNonnegSymDecomp,
    Certified,
    NotCertified,
}

impl Verdict {
    pub fn is_positive(self) -> bool {
        use Verdict::*;
        matches!(
            self,
            RealRooted | Interlaces | InterlacingSequence | StrongInterlacing | NonnegSymDecomp
                | InterlacingSymDecomp | Certified
        )
    }
}

/// An isolating interval. `lo == hi` marks an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "rational_serde")]
    pub lo: Rational,
    #[serde(with = "rational_serde")]
    pub hi: Rational,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub verdict: Verdict,
    pub witnesses: Vec<RootInterval>,
    pub hypothesis_report: Vec<Hypothesis>,
    /// Sub-certificates backing a composite verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Certificate>,
}

impl Certificate {
    pub fn new(subject: impl Into<String>, verdict: Verdict) -> Self {
        Certificate {
            subject: subject.into(),
            verdict,
            witnesses: Vec::new(),
            hypothesis_report: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.is_positive()
    }

    pub fn push_hypothesis(&mut self, name: impl Into<String>, holds: bool) {
        self.hypothesis_report.push(Hypothesis { name: name.into(), holds });
    }

    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypothesis_report.iter().find(|h| h.name == name).map(|h| h.holds)
    }

    pub fn all_hypotheses_hold(&self) -> bool {
        self.hypothesis_report.iter().all(|h| h.holds)
    }

    /// First part whose subject starts with `prefix`.
    pub fn part(&self, prefix: &str) -> Option<&Certificate> {
        self.parts.iter().find(|c| c.subject.starts_with(prefix))
    }
}
