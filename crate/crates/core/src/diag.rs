//! Structured constraint diagnostics.

use std::fmt;

use serde_json::{json, Map, Value};

/// Named structural constraint checked by one of the validators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    HistoricalConnection,
    NoBackwardBranching,
    ChoicePartition,
    NoChoiceBetweenUndivided,
    IndependenceOfAgents,
    RReflexive,
    RTransitive,
    ReReflexive,
    ReTransitive,
    RInclusion,
    FutureAlwaysMatters,
    MonotonicityOfEvidence,
    ApplicationClosure,
    SumClosure,
    CheckerClosure,
    ExpansionOfPresentedProofs,
    NoNewProofsGuaranteed,
    PresentingMakesHistoriesDivide,
    EpistemicTransparency,
    CsNormality,
    Universe,
    CsAxiomInstance,
    CsDownwardClosure,
    SettledPresentationPersists,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::Reflexivity => "reflexivity of order",
            Constraint::Antisymmetry => "antisymmetry of order",
            Constraint::Transitivity => "transitivity of order",
            Constraint::HistoricalConnection => "Historical connection",
            Constraint::NoBackwardBranching => "No backward branching",
            Constraint::ChoicePartition => "Choice is a partition",
            Constraint::NoChoiceBetweenUndivided => "No choice between undivided histories",
            Constraint::IndependenceOfAgents => "Independence of agents",
            Constraint::RReflexive => "R reflexive",
            Constraint::RTransitive => "R transitive",
            Constraint::ReReflexive => "Re reflexive",
            Constraint::ReTransitive => "Re transitive",
            Constraint::RInclusion => "R included in Re",
            Constraint::FutureAlwaysMatters => "Future always matters",
            Constraint::MonotonicityOfEvidence => "Monotonicity of evidence",
            Constraint::ApplicationClosure => "Evidence closure under application",
            Constraint::SumClosure => "Evidence closure under sum",
            Constraint::CheckerClosure => "Evidence closure under proof checker",
            Constraint::ExpansionOfPresentedProofs => "Expansion of presented proofs",
            Constraint::NoNewProofsGuaranteed => "No new proofs guaranteed",
            Constraint::PresentingMakesHistoriesDivide => {
                "Presenting a new proof makes histories divide"
            }
            Constraint::EpistemicTransparency => "Presented proofs are epistemically transparent",
            Constraint::CsNormality => "CS-normality",
            Constraint::Universe => "universe membership",
            Constraint::CsAxiomInstance => "CS entry is an axiom instance",
            Constraint::CsDownwardClosure => "CS downward closure",
            Constraint::SettledPresentationPersists => "settled presentation persists",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One violated constraint with the tuple that witnesses the violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: Constraint,
    pub witness: Vec<(String, String)>,
}

impl Violation {
    pub fn new(constraint: Constraint) -> Self {
        Violation {
            constraint,
            witness: Vec::new(),
        }
    }

    pub fn with(mut self, role: &str, value: impl fmt::Display) -> Self {
        self.witness.push((role.to_string(), value.to_string()));
        self
    }

    pub fn witness_value(&self, role: &str) -> Option<&str> {
        self.witness
            .iter()
            .find(|(r, _)| r == role)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> Value {
        let mut w = Map::new();
        for (k, v) in &self.witness {
            w.insert(k.clone(), Value::String(v.clone()));
        }
        json!({ "constraint": self.constraint.name(), "witness": w })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constraint)?;
        if !self.witness.is_empty() {
            let parts: Vec<String> = self
                .witness
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " at ({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Validator output. Warnings never make a structure invalid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl Diagnostics {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn extend(&mut self, other: Diagnostics) {
        self.violations.extend(other.violations);
        self.warnings.extend(other.warnings);
    }

    pub fn has(&self, c: Constraint) -> bool {
        self.violations.iter().any(|v| v.constraint == c)
    }

    pub fn first(&self, c: Constraint) -> Option<&Violation> {
        self.violations.iter().find(|v| v.constraint == c)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.is_ok(),
            "violations": self.violations.iter().map(Violation::to_json).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}
