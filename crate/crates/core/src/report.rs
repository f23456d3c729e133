//! Law and axiom reports.
//!
//! Every checker in the crate reports *all* violations it finds, not just the
//! first, and names the witnessing instance for each. Structural problems
//! (endpoint mismatches, out-of-range tables) are kept apart from law
//! violations: a structural error means the data does not even form the shape
//! the law talks about.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The data is malformed: endpoints or table entries do not line up.
    #[error("structural error in {context}: {detail}")]
    Structural { context: String, detail: String },
    /// A stated precondition does not hold (e.g. a required inverse is missing).
    #[error("precondition violated in {context}: {detail}")]
    Precondition { context: String, detail: String },
}

impl Error {
    pub fn structural(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Structural { context: context.into(), detail: detail.into() }
    }

    pub fn precondition(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Precondition { context: context.into(), detail: detail.into() }
    }
}

/// One failed law instance.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Violation {
    /// Which law failed, e.g. `"assoc"`, `"pentagon"`, `"naturality"`.
    pub law: String,
    /// The witnessing instance, rendered (a morphism triple, an object tuple, ...).
    pub instance: String,
    /// What disagreed with what.
    pub detail: String,
}

impl Violation {
    pub fn new(
        law: impl Into<String>,
        instance: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Violation { law: law.into(), instance: instance.into(), detail: detail.into() }
    }
}

/// Flat list of violations; empty means pass.
#[derive(Debug, Clone, Default, Serialize)]
pub struct LawReport {
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn merge(&mut self, other: LawReport) {
        self.violations.extend(other.violations);
    }
}

/// Outcome of checking one named axiom over a batch of instances.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomOutcome {
    pub axiom: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomOutcome {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomOutcome { axiom: axiom.into(), checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, instance: &str, lhs: &str, rhs: &str, equal: bool) {
        self.checked += 1;
        if !equal {
            self.violations.push(Violation::new(
                self.axiom.clone(),
                instance,
                format!("lhs {lhs} != rhs {rhs}"),
            ));
        }
    }
}

/// A report grouped per axiom.
#[derive(Debug, Clone, Default, Serialize)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomOutcome::passed)
    }

    pub fn push(&mut self, outcome: AxiomOutcome) {
        self.axioms.push(outcome);
    }

    pub fn total_checked(&self) -> usize {
        self.axioms.iter().map(|a| a.checked).sum()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.axioms.iter().flat_map(|a| a.violations.iter())
    }
}

/// Truncate long renderings deterministically; witnesses stay readable.
pub fn clip(s: &str) -> String {
    const MAX: usize = 160;
    if s.len() <= MAX {
        s.to_string()
    } else {
        let cut = s.char_indices().take_while(|(i, _)| *i < MAX).count();
        let head: String = s.chars().take(cut).collect();
        format!("{head}…({} chars)", s.len())
    }
}
