//! Structured validation reports.
//!
//! Every validator returns a list of `(axiom, witness)` entries instead of a
//! bare boolean, so that a failing instance can be shrunk or inspected.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
    /// Informational remarks that do not affect validity.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push<I, S>(&mut self, axiom: &str, witness: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness: witness.into_iter().map(Into::into).collect(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether some violation was recorded against `axiom`.
    pub fn fails(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")?;
        } else {
            write!(f, "{} violation(s)", self.violations.len())?;
            for v in &self.violations {
                write!(f, "\n  {}: ({})", v.axiom, v.witness.join(", "))?;
            }
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
