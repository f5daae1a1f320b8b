use std::fmt;

use serde::Serialize;

use crate::algebra::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check is an implication whose antecedent does not hold.
    Vacuous,
}

/// One checked identity. A passing entry carries the exact zero vector; a
/// failing one carries the nonzero residual (or a nonzero witness vector for
/// structural checks such as primitivity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub identity_id: String,
    pub status: Status,
    pub residual: Element,
    pub note: Option<String>,
}

impl Entry {
    /// Pass iff `residual` is zero.
    pub fn check(identity_id: impl Into<String>, residual: Element) -> Self {
        let status = if residual.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        };
        Entry {
            identity_id: identity_id.into(),
            status,
            residual,
            note: None,
        }
    }

    pub fn vacuous(identity_id: impl Into<String>, dim: usize, note: impl Into<String>) -> Self {
        Entry {
            identity_id: identity_id.into(),
            status: Status::Vacuous,
            residual: Element::zero(dim),
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Prefixes every identity id with `scope/`.
    pub fn scoped(mut self, scope: &str) -> Self {
        for e in &mut self.entries {
            e.identity_id = format!("{scope}/{}", e.identity_id);
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, identity_id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.identity_id == identity_id)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    let mut obj = serde_json::json!({
                        "identity_id": e.identity_id,
                        "passed": e.passed(),
                        "residual": e.residual.to_strings(),
                    });
                    if e.status == Status::Vacuous {
                        obj["vacuous"] = true.into();
                    }
                    if let Some(note) = &e.note {
                        obj["note"] = note.clone().into();
                    }
                    obj
                })
                .collect(),
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Vacuous => "VACUOUS",
            };
            write!(f, "{tag:7} {}", e.identity_id)?;
            if e.status == Status::Fail {
                write!(f, "  residual {:?}", e.residual)?;
            }
            if let Some(note) = &e.note {
                write!(f, "  ({note})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
