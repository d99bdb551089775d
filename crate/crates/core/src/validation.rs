use serde::{Deserialize, Serialize};

/// Outcome of a single named check. `witness` describes the failure, or
/// carries an informational detail when the check passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

/// An ordered list of check outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub items: Vec<CheckOutcome>,
}

impl Validation {
    pub fn new() -> Validation {
        Validation::default()
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.items.push(CheckOutcome { name: name.into(), passed, witness: witness.into() });
    }

    pub fn extend(&mut self, other: Validation) {
        self.items.extend(other.items);
    }

    /// Appends `other` with every check name prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Validation) {
        for mut item in other.items {
            item.name = format!("{prefix}.{}", item.name);
            self.items.push(item);
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.items.iter().filter(|c| !c.passed)
    }

    pub fn failure_summary(&self) -> String {
        self.failures()
            .map(|c| {
                if c.witness.is_empty() {
                    c.name.clone()
                } else {
                    format!("{}: {}", c.name, c.witness)
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}
