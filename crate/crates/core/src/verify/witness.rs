//! Verdicts and failure witnesses.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::group::Group;
use crate::verify::suite::Statement;

/// Failure data carried by a failing verdict: enough to replay the violated
/// condition — the elements involved (cycle notation) and named quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    pub elements: Vec<String>,
    pub values: BTreeMap<String, u64>,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Witness {
        Witness {
            detail: detail.into(),
            elements: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn with_element(mut self, g: &Group, index: usize) -> Witness {
        self.elements.push(g.element(index).to_string());
        self
    }

    pub fn with_perm(mut self, p: &crate::perm::Permutation) -> Witness {
        self.elements.push(p.to_string());
        self
    }

    pub fn with_value(mut self, key: impl Into<String>, value: u64) -> Witness {
        self.values.insert(key.into(), value);
        self
    }
}

/// Outcome of one statement check on one group. Inapplicable verdicts are
/// vacuously passing and never carry a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub statement: Statement,
    pub applicable: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn inapplicable(statement: Statement) -> Verdict {
        Verdict {
            statement,
            applicable: false,
            passed: true,
            witness: None,
        }
    }

    pub fn pass(statement: Statement) -> Verdict {
        Verdict {
            statement,
            applicable: true,
            passed: true,
            witness: None,
        }
    }

    pub fn fail(statement: Statement, witness: Witness) -> Verdict {
        Verdict {
            statement,
            applicable: true,
            passed: false,
            witness: Some(witness),
        }
    }

    /// Collapses an optional failure into a verdict.
    pub fn from_failure(statement: Statement, failure: Option<Witness>) -> Verdict {
        match failure {
            None => Verdict::pass(statement),
            Some(w) => Verdict::fail(statement, w),
        }
    }
}
