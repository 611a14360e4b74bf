//! Residual reports returned by every validator.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// One failing instance of an identity: which rule, at which basis tuple,
/// and the nonzero difference between the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation if `residual` has any nonzero entry.
    pub fn check(&mut self, rule: &str, indices: &[usize], residual: Vec<Scalar>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation {
                rule: rule.to_string(),
                indices: indices.to_vec(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn with_prefix(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.rule = format!("{prefix}.{}", v.rule);
        }
        self
    }

    pub fn rules(&self) -> Vec<&str> {
        let mut rules: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !rules.contains(&v.rule.as_str()) {
                rules.push(&v.rule);
            }
        }
        rules
    }

    pub fn find(&self, rule: &str, indices: &[usize]) -> Option<&Violation> {
        self.violations.iter().find(|v| v.rule == rule && v.indices == indices)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let residual: Vec<String> = v.residual.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {} at {:?}: residual [{}]", v.rule, v.indices, residual.join(", "))?;
        }
        Ok(())
    }
}
