use std::fmt;

use crate::exactlin::Scalar;

/// One failed instance of an identity on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    /// 0-based basis indices, in the order the identity names its variables.
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of a validator. `passed` holds exactly when `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub passed: bool,
    pub structure_kind: String,
    /// The first violations found, at most the validator's limit.
    pub violations: Vec<Violation>,
    /// How many violations were found in total. A lower bound when the
    /// validator stops at the first failure.
    pub violation_count: usize,
}

impl ValidationReport {
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {}", self.structure_kind, status)?;
        for v in &self.violations {
            let show = |xs: &[Scalar]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            writeln!(
                f,
                "  {} at {:?}: lhs [{}] rhs [{}]",
                v.axiom,
                v.indices,
                show(&v.lhs),
                show(&v.rhs)
            )?;
        }
        if self.violation_count > self.violations.len() {
            writeln!(f, "  ... {} more", self.violation_count - self.violations.len())?;
        }
        Ok(())
    }
}

/// Controls how much a validator records. The default keeps the first five
/// violations and checks every instance; [`Validator::first_failure`] stops
/// at the first one, which is what enumeration filters use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Validator {
    max_violations: usize,
    exhaustive: bool,
}

impl Default for Validator {
    fn default() -> Self {
        Validator {
            max_violations: 5,
            exhaustive: true,
        }
    }
}

impl Validator {
    pub fn with_max_violations(max_violations: usize) -> Self {
        Validator {
            max_violations: max_violations.max(1),
            exhaustive: true,
        }
    }

    pub fn first_failure() -> Self {
        Validator {
            max_violations: 1,
            exhaustive: false,
        }
    }

    pub(crate) fn checker(&self, kind: impl Into<String>) -> Checker {
        Checker {
            kind: kind.into(),
            max: self.max_violations,
            exhaustive: self.exhaustive,
            violations: Vec::new(),
            total: 0,
        }
    }
}

pub(crate) struct Checker {
    kind: String,
    max: usize,
    exhaustive: bool,
    violations: Vec<Violation>,
    total: usize,
}

impl Checker {
    pub(crate) fn compare(&mut self, axiom: &str, indices: &[usize], lhs: &[Scalar], rhs: &[Scalar]) {
        if lhs == rhs {
            return;
        }
        self.total += 1;
        if self.violations.len() < self.max {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                indices: indices.to_vec(),
                lhs: lhs.to_vec(),
                rhs: rhs.to_vec(),
            });
        }
    }

    /// True once a non-exhaustive checker has seen a failure.
    pub(crate) fn done(&self) -> bool {
        !self.exhaustive && self.total > 0
    }

    pub(crate) fn finish(self) -> ValidationReport {
        ValidationReport {
            passed: self.total == 0,
            structure_kind: self.kind,
            violations: self.violations,
            violation_count: self.total,
        }
    }
}
