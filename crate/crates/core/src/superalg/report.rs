use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A product of basis vectors is not homogeneous of the expected degree.
    Degree,
    SkewSymmetry,
    Jacobi,
    Associativity,
    LeftUnit,
    RightUnit,
    OddUnit,
    Alternating,
    Cocycle,
    Identity,
    Composition,
    NotMorphism,
    NotDirected,
    NotPartialOrder,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Degree => "degree",
            ViolationKind::SkewSymmetry => "super skew-symmetry",
            ViolationKind::Jacobi => "super Jacobi identity",
            ViolationKind::Associativity => "associativity",
            ViolationKind::LeftUnit => "left unit law",
            ViolationKind::RightUnit => "right unit law",
            ViolationKind::OddUnit => "unit is not even",
            ViolationKind::Alternating => "super-alternating",
            ViolationKind::Cocycle => "cocycle identity",
            ViolationKind::Identity => "f_ii = id",
            ViolationKind::Composition => "f_ki = f_kj f_ji",
            ViolationKind::NotMorphism => "not a Lie morphism",
            ViolationKind::NotDirected => "no upper bound",
            ViolationKind::NotPartialOrder => "not a partial order",
        };
        f.write_str(s)
    }
}

/// One failed identity together with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
}

impl Violation {
    pub fn new(kind: ViolationKind, indices: Vec<usize>, labels: Vec<String>) -> Self {
        Self { kind, indices, labels }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at (", self.kind)?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            match self.labels.get(k) {
                Some(l) => write!(f, "{l}")?,
                None => write!(f, "{i}")?,
            }
        }
        f.write_str(")")
    }
}

/// Empty iff every checked identity holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub fn into_result<T>(self, value: T) -> crate::Result<T> {
        if self.is_ok() {
            Ok(value)
        } else {
            Err(crate::Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
