//! Graded vector spaces and Lie/associative superalgebras given by structure
//! constants on a homogeneous basis.
//!
//! Elements are rational combinations of basis vectors ([`SparseVec`] in
//! basis coordinates). Every constructor validates eagerly, so downstream
//! code may assume the identities hold.

mod assoc;
mod lie;
mod map;
mod report;

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

pub use assoc::{lie_from_assoc, validate_assoc, AssocSuperalgebra};
pub use lie::{centre, derived_subalgebra, quotient_by_central, validate_lie, LieSuperalgebra};
pub use map::{check_morphism, GradedLinearMap};
pub use report::{ValidationReport, Violation, ViolationKind};

use crate::exactla::{Echelon, Scalar, SparseVec};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    /// `(-1)^{|a||b|}` is negative exactly when both are odd.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    /// The scalar `(-1)^{|a||b|}`.
    pub fn sign(self, other: Parity) -> Scalar {
        Scalar::sign(self.koszul(other))
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Ordered homogeneous basis with unique labels.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedBasis {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl GradedBasis {
    pub fn new(entries: Vec<(String, Parity)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (label, _) in &entries {
            if !seen.insert(label.as_str()) {
                return Err(Error::Precondition(format!("duplicate basis label `{label}`")));
            }
        }
        let (labels, parities) = entries.into_iter().unzip();
        Ok(Self { labels, parities })
    }

    /// Basis labelled `{prefix}0, {prefix}1, ...`.
    pub fn numbered(prefix: &str, parities: Vec<Parity>) -> Self {
        let labels = (0..parities.len()).map(|i| format!("{prefix}{i}")).collect();
        Self { labels, parities }
    }

    pub fn even(n: usize) -> Self {
        Self::numbered("e", vec![Parity::Even; n])
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parities.is_empty()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parity of `v` if all of its support has one parity; the zero vector
    /// reports `Some(Even)`.
    pub fn parity_of(&self, v: &SparseVec) -> Option<Parity> {
        let mut it = v.iter().map(|(i, _)| self.parities[i]);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Concatenation, labels disambiguated with `@index` suffixes.
    pub fn direct_sum(parts: &[&GradedBasis]) -> Self {
        let mut labels = Vec::new();
        let mut parities = Vec::new();
        for (k, b) in parts.iter().enumerate() {
            for i in 0..b.dim() {
                labels.push(format!("{}@{k}", b.labels[i]));
                parities.push(b.parities[i]);
            }
        }
        Self { labels, parities }
    }

    pub fn count(&self, p: Parity) -> usize {
        self.parities.iter().filter(|&&q| q == p).count()
    }
}

/// A subspace of an algebra, held by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, spanning: &[SparseVec]) -> Self {
        Self { echelon: Echelon::from_vectors(ambient_dim, spanning) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_spanning(ambient_dim, &[])
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let units: Vec<SparseVec> = (0..ambient_dim).map(SparseVec::unit).collect();
        Self::from_spanning(ambient_dim, &units)
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.echelon.rows()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn is_homogeneous(&self, basis: &GradedBasis) -> bool {
        self.basis().iter().all(|v| basis.parity_of(v).is_some())
    }
}
