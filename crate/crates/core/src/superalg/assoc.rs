use super::{GradedBasis, LieSuperalgebra, ValidationReport, Violation, ViolationKind};
use crate::exactla::{DenseAccumulator, SparseVec};
use crate::{Error, Result};

/// A unital associative superalgebra over Q given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocSuperalgebra {
    basis: GradedBasis,
    table: Vec<SparseVec>,
    unit: SparseVec,
}

impl AssocSuperalgebra {
    pub fn new(basis: GradedBasis, table: Vec<SparseVec>, unit: SparseVec) -> Result<Self> {
        let d = basis.dim();
        if table.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: table.len() });
        }
        if unit.support_bound() > d || table.iter().any(|v| v.support_bound() > d) {
            return Err(Error::DimensionMismatch { expected: d, found: d + 1 });
        }
        validate_assoc(&basis, &table, &unit).into_result(Self { basis, table, unit })
    }

    pub fn from_fn(basis: GradedBasis, unit: SparseVec, f: impl Fn(usize, usize) -> SparseVec) -> Result<Self> {
        let d = basis.dim();
        let table = (0..d * d).map(|k| f(k / d, k % d)).collect();
        Self::new(basis, table, unit)
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn table(&self) -> &[SparseVec] {
        &self.table
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut acc = DenseAccumulator::new(d);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), &self.table[i * d + j]);
            }
        }
        acc.take()
    }

    /// Supercommutator `ab - (-1)^{|a||b|} ba` of basis vectors.
    pub fn commutator_basis(&self, i: usize, j: usize) -> SparseVec {
        let s = self.basis.parity(i).sign(self.basis.parity(j));
        self.product_basis(i, j).add_scaled(&-s, self.product_basis(j, i))
    }

    pub fn is_supercommutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.commutator_basis(i, j).is_zero()))
    }
}

/// Degree, associativity and two-sided unit checks on basis vectors.
pub fn validate_assoc(basis: &GradedBasis, table: &[SparseVec], unit: &SparseVec) -> ValidationReport {
    let d = basis.dim();
    let label = |idx: &[usize]| idx.iter().map(|&i| basis.label(i).to_string()).collect::<Vec<_>>();
    let mut report = ValidationReport::default();
    for i in 0..d {
        for j in 0..d {
            let want = basis.parity(i) + basis.parity(j);
            if table[i * d + j].iter().any(|(k, _)| basis.parity(k) != want) {
                report.push(Violation::new(ViolationKind::Degree, vec![i, j], label(&[i, j])));
            }
        }
    }
    if basis.parity_of(unit) != Some(super::Parity::Even) {
        report.push(Violation::new(ViolationKind::OddUnit, vec![], vec![]));
    }
    let mul = |x: &SparseVec, y: &SparseVec| {
        let mut acc = DenseAccumulator::new(d);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), &table[i * d + j]);
            }
        }
        acc.take()
    };
    for i in 0..d {
        let e = SparseVec::unit(i);
        if mul(unit, &e) != e {
            report.push(Violation::new(ViolationKind::LeftUnit, vec![i], label(&[i])));
        }
        if mul(&e, unit) != e {
            report.push(Violation::new(ViolationKind::RightUnit, vec![i], label(&[i])));
        }
    }
    for i in 0..d {
        for j in 0..d {
            let ij = &table[i * d + j];
            for k in 0..d {
                let left = mul(ij, &SparseVec::unit(k));
                let right = mul(&SparseVec::unit(i), &table[j * d + k]);
                if left != right {
                    report.push(Violation::new(ViolationKind::Associativity, vec![i, j, k], label(&[i, j, k])));
                }
            }
        }
    }
    report
}

/// The Lie superalgebra on the same space with `[x, y] = xy - (-1)^{|x||y|} yx`.
pub fn lie_from_assoc(a: &AssocSuperalgebra) -> Result<LieSuperalgebra> {
    LieSuperalgebra::from_fn(a.basis().clone(), |i, j| a.commutator_basis(i, j))
}
