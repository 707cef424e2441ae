use rayon::prelude::*;

use super::{GradedBasis, GradedLinearMap, Parity, Subspace, ValidationReport, Violation, ViolationKind};
use crate::exactla::{kernel_basis, Coordinates, DenseAccumulator, QuotientPresentation, Scalar, SparseMatrix, SparseVec};
use crate::{Error, Result};

/// A finite-dimensional Lie superalgebra over Q.
///
/// `table[i * dim + j]` holds the coordinates of `[b_i, b_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    basis: GradedBasis,
    table: Vec<SparseVec>,
}

impl LieSuperalgebra {
    /// Validates the table and rejects it with the full report on failure.
    pub fn new(basis: GradedBasis, table: Vec<SparseVec>) -> Result<Self> {
        let d = basis.dim();
        if table.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, found: table.len() });
        }
        if let Some(v) = table.iter().find(|v| v.support_bound() > d) {
            return Err(Error::DimensionMismatch { expected: d, found: v.support_bound() });
        }
        validate_lie(&basis, &table).into_result(Self { basis, table })
    }

    /// Builds the table from a bracket on basis indices, in parallel.
    pub fn from_fn(basis: GradedBasis, f: impl Fn(usize, usize) -> SparseVec + Sync) -> Result<Self> {
        let d = basis.dim();
        let table = (0..d * d).into_par_iter().map(|k| f(k / d, k % d)).collect();
        Self::new(basis, table)
    }

    pub fn abelian(basis: GradedBasis) -> Self {
        let d = basis.dim();
        Self { basis, table: vec![SparseVec::new(); d * d] }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn table(&self) -> &[SparseVec] {
        &self.table
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.dim());
        self.bracket_into(&mut acc, &Scalar::ONE, x, y);
        acc.take()
    }

    /// Adds `c [x, y]` to `acc`.
    pub fn bracket_into(&self, acc: &mut DenseAccumulator, c: &Scalar, x: &SparseVec, y: &SparseVec) {
        let d = self.dim();
        for (i, a) in x.iter() {
            let ca = c * a;
            for (j, b) in y.iter() {
                acc.add_scaled(&(&ca * b), &self.table[i * d + j]);
            }
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(SparseVec::is_zero)
    }

    /// Matrix of `ad(x)` acting on basis coordinates.
    pub fn adjoint(&self, x: &SparseVec) -> SparseMatrix {
        let cols: Vec<SparseVec> =
            (0..self.dim()).map(|j| self.bracket(x, &SparseVec::unit(j))).collect();
        SparseMatrix::from_columns(self.dim(), &cols)
    }

    /// The subalgebra spanned by homogeneous, independent `vectors`, with its
    /// inclusion map.
    pub fn subalgebra(
        &self,
        vectors: Vec<SparseVec>,
        labels: Vec<String>,
    ) -> Result<(LieSuperalgebra, GradedLinearMap)> {
        assert_eq!(vectors.len(), labels.len());
        let parities = vectors
            .iter()
            .map(|v| self.basis.parity_of(v).ok_or(Error::NotHomogeneous))
            .collect::<Result<Vec<_>>>()?;
        let coords = Coordinates::new(self.dim(), &vectors)?;
        let k = vectors.len();
        let table = (0..k * k)
            .into_par_iter()
            .map(|idx| {
                let (a, b) = (idx / k, idx % k);
                coords.solve(&self.bracket(&vectors[a], &vectors[b])).ok_or(Error::NotClosed(a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        let basis = GradedBasis::new(labels.into_iter().zip(parities).collect())?;
        let inclusion = GradedLinearMap::new(basis.parities().to_vec(), self.basis.parities().to_vec(), vectors)?;
        let sub = LieSuperalgebra::new(basis, table)?;
        Ok((sub, inclusion))
    }

    /// Block-diagonal direct sum; labels get `@k` suffixes.
    pub fn direct_sum(parts: &[&LieSuperalgebra]) -> LieSuperalgebra {
        let bases: Vec<&GradedBasis> = parts.iter().map(|p| &p.basis).collect();
        let basis = GradedBasis::direct_sum(&bases);
        let d = basis.dim();
        let mut table = vec![SparseVec::new(); d * d];
        let mut offset = 0;
        for p in parts {
            let n = p.dim();
            for i in 0..n {
                for j in 0..n {
                    table[(offset + i) * d + offset + j] = p.table[i * n + j].shifted(offset);
                }
            }
            offset += n;
        }
        LieSuperalgebra { basis, table }
    }
}

/// Checks degree, super skew-symmetry and the super Jacobi identity on basis
/// vectors.
///
/// Once skew-symmetry holds the Jacobiator is super-alternating in its three
/// arguments, so it is enough to test index triples `i <= j <= k`; otherwise
/// every ordered triple is tested.
pub fn validate_lie(basis: &GradedBasis, table: &[SparseVec]) -> ValidationReport {
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
    for i in 0..d {
        for j in i..d {
            let s = -basis.parity(i).sign(basis.parity(j));
            if table[j * d + i] != table[i * d + j].scale(&s) {
                report.push(Violation::new(ViolationKind::SkewSymmetry, vec![i, j], label(&[i, j])));
            }
        }
    }
    let skew_ok = !report.has(ViolationKind::SkewSymmetry);

    let jacobi: Vec<Violation> = (0..d)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut acc = DenseAccumulator::new(d);
            let mut found = Vec::new();
            let j0 = if skew_ok { i } else { 0 };
            for j in j0..d {
                let k0 = if skew_ok { j } else { 0 };
                for k in k0..d {
                    jacobiator_into(&mut acc, basis, table, i, j, k);
                    if !acc.take().is_zero() {
                        found.push(Violation::new(ViolationKind::Jacobi, vec![i, j, k], label(&[i, j, k])));
                    }
                }
            }
            found
        })
        .collect();
    report.violations.extend(jacobi);
    report
}

/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
fn jacobiator_into(acc: &mut DenseAccumulator, basis: &GradedBasis, table: &[SparseVec], x: usize, y: usize, z: usize) {
    let d = basis.dim();
    let p = |i| basis.parity(i);
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let s = p(a).sign(p(c));
        for (t, coeff) in table[b * d + c].iter() {
            acc.add_scaled(&(&s * coeff), &table[a * d + t]);
        }
    }
}

/// `{x : [x, L] = 0}`, the kernel of the stacked adjoint maps.
pub fn centre(l: &LieSuperalgebra) -> Subspace {
    let d = l.dim();
    let cols: Vec<SparseVec> = (0..d)
        .map(|i| {
            let entries = (0..d)
                .flat_map(|j| l.table[i * d + j].shifted(j * d).into_entries())
                .collect();
            SparseVec::from_entries(entries)
        })
        .collect();
    let kernel = kernel_basis(&SparseMatrix::from_columns(d * d, &cols));
    Subspace::from_spanning(d, &kernel)
}

/// `[L, L]` and whether it is all of `L`.
pub fn derived_subalgebra(l: &LieSuperalgebra) -> (Subspace, bool) {
    let s = Subspace::from_spanning(l.dim(), &l.table);
    let perfect = s.dim() == l.dim();
    (s, perfect)
}

/// `L / Z` for a homogeneous central subspace `Z`, with the projection.
pub fn quotient_by_central(l: &LieSuperalgebra, z: &Subspace) -> Result<(LieSuperalgebra, GradedLinearMap)> {
    if z.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: z.ambient_dim() });
    }
    if !z.is_homogeneous(l.basis()) {
        return Err(Error::NotHomogeneous);
    }
    for v in z.basis() {
        for j in 0..l.dim() {
            if !l.bracket(v, &SparseVec::unit(j)).is_zero() {
                return Err(Error::NotCentral { z: v.clone(), basis: j });
            }
        }
    }
    let pres = QuotientPresentation::from_echelon(z.echelon().clone());
    let cols = pres.basis_columns().to_vec();
    let basis = GradedBasis::new(
        cols.iter().map(|&c| (l.basis().label(c).to_string(), l.parity(c))).collect(),
    )?;
    let q = cols.len();
    let table: Vec<SparseVec> = (0..q * q)
        .into_par_iter()
        .map(|k| pres.project(l.bracket_basis(cols[k / q], cols[k % q])))
        .collect();
    let quotient = LieSuperalgebra::new(basis, table)?;
    let proj_cols: Vec<SparseVec> = (0..l.dim()).map(|c| pres.project_column(c).clone()).collect();
    let projection = GradedLinearMap::new(l.basis().parities().to_vec(), quotient.basis().parities().to_vec(), proj_cols)?;
    Ok((quotient, projection))
}
