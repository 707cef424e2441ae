use super::{LieSuperalgebra, Parity};
use crate::exactla::{kernel_basis, rank, DenseAccumulator, SparseMatrix, SparseVec};
use crate::{Error, Result};

/// An even linear map between graded coordinate spaces, stored by the images
/// of the domain basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLinearMap {
    domain: Vec<Parity>,
    codomain: Vec<Parity>,
    columns: Vec<SparseVec>,
}

impl GradedLinearMap {
    /// Rejects maps that are not homogeneous of degree zero.
    pub fn new(domain: Vec<Parity>, codomain: Vec<Parity>, columns: Vec<SparseVec>) -> Result<Self> {
        if columns.len() != domain.len() {
            return Err(Error::DimensionMismatch { expected: domain.len(), found: columns.len() });
        }
        for (j, col) in columns.iter().enumerate() {
            if col.support_bound() > codomain.len() {
                return Err(Error::DimensionMismatch { expected: codomain.len(), found: col.support_bound() });
            }
            if col.iter().any(|(i, _)| codomain[i] != domain[j]) {
                return Err(Error::ParityMismatch(j));
            }
        }
        Ok(Self { domain, codomain, columns })
    }

    pub fn identity(parities: Vec<Parity>) -> Self {
        let columns = (0..parities.len()).map(SparseVec::unit).collect();
        Self { codomain: parities.clone(), domain: parities, columns }
    }

    pub fn zero(domain: Vec<Parity>, codomain: Vec<Parity>) -> Self {
        let columns = vec![SparseVec::new(); domain.len()];
        Self { domain, codomain, columns }
    }

    pub fn between(l: &LieSuperalgebra, m: &LieSuperalgebra, columns: Vec<SparseVec>) -> Result<Self> {
        Self::new(l.basis().parities().to_vec(), m.basis().parities().to_vec(), columns)
    }

    /// Block-diagonal sum `f_1 ⊕ ... ⊕ f_k`.
    pub fn direct_sum(parts: &[&GradedLinearMap]) -> Self {
        let mut domain = Vec::new();
        let mut codomain = Vec::new();
        let mut columns = Vec::new();
        for f in parts {
            let offset = codomain.len();
            domain.extend_from_slice(&f.domain);
            columns.extend(f.columns.iter().map(|c| c.shifted(offset)));
            codomain.extend_from_slice(&f.codomain);
        }
        Self { domain, codomain, columns }
    }

    pub fn domain(&self) -> &[Parity] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Parity] {
        &self.codomain
    }

    pub fn domain_dim(&self) -> usize {
        self.domain.len()
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.codomain_dim());
        for (j, c) in v.iter() {
            acc.add_scaled(c, &self.columns[j]);
        }
        acc.take()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GradedLinearMap) -> Result<GradedLinearMap> {
        if first.codomain_dim() != self.domain_dim() {
            return Err(Error::DimensionMismatch { expected: self.domain_dim(), found: first.codomain_dim() });
        }
        Ok(GradedLinearMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            columns: first.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    /// Codomain-by-domain matrix.
    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.codomain_dim(), &self.columns)
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix())
    }

    pub fn kernel(&self) -> Vec<SparseVec> {
        kernel_basis(&self.matrix())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_dim() == self.codomain_dim() && self.is_injective()
    }

    /// First basis pair whose bracket `f` fails to preserve.
    pub fn morphism_witness(&self, l: &LieSuperalgebra, m: &LieSuperalgebra) -> Result<Option<(usize, usize)>> {
        if l.dim() != self.domain_dim() {
            return Err(Error::DimensionMismatch { expected: self.domain_dim(), found: l.dim() });
        }
        if m.dim() != self.codomain_dim() {
            return Err(Error::DimensionMismatch { expected: self.codomain_dim(), found: m.dim() });
        }
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let lhs = self.apply(l.bracket_basis(i, j));
                let rhs = m.bracket(&self.columns[i], &self.columns[j]);
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

/// Whether `f` is a Lie superalgebra morphism `L -> M`.
pub fn check_morphism(f: &GradedLinearMap, l: &LieSuperalgebra, m: &LieSuperalgebra) -> Result<bool> {
    Ok(f.morphism_witness(l, m)?.is_none())
}
