//! Quotients of a coordinate space by a subspace, with a canonical section.

use super::{DenseAccumulator, Echelon, Scalar, SparseMatrix, SparseVec};

/// `Q^n / W` presented through the reduced echelon basis of `W`.
///
/// Quotient coordinates are indexed by the free (non-pivot) columns of the
/// echelon basis, in increasing order. The section lifts a quotient vector to
/// the ambient vector that is zero on every pivot column.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    subspace: Echelon,
    basis_columns: Vec<usize>,
    /// Quotient image of each ambient unit vector.
    column_images: Vec<SparseVec>,
}

impl QuotientPresentation {
    pub fn new(ambient_dim: usize, spanning: &[SparseVec]) -> Self {
        Self::from_echelon(Echelon::from_vectors(ambient_dim, spanning))
    }

    pub fn from_echelon(subspace: Echelon) -> Self {
        let n = subspace.ncols();
        let basis_columns = subspace.free_columns();
        let mut column_index = vec![None; n];
        for (q, &c) in basis_columns.iter().enumerate() {
            column_index[c] = Some(q);
        }
        let column_images = (0..n)
            .map(|c| match column_index[c] {
                Some(q) => SparseVec::unit(q),
                None => {
                    // e_p = (e_p - row_p) + row_p, and e_p - row_p is supported
                    // on free columns only.
                    let row = subspace.pivot_row(c).expect("non-free column is a pivot");
                    SparseVec::from_sorted_unchecked(
                        row.iter()
                            .skip(1)
                            .map(|(j, x)| (column_index[j].expect("free column"), -x))
                            .collect(),
                    )
                }
            })
            .collect();
        Self { subspace, basis_columns, column_images }
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ncols()
    }

    pub fn dim(&self) -> usize {
        self.basis_columns.len()
    }

    pub fn subspace(&self) -> &Echelon {
        &self.subspace
    }

    pub fn subspace_rank(&self) -> usize {
        self.subspace.rank()
    }

    pub fn pivots(&self) -> &[usize] {
        self.subspace.pivots()
    }

    /// The ambient column that carries quotient basis vector `q`.
    pub fn basis_column(&self, q: usize) -> usize {
        self.basis_columns[q]
    }

    pub fn basis_columns(&self) -> &[usize] {
        &self.basis_columns
    }

    pub fn project_column(&self, c: usize) -> &SparseVec {
        &self.column_images[c]
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        match v.nnz() {
            0 => SparseVec::new(),
            1 => {
                let (c, x) = v.leading().unwrap();
                self.column_images[c].scale(x)
            }
            _ => {
                let mut acc = DenseAccumulator::new(self.dim());
                for (c, x) in v.iter() {
                    acc.add_scaled(x, &self.column_images[c]);
                }
                acc.take()
            }
        }
    }

    /// Projects into a caller-owned accumulator (for long sums).
    pub fn project_into(&self, acc: &mut DenseAccumulator, coeff: &Scalar, c: usize) {
        acc.add_scaled(coeff, &self.column_images[c]);
    }

    pub fn lift(&self, q: &SparseVec) -> SparseVec {
        q.remap(|i| Some(self.basis_columns[i]))
    }

    pub fn projection_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim(), &self.column_images)
    }

    pub fn section_matrix(&self) -> SparseMatrix {
        let cols: Vec<SparseVec> = self.basis_columns.iter().map(|&c| SparseVec::unit(c)).collect();
        SparseMatrix::from_columns(self.ambient_dim(), &cols)
    }
}

/// Presentation of `Q^ambient_dim / span(spanning)`.
pub fn quotient_space(ambient_dim: usize, spanning: &[SparseVec]) -> QuotientPresentation {
    QuotientPresentation::new(ambient_dim, spanning)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_in_plane() {
        let q = quotient_space(2, &[SparseVec::from_ints(&[1, 1])]);
        assert_eq!(q.dim(), 1);
        assert!(q.project(&SparseVec::from_ints(&[1, 1])).is_zero());
        assert_eq!(q.project(&SparseVec::from_ints(&[1, 0])), SparseVec::from_ints(&[-1]));
    }

    #[test]
    fn empty_spanning_set_is_identity() {
        let q = quotient_space(3, &[]);
        assert_eq!(q.dim(), 3);
        assert_eq!(q.projection_matrix(), SparseMatrix::identity(3));
        assert_eq!(q.section_matrix(), SparseMatrix::identity(3));
    }

    #[test]
    fn everything_killed() {
        let q = quotient_space(2, &[SparseVec::from_ints(&[1, 0]), SparseVec::from_ints(&[0, 1])]);
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn projection_after_section_is_identity() {
        let q = quotient_space(
            4,
            &[SparseVec::from_ints(&[1, 2, 0, 1]), SparseVec::from_ints(&[0, 1, 1, 1])],
        );
        let p = q.projection_matrix().mul(&q.section_matrix());
        assert_eq!(p, SparseMatrix::identity(q.dim()));
    }
}
