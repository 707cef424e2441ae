//! Exact rational linear algebra: sparse elimination, kernels, spans and
//! quotient presentations.
//!
//! Everything here is over the rationals with no tolerances. Elimination
//! yields the unique reduced row-echelon form of the row space, so every
//! pivot set, kernel basis and quotient basis is reproducible regardless of
//! the order in which rows were fed in.

mod coords;
mod echelon;
mod quotient;
mod scalar;
mod sparse;

pub use coords::Coordinates;
pub use echelon::{kernel_basis, rank, rref, Echelon, EchelonBuilder};
pub use quotient::{quotient_space, QuotientPresentation};
pub use scalar::{ParseScalarError, Scalar};
pub use sparse::{DenseAccumulator, SparseMatrix, SparseVec};

use crate::{Error, Result};

/// Whether `v` lies in the rational span of `basis`.
pub fn span_membership(v: &[Scalar], basis: &[Vec<Scalar>]) -> Result<bool> {
    let dim = v.len();
    if let Some(b) = basis.iter().find(|b| b.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: b.len() });
    }
    let rows: Vec<SparseVec> = basis.iter().map(|b| SparseVec::from_dense(b)).collect();
    Ok(Echelon::from_vectors(dim, &rows).contains(&SparseVec::from_dense(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(span_membership(&ints(&[2, 2]), &[ints(&[1, 1])]).unwrap());
        assert!(!span_membership(&ints(&[1, 0]), &[ints(&[1, 1])]).unwrap());
        assert!(span_membership(&ints(&[0, 0]), &[]).unwrap());
        assert!(matches!(
            span_membership(&ints(&[1, 0]), &[ints(&[1, 1, 1])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
