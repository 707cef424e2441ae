use super::{Echelon, Scalar, SparseVec};
use crate::{Error, Result};

/// Solves for coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    ambient_dim: usize,
    count: usize,
    /// Echelon form of the augmented vectors `[v_i | e_i]`.
    augmented: Echelon,
}

impl Coordinates {
    /// Fails with [`Error::Dependent`] when the vectors are linearly dependent.
    pub fn new(ambient_dim: usize, vectors: &[SparseVec]) -> Result<Self> {
        let count = vectors.len();
        let rows: Vec<SparseVec> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert!(v.support_bound() <= ambient_dim, "vector longer than ambient space");
                v.add(&SparseVec::unit(ambient_dim + i))
            })
            .collect();
        let augmented = Echelon::from_vectors(ambient_dim + count, &rows);
        if augmented.pivots().iter().any(|&p| p >= ambient_dim) {
            return Err(Error::Dependent);
        }
        Ok(Self { ambient_dim, count, augmented })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Coefficients `c` with `w = sum c_i v_i`, or `None` outside the span.
    pub fn solve(&self, w: &SparseVec) -> Option<SparseVec> {
        let mut residual = w.clone();
        let mut coeffs = SparseVec::new();
        for (i, x) in w.iter() {
            if let Some(row) = self.augmented.pivot_row(i) {
                let x: Scalar = x.clone();
                residual = residual.add_scaled(&-&x, row);
                coeffs = coeffs.add_scaled(&x, row);
            }
        }
        if residual.iter().any(|(i, _)| i < self.ambient_dim) {
            return None;
        }
        Some(coeffs.remap(|i| i.checked_sub(self.ambient_dim)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_in_non_echelon_basis() {
        let c = Coordinates::new(
            3,
            &[SparseVec::from_ints(&[1, 1, 0]), SparseVec::from_ints(&[0, 1, 1])],
        )
        .unwrap();
        let w = SparseVec::from_ints(&[2, 5, 3]);
        assert_eq!(c.solve(&w), Some(SparseVec::from_ints(&[2, 3])));
        assert_eq!(c.solve(&SparseVec::from_ints(&[1, 0, 0])), None);
        assert!(Coordinates::new(2, &[SparseVec::from_ints(&[1, 1]), SparseVec::from_ints(&[2, 2])])
            .is_err());
    }
}
