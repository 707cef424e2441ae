//! First cyclic homology `HC₁(A) = Ker(𝔠 : ⟨⟨A, A⟩⟩ -> A)`.
//!
//! `⟨⟨A, A⟩⟩ = (A ⊗ A) / H` where `H` is spanned by `a⊗b + (-1)^{|a||b|} b⊗a`,
//! the even squares `a⊗a`, and `(-1)^{|a||c|} a⊗bc + (-1)^{|b||a|} b⊗ca +
//! (-1)^{|c||b|} c⊗ab`. This module works directly in the full tensor square
//! and shares no code with the Lie-side construction in [`crate::uce`].

use crate::exactla::{quotient_space, DenseAccumulator, QuotientPresentation, Scalar, SparseVec};
use crate::superalg::{AssocSuperalgebra, GradedBasis, GradedLinearMap, Subspace};
use crate::{Error, Result};

/// Spanning vectors of `H` in `A ⊗ A`, indexed `a * dim + b`.
pub fn h_relations(a: &AssocSuperalgebra) -> Vec<SparseVec> {
    let d = a.dim();
    let p = |i: usize| a.basis().parity(i);
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let v = SparseVec::from_entries(vec![(i * d + j, Scalar::ONE), (j * d + i, p(i).sign(p(j)))]);
            if !v.is_zero() {
                out.push(v);
            }
        }
        if !p(i).is_odd() {
            out.push(SparseVec::unit(i * d + i));
        }
    }
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let mut entries = Vec::new();
                for (l, m, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let s = p(l).sign(p(r));
                    for (t, c) in a.product_basis(m, r).iter() {
                        entries.push((l * d + t, &s * c));
                    }
                }
                let v = SparseVec::from_entries(entries);
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// `⟨⟨A, A⟩⟩` with the commutator map `⟨⟨a, b⟩⟩ ↦ [a, b]`.
#[derive(Clone, Debug)]
pub struct CyclicPairs {
    algebra: AssocSuperalgebra,
    basis: GradedBasis,
    presentation: QuotientPresentation,
    commutator_map: GradedLinearMap,
}

impl CyclicPairs {
    pub fn algebra(&self) -> &AssocSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Basis of `⟨⟨A, A⟩⟩`, labelled `<<a,b>>` by canonical representatives.
    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn presentation(&self) -> &QuotientPresentation {
        &self.presentation
    }

    pub fn commutator_map(&self) -> &GradedLinearMap {
        &self.commutator_map
    }

    pub fn class_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.presentation.project_column(i * self.algebra.dim() + j)
    }

    /// `⟨⟨x, y⟩⟩` for arbitrary elements of `A`.
    pub fn class_of(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.dim());
        self.class_into(&mut acc, &Scalar::ONE, x, y);
        acc.take()
    }

    pub fn class_into(&self, acc: &mut DenseAccumulator, c: &Scalar, x: &SparseVec, y: &SparseVec) {
        let d = self.algebra.dim();
        for (i, a) in x.iter() {
            let ca = c * a;
            for (j, b) in y.iter() {
                self.presentation.project_into(acc, &(&ca * b), i * d + j);
            }
        }
    }

    /// `HC₁(A) = Ker 𝔠`.
    pub fn hc1(&self) -> Subspace {
        Subspace::from_spanning(self.dim(), &self.commutator_map.kernel())
    }
}

pub fn cyclic_pairs(a: &AssocSuperalgebra) -> Result<CyclicPairs> {
    let d = a.dim();
    let relations = h_relations(a);
    let presentation = quotient_space(d * d, &relations);
    let pair = |k: usize| (k / d, k % d);
    let basis = GradedBasis::new(
        presentation
            .basis_columns()
            .iter()
            .map(|&k| {
                let (i, j) = pair(k);
                (
                    format!("<<{},{}>>", a.basis().label(i), a.basis().label(j)),
                    a.basis().parity(i) + a.basis().parity(j),
                )
            })
            .collect(),
    )?;

    // 𝔠 on the full tensor square must kill H for the induced map to exist.
    let commutator = |t: &SparseVec| {
        let mut acc = DenseAccumulator::new(d);
        for (k, c) in t.iter() {
            let (i, j) = pair(k);
            acc.add_scaled(c, &a.commutator_basis(i, j));
        }
        acc.take()
    };
    if let Some(bad) = relations.iter().find(|h| !commutator(h).is_zero()) {
        return Err(Error::Precondition(format!("commutator map does not vanish on relation {bad:?}")));
    }
    let cols: Vec<SparseVec> = presentation
        .basis_columns()
        .iter()
        .map(|&k| {
            let (i, j) = pair(k);
            a.commutator_basis(i, j)
        })
        .collect();
    let commutator_map = GradedLinearMap::new(basis.parities().to_vec(), a.basis().parities().to_vec(), cols)?;
    Ok(CyclicPairs { algebra: a.clone(), basis, presentation, commutator_map })
}

/// `HC₁(A)` as a subspace of `⟨⟨A, A⟩⟩`.
pub fn hc1(a: &AssocSuperalgebra) -> Result<(CyclicPairs, Subspace)> {
    let cp = cyclic_pairs(a)?;
    let h = cp.hc1();
    Ok((cp, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::coeff;

    #[test]
    fn rationals_have_no_pairs() {
        let cp = cyclic_pairs(&coeff::rationals()).unwrap();
        assert_eq!(cp.dim(), 0);
    }

    #[test]
    fn grassmann_one_is_spanned_by_xi_xi() {
        let cp = cyclic_pairs(&coeff::grassmann(1)).unwrap();
        assert_eq!(cp.dim(), 1);
        assert_eq!(cp.basis().label(0), "<<xi,xi>>");
        assert!(!cp.class_of_basis(1, 1).is_zero());
    }

    #[test]
    fn unit_pairs_vanish() {
        for name in coeff::all_builtin_names() {
            let a = coeff::coefficient_by_name(&name).unwrap();
            let cp = cyclic_pairs(&a).unwrap();
            for j in 0..a.dim() {
                assert!(cp.class_of(a.unit(), &SparseVec::unit(j)).is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn commutator_vanishes_iff_supercommutative() {
        for name in coeff::all_builtin_names() {
            let a = coeff::coefficient_by_name(&name).unwrap();
            let cp = cyclic_pairs(&a).unwrap();
            let zero = cp.commutator_map().columns().iter().all(SparseVec::is_zero);
            assert_eq!(zero, a.is_supercommutative(), "{name}");
        }
    }
}
