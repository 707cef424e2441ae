//! The universal central extension `uce(L) = (L ⊗ L) / B`.
//!
//! `B` is spanned by the super-symmetric tensors `x⊗y + (-1)^{|x||y|} y⊗x`,
//! the even squares `x⊗x`, and the cyclic tensors
//! `(-1)^{|x||z|} x⊗[y,z] + (-1)^{|y||x|} y⊗[z,x] + (-1)^{|z||y|} z⊗[x,y]`.
//! All three families are multilinear in their arguments, so evaluating them
//! on basis vectors spans the same `B` as evaluating them on all elements.
//!
//! The first two families are quotiented out by hand: `L⊗L` modulo them is
//! the super-exterior square with basis `b_i∧b_j` for `i < j` and `b_i∧b_i`
//! for odd `b_i` (see [`PairIndex`]). Only the cyclic relations go through
//! elimination. The cyclic tensor is invariant under cyclic permutation of
//! `(x, y, z)` and changes by a sign under a transposition, so index triples
//! `i <= j <= k` suffice.

use rayon::prelude::*;

use crate::exactla::{DenseAccumulator, EchelonBuilder, QuotientPresentation, Scalar, SparseVec};
use crate::superalg::{
    derived_subalgebra, GradedBasis, GradedLinearMap, LieSuperalgebra, Parity, Subspace,
    ValidationReport, Violation, ViolationKind,
};
use crate::{Error, Result};

/// Coordinates on the super-exterior square of a graded basis.
#[derive(Clone, Debug)]
pub struct PairIndex {
    dim: usize,
    /// `index[i * dim + j]` for `i <= j`.
    index: Vec<Option<usize>>,
    pairs: Vec<(usize, usize)>,
    parities: Vec<Parity>,
}

impl PairIndex {
    pub fn new(basis: &GradedBasis) -> Self {
        let d = basis.dim();
        let mut index = vec![None; d * d];
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in i..d {
                if i < j || basis.parity(i).is_odd() {
                    index[i * d + j] = Some(pairs.len());
                    pairs.push((i, j));
                }
            }
        }
        Self { dim: d, index, pairs, parities: basis.parities().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, col: usize) -> (usize, usize) {
        self.pairs[col]
    }

    /// `b_i ⊗ b_j ≡ sign · (column)` modulo the symmetric relations; `None`
    /// when the tensor is itself a relation (even squares).
    pub fn fold(&self, i: usize, j: usize) -> Option<(usize, Scalar)> {
        if i <= j {
            self.index[i * self.dim + j].map(|c| (c, Scalar::ONE))
        } else {
            let s = -self.parities[i].sign(self.parities[j]);
            self.index[j * self.dim + i].map(|c| (c, s))
        }
    }

    /// Folds `Σ c · b_i ⊗ y` for a fixed left factor.
    fn push_left(&self, out: &mut Vec<(usize, Scalar)>, c: &Scalar, i: usize, y: &SparseVec) {
        for (j, b) in y.iter() {
            if let Some((col, s)) = self.fold(i, j) {
                out.push((col, &(c * b) * &s));
            }
        }
    }
}

/// Spanning vectors of `B` inside the full tensor square, indexed `i * dim + j`.
///
/// Kept for cross-checking the folded construction on small algebras.
pub fn b_relations(l: &LieSuperalgebra) -> Vec<SparseVec> {
    let d = l.dim();
    let p = |i: usize| l.parity(i);
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
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let s = p(a).sign(p(c));
                    for (t, coeff) in l.bracket_basis(b, c).iter() {
                        entries.push((a * d + t, &s * coeff));
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

/// Cyclic relations folded into the super-exterior square, for `i <= j <= k`.
fn cyclic_relations(l: &LieSuperalgebra, pairs: &PairIndex) -> Vec<SparseVec> {
    let d = l.dim();
    let p = |i: usize| l.parity(i);
    (0..d)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut rows = Vec::new();
            for y in x..d {
                for z in y..d {
                    let mut entries = Vec::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        pairs.push_left(&mut entries, &p(a).sign(p(c)), a, l.bracket_basis(b, c));
                    }
                    let v = SparseVec::from_entries(entries);
                    if !v.is_zero() {
                        rows.push(v);
                    }
                }
            }
            rows
        })
        .collect()
}

/// `uce(L)` together with its presentation and the canonical map `u`.
#[derive(Clone, Debug)]
pub struct UceAlgebra {
    base: LieSuperalgebra,
    algebra: LieSuperalgebra,
    pairs: PairIndex,
    presentation: QuotientPresentation,
    u: GradedLinearMap,
}

impl UceAlgebra {
    /// The Lie superalgebra `L` this was built from.
    pub fn base(&self) -> &LieSuperalgebra {
        &self.base
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `u : uce(L) -> L`, `⟨x, y⟩ ↦ [x, y]`.
    pub fn u(&self) -> &GradedLinearMap {
        &self.u
    }

    pub fn pairs(&self) -> &PairIndex {
        &self.pairs
    }

    /// Presentation of the super-exterior square modulo the cyclic relations.
    pub fn presentation(&self) -> &QuotientPresentation {
        &self.presentation
    }

    /// The basis pair `(i, j)` whose class is basis vector `q` of `uce(L)`.
    pub fn basis_pair(&self, q: usize) -> (usize, usize) {
        self.pairs.pair(self.presentation.basis_column(q))
    }

    pub fn class_of_basis(&self, i: usize, j: usize) -> SparseVec {
        match self.pairs.fold(i, j) {
            Some((c, s)) => self.presentation.project_column(c).scale(&s),
            None => SparseVec::new(),
        }
    }

    /// `⟨x, y⟩` in `uce(L)` coordinates.
    pub fn class_of(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.dim());
        self.class_into(&mut acc, &Scalar::ONE, x, y);
        acc.take()
    }

    fn class_into(&self, acc: &mut DenseAccumulator, c: &Scalar, x: &SparseVec, y: &SparseVec) {
        for (i, a) in x.iter() {
            let ca = c * a;
            for (j, b) in y.iter() {
                if let Some((col, s)) = self.pairs.fold(i, j) {
                    self.presentation.project_into(acc, &(&(&ca * b) * &s), col);
                }
            }
        }
    }

    /// Class of a tensor given in full tensor-square coordinates `i * dim + j`.
    pub fn tensor_class(&self, t: &SparseVec) -> SparseVec {
        let d = self.base.dim();
        let mut acc = DenseAccumulator::new(self.dim());
        for (k, c) in t.iter() {
            if let Some((col, s)) = self.pairs.fold(k / d, k % d) {
                self.presentation.project_into(&mut acc, &(c * &s), col);
            }
        }
        acc.take()
    }

    /// `[t1, t2]` for tensor representatives, via `⟨[a,b], [c,d]⟩`.
    pub fn bracket_of_tensors(&self, t1: &SparseVec, t2: &SparseVec) -> SparseVec {
        let d = self.base.dim();
        let mut left = DenseAccumulator::new(d);
        for (k, c) in t1.iter() {
            left.add_scaled(c, self.base.bracket_basis(k / d, k % d));
        }
        let mut right = DenseAccumulator::new(d);
        for (k, c) in t2.iter() {
            right.add_scaled(c, self.base.bracket_basis(k / d, k % d));
        }
        self.class_of(&left.take(), &right.take())
    }

    /// `H₂(L) = Ker u`.
    pub fn h2(&self) -> Subspace {
        Subspace::from_spanning(self.dim(), &self.u.kernel())
    }
}

pub fn build_uce(l: &LieSuperalgebra) -> Result<UceAlgebra> {
    let pairs = PairIndex::new(l.basis());
    let mut relations = cyclic_relations(l, &pairs);
    // Short rows first keeps fill-in low; the reduced form does not depend on order.
    relations.sort_by_key(SparseVec::nnz);
    let mut builder = EchelonBuilder::new(pairs.len());
    for r in &relations {
        if builder.is_full() {
            break;
        }
        builder.insert(r);
    }
    let presentation = QuotientPresentation::from_echelon(builder.finish());
    let q = presentation.dim();

    let basis_pairs: Vec<(usize, usize)> =
        (0..q).map(|k| pairs.pair(presentation.basis_column(k))).collect();
    let basis = GradedBasis::new(
        basis_pairs
            .iter()
            .map(|&(a, b)| (format!("<{},{}>", l.basis().label(a), l.basis().label(b)), l.parity(a) + l.parity(b)))
            .collect(),
    )?;

    let brackets: Vec<SparseVec> = basis_pairs.iter().map(|&(a, b)| l.bracket_basis(a, b).clone()).collect();
    let u = GradedLinearMap::new(basis.parities().to_vec(), l.basis().parities().to_vec(), brackets.clone())?;

    let table: Vec<SparseVec> = (0..q * q)
        .into_par_iter()
        .map(|k| {
            let (x, y) = (&brackets[k / q], &brackets[k % q]);
            let mut acc = DenseAccumulator::new(q);
            for (i, a) in x.iter() {
                for (j, b) in y.iter() {
                    if let Some((col, s)) = pairs.fold(i, j) {
                        presentation.project_into(&mut acc, &(&(a * b) * &s), col);
                    }
                }
            }
            acc.take()
        })
        .collect();
    let algebra = LieSuperalgebra::new(basis, table)?;
    Ok(UceAlgebra { base: l.clone(), algebra, pairs, presentation, u })
}

/// `H₂(L) = Ker(u : uce(L) -> L)`. For non-perfect `L` this is still the
/// kernel of `u`; a warning is logged.
pub fn h2(l: &LieSuperalgebra) -> Result<(UceAlgebra, Subspace)> {
    if !derived_subalgebra(l).1 {
        log::warn!("H2 requested for a non-perfect algebra; returning Ker u");
    }
    let uce = build_uce(l)?;
    let h = uce.h2();
    Ok((uce, h))
}

/// `uce(f) : ⟨x, y⟩ ↦ ⟨f x, f y⟩`.
pub fn uce_of_morphism(f: &GradedLinearMap, source: &UceAlgebra, target: &UceAlgebra) -> Result<GradedLinearMap> {
    if let Some((i, j)) = f.morphism_witness(source.base(), target.base())? {
        return Err(Error::NotMorphism(i, j));
    }
    let cols: Vec<SparseVec> = (0..source.dim())
        .into_par_iter()
        .map(|q| {
            let (a, b) = source.basis_pair(q);
            target.class_of(f.column(a), f.column(b))
        })
        .collect();
    GradedLinearMap::new(
        source.algebra().basis().parities().to_vec(),
        target.algebra().basis().parities().to_vec(),
        cols,
    )
}

/// Perfect `L` is centrally closed iff `u` is bijective; `u` is onto for
/// perfect `L`, so comparing dimensions suffices.
pub fn is_centrally_closed(l: &LieSuperalgebra) -> Result<bool> {
    if !derived_subalgebra(l).1 {
        return Err(Error::NotPerfect);
    }
    Ok(build_uce(l)?.dim() == l.dim())
}

/// A bilinear map `τ : L × L -> C` given on basis pairs, `values[i * dim + j]`
/// in coordinates of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub target: GradedBasis,
    pub values: Vec<SparseVec>,
}

impl Cocycle2 {
    pub fn zero(l: &LieSuperalgebra, target: GradedBasis) -> Self {
        Self { target, values: vec![SparseVec::new(); l.dim() * l.dim()] }
    }

    pub fn value(&self, dim: usize, i: usize, j: usize) -> &SparseVec {
        &self.values[i * dim + j]
    }

    /// `τ(x, y)` for arbitrary elements.
    pub fn eval(&self, dim: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.target.dim());
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), &self.values[i * dim + j]);
            }
        }
        acc.take()
    }
}

/// Degree-zero, super-alternating and cocycle identities on basis vectors.
pub fn validate_cocycle(tau: &Cocycle2, l: &LieSuperalgebra) -> Result<ValidationReport> {
    let d = l.dim();
    if tau.values.len() != d * d {
        return Err(Error::DimensionMismatch { expected: d * d, found: tau.values.len() });
    }
    let c = &tau.target;
    let label = |idx: &[usize]| idx.iter().map(|&i| l.basis().label(i).to_string()).collect::<Vec<_>>();
    let mut report = ValidationReport::default();
    for i in 0..d {
        for j in 0..d {
            let v = tau.value(d, i, j);
            if v.iter().any(|(k, _)| c.parity(k) != l.parity(i) + l.parity(j)) {
                report.push(Violation::new(ViolationKind::Degree, vec![i, j], label(&[i, j])));
            }
        }
    }
    for i in 0..d {
        for j in i..d {
            let s = l.parity(i).sign(l.parity(j));
            let sum = tau.value(d, i, j).add_scaled(&s, tau.value(d, j, i));
            let even_square = i == j && !l.parity(i).is_odd() && !tau.value(d, i, i).is_zero();
            if !sum.is_zero() || even_square {
                report.push(Violation::new(ViolationKind::Alternating, vec![i, j], label(&[i, j])));
            }
        }
    }
    let alternating = !report.has(ViolationKind::Alternating);
    let found: Vec<Violation> = (0..d)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut acc = DenseAccumulator::new(c.dim());
            let mut out = Vec::new();
            for y in (if alternating { x } else { 0 })..d {
                for z in (if alternating { y } else { 0 })..d {
                    for (a, b, cc) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let s = l.parity(a).sign(l.parity(cc));
                        for (t, coeff) in l.bracket_basis(b, cc).iter() {
                            acc.add_scaled(&(&s * coeff), &tau.values[a * d + t]);
                        }
                    }
                    if !acc.take().is_zero() {
                        out.push(Violation::new(ViolationKind::Cocycle, vec![x, y, z], label(&[x, y, z])));
                    }
                }
            }
            out
        })
        .collect();
    report.violations.extend(found);
    Ok(report)
}

/// A central extension `f : K -> L` with `Ker f` central in `K`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub total: LieSuperalgebra,
    pub projection: GradedLinearMap,
    pub kernel: Subspace,
}

/// `L ⊕ C` with `[l1 ⊕ c1, l2 ⊕ c2] = [l1, l2] ⊕ τ(l1, l2)`.
///
/// Basis: the basis of `L` followed by the basis of `C` (labels prefixed
/// with `c:`).
pub fn extension_from_cocycle(l: &LieSuperalgebra, tau: &Cocycle2) -> Result<CentralExtension> {
    validate_cocycle(tau, l)?.into_result(())?;
    let d = l.dim();
    let k = tau.target.dim();
    let n = d + k;
    let mut entries: Vec<(String, Parity)> =
        (0..d).map(|i| (l.basis().label(i).to_string(), l.parity(i))).collect();
    entries.extend((0..k).map(|i| (format!("c:{}", tau.target.label(i)), tau.target.parity(i))));
    let basis = GradedBasis::new(entries)?;
    let mut table = vec![SparseVec::new(); n * n];
    for i in 0..d {
        for j in 0..d {
            table[i * n + j] = l.bracket_basis(i, j).add(&tau.value(d, i, j).shifted(d));
        }
    }
    let total = LieSuperalgebra::new(basis, table)?;
    let cols: Vec<SparseVec> = (0..n).map(|i| if i < d { SparseVec::unit(i) } else { SparseVec::new() }).collect();
    let projection = GradedLinearMap::between(&total, l, cols)?;
    let kernel = Subspace::from_spanning(n, &(d..n).map(SparseVec::unit).collect::<Vec<_>>());
    Ok(CentralExtension { total, projection, kernel })
}

/// `dim H²(L; Q)` summed over even and odd one-dimensional coefficients:
/// degree-zero super-alternating 2-cocycles modulo coboundaries
/// `δg(x, y) = g([x, y])`.
///
/// Built directly from the cocycle identity on bilinear forms, without the
/// tensor-square quotient used by [`build_uce`]; over Q its value is
/// `dim H₂(L)`.
pub fn h2_cohomology_oracle(l: &LieSuperalgebra) -> usize {
    [Parity::Even, Parity::Odd].into_iter().map(|target| cohomology_in_parity(l, target)).sum()
}

fn cohomology_in_parity(l: &LieSuperalgebra, target: Parity) -> usize {
    let d = l.dim();
    let p = |i: usize| l.parity(i);
    // Unknowns: τ(b_i, b_j) for i < j, and τ(b_i, b_i) for odd b_i, restricted
    // to pairs of total parity `target`.
    let mut unknown = vec![None; d * d];
    let mut count = 0;
    for i in 0..d {
        for j in i..d {
            if p(i) + p(j) == target && (i < j || p(i).is_odd()) {
                unknown[i * d + j] = Some(count);
                count += 1;
            }
        }
    }
    // τ(b_i, b_j) = -(-1)^{|i||j|} τ(b_j, b_i)
    let coord = |i: usize, j: usize| -> Option<(usize, Scalar)> {
        if i <= j {
            unknown[i * d + j].map(|u| (u, Scalar::ONE))
        } else {
            unknown[j * d + i].map(|u| (u, -p(i).sign(p(j))))
        }
    };

    let equations: Vec<SparseVec> = (0..d)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut rows = Vec::new();
            for y in x..d {
                for z in y..d {
                    if p(x) + p(y) + p(z) != target {
                        continue;
                    }
                    let mut entries = Vec::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let s = p(a).sign(p(c));
                        for (t, coeff) in l.bracket_basis(b, c).iter() {
                            if let Some((u, sign)) = coord(a, t) {
                                entries.push((u, &(&s * coeff) * &sign));
                            }
                        }
                    }
                    let v = SparseVec::from_entries(entries);
                    if !v.is_zero() {
                        rows.push(v);
                    }
                }
            }
            rows
        })
        .collect();
    let mut cocycle_eqs = EchelonBuilder::new(count);
    for e in &equations {
        cocycle_eqs.insert(e);
    }
    let cocycles = count - cocycle_eqs.rank();

    // δg for g = dual basis vector b_t^* with |b_t| = target.
    let mut coboundaries = EchelonBuilder::new(count);
    for t in (0..d).filter(|&t| p(t) == target) {
        let mut entries = Vec::new();
        for i in 0..d {
            for j in i..d {
                if let Some(u) = unknown[i * d + j] {
                    let v = l.bracket_basis(i, j).get(t);
                    if !v.is_zero() {
                        entries.push((u, v));
                    }
                }
            }
        }
        coboundaries.insert(&SparseVec::from_entries(entries));
    }
    cocycles - coboundaries.rank()
}

/// Naturality `u_M ∘ uce(f) = f ∘ u_L` as an exact matrix identity.
pub fn naturality_holds(f: &GradedLinearMap, uce_f: &GradedLinearMap, source: &UceAlgebra, target: &UceAlgebra) -> Result<bool> {
    Ok(target.u().compose(uce_f)? == f.compose(source.u())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::quotient_space;
    use crate::matrices::{coeff, corner_embedding, family, FamilyKind};
    use crate::superalg::{centre, check_morphism};

    fn sl(m: usize, n: usize) -> LieSuperalgebra {
        family(FamilyKind::Sl, m, n, &coeff::rationals()).unwrap().algebra().clone()
    }

    fn one_dim(p: Parity) -> LieSuperalgebra {
        LieSuperalgebra::abelian(GradedBasis::new(vec![("x".into(), p)]).unwrap())
    }

    #[test]
    fn sl2_is_centrally_closed() {
        let l = sl(2, 0);
        let u = build_uce(&l).unwrap();
        assert_eq!(u.dim(), 3);
        assert!(u.u().is_bijective());
        // Same dimension from the unfolded tensor square.
        let d = l.dim();
        assert_eq!(quotient_space(d * d, &b_relations(&l)).dim(), 3);
        assert!(is_centrally_closed(&l).unwrap());
    }

    #[test]
    fn folded_and_unfolded_presentations_agree() {
        for l in [sl(2, 0), sl(2, 1), sl(1, 1), one_dim(Parity::Odd)] {
            let u = build_uce(&l).unwrap();
            let d = l.dim();
            assert_eq!(quotient_space(d * d, &b_relations(&l)).dim(), u.dim());
            for r in b_relations(&l) {
                assert!(u.tensor_class(&r).is_zero());
            }
        }
    }

    #[test]
    fn one_dimensional_abelian() {
        let even = build_uce(&one_dim(Parity::Even)).unwrap();
        assert_eq!(even.dim(), 0);
        let odd = build_uce(&one_dim(Parity::Odd)).unwrap();
        assert_eq!(odd.dim(), 1);
        assert_eq!(odd.algebra().basis().label(0), "<x,x>");
        assert_eq!(odd.h2().dim(), 1);
        assert_eq!(h2_cohomology_oracle(&one_dim(Parity::Odd)), 1);
    }

    #[test]
    fn kernel_of_u_is_central() {
        for l in [sl(2, 1), sl(1, 1), sl(2, 2), one_dim(Parity::Odd)] {
            let u = build_uce(&l).unwrap();
            assert!(centre(u.algebra()).contains_subspace(&u.h2()));
        }
    }

    #[test]
    fn oracle_agrees_on_small_cases() {
        for l in [sl(2, 0), sl(3, 0), sl(2, 1), sl(1, 1), sl(2, 2)] {
            let u = build_uce(&l).unwrap();
            assert_eq!(u.h2().dim(), h2_cohomology_oracle(&l));
        }
    }

    #[test]
    fn functor_laws_and_naturality() {
        let q = coeff::rationals();
        let f2 = family(FamilyKind::Sl, 2, 0, &q).unwrap();
        let f3 = family(FamilyKind::Sl, 3, 0, &q).unwrap();
        let f4 = family(FamilyKind::Sl, 4, 0, &q).unwrap();
        let (u2, u3, u4) = (
            build_uce(f2.algebra()).unwrap(),
            build_uce(f3.algebra()).unwrap(),
            build_uce(f4.algebra()).unwrap(),
        );
        let id = GradedLinearMap::identity(f3.algebra().basis().parities().to_vec());
        let uid = uce_of_morphism(&id, &u3, &u3).unwrap();
        assert_eq!(uid, GradedLinearMap::identity(u3.algebra().basis().parities().to_vec()));
        let f = corner_embedding(&f2, &f3).unwrap();
        let g = corner_embedding(&f3, &f4).unwrap();
        let uf = uce_of_morphism(&f, &u2, &u3).unwrap();
        let ug = uce_of_morphism(&g, &u3, &u4).unwrap();
        let ugf = uce_of_morphism(&g.compose(&f).unwrap(), &u2, &u4).unwrap();
        assert_eq!(ugf, ug.compose(&uf).unwrap());
        assert!(naturality_holds(&f, &uf, &u2, &u3).unwrap());
        assert!(check_morphism(&uf, u2.algebra(), u3.algebra()).unwrap());
    }

    #[test]
    fn non_morphisms_are_rejected() {
        let l = sl(2, 0);
        let u = build_uce(&l).unwrap();
        let twice = GradedLinearMap::between(&l, &l, (0..3).map(|k| SparseVec::single(k, 2.into())).collect()).unwrap();
        assert!(matches!(uce_of_morphism(&twice, &u, &u), Err(Error::NotMorphism(..))));
    }

    #[test]
    fn heisenberg_from_a_cocycle() {
        let l = LieSuperalgebra::abelian(GradedBasis::even(2));
        let target = GradedBasis::new(vec![("z".into(), Parity::Even)]).unwrap();
        let mut tau = Cocycle2::zero(&l, target);
        tau.values[1] = SparseVec::unit(0);
        tau.values[2] = SparseVec::single(0, -Scalar::ONE);
        let ext = extension_from_cocycle(&l, &tau).unwrap();
        assert_eq!(ext.total.dim(), 3);
        assert_eq!(ext.total.bracket_basis(0, 1), &SparseVec::unit(2));
        assert_eq!(ext.total.basis().label(2), "c:z");
        assert!(centre(&ext.total).contains_subspace(&ext.kernel));
        // uce of the abelian plane is the Heisenberg algebra's centre direction.
        assert_eq!(build_uce(&l).unwrap().dim(), 1);
    }

    #[test]
    fn cocycle_violations() {
        let l = LieSuperalgebra::abelian(GradedBasis::even(2));
        let target = GradedBasis::new(vec![("z".into(), Parity::Even)]).unwrap();
        let mut tau = Cocycle2::zero(&l, target.clone());
        tau.values[1] = SparseVec::unit(0);
        let r = validate_cocycle(&tau, &l).unwrap();
        assert!(r.has(ViolationKind::Alternating));
        assert!(extension_from_cocycle(&l, &tau).is_err());

        let odd_target = GradedBasis::new(vec![("z".into(), Parity::Odd)]).unwrap();
        let mut tau = Cocycle2::zero(&l, odd_target);
        tau.values[1] = SparseVec::unit(0);
        tau.values[2] = SparseVec::single(0, -Scalar::ONE);
        assert!(validate_cocycle(&tau, &l).unwrap().has(ViolationKind::Degree));

        // On sl2 every cocycle is a coboundary; g([x, y]) with g = e^* is one.
        let s = sl(2, 0);
        let mut tau = Cocycle2::zero(&s, target);
        for i in 0..3 {
            for j in 0..3 {
                tau.values[i * 3 + j] = SparseVec::from_entries(vec![(0, s.bracket_basis(i, j).get(0))]);
            }
        }
        assert!(validate_cocycle(&tau, &s).unwrap().is_ok());
    }
}
