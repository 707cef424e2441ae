//! Directed systems of Lie superalgebras over finite directed posets, their
//! colimits, and the universal central extension functor applied to them.

mod colimit;
mod theorem;

use std::collections::VecDeque;

use crate::superalg::{check_morphism, GradedLinearMap, LieSuperalgebra, ValidationReport, Violation, ViolationKind};
use crate::{Error, Result};

pub use colimit::{colimit, factor_through, induced_map, Colimit, SystemMorphism};
pub use theorem::{limit_u, sl_chain, theorem_verify, uce_system, H2Restriction, LimitU, TheoremReport, UceSystem};

/// A finite set `0..n` with an order relation stored as a boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPoset {
    n: usize,
    leq: Vec<bool>,
}

impl DirectedPoset {
    /// Takes the relation as given; see [`validate`](Self::validate).
    pub fn from_relation(n: usize, leq: Vec<Vec<bool>>) -> Result<Self> {
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: leq.len() });
        }
        Ok(Self { n, leq: leq.into_iter().flatten().collect() })
    }

    /// Reflexive-transitive closure of the given pairs `i <= j`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(Error::Precondition(format!("pair ({i}, {j}) outside 0..{n}")));
            }
            leq[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(Self { n, leq })
    }

    /// `0 <= 1 <= ... <= n-1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers).unwrap()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    /// All pairs `i <= j`, including `i = j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (0..self.n).map(move |j| (i, j))).filter(|&(i, j)| self.leq(i, j)).collect()
    }

    /// Smallest index that is an upper bound of both.
    pub fn upper_bound(&self, i: usize, j: usize) -> Option<usize> {
        (0..self.n).find(|&k| self.leq(i, k) && self.leq(j, k))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&t| (0..self.n).all(|i| self.leq(i, t)))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n;
        let bad = |idx: Vec<usize>| Violation::new(ViolationKind::NotPartialOrder, idx, Vec::new());
        for i in 0..n {
            if !self.leq(i, i) {
                report.push(bad(vec![i]));
            }
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    report.push(bad(vec![i, j]));
                }
                for k in 0..n {
                    if self.leq(i, j) && self.leq(j, k) && !self.leq(i, k) {
                        report.push(bad(vec![i, j, k]));
                    }
                }
                if j > i && self.upper_bound(i, j).is_none() {
                    report.push(Violation::new(ViolationKind::NotDirected, vec![i, j], Vec::new()));
                }
            }
        }
        report
    }
}

/// Algebras `L_i` with transition maps `f_ji : L_i -> L_j` for all `i <= j`.
#[derive(Clone, Debug)]
pub struct DirectedSystem {
    poset: DirectedPoset,
    algebras: Vec<LieSuperalgebra>,
    maps: Vec<Option<GradedLinearMap>>,
}

impl DirectedSystem {
    /// `maps` lists `((i, j), f_ji)` for every `i < j`; identities are filled
    /// in for `i = i` unless given.
    pub fn from_maps(
        poset: DirectedPoset,
        algebras: Vec<LieSuperalgebra>,
        maps: Vec<((usize, usize), GradedLinearMap)>,
    ) -> Result<Self> {
        let n = poset.len();
        if algebras.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: algebras.len() });
        }
        let mut table: Vec<Option<GradedLinearMap>> = vec![None; n * n];
        for ((i, j), f) in maps {
            if i >= n || j >= n || !poset.leq(i, j) {
                return Err(Error::Precondition(format!("map given for ({i}, {j}) which is not a pair i <= j")));
            }
            check_shape(&f, &algebras[i], &algebras[j])?;
            table[i * n + j] = Some(f);
        }
        for i in 0..n {
            table[i * n + i].get_or_insert_with(|| GradedLinearMap::identity(algebras[i].basis().parities().to_vec()));
        }
        if let Some((i, j)) = poset.pairs().into_iter().find(|&(i, j)| table[i * n + j].is_none()) {
            return Err(Error::Precondition(format!("missing transition map for {i} <= {j}")));
        }
        Ok(Self { poset, algebras, maps: table })
    }

    /// Completes the generating maps `((i, j), f_ji)` by composition along
    /// paths; `poset` is the closure of the generating pairs.
    pub fn generated(algebras: Vec<LieSuperalgebra>, generators: Vec<((usize, usize), GradedLinearMap)>) -> Result<Self> {
        let n = algebras.len();
        let covers: Vec<(usize, usize)> = generators.iter().map(|(p, _)| *p).collect();
        let poset = DirectedPoset::from_covers(n, &covers)?;
        let mut out: Vec<Option<GradedLinearMap>> = vec![None; n * n];
        for ((i, j), f) in &generators {
            check_shape(f, &algebras[*i], &algebras[*j])?;
        }
        for start in 0..n {
            out[start * n + start] = Some(GradedLinearMap::identity(algebras[start].basis().parities().to_vec()));
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for ((a, b), f) in &generators {
                    if *a == i && *b != i && out[start * n + b].is_none() {
                        let prev = out[start * n + i].as_ref().unwrap();
                        out[start * n + b] = Some(f.compose(prev)?);
                        queue.push_back(*b);
                    }
                }
            }
        }
        Ok(Self { poset, algebras, maps: out })
    }

    /// A chain `L_0 -> L_1 -> ...` from consecutive maps.
    pub fn chain(algebras: Vec<LieSuperalgebra>, steps: Vec<GradedLinearMap>) -> Result<Self> {
        if steps.len() + 1 != algebras.len() {
            return Err(Error::DimensionMismatch { expected: algebras.len().saturating_sub(1), found: steps.len() });
        }
        let gens = steps.into_iter().enumerate().map(|(i, f)| ((i, i + 1), f)).collect();
        Self::generated(algebras, gens)
    }

    pub fn poset(&self) -> &DirectedPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.algebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
    }

    pub fn algebra(&self, i: usize) -> &LieSuperalgebra {
        &self.algebras[i]
    }

    pub fn algebras(&self) -> &[LieSuperalgebra] {
        &self.algebras
    }

    /// `f_ji : L_i -> L_j`; panics unless `i <= j`.
    pub fn map(&self, i: usize, j: usize) -> &GradedLinearMap {
        self.maps[i * self.len() + j].as_ref().expect("transition maps exist exactly for i <= j")
    }

    /// Componentwise direct sum of two systems over the same poset.
    pub fn direct_sum(&self, other: &DirectedSystem) -> Result<DirectedSystem> {
        if self.poset != other.poset {
            return Err(Error::Precondition("direct sum needs a common poset".into()));
        }
        let algebras =
            self.algebras.iter().zip(&other.algebras).map(|(a, b)| LieSuperalgebra::direct_sum(&[a, b])).collect();
        let maps = self
            .poset
            .pairs()
            .into_iter()
            .map(|(i, j)| ((i, j), GradedLinearMap::direct_sum(&[self.map(i, j), other.map(i, j)])))
            .collect();
        DirectedSystem::from_maps(self.poset.clone(), algebras, maps)
    }
}

fn check_shape(f: &GradedLinearMap, l: &LieSuperalgebra, m: &LieSuperalgebra) -> Result<()> {
    if f.domain() != l.basis().parities() || f.codomain() != m.basis().parities() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: f.domain_dim() });
    }
    Ok(())
}

/// Poset axioms, morphism property of every `f_ji`, `f_ii = id` and
/// `f_ki = f_kj ∘ f_ji`.
pub fn validate_system(s: &DirectedSystem) -> ValidationReport {
    let mut report = s.poset.validate();
    let n = s.len();
    let pairs = s.poset.pairs();
    for &(i, j) in &pairs {
        if !check_morphism(s.map(i, j), s.algebra(i), s.algebra(j)).unwrap_or(false) {
            report.push(Violation::new(ViolationKind::NotMorphism, vec![j, i], Vec::new()));
        }
    }
    for i in 0..n {
        if s.map(i, i) != &GradedLinearMap::identity(s.algebra(i).basis().parities().to_vec()) {
            report.push(Violation::new(ViolationKind::Identity, vec![i], Vec::new()));
        }
    }
    for &(i, j) in &pairs {
        for k in (0..n).filter(|&k| s.poset.leq(j, k)) {
            let ok = matches!(s.map(j, k).compose(s.map(i, j)), Ok(c) if &c == s.map(i, k));
            if !ok {
                report.push(Violation::new(ViolationKind::Composition, vec![k, j, i], Vec::new()));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::SparseVec;
    use crate::matrices::{coeff, corner_embedding, family, FamilyKind};

    fn sl_chain_q() -> DirectedSystem {
        sl_chain(&coeff::rationals(), 3..=5, 0).unwrap().0
    }

    #[test]
    fn posets() {
        let p = DirectedPoset::chain(3);
        assert!(p.validate().is_ok());
        assert_eq!(p.top(), Some(2));
        let v = DirectedPoset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(v.validate().is_ok());
        assert_eq!(v.upper_bound(0, 1), Some(2));
        let anti = DirectedPoset::from_covers(2, &[]).unwrap();
        assert!(anti.validate().has(ViolationKind::NotDirected));
        let cyc = DirectedPoset::from_relation(2, vec![vec![true, true], vec![true, true]]).unwrap();
        assert!(cyc.validate().has(ViolationKind::NotPartialOrder));
    }

    #[test]
    fn chain_of_corner_embeddings_is_valid() {
        assert!(validate_system(&sl_chain_q()).is_ok());
    }

    #[test]
    fn single_element_system_is_valid() {
        let l = family(FamilyKind::Sl, 2, 0, &coeff::rationals()).unwrap();
        let s = DirectedSystem::chain(vec![l.algebra().clone()], vec![]).unwrap();
        assert!(validate_system(&s).is_ok());
    }

    #[test]
    fn broken_composition_is_reported() {
        let q = coeff::rationals();
        let fams: Vec<_> = (2..=4).map(|k| family(FamilyKind::Sl, k, 0, &q).unwrap()).collect();
        let f10 = corner_embedding(&fams[0], &fams[1]).unwrap();
        let f21 = corner_embedding(&fams[1], &fams[2]).unwrap();
        // A different embedding of sl(2) into sl(4), using the lower corner.
        let e = |i: usize, j: usize| fams[2].e(i, j, &SparseVec::unit(0)).unwrap();
        let h = fams[2].from_gl(&{
            let l = fams[2].layout();
            SparseVec::from_ints(&{
                let mut v = vec![0; l.dim()];
                v[l.entry(2, 2, 0)] = 1;
                v[l.entry(3, 3, 0)] = -1;
                v
            })
        })
        .unwrap();
        let alg0 = fams[0].algebra();
        let cols: Vec<SparseVec> = (0..alg0.dim())
            .map(|k| match alg0.basis().label(k) {
                "E12(1)" => e(2, 3),
                "E21(1)" => e(3, 2),
                _ => h.clone(),
            })
            .collect();
        let f20 = GradedLinearMap::between(alg0, fams[2].algebra(), cols).unwrap();
        let algebras = fams.iter().map(|f| f.algebra().clone()).collect();
        let s = DirectedSystem::from_maps(
            DirectedPoset::chain(3),
            algebras,
            vec![((0, 1), f10), ((1, 2), f21), ((0, 2), f20)],
        )
        .unwrap();
        let report = validate_system(&s);
        assert!(report.violations.iter().any(|v| v.kind == ViolationKind::Composition && v.indices == vec![2, 1, 0]));
        assert!(!report.has(ViolationKind::NotMorphism));
    }

    #[test]
    fn non_morphism_is_reported() {
        let l = family(FamilyKind::Sl, 2, 0, &coeff::rationals()).unwrap().algebra().clone();
        let twice = GradedLinearMap::between(&l, &l, (0..3).map(|k| SparseVec::single(k, 2.into())).collect()).unwrap();
        let s = DirectedSystem::chain(vec![l.clone(), l], vec![twice]).unwrap();
        assert!(validate_system(&s).has(ViolationKind::NotMorphism));
    }
}
