use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{colimit, factor_through, validate_system, Colimit, DirectedSystem};
use crate::exactla::EchelonBuilder;
use crate::matrices::{corner_embedding, family, FamilyKind, MatrixFamily};
use crate::superalg::{check_morphism, derived_subalgebra, AssocSuperalgebra, GradedLinearMap, Subspace};
use crate::uce::{build_uce, uce_of_morphism, UceAlgebra};
use crate::{Error, Result};

/// `(uce(L_i), uce(f_ji))` together with the `uce(L_i)` themselves.
#[derive(Clone, Debug)]
pub struct UceSystem {
    pub system: DirectedSystem,
    pub uces: Vec<UceAlgebra>,
}

pub fn uce_system(s: &DirectedSystem) -> Result<UceSystem> {
    validate_system(s).into_result(())?;
    let uces = s.algebras().par_iter().map(build_uce).collect::<Result<Vec<_>>>()?;
    let maps = s
        .poset()
        .pairs()
        .into_iter()
        .filter(|(i, j)| i != j)
        .map(|(i, j)| Ok(((i, j), uce_of_morphism(s.map(i, j), &uces[i], &uces[j])?)))
        .collect::<Result<Vec<_>>>()?;
    let system =
        DirectedSystem::from_maps(s.poset().clone(), uces.iter().map(|u| u.algebra().clone()).collect(), maps)?;
    Ok(UceSystem { system, uces })
}

/// `colim u_i : colim uce(L_i) -> colim L_i`.
#[derive(Clone, Debug)]
pub struct LimitU {
    pub colimit: Colimit,
    pub uce_colimit: Colimit,
    pub map: GradedLinearMap,
    pub kernel: Subspace,
    pub kernel_central: bool,
    pub surjective: bool,
    pub all_perfect: bool,
}

pub fn limit_u(s: &DirectedSystem) -> Result<LimitU> {
    let us = uce_system(s)?;
    limit_u_with(s, &us)
}

pub fn limit_u_with(s: &DirectedSystem, us: &UceSystem) -> Result<LimitU> {
    let colim = colimit(s)?;
    let uce_colim = colimit(&us.system)?;
    let cone = us
        .uces
        .iter()
        .enumerate()
        .map(|(i, u)| colim.canonical(i).compose(u.u()))
        .collect::<Result<Vec<_>>>()?;
    let map = factor_through(&us.system, &uce_colim, colim.algebra(), &cone)?;
    let kernel = Subspace::from_spanning(uce_colim.dim(), &map.kernel());
    let alg = uce_colim.algebra();
    let kernel_central =
        kernel.basis().iter().all(|z| (0..alg.dim()).all(|k| alg.bracket(z, &crate::exactla::SparseVec::unit(k)).is_zero()));
    let all_perfect = s.algebras().iter().all(|l| derived_subalgebra(l).1);
    Ok(LimitU { surjective: map.is_surjective(), colimit: colim, uce_colimit: uce_colim, map, kernel, kernel_central, all_perfect })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct H2Restriction {
    pub i: usize,
    pub j: usize,
    /// `uce(f_ji)` maps `H₂(L_i)` into `H₂(L_j)`.
    pub restricts: bool,
    pub bijective: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub dims: Vec<usize>,
    pub uce_dims: Vec<usize>,
    pub h2_dims: Vec<usize>,
    pub colimit_dim: usize,
    /// `dim colim uce(L_i)`.
    pub colimit_of_uce_dim: usize,
    /// `dim uce(colim L_i)`.
    pub uce_of_colimit_dim: usize,
    pub phi_morphism: bool,
    pub phi_bijective: bool,
    pub psi_phi_identity: bool,
    pub phi_psi_identity: bool,
    pub h2_restrictions: Vec<H2Restriction>,
    pub h2_colimit: usize,
    pub h2_top: Option<usize>,
    pub colimit_of_uce_perfect: bool,
    /// All members centrally closed implies the colimit is.
    pub centrally_closed_members: bool,
    pub colimit_centrally_closed: bool,
}

impl TheoremReport {
    /// `φ` is an isomorphism with inverse `ψ`.
    pub fn passed(&self) -> bool {
        self.phi_morphism && self.phi_bijective && self.psi_phi_identity && self.phi_psi_identity
    }

    pub fn h2_stable(&self) -> bool {
        self.h2_restrictions.iter().all(|r| r.restricts && r.bijective)
    }
}

/// Compares `colim uce(L_i)` with `uce(colim L_i)` for a system of perfect
/// algebras via the mediating map `φ` and its inverse candidate `ψ`.
pub fn theorem_verify(s: &DirectedSystem) -> Result<TheoremReport> {
    validate_system(s).into_result(())?;
    if let Some(i) = s.algebras().iter().position(|l| !derived_subalgebra(l).1) {
        return Err(Error::NotPerfectMember(i));
    }
    let us = uce_system(s)?;
    let colim = colimit(s)?;
    let uce_colim = colimit(&us.system)?;
    let uce_l = build_uce(colim.algebra())?;

    let phi_hat = us
        .uces
        .iter()
        .enumerate()
        .map(|(i, u)| uce_of_morphism(colim.canonical(i), u, &uce_l))
        .collect::<Result<Vec<_>>>()?;
    let phi = factor_through(&us.system, &uce_colim, uce_l.algebra(), &phi_hat)?;

    // ψ⟨x, y⟩: lift x, y to a common L_k and bracket there.
    let psi_cols = (0..uce_l.dim())
        .map(|q| {
            let (a, b) = uce_l.basis_pair(q);
            let (i, x) = colim.representative(a);
            let (j, y) = colim.representative(b);
            let k = s.poset().upper_bound(i, j).expect("directed");
            let t = us.uces[k].class_of(s.map(i, k).column(x), s.map(j, k).column(y));
            uce_colim.canonical(k).apply(&t)
        })
        .collect();
    let psi = GradedLinearMap::between(uce_l.algebra(), uce_colim.algebra(), psi_cols)?;
    let id = |d: &GradedLinearMap| GradedLinearMap::identity(d.domain().to_vec());
    let psi_phi = psi.compose(&phi)?;
    let phi_psi = phi.compose(&psi)?;

    let h2: Vec<Subspace> = us.uces.iter().map(UceAlgebra::h2).collect();
    let h2_restrictions = s
        .poset()
        .pairs()
        .into_iter()
        .filter(|(i, j)| i != j)
        .map(|(i, j)| {
            let f = us.system.map(i, j);
            let images: Vec<_> = h2[i].basis().iter().map(|v| f.apply(v)).collect();
            let restricts = images.iter().all(|v| h2[j].contains(v));
            let mut rank = EchelonBuilder::new(f.codomain_dim());
            for v in &images {
                rank.insert(v);
            }
            let bijective = restricts && rank.rank() == h2[i].dim() && h2[i].dim() == h2[j].dim();
            H2Restriction { i, j, restricts, bijective }
        })
        .collect();

    let centrally_closed_members = us.uces.iter().zip(s.algebras()).all(|(u, l)| u.dim() == l.dim());
    Ok(TheoremReport {
        dims: s.algebras().iter().map(|l| l.dim()).collect(),
        uce_dims: us.uces.iter().map(UceAlgebra::dim).collect(),
        h2_dims: h2.iter().map(Subspace::dim).collect(),
        colimit_dim: colim.dim(),
        colimit_of_uce_dim: uce_colim.dim(),
        uce_of_colimit_dim: uce_l.dim(),
        phi_morphism: check_morphism(&phi, uce_colim.algebra(), uce_l.algebra())?,
        phi_bijective: phi.is_bijective(),
        psi_phi_identity: psi_phi == id(&phi),
        phi_psi_identity: phi_psi == id(&psi),
        h2_restrictions,
        h2_colimit: uce_l.h2().dim(),
        h2_top: s.poset().top().map(|t| h2[t].dim()),
        colimit_of_uce_perfect: derived_subalgebra(uce_colim.algebra()).1,
        centrally_closed_members,
        colimit_centrally_closed: uce_l.dim() == colim.dim(),
    })
}

/// The chain `sl(m,n;A) -> sl(m+1,n;A) -> ...` of corner embeddings for `m`
/// in `sizes`.
pub fn sl_chain(a: &AssocSuperalgebra, sizes: RangeInclusive<usize>, n: usize) -> Result<(DirectedSystem, Vec<MatrixFamily>)> {
    let fams = sizes.map(|m| family(FamilyKind::Sl, m, n, a)).collect::<Result<Vec<_>>>()?;
    if fams.is_empty() {
        return Err(Error::Precondition("empty chain".into()));
    }
    let steps = fams.windows(2).map(|w| corner_embedding(&w[0], &w[1])).collect::<Result<Vec<_>>>()?;
    let s = DirectedSystem::chain(fams.iter().map(|f| f.algebra().clone()).collect(), steps)?;
    Ok((s, fams))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::coeff;
    use crate::superalg::{GradedBasis, LieSuperalgebra, Parity};

    #[test]
    fn identity_chain_gives_identity_uce_chain() {
        let l = family(FamilyKind::Sl, 3, 0, &coeff::rationals()).unwrap().algebra().clone();
        let id = GradedLinearMap::identity(l.basis().parities().to_vec());
        let s = DirectedSystem::chain(vec![l.clone(), l], vec![id]).unwrap();
        let us = uce_system(&s).unwrap();
        let u = us.system.map(0, 1);
        assert_eq!(u, &GradedLinearMap::identity(u.domain().to_vec()));
    }

    #[test]
    fn centrally_closed_chain() {
        let (s, _) = sl_chain(&coeff::rationals(), 3..=4, 0).unwrap();
        let lu = limit_u(&s).unwrap();
        assert_eq!(lu.kernel.dim(), 0);
        let r = theorem_verify(&s).unwrap();
        assert!(r.passed() && r.h2_stable(), "{r:?}");
        assert!(r.centrally_closed_members && r.colimit_centrally_closed);
    }

    #[test]
    fn abelian_system_kernel_is_central() {
        let a = LieSuperalgebra::abelian(GradedBasis::new(vec![("x".into(), Parity::Even), ("y".into(), Parity::Odd)]).unwrap());
        let id = GradedLinearMap::identity(a.basis().parities().to_vec());
        let s = DirectedSystem::chain(vec![a.clone(), a], vec![id]).unwrap();
        let lu = limit_u(&s).unwrap();
        assert!(lu.kernel_central);
        assert!(!lu.all_perfect);
        assert!(matches!(theorem_verify(&s), Err(Error::NotPerfectMember(0))));
    }
}
