use rayon::prelude::*;

use super::{validate_system, DirectedSystem};
use crate::exactla::{QuotientPresentation, SparseVec};
use crate::superalg::{check_morphism, GradedBasis, GradedLinearMap, LieSuperalgebra, Subspace};
use crate::{Error, Result};

/// `(⊕_i L_i) / span{ι_i(x) - ι_j(f_ji x)}` with its canonical maps.
///
/// Basis vectors are classes of basis vectors of the components, ordered by
/// index and then by component basis order; labels carry an `@i` suffix.
#[derive(Clone, Debug)]
pub struct Colimit {
    algebra: LieSuperalgebra,
    canonical: Vec<GradedLinearMap>,
    /// `(index, basis vector)` representing each colimit basis vector.
    representatives: Vec<(usize, usize)>,
    top_isomorphism: Option<bool>,
}

impl Colimit {
    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `φ_i : L_i -> L`.
    pub fn canonical(&self, i: usize) -> &GradedLinearMap {
        &self.canonical[i]
    }

    pub fn canonical_maps(&self) -> &[GradedLinearMap] {
        &self.canonical
    }

    /// Colimit basis vector `q` is `φ_i(e_a)` for `(i, a) = representative(q)`.
    pub fn representative(&self, q: usize) -> (usize, usize) {
        self.representatives[q]
    }

    /// Whether `φ_T` is bijective, when the poset has a top element `T`.
    pub fn top_isomorphism(&self) -> Option<bool> {
        self.top_isomorphism
    }
}

pub fn colimit(s: &DirectedSystem) -> Result<Colimit> {
    validate_system(s).into_result(())?;
    let n = s.len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for l in s.algebras() {
        offsets.push(offsets.last().unwrap() + l.dim());
    }
    let total = offsets[n];
    let mut relations = Vec::new();
    for (i, j) in s.poset().pairs() {
        if i == j {
            continue;
        }
        let f = s.map(i, j);
        for a in 0..s.algebra(i).dim() {
            let v = SparseVec::unit(offsets[i] + a).sub(&f.column(a).shifted(offsets[j]));
            relations.push(v);
        }
    }
    let presentation = QuotientPresentation::new(total, &relations);
    let locate = |c: usize| {
        let i = offsets.partition_point(|&o| o <= c) - 1;
        (i, c - offsets[i])
    };
    let representatives: Vec<(usize, usize)> = presentation.basis_columns().iter().map(|&c| locate(c)).collect();
    let dim = presentation.dim();
    let basis = GradedBasis::new(
        representatives
            .iter()
            .map(|&(i, a)| (format!("{}@{i}", s.algebra(i).basis().label(a)), s.algebra(i).parity(a)))
            .collect(),
    )?;
    let canonical = (0..n)
        .map(|i| {
            let cols = (0..s.algebra(i).dim()).map(|a| presentation.project_column(offsets[i] + a).clone()).collect();
            GradedLinearMap::new(s.algebra(i).basis().parities().to_vec(), basis.parities().to_vec(), cols)
        })
        .collect::<Result<Vec<_>>>()?;
    let table: Vec<SparseVec> = (0..dim * dim)
        .into_par_iter()
        .map(|k| {
            let (i, a) = representatives[k / dim];
            let (j, b) = representatives[k % dim];
            let top = s.poset().upper_bound(i, j).expect("validated systems are directed");
            let x = s.map(i, top).column(a);
            let y = s.map(j, top).column(b);
            canonical[top].apply(&s.algebra(top).bracket(x, y))
        })
        .collect();
    let algebra = LieSuperalgebra::new(basis, table)?;
    let top_isomorphism = s.poset().top().map(|t| canonical[t].is_bijective());
    Ok(Colimit { algebra, canonical, representatives, top_isomorphism })
}

/// The unique `φ : L -> Y` with `φ ∘ φ_i = ψ_i`, for a cone `ψ_i : L_i -> Y`.
pub fn factor_through(s: &DirectedSystem, colim: &Colimit, y: &LieSuperalgebra, cone: &[GradedLinearMap]) -> Result<GradedLinearMap> {
    if cone.len() != s.len() {
        return Err(Error::DimensionMismatch { expected: s.len(), found: cone.len() });
    }
    for (i, psi) in cone.iter().enumerate() {
        if let Some((a, b)) = psi.morphism_witness(s.algebra(i), y)? {
            return Err(Error::NotMorphism(a, b));
        }
    }
    for (i, j) in s.poset().pairs() {
        if cone[j].compose(s.map(i, j))? != cone[i] {
            return Err(Error::ConeViolation(i, j));
        }
    }
    let cols = (0..colim.dim())
        .map(|q| {
            let (i, a) = colim.representative(q);
            cone[i].column(a).clone()
        })
        .collect();
    let phi = GradedLinearMap::between(colim.algebra(), y, cols)?;
    for (i, psi) in cone.iter().enumerate() {
        if &phi.compose(colim.canonical(i))? != psi {
            return Err(Error::ConeViolation(i, i));
        }
    }
    // The images of the φ_i span L, so any map agreeing on them is φ.
    let spanned: Vec<SparseVec> = colim.canonical_maps().iter().flat_map(|f| f.columns().iter().cloned()).collect();
    debug_assert_eq!(Subspace::from_spanning(colim.dim(), &spanned).dim(), colim.dim());
    Ok(phi)
}

/// A family `g_i : L_i -> M_i` over a common poset with `g_j ∘ f_ji = f'_ji ∘ g_i`.
#[derive(Clone, Debug)]
pub struct SystemMorphism {
    pub components: Vec<GradedLinearMap>,
}

impl SystemMorphism {
    pub fn new(source: &DirectedSystem, target: &DirectedSystem, components: Vec<GradedLinearMap>) -> Result<Self> {
        if source.poset() != target.poset() || components.len() != source.len() {
            return Err(Error::Precondition("system morphisms need a common poset and one map per index".into()));
        }
        for (i, g) in components.iter().enumerate() {
            if !check_morphism(g, source.algebra(i), target.algebra(i))? {
                return Err(Error::Precondition(format!("component {i} is not a Lie morphism")));
            }
        }
        for (i, j) in source.poset().pairs() {
            if components[j].compose(source.map(i, j))? != target.map(i, j).compose(&components[i])? {
                return Err(Error::ConeViolation(i, j));
            }
        }
        Ok(Self { components })
    }
}

/// `colim g : colim L_i -> colim M_i`.
pub fn induced_map(
    source: &DirectedSystem,
    source_colim: &Colimit,
    target_colim: &Colimit,
    g: &SystemMorphism,
) -> Result<GradedLinearMap> {
    let cone = g
        .components
        .iter()
        .enumerate()
        .map(|(i, gi)| target_colim.canonical(i).compose(gi))
        .collect::<Result<Vec<_>>>()?;
    factor_through(source, source_colim, target_colim.algebra(), &cone)
}
