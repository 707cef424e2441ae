use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{family, FamilyKind, MatrixFamily};
use crate::cyclic::{cyclic_pairs, CyclicPairs};
use crate::exactla::{DenseAccumulator, EchelonBuilder, Scalar, SparseVec};
use crate::superalg::{check_morphism, AssocSuperalgebra, GradedLinearMap, Subspace};
use crate::uce::{build_uce, extension_from_cocycle, CentralExtension, Cocycle2, UceAlgebra};
use crate::{Error, Result};

/// `sl(m,n;A)` together with `uce(sl(m,n;A))` and `⟨⟨A, A⟩⟩`, built once and
/// shared by the checks below.
#[derive(Clone, Debug)]
pub struct SlCase {
    pub family: MatrixFamily,
    pub uce: UceAlgebra,
    pub cyclic: CyclicPairs,
}

impl SlCase {
    pub fn new(m: usize, n: usize, coeff: &AssocSuperalgebra) -> Result<Self> {
        let family = family(FamilyKind::Sl, m, n, coeff)?;
        let uce = build_uce(family.algebra())?;
        let cyclic = cyclic_pairs(coeff)?;
        Ok(Self { family, uce, cyclic })
    }

    pub fn m(&self) -> usize {
        self.family.layout().m()
    }

    pub fn n(&self) -> usize {
        self.family.layout().n()
    }
}

/// `τ_mn(x, y) = Σ_{i,j} ±⟨⟨x_ij, y_ji⟩⟩`, the sign being that of index `i`
/// in the supertrace.
pub fn tau_cocycle(f: &MatrixFamily, cp: &CyclicPairs) -> Result<Cocycle2> {
    let layout = f.layout();
    let a = layout.coeff();
    if !a.is_supercommutative() {
        return Err(Error::Precondition("tau_mn needs a supercommutative coefficient algebra".into()));
    }
    if layout.size() < 3 {
        return Err(Error::Precondition(format!("tau_mn needs m + n >= 3, got {}", layout.size())));
    }
    if cp.algebra().table() != a.table() {
        return Err(Error::Precondition("cyclic pairs were built for a different algebra".into()));
    }
    let d = f.dim();
    // Entries of each basis element grouped by matrix position.
    let entries: Vec<HashMap<(usize, usize), Vec<(usize, Scalar)>>> = f
        .embedding()
        .columns()
        .iter()
        .map(|x| {
            let mut by_pos: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
            for (k, c) in x.iter() {
                let (i, j, e) = layout.decode(k);
                by_pos.entry((i, j)).or_default().push((e, c.clone()));
            }
            by_pos
        })
        .collect();
    let values: Vec<SparseVec> = (0..d * d)
        .into_par_iter()
        .map(|idx| {
            let (x, y) = (&entries[idx / d], &entries[idx % d]);
            let mut acc = DenseAccumulator::new(cp.dim());
            for (&(i, j), xs) in x {
                let Some(ys) = y.get(&(j, i)) else { continue };
                for (ea, ca) in xs {
                    for (eb, cb) in ys {
                        let p = a.basis().parity(*ea) + a.basis().parity(*eb);
                        let s = layout.diagonal_sign(i, p);
                        acc.add_scaled(&(&(&s * ca) * cb), cp.class_of_basis(*ea, *eb));
                    }
                }
            }
            acc.take()
        })
        .collect();
    Ok(Cocycle2 { target: cp.basis().clone(), values })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HIsoReport {
    pub m: usize,
    pub n: usize,
    pub dim_sl: usize,
    pub dim_uce: usize,
    pub dim_h2: usize,
    pub dim_hc1: usize,
    /// `h⟨x, y⟩ = [x, y] ⊕ τ(x, y)` on every pair of basis vectors.
    pub formula_consistent: bool,
    pub morphism: bool,
    pub commutes_with_projections: bool,
    pub bijective: bool,
    /// `h` carries `H₂` onto the central summand `HC₁(A)`.
    pub kernel_match: bool,
}

impl HIsoReport {
    pub fn passed(&self) -> bool {
        self.formula_consistent && self.morphism && self.commutes_with_projections && self.bijective && self.kernel_match
    }
}

/// Builds `h_mn : uce(sl) -> sl ⊕ HC₁(A)` and checks it is an isomorphism of
/// central extensions.
pub fn h_iso_check(case: &SlCase) -> Result<HIsoReport> {
    h_iso_map(case).map(|(report, _, _)| report)
}

/// As [`h_iso_check`], also returning `h_mn` and the target extension.
pub fn h_iso_map(case: &SlCase) -> Result<(HIsoReport, GradedLinearMap, CentralExtension)> {
    let size = case.family.layout().size();
    if size < 5 {
        return Err(Error::Precondition(format!("h_mn is only claimed for m + n >= 5, got {size}")));
    }
    let sl = case.family.algebra();
    let uce = &case.uce;
    let d = sl.dim();
    let tau = tau_cocycle(&case.family, &case.cyclic)?;
    let ext = extension_from_cocycle(sl, &tau)?;
    let image = |a: usize, b: usize| sl.bracket_basis(a, b).add(&tau.value(d, a, b).shifted(d));
    let cols: Vec<SparseVec> = (0..uce.dim())
        .map(|q| {
            let (a, b) = uce.basis_pair(q);
            image(a, b)
        })
        .collect();
    let h = GradedLinearMap::between(uce.algebra(), &ext.total, cols)?;
    let formula_consistent = (0..d * d)
        .into_par_iter()
        .all(|k| h.apply(&uce.class_of_basis(k / d, k % d)) == image(k / d, k % d));
    let morphism = check_morphism(&h, uce.algebra(), &ext.total)?;
    let commutes_with_projections = ext.projection.compose(&h)?.columns() == uce.u().columns();
    let h2 = uce.h2();
    let mapped: Vec<SparseVec> = h2.basis().iter().map(|v| h.apply(v)).collect();
    let kernel_match = Subspace::from_spanning(ext.total.dim(), &mapped) == ext.kernel;
    let report = HIsoReport {
        m: case.m(),
        n: case.n(),
        dim_sl: d,
        dim_uce: uce.dim(),
        dim_h2: h2.dim(),
        dim_hc1: case.cyclic.hc1().dim(),
        formula_consistent,
        morphism,
        commutes_with_projections,
        bijective: h.is_bijective(),
        kernel_match,
    };
    Ok((report, h, ext))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SteinbergReport {
    pub m: usize,
    pub n: usize,
    pub dim_uce: usize,
    /// The class of `⟨E_ik(a), E_kj(1)⟩` does not depend on `k`.
    pub k_independent: bool,
    /// `a ↦ ê_ij(a)` is linear.
    pub linear: bool,
    /// The `ê_ij(a)` satisfy the bracket relations of the `E_ij(a)`.
    pub relations: bool,
    /// The `ê_ij(a)` generate `uce(sl)`.
    pub generates: bool,
    /// `u(ê_ij(a)) = E_ij(a)`.
    pub lifts: bool,
    pub failures: Vec<String>,
}

impl SteinbergReport {
    pub fn passed(&self) -> bool {
        self.k_independent && self.linear && self.relations && self.generates && self.lifts
    }
}

const MAX_FAILURES: usize = 20;

/// Candidate Steinberg generators `ê_ij(a)` inside `uce(sl(m,n;A))`.
pub fn steinberg_check(case: &SlCase) -> Result<SteinbergReport> {
    let layout = case.family.layout();
    let size = layout.size();
    if size < 3 {
        return Err(Error::Precondition(format!("steinberg_check needs m + n >= 3, got {size}")));
    }
    let a = layout.coeff();
    let da = a.dim();
    let uce = &case.uce;
    let fam = &case.family;
    let e = |i: usize, j: usize, x: &SparseVec| fam.e(i, j, x).expect("off-diagonal entries lie in sl");
    let hat_k = |i: usize, j: usize, k: usize, x: &SparseVec| uce.class_of(&e(i, k, x), &e(k, j, a.unit()));
    let middle = |i: usize, j: usize| (0..size).find(|&k| k != i && k != j).unwrap();
    let hat = |i: usize, j: usize, x: &SparseVec| hat_k(i, j, middle(i, j), x);

    let pairs: Vec<(usize, usize)> =
        (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut failures = Vec::new();
    let mut note = |ok: bool, msg: String| {
        if !ok && failures.len() < MAX_FAILURES {
            failures.push(msg);
        }
        ok
    };
    let label = |x: usize| a.basis().label(x).to_string();

    let mut table: HashMap<(usize, usize, usize), SparseVec> = HashMap::new();
    for &(i, j) in &pairs {
        for x in 0..da {
            table.insert((i, j, x), hat(i, j, &SparseVec::unit(x)));
        }
    }

    let mut k_independent = true;
    let mut lifts = true;
    for &(i, j) in &pairs {
        for x in 0..da {
            let v = &table[&(i, j, x)];
            for k in (0..size).filter(|&k| k != i && k != j) {
                let ok = &hat_k(i, j, k, &SparseVec::unit(x)) == v;
                k_independent &= note(ok, format!("e{}{}({}) depends on k = {}", i + 1, j + 1, label(x), k + 1));
            }
            let ok = fam.to_gl(&uce.u().apply(v)) == layout.element(i, j, &SparseVec::unit(x));
            lifts &= note(ok, format!("u(e{}{}({})) != E{}{}", i + 1, j + 1, label(x), i + 1, j + 1));
        }
    }

    let mut linear = true;
    let combo = SparseVec::from_entries((0..da).map(|x| (x, Scalar::from_int(x as i64 + 2))).collect());
    for &(i, j) in &pairs {
        let mut acc = DenseAccumulator::new(uce.dim());
        for (x, c) in combo.iter() {
            acc.add_scaled(c, &table[&(i, j, x)]);
        }
        let ok = hat(i, j, &combo) == acc.take();
        linear &= note(ok, format!("e{}{} is not linear", i + 1, j + 1));
        let ok = hat(i, j, a.unit()) == {
            let mut acc = DenseAccumulator::new(uce.dim());
            for (x, c) in a.unit().iter() {
                acc.add_scaled(c, &table[&(i, j, x)]);
            }
            acc.take()
        };
        linear &= note(ok, format!("e{}{}(1) is not linear", i + 1, j + 1));
    }

    let alg = uce.algebra();
    let rel_failures: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let mut out = Vec::new();
            for &(p, q) in &pairs {
                if j == p && i == q {
                    continue;
                }
                for x in 0..da {
                    for y in 0..da {
                        let lhs = alg.bracket(&table[&(i, j, x)], &table[&(p, q, y)]);
                        let mut rhs = DenseAccumulator::new(uce.dim());
                        if j == p {
                            rhs.add_scaled(&Scalar::ONE, &hat(i, q, a.product_basis(x, y)));
                        }
                        if i == q {
                            let s = layout.parity(i, j, x).sign(layout.parity(p, q, y));
                            rhs.add_scaled(&-s, &hat(p, j, a.product_basis(y, x)));
                        }
                        if lhs != rhs.take() {
                            out.push(format!(
                                "[e{}{}({}), e{}{}({})] violates the bracket relation",
                                i + 1,
                                j + 1,
                                label(x),
                                p + 1,
                                q + 1,
                                label(y)
                            ));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let relations = rel_failures.is_empty();
    for f in rel_failures.into_iter().take(MAX_FAILURES) {
        note(false, f);
    }

    let generators: Vec<SparseVec> = table.values().cloned().collect();
    let span_dim = generated_dim(alg, &generators);
    let generates = note(span_dim == uce.dim(), format!("generators span {span_dim} of {}", uce.dim()));

    Ok(SteinbergReport {
        m: case.m(),
        n: case.n(),
        dim_uce: uce.dim(),
        k_independent,
        linear,
        relations,
        generates,
        lifts,
        failures,
    })
}

/// Dimension of the subalgebra generated by `gens`.
fn generated_dim(alg: &crate::superalg::LieSuperalgebra, gens: &[SparseVec]) -> usize {
    let mut span = EchelonBuilder::new(alg.dim());
    let mut frontier: Vec<SparseVec> = gens.iter().filter(|g| span.insert(g).is_some()).cloned().collect();
    let gens: Vec<SparseVec> = frontier.clone();
    while !frontier.is_empty() && !span.is_full() {
        let products: Vec<SparseVec> =
            frontier.par_iter().flat_map_iter(|v| gens.iter().map(move |g| alg.bracket(g, v))).collect();
        frontier = products.into_iter().filter(|p| span.insert(p).is_some()).collect();
    }
    span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::coeff::*;
    use crate::uce::validate_cocycle;

    #[test]
    fn tau_is_a_cocycle() {
        for (m, n, a) in [
            (3, 0, truncated_polynomials(2)),
            (2, 1, grassmann(1)),
            (1, 2, grassmann(2)),
            (2, 1, dual_plane()),
            (2, 2, grassmann(3)),
        ] {
            let f = family(FamilyKind::Sl, m, n, &a).unwrap();
            let cp = cyclic_pairs(&a).unwrap();
            let tau = tau_cocycle(&f, &cp).unwrap();
            let report = validate_cocycle(&tau, f.algebra()).unwrap();
            assert!(report.is_ok(), "({m},{n}) {report}");
        }
    }

    #[test]
    fn tau_examples() {
        let a = truncated_polynomials(2);
        let f = family(FamilyKind::Sl, 3, 0, &a).unwrap();
        let cp = cyclic_pairs(&a).unwrap();
        let tau = tau_cocycle(&f, &cp).unwrap();
        let t = SparseVec::unit(1);
        let x = f.e(0, 1, &t).unwrap();
        let y = f.e(1, 0, &t).unwrap();
        assert_eq!(tau.eval(f.dim(), &x, &y), cp.class_of(&t, &t));
        let q = rationals();
        let f = family(FamilyKind::Sl, 3, 0, &q).unwrap();
        let tau = tau_cocycle(&f, &cyclic_pairs(&q).unwrap()).unwrap();
        assert!(tau.values.iter().all(SparseVec::is_zero));
    }

    #[test]
    fn small_cases_are_rejected() {
        let case = SlCase::new(2, 0, &rationals()).unwrap();
        assert!(h_iso_check(&case).is_err());
        assert!(steinberg_check(&case).is_err());
        let f = family(FamilyKind::Sl, 3, 0, &matrix_algebra_2()).unwrap();
        assert!(tau_cocycle(&f, &cyclic_pairs(&matrix_algebra_2()).unwrap()).is_err());
    }

    #[test]
    fn steinberg_small() {
        let case = SlCase::new(2, 1, &rationals()).unwrap();
        let r = steinberg_check(&case).unwrap();
        assert!(r.k_independent && r.linear && r.lifts, "{r:?}");
    }
}
