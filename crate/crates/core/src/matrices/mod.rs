//! Matrix Lie superalgebras `gl`, `sl`, `osp`, `p` and `sq` over a
//! coefficient superalgebra, with the cocycle `τ_mn`, the comparison map
//! `h_mn` and a Steinberg-relation verifier.
//!
//! Indices `0..m` are even and `m..m+n` are odd. The basis vector `E_ij(a)`
//! of `gl(m,n;A)` has index `(i * (m+n) + j) * dim A + a` and parity
//! `|i| + |j| + |a|`. Matrices multiply entrywise without signs, so
//! `E_ij(a) E_jq(b) = E_iq(ab)`. Labels are 1-based, e.g. `E12(t)`.

pub mod coeff;
mod checks;

use std::fmt;
use std::str::FromStr;

use crate::exactla::{kernel_basis, Coordinates, DenseAccumulator, Scalar, SparseMatrix, SparseVec};
use crate::superalg::{AssocSuperalgebra, GradedBasis, GradedLinearMap, LieSuperalgebra, Parity, Subspace};
use crate::{Error, Result};

pub use checks::{h_iso_check, steinberg_check, tau_cocycle, HIsoReport, SlCase, SteinbergReport};

/// Index bookkeeping for `Mat(m,n;A)`.
#[derive(Clone, Debug)]
pub struct MatrixLayout {
    m: usize,
    n: usize,
    coeff: AssocSuperalgebra,
}

impl MatrixLayout {
    pub fn new(m: usize, n: usize, coeff: AssocSuperalgebra) -> Self {
        Self { m, n, coeff }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn coeff(&self) -> &AssocSuperalgebra {
        &self.coeff
    }

    pub fn dim(&self) -> usize {
        self.size() * self.size() * self.coeff.dim()
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        Parity::from_bit(i >= self.m)
    }

    /// `+1` on even indices, `-1` on odd ones.
    pub fn sigma(&self, i: usize) -> Scalar {
        Scalar::sign(self.index_parity(i).is_odd())
    }

    /// Sign of a diagonal entry of parity `p` at index `i` in the supertrace:
    /// `(-1)^{|i|(1 + p)}`. On even matrices this is `sigma(i)`.
    pub fn diagonal_sign(&self, i: usize, p: Parity) -> Scalar {
        Scalar::sign(self.index_parity(i).is_odd() && !p.is_odd())
    }

    pub fn entry(&self, i: usize, j: usize, a: usize) -> usize {
        (i * self.size() + j) * self.coeff.dim() + a
    }

    /// Inverse of [`entry`](Self::entry).
    pub fn decode(&self, k: usize) -> (usize, usize, usize) {
        let da = self.coeff.dim();
        let (ij, a) = (k / da, k % da);
        (ij / self.size(), ij % self.size(), a)
    }

    pub fn parity(&self, i: usize, j: usize, a: usize) -> Parity {
        self.index_parity(i) + self.index_parity(j) + self.coeff.basis().parity(a)
    }

    /// `E_ij(a)` for an arbitrary element `a` of `A`.
    pub fn element(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        a.remap(|k| Some(self.entry(i, j, k)))
    }

    pub fn basis(&self) -> GradedBasis {
        let sep = if self.size() >= 10 { "," } else { "" };
        let mut entries = Vec::with_capacity(self.dim());
        for i in 0..self.size() {
            for j in 0..self.size() {
                for a in 0..self.coeff.dim() {
                    let label = format!("E{}{sep}{}({})", i + 1, j + 1, self.coeff.basis().label(a));
                    entries.push((label, self.parity(i, j, a)));
                }
            }
        }
        GradedBasis::new(entries).expect("matrix labels are distinct")
    }

    fn embed_product(&self, i: usize, q: usize, ab: &SparseVec) -> SparseVec {
        self.element(i, q, ab)
    }

    /// `E_ij(a) E_pq(b) = δ_jp E_iq(ab)`.
    pub fn product(&self, i: usize, j: usize, a: usize, p: usize, q: usize, b: usize) -> SparseVec {
        if j == p {
            self.embed_product(i, q, self.coeff.product_basis(a, b))
        } else {
            SparseVec::new()
        }
    }

    /// `A`-valued supertrace of a `gl` element.
    pub fn supertrace(&self, x: &SparseVec) -> SparseVec {
        let mut acc = DenseAccumulator::new(self.coeff.dim());
        for (k, c) in x.iter() {
            let (i, j, a) = self.decode(k);
            if i == j {
                let s = self.diagonal_sign(i, self.coeff.basis().parity(a));
                acc.add(a, &(c * &s));
            }
        }
        acc.take()
    }
}

/// `[E_ij(a), E_pq(b)] = δ_jp E_iq(ab) - (-1)^{|E_ij(a)||E_pq(b)|} δ_iq E_pj(ba)`,
/// valid for all index pairs.
pub fn bracket_eij(layout: &MatrixLayout, i: usize, j: usize, a: usize, p: usize, q: usize, b: usize) -> SparseVec {
    let s = layout.parity(i, j, a).sign(layout.parity(p, q, b));
    layout.product(i, j, a, p, q, b).add_scaled(&-s, &layout.product(p, q, b, i, j, a))
}

/// The associative superalgebra `Mat(m,n;A)`.
pub fn mat_algebra(layout: &MatrixLayout) -> Result<AssocSuperalgebra> {
    let mut unit = Vec::new();
    for i in 0..layout.size() {
        unit.extend(layout.element(i, i, layout.coeff().unit()).into_entries());
    }
    AssocSuperalgebra::from_fn(layout.basis(), SparseVec::from_entries(unit), |x, y| {
        let (i, j, a) = layout.decode(x);
        let (p, q, b) = layout.decode(y);
        layout.product(i, j, a, p, q, b)
    })
}

/// `gl(m,n;A)` built directly from [`bracket_eij`].
pub fn gl_algebra(layout: &MatrixLayout) -> Result<LieSuperalgebra> {
    LieSuperalgebra::from_fn(layout.basis(), |x, y| {
        let (i, j, a) = layout.decode(x);
        let (p, q, b) = layout.decode(y);
        bracket_eij(layout, i, j, a, p, q, b)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Gl,
    Sl,
    Osp,
    P,
    Sq,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Gl => "gl",
            FamilyKind::Sl => "sl",
            FamilyKind::Osp => "osp",
            FamilyKind::P => "p",
            FamilyKind::Sq => "sq",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(FamilyKind::Gl),
            "sl" => Ok(FamilyKind::Sl),
            "osp" => Ok(FamilyKind::Osp),
            "p" => Ok(FamilyKind::P),
            "sq" => Ok(FamilyKind::Sq),
            other => Err(Error::Precondition(format!("unknown family `{other}`; expected gl, sl, osp, p or sq"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixFamilySpec {
    pub kind: FamilyKind,
    pub m: usize,
    pub n: usize,
    pub coeff: AssocSuperalgebra,
}

impl MatrixFamilySpec {
    pub fn new(kind: FamilyKind, m: usize, n: usize, coeff: AssocSuperalgebra) -> Self {
        Self { kind, m, n, coeff }
    }

    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        if self.m + self.n == 0 {
            return fail("at least one index is required".into());
        }
        match self.kind {
            FamilyKind::Osp if self.n % 2 == 1 => fail(format!("osp needs an even number of odd indices, got n = {}", self.n)),
            FamilyKind::Osp if self.coeff.basis().count(Parity::Odd) > 0 => {
                fail("osp is only constructed over purely even coefficient algebras".into())
            }
            FamilyKind::P | FamilyKind::Sq if self.m != self.n => {
                fail(format!("{} needs m = n, got ({}, {})", self.kind, self.m, self.n))
            }
            FamilyKind::P | FamilyKind::Sq if self.coeff.dim() != 1 => fail(format!("{} is only defined over Q", self.kind)),
            _ => Ok(()),
        }
    }
}

/// A matrix Lie superalgebra with its embedding into `gl(m,n;A)`.
#[derive(Clone, Debug)]
pub struct MatrixFamily {
    kind: FamilyKind,
    layout: MatrixLayout,
    gl: LieSuperalgebra,
    algebra: LieSuperalgebra,
    embedding: GradedLinearMap,
    coords: Coordinates,
}

impl MatrixFamily {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn layout(&self) -> &MatrixLayout {
        &self.layout
    }

    pub fn gl(&self) -> &LieSuperalgebra {
        &self.gl
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Inclusion into `gl(m,n;A)`.
    pub fn embedding(&self) -> &GradedLinearMap {
        &self.embedding
    }

    pub fn to_gl(&self, x: &SparseVec) -> SparseVec {
        self.embedding.apply(x)
    }

    /// Coordinates of a `gl` element, if it lies in the family.
    pub fn from_gl(&self, x: &SparseVec) -> Option<SparseVec> {
        self.coords.solve(x)
    }

    /// `E_ij(a)` in family coordinates.
    pub fn e(&self, i: usize, j: usize, a: &SparseVec) -> Option<SparseVec> {
        self.from_gl(&self.layout.element(i, j, a))
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.layout.dim(), self.embedding.columns())
    }
}

pub fn build_family(spec: &MatrixFamilySpec) -> Result<MatrixFamily> {
    spec.check()?;
    let layout = MatrixLayout::new(spec.m, spec.n, spec.coeff.clone());
    let gl = gl_algebra(&layout)?;
    let gl_labels = layout.basis();
    let (vectors, labels) = match spec.kind {
        FamilyKind::Gl => (
            (0..layout.dim()).map(SparseVec::unit).collect(),
            gl_labels.labels().to_vec(),
        ),
        FamilyKind::Sl => sl_basis(&layout),
        FamilyKind::Osp => {
            let scalar = MatrixLayout::new(spec.m, spec.n, coeff::rationals());
            let gram = osp_gram(spec.m, spec.n);
            let forms = stabilizer_equations(&scalar, &gram);
            tensor_with_coefficients(&layout, &scalar, kernel_of(scalar.dim(), forms), "osp")
        }
        FamilyKind::P => {
            let gram = periplectic_gram(spec.m);
            let mut eqs = stabilizer_equations(&layout, &gram);
            eqs.push(trace_equation(&layout));
            let ker = kernel_of(layout.dim(), eqs);
            let labels = (1..=ker.len()).map(|k| format!("p{k}")).collect();
            (ker, labels)
        }
        FamilyKind::Sq => {
            let ker = kernel_of(layout.dim(), sq_equations(&layout));
            let labels = (1..=ker.len()).map(|k| format!("sq{k}")).collect();
            (ker, labels)
        }
    };
    let (algebra, embedding) = gl.subalgebra(vectors, labels)?;
    let coords = Coordinates::new(layout.dim(), embedding.columns())?;
    Ok(MatrixFamily { kind: spec.kind, layout, gl, algebra, embedding, coords })
}

/// Convenience wrapper around [`build_family`].
pub fn family(kind: FamilyKind, m: usize, n: usize, coeff: &AssocSuperalgebra) -> Result<MatrixFamily> {
    build_family(&MatrixFamilySpec::new(kind, m, n, coeff.clone()))
}

/// Off-diagonal `E_ij(a)`, traceless diagonal differences `H_i(a)`, and
/// `E_11(c)` for `c` in a homogeneous basis of `[A, A]`.
fn sl_basis(layout: &MatrixLayout) -> (Vec<SparseVec>, Vec<String>) {
    let a = layout.coeff();
    let da = a.dim();
    let size = layout.size();
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    let gl_basis = layout.basis();
    for i in 0..size {
        for j in 0..size {
            if i != j {
                for x in 0..da {
                    let k = layout.entry(i, j, x);
                    vectors.push(SparseVec::unit(k));
                    labels.push(gl_basis.label(k).to_string());
                }
            }
        }
    }
    for i in 0..size.saturating_sub(1) {
        for x in 0..da {
            let p = a.basis().parity(x);
            let s = &layout.diagonal_sign(i, p) * &layout.diagonal_sign(i + 1, p);
            vectors.push(SparseVec::from_entries(vec![
                (layout.entry(i, i, x), Scalar::ONE),
                (layout.entry(i + 1, i + 1, x), -s),
            ]));
            labels.push(format!("H{}({})", i + 1, a.basis().label(x)));
        }
    }
    let commutators: Vec<SparseVec> = (0..da).flat_map(|x| (0..da).map(move |y| (x, y))).map(|(x, y)| a.commutator_basis(x, y)).collect();
    let derived = Subspace::from_spanning(da, &commutators);
    for (k, c) in derived.basis().iter().enumerate() {
        vectors.push(layout.element(0, 0, c));
        labels.push(format!("E11[c{}]", k + 1));
    }
    (vectors, labels)
}

fn trace_equation(layout: &MatrixLayout) -> SparseVec {
    SparseVec::from_entries(
        (0..layout.size()).map(|i| (layout.entry(i, i, 0), layout.diagonal_sign(i, Parity::Even))).collect(),
    )
}

fn kernel_of(ncols: usize, rows: Vec<SparseVec>) -> Vec<SparseVec> {
    kernel_basis(&SparseMatrix::from_rows(ncols, rows))
}

/// Identity on the even block, `[[0, I], [-I, 0]]` on the odd block.
pub fn osp_gram(m: usize, n: usize) -> Vec<Vec<Scalar>> {
    let size = m + n;
    let mut g = vec![vec![Scalar::ZERO; size]; size];
    for (i, row) in g.iter_mut().enumerate().take(m) {
        row[i] = Scalar::ONE;
    }
    let h = n / 2;
    for k in 0..h {
        g[m + k][m + h + k] = Scalar::ONE;
        g[m + h + k][m + k] = -Scalar::ONE;
    }
    g
}

/// The odd form on `(m|m)` with `β(e_i, f_i) = 1` and `β(f_i, e_i) = -1`.
pub fn periplectic_gram(m: usize) -> Vec<Vec<Scalar>> {
    let mut g = vec![vec![Scalar::ZERO; 2 * m]; 2 * m];
    for i in 0..m {
        g[i][m + i] = Scalar::ONE;
        g[m + i][i] = -Scalar::ONE;
    }
    g
}

/// Linear conditions `β(Xu, v) + (-1)^{|X||u|} β(u, Xv) = 0` on
/// `X ∈ gl(m,n;Q)` for all basis vectors `u, v`.
pub fn stabilizer_equations(layout: &MatrixLayout, gram: &[Vec<Scalar>]) -> Vec<SparseVec> {
    assert_eq!(layout.coeff().dim(), 1);
    let size = layout.size();
    let mut rows = Vec::new();
    for u in 0..size {
        for v in 0..size {
            let mut entries = Vec::new();
            for i in 0..size {
                // X e_u has coefficient x_iu on e_i.
                if !gram[i][v].is_zero() {
                    entries.push((layout.entry(i, u, 0), gram[i][v].clone()));
                }
                if !gram[u][i].is_zero() {
                    let s = layout.parity(i, v, 0).sign(layout.index_parity(u));
                    entries.push((layout.entry(i, v, 0), &s * &gram[u][i]));
                }
            }
            let row = SparseVec::from_entries(entries);
            if !row.is_zero() {
                rows.push(row);
            }
        }
    }
    rows
}

/// `x1 = x4`, `x2 = x3`, `tr x2 = 0` on `gl(m,m;Q)`.
fn sq_equations(layout: &MatrixLayout) -> Vec<SparseVec> {
    let m = layout.m();
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            rows.push(SparseVec::from_entries(vec![
                (layout.entry(i, j, 0), Scalar::ONE),
                (layout.entry(m + i, m + j, 0), -Scalar::ONE),
            ]));
            rows.push(SparseVec::from_entries(vec![
                (layout.entry(i, m + j, 0), Scalar::ONE),
                (layout.entry(m + i, j, 0), -Scalar::ONE),
            ]));
        }
    }
    rows.push(SparseVec::from_entries((0..m).map(|i| (layout.entry(i, m + i, 0), Scalar::ONE)).collect()));
    rows
}

/// `X ⊗ a` for each scalar matrix `X` and basis element `a`.
fn tensor_with_coefficients(
    layout: &MatrixLayout,
    scalar: &MatrixLayout,
    matrices: Vec<SparseVec>,
    prefix: &str,
) -> (Vec<SparseVec>, Vec<String>) {
    let a = layout.coeff();
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    for (k, x) in matrices.iter().enumerate() {
        for e in 0..a.dim() {
            vectors.push(x.remap(|idx| {
                let (i, j, _) = scalar.decode(idx);
                Some(layout.entry(i, j, e))
            }));
            labels.push(if a.dim() == 1 {
                format!("{prefix}{}", k + 1)
            } else {
                format!("{prefix}{}({})", k + 1, a.basis().label(e))
            });
        }
    }
    (vectors, labels)
}

/// `sq(m)` modulo its centre, with the quotient map.
pub fn psq(m: usize) -> Result<(LieSuperalgebra, GradedLinearMap)> {
    let sq = family(FamilyKind::Sq, m, m, &coeff::rationals())?;
    let z = crate::superalg::centre(sq.algebra());
    crate::superalg::quotient_by_central(sq.algebra(), &z)
}

/// Corner embedding `sl(m,n;A) -> sl(m',n';A)` sending even index `i` to `i`
/// and odd index `m + k` to `m' + k`.
pub fn corner_embedding(small: &MatrixFamily, big: &MatrixFamily) -> Result<GradedLinearMap> {
    let (s, b) = (small.layout(), big.layout());
    if s.m() > b.m() || s.n() > b.n() || s.coeff().dim() != b.coeff().dim() {
        return Err(Error::Precondition(format!(
            "no corner embedding ({},{}) -> ({},{})",
            s.m(),
            s.n(),
            b.m(),
            b.n()
        )));
    }
    let shift = |i: usize| if i < s.m() { i } else { i - s.m() + b.m() };
    let cols = small
        .embedding()
        .columns()
        .iter()
        .map(|x| {
            let g = x.remap(|k| {
                let (i, j, a) = s.decode(k);
                Some(b.entry(shift(i), shift(j), a))
            });
            big.from_gl(&g).ok_or_else(|| Error::Precondition("corner image leaves the target family".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    GradedLinearMap::between(small.algebra(), big.algebra(), cols)
}

#[cfg(test)]
mod tests {
    use super::coeff::*;
    use super::*;
    use crate::superalg::{derived_subalgebra, lie_from_assoc};

    fn dims(kind: FamilyKind, m: usize, n: usize, a: &AssocSuperalgebra) -> (usize, usize) {
        let f = family(kind, m, n, a).unwrap();
        (f.algebra().basis().count(Parity::Even), f.algebra().basis().count(Parity::Odd))
    }

    #[test]
    fn dimensions() {
        let q = rationals();
        assert_eq!(family(FamilyKind::Gl, 3, 2, &q).unwrap().dim(), 25);
        assert_eq!(family(FamilyKind::Sl, 3, 2, &q).unwrap().dim(), 24);
        assert_eq!(family(FamilyKind::Sl, 3, 2, &grassmann(1)).unwrap().dim(), 48);
        assert_eq!(family(FamilyKind::Sl, 5, 0, &dual_plane()).unwrap().dim(), 72);
        assert_eq!(dims(FamilyKind::Osp, 1, 2, &q), (3, 2));
        assert_eq!(family(FamilyKind::Sq, 2, 2, &q).unwrap().dim(), 7);
    }

    #[test]
    fn classical_dimension_formulas() {
        let q = rationals();
        // osp(m,2k): so(m) + sp(2k) even, m * 2k odd
        for (m, n) in [(1usize, 2usize), (2, 2), (3, 2), (1, 4), (4, 0), (0, 4)] {
            let h = n / 2;
            let even = m * m.saturating_sub(1) / 2 + h * (2 * h + 1);
            assert_eq!(dims(FamilyKind::Osp, m, n, &q), (even, m * n), "osp({m},{n})");
        }
        for m in 1..=3 {
            let p = family(FamilyKind::P, m, m, &q).unwrap();
            assert_eq!(p.dim(), 2 * m * m - 1, "p({m})");
            assert_eq!(dims(FamilyKind::Sq, m, m, &q), (m * m, m * m - 1));
        }
    }

    #[test]
    fn invariant_violations_are_rejected() {
        let q = rationals();
        assert!(family(FamilyKind::Osp, 2, 1, &q).is_err());
        assert!(family(FamilyKind::Osp, 2, 2, &grassmann(1)).is_err());
        assert!(family(FamilyKind::P, 2, 1, &q).is_err());
        assert!(family(FamilyKind::Sq, 2, 2, &dual_plane()).is_err());
    }

    #[test]
    fn supertrace_examples() {
        let l = MatrixLayout::new(2, 1, rationals());
        assert_eq!(l.supertrace(&SparseVec::unit(l.entry(0, 0, 0))), SparseVec::unit(0));
        assert_eq!(l.supertrace(&SparseVec::unit(l.entry(2, 2, 0))), SparseVec::single(0, -Scalar::ONE));
    }

    #[test]
    fn supertrace_kills_brackets_over_supercommutative_coefficients() {
        for a in [truncated_polynomials(3), grassmann(2), dual_plane()] {
            let l = MatrixLayout::new(2, 2, a);
            let gl = gl_algebra(&l).unwrap();
            for x in 0..l.dim() {
                for y in 0..l.dim() {
                    assert!(l.supertrace(gl.bracket_basis(x, y)).is_zero());
                }
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let l = MatrixLayout::new(4, 0, rationals());
        let h = SparseVec::from_entries(vec![(l.entry(0, 0, 0), Scalar::ONE), (l.entry(1, 1, 0), -Scalar::ONE)]);
        assert_eq!(bracket_eij(&l, 0, 1, 0, 1, 0, 0), h);
        assert!(bracket_eij(&l, 0, 1, 0, 2, 3, 0).is_zero());
        // Odd-odd: [E_13, E_31] with index 3 odd gives E_11 + E_33.
        let l = MatrixLayout::new(2, 1, rationals());
        let expected = SparseVec::from_entries(vec![(l.entry(0, 0, 0), Scalar::ONE), (l.entry(2, 2, 0), Scalar::ONE)]);
        assert_eq!(bracket_eij(&l, 0, 2, 0, 2, 0, 0), expected);
    }

    #[test]
    fn gl_matches_commutator_of_matrix_algebra() {
        for (m, n, a) in [(1, 1, grassmann(1)), (2, 1, rationals()), (1, 1, matrix_algebra_2())] {
            let l = MatrixLayout::new(m, n, a);
            let via_assoc = lie_from_assoc(&mat_algebra(&l).unwrap()).unwrap();
            assert_eq!(via_assoc.table(), gl_algebra(&l).unwrap().table());
        }
    }

    #[test]
    fn sl_is_derived_subalgebra_of_gl() {
        for (m, n, a) in [
            (3, 0, rationals()),
            (2, 1, rationals()),
            (2, 1, grassmann(1)),
            (1, 2, grassmann(2)),
            (3, 0, matrix_algebra_2()),
            (2, 1, truncated_polynomials(2)),
        ] {
            let gl = family(FamilyKind::Gl, m, n, &a).unwrap();
            let sl = family(FamilyKind::Sl, m, n, &a).unwrap();
            let (derived, _) = derived_subalgebra(gl.algebra());
            let image = sl.image();
            assert!(image.contains_subspace(&derived) && derived.contains_subspace(&image), "({m},{n})");
            assert!(derived_subalgebra(sl.algebra()).1);
        }
    }

    #[test]
    fn osp_sits_inside_sl() {
        for (m, n, a) in [(1, 2, rationals()), (3, 2, rationals()), (2, 2, truncated_polynomials(2))] {
            let osp = family(FamilyKind::Osp, m, n, &a).unwrap();
            let sl = family(FamilyKind::Sl, m, n, &a).unwrap();
            assert!(sl.image().contains_subspace(&osp.image()));
        }
    }

    #[test]
    fn psq_removes_scalars() {
        let (alg, _) = psq(2).unwrap();
        assert_eq!(alg.dim(), 6);
    }

    #[test]
    fn corner_embedding_is_a_morphism() {
        let a = grassmann(1);
        let small = family(FamilyKind::Sl, 2, 1, &a).unwrap();
        let big = family(FamilyKind::Sl, 3, 2, &a).unwrap();
        let f = corner_embedding(&small, &big).unwrap();
        assert!(crate::superalg::check_morphism(&f, small.algebra(), big.algebra()).unwrap());
        assert!(f.is_injective());
    }
}
