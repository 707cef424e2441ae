#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use uce_core::exactla::{Scalar, SparseVec};
use uce_core::limits::DirectedSystem;
use uce_core::matrices::{coeff, family, FamilyKind};
use uce_core::superalg::{AssocSuperalgebra, GradedBasis, GradedLinearMap, LieSuperalgebra, Parity};

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn to_big(s: &Scalar) -> BigRational {
    s.to_big()
}

/// `dim HC₁(A)` from Connes' complex `C^λ_n = A^{⊗(n+1)} / (1 - t)` in
/// degrees 0..2, computed with dense rational arithmetic.
pub fn hc1_connes(a: &AssocSuperalgebra) -> usize {
    let d = a.dim();
    let p = |i: usize| a.basis().parity(i).is_odd() as i64;
    let sign = |e: i64| if e % 2 == 0 { q(1) } else { q(-1) };
    let prod = |i: usize, j: usize| -> Vec<(usize, BigRational)> {
        a.product_basis(i, j).iter().map(|(k, c)| (k, to_big(c))).collect()
    };
    // (1 - t) on A⊗A, t(a⊗b) = -(-1)^{|a||b|} b⊗a.
    let mut w1 = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut row = vec![q(0); d * d];
            row[i * d + j] += q(1);
            row[j * d + i] += sign(p(i) * p(j));
            w1.push(row);
        }
    }
    // b(a⊗b) = ab - (-1)^{|a||b|} ba.
    let mut b1 = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut row = vec![q(0); d];
            for (k, c) in prod(i, j) {
                row[k] += c;
            }
            for (k, c) in prod(j, i) {
                row[k] -= sign(p(i) * p(j)) * c;
            }
            b1.push(row);
        }
    }
    for w in &w1 {
        let mut img = vec![q(0); d];
        for (idx, c) in w.iter().enumerate() {
            for (k, v) in b1[idx].iter().enumerate() {
                img[k] += c * v;
            }
        }
        assert!(img.iter().all(Zero::is_zero), "b does not descend to coinvariants");
    }
    // b(a⊗b⊗c) = ab⊗c - a⊗bc + (-1)^{|c|(|a|+|b|)} ca⊗b.
    let mut span = w1.clone();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut row = vec![q(0); d * d];
                for (x, c) in prod(i, j) {
                    row[x * d + k] += c;
                }
                for (x, c) in prod(j, k) {
                    row[i * d + x] -= c;
                }
                for (x, c) in prod(k, i) {
                    row[x * d + j] += sign(p(k) * (p(i) + p(j))) * c;
                }
                span.push(row);
            }
        }
    }
    let rank_b1 = dense_rank(b1);
    d * d - rank_b1 - dense_rank(span)
}

/// Lie algebras used as building blocks for random systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    Sl2,
    Osp12,
    Sl3,
    EvenLine,
    OddLine,
    Heisenberg,
    Gl2,
}

impl Piece {
    pub const ALL: [Piece; 7] =
        [Piece::Sl2, Piece::Osp12, Piece::Sl3, Piece::EvenLine, Piece::OddLine, Piece::Heisenberg, Piece::Gl2];

    pub fn algebra(self) -> LieSuperalgebra {
        let qq = coeff::rationals();
        match self {
            Piece::Sl2 => family(FamilyKind::Sl, 2, 0, &qq).unwrap().algebra().clone(),
            Piece::Osp12 => family(FamilyKind::Osp, 1, 2, &qq).unwrap().algebra().clone(),
            Piece::Sl3 => family(FamilyKind::Sl, 3, 0, &qq).unwrap().algebra().clone(),
            Piece::Gl2 => family(FamilyKind::Gl, 2, 0, &qq).unwrap().algebra().clone(),
            Piece::EvenLine => LieSuperalgebra::abelian(GradedBasis::new(vec![("a".into(), Parity::Even)]).unwrap()),
            Piece::OddLine => LieSuperalgebra::abelian(GradedBasis::new(vec![("b".into(), Parity::Odd)]).unwrap()),
            Piece::Heisenberg => {
                let basis = GradedBasis::new(vec![
                    ("x".into(), Parity::Even),
                    ("y".into(), Parity::Even),
                    ("z".into(), Parity::Even),
                ])
                .unwrap();
                LieSuperalgebra::from_fn(basis, |i, j| match (i, j) {
                    (0, 1) => SparseVec::unit(2),
                    (1, 0) => SparseVec::single(2, -Scalar::ONE),
                    _ => SparseVec::new(),
                })
                .unwrap()
            }
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Piece::EvenLine | Piece::OddLine => 1,
            Piece::Sl2 | Piece::Heisenberg => 3,
            Piece::Gl2 => 4,
            Piece::Osp12 => 5,
            Piece::Sl3 => 8,
        }
    }

    pub fn perfect(self) -> bool {
        matches!(self, Piece::Sl2 | Piece::Osp12 | Piece::Sl3)
    }
}

pub fn direct_sum(pieces: &[Piece]) -> LieSuperalgebra {
    let algs: Vec<LieSuperalgebra> = pieces.iter().map(|p| p.algebra()).collect();
    let refs: Vec<&LieSuperalgebra> = algs.iter().collect();
    LieSuperalgebra::direct_sum(&refs)
}

/// The map `⊕ source -> ⊕ target` sending summand `k` identically onto
/// summand `assign[k]` (same type), or to zero.
pub fn summand_map(source: &[Piece], target: &[Piece], assign: &[Option<usize>]) -> GradedLinearMap {
    let offsets = |ps: &[Piece]| {
        let mut o = vec![0];
        for p in ps {
            o.push(o.last().unwrap() + p.dim());
        }
        o
    };
    let to = offsets(target);
    let mut cols = Vec::new();
    for (k, p) in source.iter().enumerate() {
        for a in 0..p.dim() {
            cols.push(match assign[k] {
                Some(t) => {
                    assert_eq!(target[t], *p);
                    SparseVec::unit(to[t] + a)
                }
                None => SparseVec::new(),
            });
        }
    }
    let (s, t) = (direct_sum(source), direct_sum(target));
    GradedLinearMap::between(&s, &t, cols).unwrap()
}

/// A random tree-shaped system (every non-top index has one parent, the last
/// index is the top) whose members are direct sums of [`Piece`]s of total
/// dimension at most `max_dim`.
pub struct RandomSystem {
    pub system: DirectedSystem,
    pub pieces: Vec<Vec<Piece>>,
}

pub fn random_pieces(rng: &mut ChaCha8Rng, max_dim: usize, perfect_only: bool) -> Vec<Piece> {
    let mut out = Vec::new();
    let mut dim = 0;
    for _ in 0..rng.gen_range(1..=3) {
        let choices: Vec<Piece> = Piece::ALL
            .iter()
            .copied()
            .filter(|p| dim + p.dim() <= max_dim && (!perfect_only || p.perfect()))
            .collect();
        if let Some(p) = choices.choose(rng) {
            dim += p.dim();
            out.push(*p);
        }
    }
    out
}

fn dim_of(ps: &[Piece]) -> usize {
    ps.iter().map(|p| p.dim()).sum()
}

pub fn random_system(rng: &mut ChaCha8Rng, max_dim: usize, perfect_only: bool) -> RandomSystem {
    let n = rng.gen_range(2..=4);
    let parent: Vec<usize> = (0..n - 1).map(|i| rng.gen_range(i + 1..n)).collect();
    let mut pieces: Vec<Vec<Piece>> = vec![Vec::new(); n];
    let mut top = random_pieces(rng, max_dim, perfect_only);
    if top.is_empty() {
        top.push(Piece::Sl2);
    }
    pieces[n - 1] = top;
    let mut gens = Vec::new();
    let mut assignments = vec![Vec::new(); n];
    for i in (0..n - 1).rev() {
        let par = pieces[parent[i]].clone();
        let mut own = Vec::new();
        let mut assign = Vec::new();
        for (t, p) in par.iter().enumerate() {
            if rng.gen_bool(0.6) {
                own.push(*p);
                assign.push(Some(t));
            }
        }
        // Extra summands that die in the parent.
        let room = max_dim - dim_of(&own);
        for p in random_pieces(rng, room, perfect_only).into_iter().take(1) {
            own.push(p);
            assign.push(None);
        }
        if own.is_empty() {
            own.push(Piece::EvenLine);
            assign.push(None);
            if perfect_only {
                own[0] = Piece::Sl2;
            }
        }
        // Shuffle the summands together with their assignments.
        let mut order: Vec<usize> = (0..own.len()).collect();
        order.shuffle(rng);
        let own: Vec<Piece> = order.iter().map(|&k| own[k]).collect();
        let assign: Vec<Option<usize>> = order.iter().map(|&k| assign[k]).collect();
        pieces[i] = own;
        assignments[i] = assign;
    }
    for i in 0..n - 1 {
        gens.push(((i, parent[i]), summand_map(&pieces[i], &pieces[parent[i]], &assignments[i])));
    }
    let algebras = pieces.iter().map(|ps| direct_sum(ps)).collect();
    let system = DirectedSystem::generated(algebras, gens).unwrap();
    RandomSystem { system, pieces }
}

/// `x ↦ (x, x)` from each member into the doubled system.
pub fn diagonal(s: &DirectedSystem) -> Vec<GradedLinearMap> {
    (0..s.len())
        .map(|i| {
            let l = s.algebra(i);
            let d = l.dim();
            let cols = (0..d).map(|k| SparseVec::from_entries(vec![(k, Scalar::ONE), (d + k, Scalar::ONE)])).collect();
            let doubled = LieSuperalgebra::direct_sum(&[l, l]);
            GradedLinearMap::between(l, &doubled, cols).unwrap()
        })
        .collect()
}

/// Inclusion of the first summand and projection onto it.
pub fn first_summand(p: &DirectedSystem, q: &DirectedSystem) -> (Vec<GradedLinearMap>, Vec<GradedLinearMap>) {
    let mut inc = Vec::new();
    let mut proj = Vec::new();
    for i in 0..p.len() {
        let (a, b) = (p.algebra(i), q.algebra(i));
        let sum = LieSuperalgebra::direct_sum(&[a, b]);
        inc.push(GradedLinearMap::between(a, &sum, (0..a.dim()).map(SparseVec::unit).collect()).unwrap());
        let cols = (0..sum.dim()).map(|k| if k < a.dim() { SparseVec::unit(k) } else { SparseVec::new() }).collect();
        proj.push(GradedLinearMap::between(&sum, a, cols).unwrap());
    }
    (inc, proj)
}

