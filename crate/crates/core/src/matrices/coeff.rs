//! Builtin coefficient superalgebras addressable by name.

use crate::exactla::{Scalar, SparseVec};
use crate::superalg::{AssocSuperalgebra, GradedBasis, Parity};
use crate::{Error, Result};

/// Names accepted by [`coefficient_by_name`], in the form shown by `--help`.
pub const BUILTIN_COEFFICIENTS: &[&str] = &[
    "Q",
    "Q[t]/(t^N) for 2 <= N <= 6",
    "Q[x,y]/(x,y)^2",
    "Grassmann(r) for 1 <= r <= 3",
    "Mat(2,0;Q)",
];

pub fn rationals() -> AssocSuperalgebra {
    let basis = GradedBasis::new(vec![("1".into(), Parity::Even)]).unwrap();
    AssocSuperalgebra::new(basis, vec![SparseVec::unit(0)], SparseVec::unit(0)).unwrap()
}

/// `Q[t]/(t^n)` with basis `1, t, ..., t^{n-1}`.
pub fn truncated_polynomials(n: usize) -> AssocSuperalgebra {
    assert!(n >= 1);
    let labels = (0..n).map(|k| match k {
        0 => "1".to_string(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    });
    let basis = GradedBasis::new(labels.map(|l| (l, Parity::Even)).collect()).unwrap();
    AssocSuperalgebra::from_fn(basis, SparseVec::unit(0), |i, j| {
        if i + j < n {
            SparseVec::unit(i + j)
        } else {
            SparseVec::new()
        }
    })
    .unwrap()
}

/// `Q[x,y]/(x,y)^2` with basis `1, x, y`.
pub fn dual_plane() -> AssocSuperalgebra {
    let basis = GradedBasis::new(vec![
        ("1".into(), Parity::Even),
        ("x".into(), Parity::Even),
        ("y".into(), Parity::Even),
    ])
    .unwrap();
    AssocSuperalgebra::from_fn(basis, SparseVec::unit(0), |i, j| match (i, j) {
        (0, k) | (k, 0) => SparseVec::unit(k),
        _ => SparseVec::new(),
    })
    .unwrap()
}

/// The Grassmann algebra on `r` odd generators; basis vector `k` is the
/// monomial whose generators are the set bits of `k`, in increasing order.
pub fn grassmann(r: usize) -> AssocSuperalgebra {
    let n = 1usize << r;
    let label = |mask: usize| {
        if mask == 0 {
            return "1".to_string();
        }
        if r == 1 {
            return "xi".to_string();
        }
        (0..r).filter(|b| mask & (1 << b) != 0).map(|b| format!("xi{}", b + 1)).collect::<String>()
    };
    let basis = GradedBasis::new(
        (0..n).map(|m| (label(m), Parity::from_bit(m.count_ones() % 2 == 1))).collect(),
    )
    .unwrap();
    AssocSuperalgebra::from_fn(basis, SparseVec::unit(0), |s, t| {
        if s & t != 0 {
            return SparseVec::new();
        }
        // Moving each generator of t left past the larger generators of s.
        let swaps: u32 = (0..r)
            .filter(|b| t & (1 << b) != 0)
            .map(|b| (s >> (b + 1)).count_ones())
            .sum();
        SparseVec::single(s | t, Scalar::sign(swaps % 2 == 1))
    })
    .unwrap()
}

/// `Mat(2,0;Q)` with basis `E11, E12, E21, E22`.
pub fn matrix_algebra_2() -> AssocSuperalgebra {
    let basis = GradedBasis::new(
        ["E11", "E12", "E21", "E22"].iter().map(|l| (l.to_string(), Parity::Even)).collect(),
    )
    .unwrap();
    let idx = |i: usize, j: usize| 2 * i + j;
    AssocSuperalgebra::from_fn(basis, SparseVec::from_ints(&[1, 0, 0, 1]), |a, b| {
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        if j == k {
            SparseVec::unit(idx(i, l))
        } else {
            SparseVec::new()
        }
    })
    .unwrap()
}

/// Resolves a builtin coefficient algebra; whitespace is ignored and unknown
/// names are rejected.
pub fn coefficient_by_name(name: &str) -> Result<AssocSuperalgebra> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::Precondition(format!(
        "unknown coefficient algebra `{name}`; expected one of: {}",
        BUILTIN_COEFFICIENTS.join(", ")
    ));
    match key.as_str() {
        "Q" => return Ok(rationals()),
        "Q[x,y]/(x,y)^2" => return Ok(dual_plane()),
        "Mat(2,0;Q)" => return Ok(matrix_algebra_2()),
        _ => {}
    }
    if let Some(rest) = key.strip_prefix("Q[t]/(t^").and_then(|r| r.strip_suffix(')')) {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if (2..=6).contains(&n) {
            return Ok(truncated_polynomials(n));
        }
    }
    if let Some(rest) = key.strip_prefix("Grassmann(").and_then(|r| r.strip_suffix(')')) {
        let r: usize = rest.parse().map_err(|_| unknown())?;
        if (1..=3).contains(&r) {
            return Ok(grassmann(r));
        }
    }
    Err(unknown())
}

/// Canonical spelling of every accepted name, used for enumeration in tests.
pub fn all_builtin_names() -> Vec<String> {
    let mut out = vec!["Q".to_string()];
    out.extend((2..=6).map(|n| format!("Q[t]/(t^{n})")));
    out.push("Q[x,y]/(x,y)^2".into());
    out.extend((1..=3).map(|r| format!("Grassmann({r})")));
    out.push("Mat(2,0;Q)".into());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_resolves() {
        for name in all_builtin_names() {
            let a = coefficient_by_name(&name).unwrap();
            assert!(a.dim() >= 1, "{name}");
        }
        assert!(coefficient_by_name("Q[t]/(t^7)").is_err());
        assert!(coefficient_by_name("Grassmann(4)").is_err());
        assert!(coefficient_by_name("R").is_err());
        assert_eq!(coefficient_by_name(" Q [t]/(t^3) ").unwrap().dim(), 3);
    }

    #[test]
    fn grassmann_signs() {
        let g = grassmann(2);
        // xi2 * xi1 = -xi1 xi2
        assert_eq!(g.product_basis(2, 1), &SparseVec::single(3, -Scalar::ONE));
        assert_eq!(g.product_basis(1, 2), &SparseVec::unit(3));
        assert!(g.is_supercommutative());
        assert!(grassmann(3).is_supercommutative());
    }

    #[test]
    fn matrix_algebra_is_not_commutative() {
        assert!(!matrix_algebra_2().is_supercommutative());
    }
}
