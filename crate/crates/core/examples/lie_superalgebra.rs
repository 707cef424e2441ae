// Building a Lie superalgebra from structure constants and inspecting it.

use uce_core::exactla::{Scalar, SparseVec};
use uce_core::superalg::{centre, derived_subalgebra, validate_lie, GradedBasis, LieSuperalgebra, Parity};

pub fn run() {
    // osp(1|2): h, e, f even; x, y odd.
    let basis = GradedBasis::new(vec![
        ("h".into(), Parity::Even),
        ("e".into(), Parity::Even),
        ("f".into(), Parity::Even),
        ("x".into(), Parity::Odd),
        ("y".into(), Parity::Odd),
    ])
    .unwrap();
    let s = |k: usize, c: i64| SparseVec::single(k, Scalar::from_int(c));
    let bracket = |i: usize, j: usize| -> SparseVec {
        match (i, j) {
            (0, 1) => s(1, 2),
            (0, 2) => s(2, -2),
            (1, 2) => s(0, 1),
            (0, 3) => s(3, 1),
            (0, 4) => s(4, -1),
            (1, 4) => s(3, -1),
            (2, 3) => s(4, -1),
            (3, 3) => s(1, 2),
            (4, 4) => s(2, -2),
            (3, 4) => s(0, 1),
            _ => SparseVec::new(),
        }
    };
    let parity = |k: usize| if k >= 3 { Parity::Odd } else { Parity::Even };
    let l = LieSuperalgebra::from_fn(basis.clone(), |i, j| {
        if i <= j {
            bracket(i, j)
        } else {
            bracket(j, i).scale(&-parity(i).sign(parity(j)))
        }
    })
    .unwrap();

    assert!(validate_lie(l.basis(), l.table()).is_ok());
    let (d, perfect) = derived_subalgebra(&l);
    println!("dim {} (even {}, odd {})", l.dim(), basis.count(Parity::Even), basis.count(Parity::Odd));
    println!("derived dim {}, perfect {perfect}, centre dim {}", d.dim(), centre(&l).dim());

    // A broken table is rejected with the offending triple.
    let broken = LieSuperalgebra::from_fn(GradedBasis::even(3), |i, j| match (i, j) {
        (0, 1) => SparseVec::unit(0),
        (1, 0) => SparseVec::single(0, -Scalar::ONE),
        (0, 2) => SparseVec::unit(1),
        (2, 0) => SparseVec::single(1, -Scalar::ONE),
        _ => SparseVec::new(),
    });
    println!("broken table: {}", broken.unwrap_err());
}

#[allow(dead_code)]
fn main() {
    run();
}
