// Exact rational elimination: rref, kernels and quotient presentations.

use uce_core::exactla::{kernel_basis, quotient_space, rref, Scalar, SparseMatrix, SparseVec};

pub fn run() {
    let m = SparseMatrix::from_dense_ints(&[&[2, 4, -2, 0], &[1, 2, 0, 3], &[3, 6, -2, 3]]);
    let (r, pivots, rank) = rref(&m);
    println!("rank {rank}, pivots {pivots:?}");
    for row in r.to_dense() {
        println!("  {}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("  "));
    }

    let kernel = kernel_basis(&m);
    for v in &kernel {
        assert!(m.mul_vec(v).is_zero());
    }
    println!("kernel dimension {}", kernel.len());

    // R^4 modulo the row space.
    let q = quotient_space(4, m.rows());
    let v = SparseVec::from_dense(&[Scalar::new(1, 2), Scalar::from_int(1), Scalar::ZERO, Scalar::new(-1, 3)]);
    let class = q.project(&v);
    println!("quotient dimension {}, basis columns {:?}", q.dim(), q.basis_columns());
    println!("class of v: {:?}, canonical lift {:?}", class.to_dense(q.dim()), q.lift(&class).to_dense(4));
    assert_eq!(q.project(&q.lift(&class)), class);
}

#[allow(dead_code)]
fn main() {
    run();
}
