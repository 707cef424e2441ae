// Central extensions from explicit 2-cocycles: a Heisenberg algebra and the
// cyclic cocycle on sl(m|n; A).

use uce_core::cyclic::cyclic_pairs;
use uce_core::exactla::{Scalar, SparseVec};
use uce_core::matrices::{coeff, family, tau_cocycle, FamilyKind};
use uce_core::superalg::{GradedBasis, LieSuperalgebra};
use uce_core::uce::{extension_from_cocycle, validate_cocycle, Cocycle2};

pub fn run() {
    let plane = LieSuperalgebra::abelian(GradedBasis::even(2));
    let mut tau = Cocycle2::zero(&plane, GradedBasis::even(1));
    tau.values[1] = SparseVec::unit(0);
    tau.values[2] = SparseVec::single(0, -Scalar::ONE);
    let ext = extension_from_cocycle(&plane, &tau).unwrap();
    println!("Heisenberg: dim {}, kernel dim {}", ext.total.dim(), ext.kernel.dim());

    let mut bad = tau.clone();
    bad.values[2] = SparseVec::unit(0);
    let report = validate_cocycle(&bad, &plane).unwrap();
    println!("symmetric form rejected: {} violation(s)", report.violations.len());

    let a = coeff::dual_plane();
    let f = family(FamilyKind::Sl, 3, 0, &a).unwrap();
    let cp = cyclic_pairs(&a).unwrap();
    let t = tau_cocycle(&f, &cp).unwrap();
    let ext = extension_from_cocycle(f.algebra(), &t).unwrap();
    println!("sl(3; Q[x,y]/(x,y)^2) extended by <<A,A>>: dim {} -> {}", f.dim(), ext.total.dim());
}

#[allow(dead_code)]
fn main() {
    run();
}
