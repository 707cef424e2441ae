// gl, sl, osp, p and sq over coefficient algebras.

use uce_core::matrices::{coeff, family, psq, FamilyKind};
use uce_core::superalg::{derived_subalgebra, Parity};

pub fn run() {
    let qq = coeff::rationals();
    let rows = [
        (FamilyKind::Gl, 2, 1, coeff::rationals()),
        (FamilyKind::Sl, 2, 1, coeff::rationals()),
        (FamilyKind::Sl, 2, 1, coeff::grassmann(1)),
        (FamilyKind::Sl, 3, 0, coeff::truncated_polynomials(3)),
        (FamilyKind::Osp, 3, 2, coeff::rationals()),
        (FamilyKind::P, 3, 3, coeff::rationals()),
        (FamilyKind::Sq, 3, 3, coeff::rationals()),
    ];
    for (kind, m, n, a) in rows {
        let f = family(kind, m, n, &a).unwrap();
        let l = f.algebra();
        println!(
            "{kind}({m}|{n}) over dim-{} A: dim {} = {}|{}, perfect {}",
            a.dim(),
            l.dim(),
            l.basis().count(Parity::Even),
            l.basis().count(Parity::Odd),
            derived_subalgebra(l).1
        );
    }
    let (l, _) = psq(3).unwrap();
    println!("psq(3): dim {}, perfect {}", l.dim(), derived_subalgebra(&l).1);

    let sl = family(FamilyKind::Sl, 2, 0, &qq).unwrap();
    let e12 = sl.e(0, 1, &qq.unit().clone());
    println!("E12 in sl(2) coordinates: {:?}", e12.unwrap().to_dense(sl.dim()));
    assert!(family(FamilyKind::Osp, 2, 3, &qq).is_err());
}

#[allow(dead_code)]
fn main() {
    run();
}
