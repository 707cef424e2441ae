// uce(L), the map u and H2(L) for a few small algebras.

use uce_core::matrices::{coeff, family, FamilyKind};
use uce_core::superalg::centre;
use uce_core::uce::{build_uce, is_centrally_closed};

pub fn run() {
    let cases = [
        (FamilyKind::Sl, 2, 0, "Q"),
        (FamilyKind::Sl, 3, 0, "Q[t]/(t^2)"),
        (FamilyKind::Sl, 2, 1, "Grassmann(1)"),
        (FamilyKind::Sl, 3, 0, "Q[x,y]/(x,y)^2"),
        (FamilyKind::Osp, 1, 2, "Q"),
    ];
    for (kind, m, n, name) in cases {
        let a = coeff::coefficient_by_name(name).unwrap();
        let l = family(kind, m, n, &a).unwrap().algebra().clone();
        let u = build_uce(&l).unwrap();
        let h2 = u.h2();
        assert!(centre(u.algebra()).contains_subspace(&h2));
        println!(
            "{kind}({m}|{n}; {name}): dim {}, dim uce {}, dim H2 {}, centrally closed {}",
            l.dim(),
            u.dim(),
            h2.dim(),
            is_centrally_closed(&l).unwrap()
        );
        for v in h2.basis() {
            let terms: Vec<String> = v.iter().map(|(q, c)| {
                let (i, j) = u.basis_pair(q);
                format!("{c}<{},{}>", l.basis().label(i), l.basis().label(j))
            }).collect();
            println!("  H2 generator: {}", terms.join(" + "));
        }
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
