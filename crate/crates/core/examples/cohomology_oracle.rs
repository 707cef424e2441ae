// Cross-checking H2 against the dimension of H^2 computed from cocycles.

use uce_core::matrices::{coeff, family, psq, FamilyKind};
use uce_core::superalg::LieSuperalgebra;
use uce_core::uce::{h2, h2_cohomology_oracle};

pub fn run() {
    let mut cases: Vec<(String, LieSuperalgebra)> = Vec::new();
    for (kind, m, n, name) in [
        (FamilyKind::Sl, 3, 0, "Q"),
        (FamilyKind::Sl, 2, 1, "Grassmann(1)"),
        (FamilyKind::Sl, 3, 0, "Q[x,y]/(x,y)^2"),
        (FamilyKind::Osp, 3, 2, "Q"),
    ] {
        let a = coeff::coefficient_by_name(name).unwrap();
        cases.push((format!("{kind}({m}|{n}; {name})"), family(kind, m, n, &a).unwrap().algebra().clone()));
    }
    cases.push(("psq(3)".into(), psq(3).unwrap().0));
    for (name, l) in cases {
        let (_, h) = h2(&l).unwrap();
        let oracle = h2_cohomology_oracle(&l);
        println!("{name}: H2 {}, oracle {oracle}{}", h.dim(), if h.dim() == oracle { "" } else { "  MISMATCH" });
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
