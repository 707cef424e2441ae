// Colimits of directed systems and the comparison between uce and colim.

use uce_core::limits::{colimit, limit_u, sl_chain, theorem_verify};
use uce_core::matrices::coeff;

pub fn run() {
    let (s, fams) = sl_chain(&coeff::truncated_polynomials(2), 3..=5, 0).unwrap();
    let c = colimit(&s).unwrap();
    println!("chain dims {:?}, colimit dim {}", fams.iter().map(|f| f.dim()).collect::<Vec<_>>(), c.dim());

    let report = theorem_verify(&s).unwrap();
    println!(
        "uce dims {:?}, H2 dims {:?}, phi bijective {}, psi phi = id {}, phi psi = id {}",
        report.uce_dims, report.h2_dims, report.phi_bijective, report.psi_phi_identity, report.phi_psi_identity
    );

    let (s, _) = sl_chain(&coeff::dual_plane(), 3..=4, 0).unwrap();
    let lu = limit_u(&s).unwrap();
    println!(
        "over Q[x,y]/(x,y)^2: kernel of colim u has dim {}, central {}, surjective {}",
        lu.kernel.dim(),
        lu.kernel_central,
        lu.surjective
    );
}

#[allow(dead_code)]
fn main() {
    run();
}
