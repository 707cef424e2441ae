// Steinberg relations inside uce(sl(m|n; A)) and the isomorphism with
// sl(m|n; A) extended by HC1(A).

use uce_core::matrices::{coeff, h_iso_check, steinberg_check, SlCase};

pub fn run() {
    for (m, n, name) in [(3, 0, "Q[t]/(t^2)"), (3, 2, "Q[x,y]/(x,y)^2"), (3, 2, "Grassmann(1)"), (5, 0, "Q")] {
        let a = coeff::coefficient_by_name(name).unwrap();
        let case = SlCase::new(m, n, &a).unwrap();
        let st = steinberg_check(&case).unwrap();
        println!(
            "sl({m}|{n}; {name}): dim uce {}, dim H2 {}, dim HC1 {}, steinberg {}",
            case.uce.dim(),
            case.uce.h2().dim(),
            case.cyclic.hc1().dim(),
            if st.passed() { "ok" } else { "FAILED" }
        );
        if m + n >= 5 {
            let r = h_iso_check(&case).unwrap();
            println!("  h: morphism {}, bijective {}, compatible with projections {}", r.morphism, r.bijective, r.commutes_with_projections);
        }
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
