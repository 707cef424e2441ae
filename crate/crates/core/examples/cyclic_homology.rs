// HC1(A) for the builtin coefficient algebras.

use uce_core::cyclic::hc1;
use uce_core::matrices::coeff;

pub fn run() {
    for name in coeff::all_builtin_names() {
        let a = coeff::coefficient_by_name(&name).unwrap();
        let (pairs, h) = hc1(&a).unwrap();
        println!(
            "{name}: dim A {}, dim <<A,A>> {}, dim HC1 {}, supercommutative {}",
            a.dim(),
            pairs.dim(),
            h.dim(),
            a.is_supercommutative()
        );
    }
}

#[allow(dead_code)]
fn main() {
    run();
}
