// Reading and writing the JSON algebra and system formats.

use uce_core::cli::format::{parse_algebra_str, AlgebraFile, ParsedAlgebra, SystemFile};
use uce_core::limits::sl_chain;
use uce_core::matrices::coeff;

const DUAL_NUMBERS: &str = r#"{
  "kind": "assoc",
  "basis": [{"name": "1", "parity": "even"}, {"name": "t", "parity": "even"}],
  "products": [
    {"left": "1", "right": "1", "result": [{"basis": "1", "num": "1", "den": "1"}]},
    {"left": "1", "right": "t", "result": [{"basis": "t", "num": "1", "den": "1"}]},
    {"left": "t", "right": "1", "result": [{"basis": "t", "num": "1", "den": "1"}]}
  ],
  "unit": [{"basis": "1", "num": "1", "den": "1"}]
}"#;

pub fn run() {
    match parse_algebra_str(DUAL_NUMBERS).unwrap() {
        ParsedAlgebra::Assoc(a) => println!("parsed associative algebra of dim {}", a.dim()),
        ParsedAlgebra::Lie(_) => unreachable!(),
    }
    let err = parse_algebra_str("{\"kind\": \"lie\", \"basis\": [").unwrap_err();
    println!("truncated file: {err}");

    let g = coeff::grassmann(1);
    let text = serde_json::to_string(&AlgebraFile::from_assoc(&g)).unwrap();
    println!("Grassmann(1) as JSON: {text}");

    let (s, _) = sl_chain(&coeff::rationals(), 2..=3, 0).unwrap();
    let file = SystemFile::from_system(&s);
    let back = file.to_system("chain.json").unwrap();
    println!("system with {} algebras and {} maps round-trips: {}", file.algebras.len(), file.maps.len(), back.len() == s.len());
}

#[allow(dead_code)]
fn main() {
    run();
}
