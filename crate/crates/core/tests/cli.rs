use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};
use uce_core::cli::execute_args;
use uce_core::cli::format::SystemFile;
use uce_core::cli::report::Report;
use uce_core::limits::DirectedSystem;
use uce_core::matrices::{coeff, corner_embedding, family, FamilyKind};

fn run(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = execute_args(std::iter::once("uce").chain(args.iter().copied()));
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\nstdout: {out}\nstderr: {err}"));
    (code, v)
}

fn results(args: &[&str]) -> Value {
    let (code, v) = run(args);
    assert_eq!(code, 0, "{args:?}: {v}");
    v["results"].clone()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn h2_of_sl5_over_rationals() {
    let r = results(&["h2", "--family", "sl", "--m", "5", "--n", "0", "--coeff", "Q"]);
    assert_eq!(r["dim_h2"], 0);
    assert_eq!(r["dim"], 24);
}

#[test]
fn hc1_of_square_zero_plane() {
    let r = results(&["hc1", "--coeff", "Q[x,y]/(x,y)^2"]);
    assert_eq!(r["dim_hc1"], 1);
}

#[test]
fn limit_check_on_sl_chain() {
    let r = results(&["limit-check", "--family", "sl", "--coeff", "Q[t]/(t^2)", "--chain", "5..7"]);
    assert_eq!(r["phi_bijective"], true);
    assert_eq!(r["h2_dims"], json!([0, 0, 0]));
    assert_eq!(r["passed"], true);
}

#[test]
fn remaining_subcommands_report() {
    let r = results(&["uce", "--family", "sl", "--m", "3", "--n", "2", "--coeff", "Grassmann(1)"]);
    assert_eq!(r["dim_h2"], 1);
    assert_eq!(r["dim_uce"].as_u64().unwrap(), r["dim"].as_u64().unwrap() + 1);
    let r = results(&["centre", "--family", "gl", "--m", "2", "--n", "0", "--coeff", "Q"]);
    assert_eq!(r["dim_centre"], 1);
    let r = results(&["perfect", "--family", "osp", "--m", "1", "--n", "2", "--coeff", "Q"]);
    assert_eq!(r["perfect"], true);
    let r = results(&["validate", "--family", "p", "--m", "2", "--coeff", "Q"]);
    assert_eq!(r["valid"], true);
    let r = results(&["validate", "--coeff", "Grassmann(2)"]);
    assert_eq!(r["valid"], true);
    let r = results(&["cocycle-check", "--family", "sl", "--m", "3", "--n", "1", "--coeff", "Grassmann(1)"]);
    assert_eq!(r["valid"], true);
    let r = results(&["steinberg-check", "--family", "sl", "--m", "3", "--n", "0", "--coeff", "Q[t]/(t^2)"]);
    assert_eq!(r["passed"], true);
    let r = results(&["h-iso-check", "--family", "sl", "--m", "3", "--n", "2", "--coeff", "Q[x,y]/(x,y)^2"]);
    assert_eq!(r["passed"], true);
    assert_eq!(r["dim_h2"], 1);
    let r = results(&["construct", "--family", "sq", "--m", "2", "--coeff", "Q"]);
    assert_eq!(r["dim"], 7);
    let r = results(&["construct", "--family", "psq", "--m", "2", "--coeff", "Q"]);
    assert_eq!(r["dim"], 6);
}

#[test]
fn every_builtin_coefficient_validates() {
    for name in coeff::all_builtin_names() {
        let r = results(&["validate", "--coeff", &name]);
        assert_eq!(r["valid"], true, "{name}");
    }
}

#[test]
fn json_reports_are_deterministic_and_round_trip() {
    let args = ["uce", "--family", "sl", "--m", "2", "--n", "1", "--coeff", "Q"];
    let argv = || std::iter::once("uce").chain(args.iter().copied());
    let (_, a, _) = execute_args(argv());
    let (_, b, _) = execute_args(argv());
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&a), strip(&b));
    let keys: Vec<String> = serde_json::from_str::<Value>(&a).unwrap().as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "input_digest", "results", "timing"]);
    let report: Report = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), a.trim_end());
}

#[test]
fn text_format_is_readable() {
    let (code, out, _) = execute_args(["uce", "h2", "--family", "sl", "--m", "2", "--n", "0", "--coeff", "Q", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim_h2: 0"), "{out}");
}

#[test]
fn constructed_algebra_files_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let r = results(&["construct", "--family", "sl", "--m", "2", "--n", "1", "--coeff", "Q"]);
    let path = write(dir.path(), "sl21.json", &r["algebra"]);
    let from_file = results(&["uce", "--file", &path]);
    let builtin = results(&["uce", "--family", "sl", "--m", "2", "--n", "1", "--coeff", "Q"]);
    assert_eq!(from_file["dim_uce"], builtin["dim_uce"]);
    assert_eq!(from_file["dim_h2"], builtin["dim_h2"]);

    let r = results(&["construct", "--coeff", "Q[t]/(t^2)"]);
    let path = write(dir.path(), "dual.json", &r["algebra"]);
    let v = results(&["validate", "--file", &path]);
    assert_eq!((v["kind"].as_str(), v["dim"].as_u64()), (Some("assoc"), Some(2)));
    assert_eq!(results(&["hc1", "--file", &path])["dim_hc1"], 0);
}

#[test]
fn system_files_drive_limit_check() {
    let qq = coeff::rationals();
    let fams: Vec<_> = (2..=4).map(|k| family(FamilyKind::Sl, k, 0, &qq).unwrap()).collect();
    let steps = (0..2).map(|k| corner_embedding(&fams[k], &fams[k + 1]).unwrap()).collect();
    let s = DirectedSystem::chain(fams.iter().map(|f| f.algebra().clone()).collect(), steps).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "chain.json", &serde_json::to_value(SystemFile::from_system(&s)).unwrap());
    let r = results(&["limit-check", "--system", &path]);
    assert_eq!(r["dims"], json!([3, 8, 15]));
    assert_eq!(r["h2_dims"], json!([0, 0, 0]));
    assert_eq!(r["passed"], true);
}

#[test]
fn bad_files_are_rejected_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let dup = json!({"kind": "lie", "basis": [{"name": "x", "parity": "even"}, {"name": "x", "parity": "odd"}], "products": []});
    let path = write(dir.path(), "dup.json", &dup);
    let (code, out, err) = execute_args(["uce", "validate", "--file", path.as_str()]);
    assert_eq!(code, 2, "{out}");
    assert!(err.contains("duplicate"), "{err}");

    let path = dir.path().join("truncated.json");
    std::fs::write(&path, "{\n  \"kind\": \"lie\",\n  \"basis\": [\n").unwrap();
    let (code, _, err) = execute_args(["uce", "validate", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("truncated.json:"), "{err}");

    let term = |b: &str| json!([{"basis": b, "num": "1", "den": "1"}]);
    let broken = json!({
        "kind": "lie",
        "basis": [{"name": "x", "parity": "even"}, {"name": "y", "parity": "even"}, {"name": "z", "parity": "even"}],
        "products": [{"left": "x", "right": "y", "result": term("x")}, {"left": "x", "right": "z", "result": term("y")}],
    });
    let path = write(dir.path(), "jacobi.json", &broken);
    let (code, v) = run(&["validate", "--file", &path]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["valid"], false);
    assert!(v["results"]["violations"].to_string().contains("x"), "{v}");
}

#[test]
fn exit_codes() {
    let bin = env!("CARGO_BIN_EXE_uce");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["h2", "--family", "sl", "--m", "3", "--n", "0", "--coeff", "Q"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(serde_json::from_slice::<Value>(&ok.stdout).is_ok());
    assert_eq!(status(&["perfect", "--family", "gl", "--m", "2", "--n", "0", "--coeff", "Q"]).status.code(), Some(1));
    let bad = status(&["frobnicate"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Usage"));
    assert_eq!(status(&["h2", "--bogus-flag"]).status.code(), Some(2));
    assert_eq!(status(&["hc1", "--coeff", "Q[t]/(t^0)"]).status.code(), Some(2));
    assert_eq!(status(&["construct", "--family", "osp", "--m", "2", "--n", "3", "--coeff", "Q"]).status.code(), Some(2));
    let help = status(&["--help"]);
    assert!(String::from_utf8_lossy(&help.stdout).contains("Grassmann"));
}
