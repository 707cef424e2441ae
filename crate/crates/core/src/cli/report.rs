use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::exactla::{Scalar, SparseVec};

/// One command's output. Everything except `timing` is a function of the
/// invocation and its input files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandEcho,
    pub input_digest: String,
    pub results: Map<String, Value>,
    pub timing: Timing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

pub fn rational(c: &Scalar) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), Value::String(c.numer_string()));
    m.insert("den".into(), Value::String(c.denom_string()));
    Value::Object(m)
}

/// Dense coordinate list of `v` in a space of dimension `dim`.
pub fn coordinates(v: &SparseVec, dim: usize) -> Value {
    Value::Array(v.to_dense(dim).iter().map(rational).collect())
}

pub fn basis_value(vectors: &[SparseVec], dim: usize) -> Value {
    Value::Array(vectors.iter().map(|v| coordinates(v, dim)).collect())
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("command: {} {}\n", report.command.name, report.command.args.join(" ")));
            out.push_str(&format!("input: {}\n", report.input_digest));
            for (k, v) in &report.results {
                out.push_str(&format!("{k}: {}\n", text_value(v)));
            }
            out.push_str(&format!("elapsed: {} ms\n", report.timing.elapsed_ms));
            out
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            let (n, d) = (m["num"].as_str().unwrap_or(""), m["den"].as_str().unwrap_or(""));
            if d == "1" {
                n.to_string()
            } else {
                format!("{n}/{d}")
            }
        }
        Value::Array(items) => format!("[{}]", items.iter().map(text_value).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => format!(
            "{{{}}}",
            m.iter().map(|(k, v)| format!("{k}: {}", text_value(v))).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(results: Map<String, Value>) -> Report {
        Report {
            command: CommandEcho { name: "h2".into(), args: vec!["--family".into(), "sl".into()] },
            input_digest: digest(&[b"x"]),
            results,
            timing: Timing { elapsed_ms: 3 },
        }
    }

    #[test]
    fn empty_results_round_trip() {
        let r = sample(Map::new());
        let json = emit(&r, Format::Json);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let keys: Vec<String> = serde_json::from_str::<Map<String, Value>>(&json).unwrap().keys().cloned().collect();
        assert_eq!(keys, ["command", "input_digest", "results", "timing"]);
    }

    #[test]
    fn rationals_as_strings() {
        let mut m = Map::new();
        m.insert("x".into(), rational(&Scalar::new(-3, 4)));
        let r = sample(m);
        let back: Report = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
        assert!(emit(&r, Format::Text).contains("x: -3/4"));
    }
}
