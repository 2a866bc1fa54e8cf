//! Report serialization: canonical JSON, the pretty renderer and the run
//! manifest.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Compact JSON with object keys sorted, plus a trailing newline. Reports
/// contain no floats, so parsing this and serializing again gives the same
/// bytes.
pub fn canonical_json(v: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => Some(
            items
                .iter()
                .map(|i| scalar(i).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", "),
        ),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(item, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(item, indent + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Indented `key: value` text built from the JSON report alone.
pub fn render_pretty(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

/// Everything needed to repeat a run. `results` holds no timings, so equal
/// inputs give an equal payload.
#[derive(Serialize)]
pub struct RunManifest<'a> {
    pub command: &'a str,
    pub argv: &'a [String],
    pub input_digests: &'a BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub config: &'a Value,
    pub tool_version: &'a str,
    pub wall_time_ms: u64,
    pub results: &'a Value,
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn canonical_output_sorts_keys() {
        let v = json!({"b": 1, "a": [1, 2], "c": {"z": null, "y": "s"}});
        assert_eq!(
            canonical_json(&v),
            "{\"a\":[1,2],\"b\":1,\"c\":{\"y\":\"s\",\"z\":null}}\n"
        );
    }

    #[test]
    fn pretty_rendering() {
        let v = json!({"ok": true, "t": [3, 4], "per_t": [{"t": 3}], "name": "x"});
        assert_eq!(
            render_pretty(&v),
            "name: x\nok: yes\nper_t:\n  -\n    t: 3\nt: 3, 4\n"
        );
    }
}
