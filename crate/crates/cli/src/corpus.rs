//! Corpus files: JSON arrays of named Gauss codes with golden profiles.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub gauss_code: String,
    /// Partial profile; only the fields present are compared.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
}

/// `*.json` files directly under `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading corpus directory {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.extension().is_some_and(|e| e == "json"));
    files.sort();
    Ok(files)
}

pub fn read_entries(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_entries(path: &Path, entries: &[CorpusEntry]) -> Result<()> {
    let mut text = serde_json::to_string_pretty(entries)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Dotted paths of every field in `expected` that differs from `actual`.
pub fn mismatches(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff(expected, actual, "", &mut out);
    out
}

fn diff(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                match a.get(k) {
                    Some(av) => diff(ev, av, &p, out),
                    None => out.push(p),
                }
            }
        }
        _ if expected != actual => out.push(path.to_string()),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn partial_comparison() {
        let actual = json!({"j2": [0, 2], "naive": 2, "flags": {"compatible": false, "slice_obstructed": true}});
        assert!(mismatches(&json!({"naive": 2}), &actual).is_empty());
        assert!(mismatches(&json!({"flags": {"compatible": false}}), &actual).is_empty());
        assert_eq!(
            mismatches(&json!({"j2": [2], "flags": {"compatible": true}}), &actual),
            ["j2", "flags.compatible"]
        );
        assert_eq!(mismatches(&json!({"bogus": 1}), &actual), ["bogus"]);
    }
}
