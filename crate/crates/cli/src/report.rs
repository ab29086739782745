use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::EXIT_INCONSISTENT;

/// One command outcome. `inputs` is enough to recompute `results` and
/// `certificates` exactly; only `timing_ms` varies between runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub certificates: Value,
    pub timing_ms: u64,
}

impl Report {
    /// All boolean leaves of `certificates` must be true.
    pub fn certified(&self) -> bool {
        all_true(&self.certificates)
    }

    pub fn exit_code(&self) -> u8 {
        if self.certified() {
            0
        } else {
            EXIT_INCONSISTENT
        }
    }

    /// Equal up to timing.
    pub fn same_outcome(&self, other: &Report) -> bool {
        self.command == other.command
            && self.inputs == other.inputs
            && self.results == other.results
            && self.certificates == other.certificates
    }
}

fn all_true(v: &Value) -> bool {
    match v {
        Value::Bool(b) => *b,
        Value::Array(a) => a.iter().all(all_true),
        Value::Object(m) => m.values().all(all_true),
        _ => true,
    }
}

pub fn print(out: &mut impl Write, r: &Report, json: bool) -> io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"));
    }
    writeln!(out, "{}  ({} ms)", r.command, r.timing_ms)?;
    if r.command == "catalog" {
        print_table(out, &r.results)?;
    } else {
        print_tree(out, "results", &r.results, 1)?;
    }
    print_tree(out, "certificates", &r.certificates, 1)
}

const COLUMNS: [(&str, &str); 6] = [
    ("id", "form"),
    ("restricted_type", "restricted"),
    ("restricted_roots", "|Sigma_a|"),
    ("verdict", "compact Cartan"),
    ("oracle", "rank k = rank g"),
    ("consistent", "consistent"),
];

fn print_table(out: &mut impl Write, results: &Value) -> io::Result<()> {
    let rows = results.get("rows").and_then(Value::as_array).cloned().unwrap_or_default();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| COLUMNS.iter().map(|(k, _)| scalar_text(row.get(*k).unwrap_or(&Value::Null))).collect())
        .collect();
    let widths: Vec<usize> = COLUMNS
        .iter()
        .enumerate()
        .map(|(i, (_, h))| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let mut line = |items: Vec<&str>| {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        writeln!(out, "  {}", padded.join("  ").trim_end())
    };
    line(COLUMNS.iter().map(|(_, h)| *h).collect())?;
    for c in &cells {
        line(c.iter().map(String::as_str).collect())?;
    }
    if let Some(dir) = results.get("exported_to").filter(|v| !v.is_null()) {
        writeln!(out, "  exported to {}", scalar_text(dir))?;
    }
    Ok(())
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            format!("({})", a.iter().map(scalar_text).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn print_tree(out: &mut impl Write, key: &str, v: &Value, depth: usize) -> io::Result<()> {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) if !m.is_empty() => {
            writeln!(out, "{pad}{key}:")?;
            for (k, x) in m {
                print_tree(out, k, x, depth + 1)?;
            }
            Ok(())
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            writeln!(out, "{pad}{key}:")?;
            for x in a {
                print_tree(out, "-", x, depth + 1)?;
            }
            Ok(())
        }
        other => writeln!(out, "{pad}{key}: {}", scalar_text(other)),
    }
}
