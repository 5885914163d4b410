use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::Envelope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// The full envelope, pretty-printed.
    Json,
    /// One report or record per line.
    Jsonl,
    /// One report or record per row; nested lists are kept as JSON.
    Csv,
    /// `key = value` lines with the same content as the JSON envelope.
    Text,
}

/// The per-case rows of an envelope: reports, or the records of a scan.
fn rows(env: &Envelope) -> anyhow::Result<Vec<Value>> {
    if !env.reports.is_empty() {
        return env.reports.iter().map(|r| Ok(serde_json::to_value(r)?)).collect();
    }
    let Some(data) = &env.data else {
        return Ok(Vec::new());
    };
    for key in ["records", "data", "classes"] {
        if let Some(Value::Array(items)) = data.get(key) {
            return Ok(items.clone());
        }
    }
    Ok(vec![data.clone()])
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Flattens nested objects to dotted keys. Arrays are expanded by index
/// when `expand_arrays` is set, and kept as compact JSON otherwise.
fn flatten(v: &Value, prefix: &str, expand_arrays: bool, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(x, &key(k), expand_arrays, out);
            }
        }
        Value::Array(items) if expand_arrays && !items.is_empty() => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, &key(&i.to_string()), expand_arrays, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

pub fn render(env: &Envelope, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(env)? + "\n",
        Format::Jsonl => {
            let mut s = String::new();
            for r in rows(env)? {
                s.push_str(&serde_json::to_string(&r)?);
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let flat: Vec<Vec<(String, String)>> = rows(env)?
                .iter()
                .map(|r| {
                    let mut out = Vec::new();
                    flatten(r, "", false, &mut out);
                    out
                })
                .collect();
            let mut header: Vec<String> = Vec::new();
            for row in &flat {
                for (k, _) in row {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header)?;
            for row in &flat {
                w.write_record(header.iter().map(|h| {
                    row.iter().find(|(k, _)| k == h).map_or("", |(_, v)| v.as_str())
                }))?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut out = Vec::new();
            flatten(&serde_json::to_value(env)?, "", true, &mut out);
            out.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_nested() {
        let v = json!({"a": {"b": 1, "c": [1, 2]}, "d": "x"});
        let mut out = Vec::new();
        flatten(&v, "", false, &mut out);
        assert_eq!(out, vec![("a.b".into(), "1".into()), ("a.c".into(), "[1,2]".into()), ("d".into(), "x".into())]);
        let mut out = Vec::new();
        flatten(&v, "", true, &mut out);
        assert_eq!(out[1], ("a.c.0".into(), "1".into()));
    }
}
