//! JSON and CSV renderings of reports and value tables.

use griffiths_core::report::VerificationReport;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn reports(rs: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let text = if rs.len() == 1 { serde_json::to_string_pretty(&rs[0]) } else { serde_json::to_string_pretty(rs) };
            text.expect("reports serialize") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("relation,status,checked,failures,skipped\n");
            for r in rs {
                let status = serde_json::to_value(r.status).expect("status serializes");
                out += &format!(
                    "{},{},{},{},{}\n",
                    r.relation,
                    status.as_str().unwrap_or_default(),
                    r.sweep.checked,
                    r.sweep.failures,
                    r.sweep.skipped
                );
            }
            out
        }
    }
}

/// A single evaluated value with the indices that produced it.
pub fn value(family: &str, params: &BTreeMap<String, String>, index: &[(&str, i64)], v: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let idx: Map<String, Value> = index.iter().map(|(k, x)| (k.to_string(), json!(x))).collect();
            let doc = json!({ "family": family, "params": params, "index": idx, "value": v });
            serde_json::to_string_pretty(&doc).expect("value serializes") + "\n"
        }
        Format::Csv => {
            let head: Vec<&str> = index.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = index.iter().map(|(_, x)| x.to_string()).collect();
            format!("{},value\n{},{}\n", head.join(","), row.join(","), v)
        }
    }
}

/// Rows `(i, j, x, y, value)`; JSON nests values by `"i,j"` then `"x,y"`.
pub fn bivariate_table(family: &str, params: &BTreeMap<String, String>, rows: &[(i64, i64, i64, i64, String)], format: Format) -> String {
    match format {
        Format::Json => {
            let mut values: Map<String, Value> = Map::new();
            for (i, j, x, y, v) in rows {
                let inner = values.entry(format!("{i},{j}")).or_insert_with(|| Value::Object(Map::new()));
                inner.as_object_mut().expect("object").insert(format!("{x},{y}"), json!(v));
            }
            let doc = json!({ "family": family, "params": params, "values": values });
            serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("i,j,x,y,value\n");
            for (i, j, x, y, v) in rows {
                out += &format!("{i},{j},{x},{y},{v}\n");
            }
            out
        }
    }
}

/// Rows `(n, x, value)`; JSON nests values by `"n"` then `"x"`.
pub fn univariate_table(family: &str, params: &BTreeMap<String, String>, rows: &[(i64, i64, String)], format: Format) -> String {
    match format {
        Format::Json => {
            let mut values: Map<String, Value> = Map::new();
            for (n, x, v) in rows {
                let inner = values.entry(n.to_string()).or_insert_with(|| Value::Object(Map::new()));
                inner.as_object_mut().expect("object").insert(x.to_string(), json!(v));
            }
            let doc = json!({ "family": family, "params": params, "values": values });
            serde_json::to_string_pretty(&doc).expect("table serializes") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("n,x,value\n");
            for (n, x, v) in rows {
                out += &format!("{n},{x},{v}\n");
            }
            out
        }
    }
}
