//! Newline-delimited JSON, or CSV with the record's keys as header.
//!
//! Floats go through serde_json's shortest round-trip formatting in both
//! forms. Nested objects are flattened for CSV as `outer_inner`.

use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::config::Format;

pub type Record = Map<String, Value>;

pub fn emit<W: Write>(records: &[Record], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header_written = false;
            for r in records {
                let mut flat = Vec::new();
                flatten("", r, &mut flat);
                if !header_written {
                    w.write_record(flat.iter().map(|(k, _)| k.as_str()))?;
                    header_written = true;
                }
                w.write_record(flat.iter().map(|(_, v)| v.as_str()))?;
            }
            w.flush()
        }
    }
}

fn flatten(prefix: &str, obj: &Record, out: &mut Vec<(String, String)>) {
    for (k, v) in obj {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}_{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, out),
            Value::String(s) => out.push((key, s.clone())),
            Value::Null => out.push((key, String::new())),
            other => out.push((key, other.to_string())),
        }
    }
}

/// A record from `key => value` pairs, keeping their order.
#[macro_export]
macro_rules! record {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $( m.insert($k.to_string(), serde_json::json!($v)); )*
        m
    }};
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_flattens_nested_objects() {
        let r = crate::record! {
            "value" => json!({"re": 1.5, "im": -0.25}),
            "engine" => "naive",
            "ok" => true,
        };
        let mut buf = Vec::new();
        emit(&[r], Format::Csv, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "value_re,value_im,engine,ok\n1.5,-0.25,naive,true\n");
    }

    #[test]
    fn json_round_trips_floats() {
        let x = 0.1 + 0.2;
        let r = crate::record! { "x" => x };
        let mut buf = Vec::new();
        emit(&[r], Format::Json, &mut buf).unwrap();
        let back: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back["x"].as_f64().unwrap(), x);
    }
}
