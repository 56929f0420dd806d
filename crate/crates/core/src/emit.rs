//! Canonical JSON and CSV output for any serializable objects.

use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{ForgeError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = ForgeError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(ForgeError::Parse(format!("unknown format {s:?} (expected json or csv)"))),
        }
    }
}

fn to_value<T: Serialize>(object: &T) -> Result<Value> {
    serde_json::to_value(object).map_err(|e| ForgeError::Parse(e.to_string()))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Serializes `objects`. JSON is a pretty-printed array with a trailing newline. CSV has one row
/// per object: objects become columns named by their keys (in first-seen order), anything else
/// a single `value` column, and nested values are written as compact JSON.
pub fn emit<T: Serialize>(objects: &[T], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(objects).map_err(|e| ForgeError::Parse(e.to_string()))?;
            out.push('\n');
            Ok(out)
        }
        Format::Csv => {
            let values: Vec<Value> = objects.iter().map(to_value).collect::<Result<_>>()?;
            let mut columns: Vec<String> = Vec::new();
            for v in &values {
                if let Value::Object(map) = v {
                    for k in map.keys() {
                        if !columns.contains(k) {
                            columns.push(k.clone());
                        }
                    }
                }
            }
            let tabular = !columns.is_empty() && values.iter().all(Value::is_object);
            let mut writer = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| ForgeError::Parse(e.to_string());
            if tabular {
                writer.write_record(&columns).map_err(csv_err)?;
                for v in &values {
                    writer.write_record(columns.iter().map(|c| cell(v.get(c).unwrap_or(&Value::Null)))).map_err(csv_err)?;
                }
            } else {
                writer.write_record(["value"]).map_err(csv_err)?;
                for v in &values {
                    writer.write_record([cell(v)]).map_err(csv_err)?;
                }
            }
            let bytes = writer.into_inner().map_err(|e| ForgeError::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| ForgeError::Parse(e.to_string()))
        }
    }
}

/// Parses JSON written by [`emit`] (or a single object).
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| ForgeError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use crate::Partition;

    #[test]
    fn partitions_and_rationals_have_canonical_text() {
        let p = Partition::new(vec![5, 3, 3, 2]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[5,3,3,2]");
        #[derive(Serialize)]
        struct Wrapped(#[serde(with = "crate::rational::as_string")] crate::rational::Rational);
        let r = Wrapped(parse_rational("-4/-6").unwrap());
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"2/3\"");
    }

    #[test]
    fn csv_uses_keys_as_columns() {
        #[derive(Serialize)]
        struct Row {
            name: &'static str,
            parts: Vec<u32>,
        }
        let rows = [Row { name: "a", parts: vec![2, 1] }, Row { name: "b", parts: vec![] }];
        assert_eq!(emit(&rows, Format::Csv).unwrap(), "name,parts\na,\"[2,1]\"\nb,[]\n");
        assert_eq!(emit(&[[1, 2]], Format::Csv).unwrap(), "value\n\"[1,2]\"\n");
    }
}
