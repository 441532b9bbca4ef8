//! Serializable command output. JSON objects use sorted keys; every number
//! is a decimal string. CSV renders the report's table when it has one,
//! otherwise the flattened `key,value` pairs.

use std::fmt::Display;
use std::io::Write;

use serde_json::{Map, Value};

use crate::cli::Format;

#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .cloned()
                        .zip(row.iter().cloned().map(Value::String))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    fields: Map<String, Value>,
    table: Option<(String, Table)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), Value::String(command.into()));
        Report { fields, table: None }
    }

    pub fn set(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn num(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.set(key, num(value))
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.set(key, Value::Bool(value))
    }

    /// Stored under `key` in JSON; the CSV body in CSV mode.
    pub fn table(&mut self, key: &str, table: Table) -> &mut Self {
        self.table = Some((key.into(), table));
        self
    }

    pub fn to_json(&self) -> Value {
        let mut obj = self.fields.clone();
        if let Some((key, table)) = &self.table {
            obj.insert(key.clone(), table.to_json());
        }
        Value::Object(obj)
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                match &self.table {
                    Some((_, table)) => {
                        w.write_record(&table.header)?;
                        for row in &table.rows {
                            w.write_record(row)?;
                        }
                    }
                    None => {
                        w.write_record(["key", "value"])?;
                        let mut pairs = Vec::new();
                        flatten("", &Value::Object(self.fields.clone()), &mut pairs);
                        for (k, v) in pairs {
                            w.write_record([k, v])?;
                        }
                    }
                }
                w.flush()
            }
        }
    }
}

pub fn num(value: impl Display) -> Value {
    Value::String(value.to_string())
}

pub fn nums<T: Display>(values: impl IntoIterator<Item = T>) -> Value {
    Value::Array(values.into_iter().map(num).collect())
}

pub fn float(x: f64) -> String {
    format!("{x:.12e}")
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| match prefix {
        "" => k.to_string(),
        _ => format!("{prefix}.{k}"),
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&join(&i.to_string()), v, out)),
        Value::String(s) => out.push((prefix.into(), s.clone())),
        Value::Null => out.push((prefix.into(), String::new())),
        other => out.push((prefix.into(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_flattens_nested_fields() {
        let mut r = Report::new("x");
        r.set("a", nums([1, 2])).flag("ok", true);
        let mut buf = Vec::new();
        r.write(Format::Csv, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "key,value\na.0,1\na.1,2\ncommand,x\nok,true\n");
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut r = Report::new("x");
        r.num("zeta", 1).num("alpha", 2);
        let s = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(s, r#"{"alpha":"2","command":"x","zeta":"1"}"#);
    }
}
