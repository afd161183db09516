//! Run reports in text, JSON or CSV. Data sections are deterministic; the
//! wall time goes in a trailing `#` footer (stderr for JSON and CSV).

use std::time::Duration;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Human-readable body for the text format.
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Report { command, params: Vec::new(), columns, rows: Vec::new(), text: Vec::new() }
    }

    pub fn param(&mut self, key: &'static str, value: impl ToString) {
        self.params.push((key, value.to_string()));
    }

    pub fn json(&self) -> Value {
        let params: Map<String, Value> =
            self.params.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone()))).collect();
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Object(self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect()))
            .collect();
        serde_json::json!({ "command": self.command, "params": params, "results": results })
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    /// Prints the report and its footer.
    pub fn emit(&self, format: Format, elapsed: Duration) {
        let footer = format!("# wall time {:.3}s", elapsed.as_secs_f64());
        match format {
            Format::Text => {
                for line in &self.text {
                    println!("{line}");
                }
                println!("{footer}");
            }
            Format::Json => {
                println!("{}", serde_json::to_string_pretty(&self.json()).expect("serializable"));
                eprintln!("{footer}");
            }
            Format::Csv => {
                print!("{}", self.csv());
                eprintln!("{footer}");
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_csv_shapes() {
        let mut r = Report::new("moment", vec!["n", "value"]);
        r.param("k", 3);
        r.rows.push(vec![Value::from(0), Value::from("1")]);
        r.rows.push(vec![Value::from(1), Value::from("b0, b1")]);
        assert_eq!(
            r.json().to_string(),
            r#"{"command":"moment","params":{"k":"3"},"results":[{"n":0,"value":"1"},{"n":1,"value":"b0, b1"}]}"#
        );
        assert_eq!(r.csv(), "n,value\n0,1\n1,\"b0, b1\"\n");
    }
}
