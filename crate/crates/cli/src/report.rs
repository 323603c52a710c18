use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skipped(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

/// Everything a command produces. `table` and `csv` hold the text bodies
/// for those formats; JSON is the serialized report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub checks: Vec<Check>,
    pub result: Value,
    #[serde(skip)]
    pub table: String,
    #[serde(skip)]
    pub csv: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, config: Value) -> Self {
        Report {
            tool: "gencluster",
            version: gencluster::VERSION,
            command,
            config,
            checks: Vec::new(),
            result: Value::Null,
            table: String::new(),
            csv: None,
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => match &self.csv {
                Some(body) => body.clone(),
                None => {
                    let mut s = String::from("check,status,detail\n");
                    for c in &self.checks {
                        let status = serde_json::to_value(c.status).expect("status");
                        let _ = writeln!(
                            s,
                            "{},{},\"{}\"",
                            c.id,
                            status.as_str().unwrap_or_default(),
                            c.detail.replace('"', "\"\"")
                        );
                    }
                    s
                }
            },
            Format::Table => {
                let mut s = format!("gencluster {} {}\n", self.version, self.command);
                if let Value::Object(cfg) = &self.config {
                    let parts: Vec<String> = cfg
                        .iter()
                        .filter(|(_, v)| !v.is_null())
                        .map(|(k, v)| format!("{k}={}", v.to_string().trim_matches('"')))
                        .collect();
                    let _ = writeln!(s, "config: {}", parts.join(" "));
                }
                s.push_str(&self.table);
                for c in &self.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIP",
                    };
                    let _ = writeln!(s, "[{tag}] {:<28} {}", c.id, c.detail);
                }
                s
            }
        }
    }
}
