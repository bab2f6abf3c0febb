use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "pisub-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub schema_version: String,
    pub scenario: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub consumed_facts: Vec<String>,
    pub wall_time_ms: u64,
}

impl ScenarioReport {
    /// A report whose status follows from its checks.
    pub fn from_checks(
        scenario: &str,
        checks: Vec<Check>,
        consumed_facts: Vec<String>,
        wall_time_ms: u64,
    ) -> Self {
        let status = if !checks.is_empty() && checks.iter().all(|c| c.pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            schema_version: SCHEMA_VERSION.into(),
            scenario: scenario.into(),
            status,
            checks,
            consumed_facts,
            wall_time_ms,
        }
    }

    /// An `error` report carrying the checks completed before `message`.
    pub fn error(
        scenario: &str,
        mut checks: Vec<Check>,
        consumed_facts: Vec<String>,
        message: &str,
        wall_time_ms: u64,
    ) -> Self {
        checks.push(Check {
            name: "run".into(),
            expected: Value::from("completed"),
            actual: Value::from(message),
            pass: false,
        });
        Self {
            schema_version: SCHEMA_VERSION.into(),
            scenario: scenario.into(),
            status: Status::Error,
            checks,
            consumed_facts,
            wall_time_ms,
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn text_table(r: &ScenarioReport, out: &mut String) {
    let _ = writeln!(
        out,
        "{}: {} ({} ms)",
        r.scenario,
        r.status.as_str(),
        r.wall_time_ms
    );
    let rows: Vec<[String; 4]> = r
        .checks
        .iter()
        .map(|c| {
            [
                if c.pass { "ok" } else { "FAIL" }.to_string(),
                c.name.clone(),
                render(&c.expected),
                render(&c.actual),
            ]
        })
        .collect();
    let header = ["", "check", "expected", "actual"].map(String::from);
    let mut widths = [0usize; 4];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::from(" ");
        for (i, (w, cell)) in widths.iter().zip(row).enumerate() {
            line.push(' ');
            line.push_str(cell);
            if i + 1 < row.len() {
                line.push_str(&" ".repeat(w - cell.chars().count()));
            }
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    if let Some(c) = r.first_failure() {
        let _ = writeln!(out, "  first failing check: {}", c.name);
    }
    for f in &r.consumed_facts {
        let _ = writeln!(out, "  consumed: {f}");
    }
}

/// Serializes reports: JSON as an array with keys in declaration order, text
/// as one aligned table per report.
pub fn emit_reports(reports: &[ScenarioReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                text_table(r, &mut out);
            }
            out
        }
    }
}

pub fn emit_report(r: &ScenarioReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            text_table(r, &mut out);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(pass: bool) -> ScenarioReport {
        ScenarioReport::from_checks(
            "demo",
            vec![
                Check {
                    name: "order".into(),
                    expected: Value::from(168u64),
                    actual: Value::from(168u64),
                    pass: true,
                },
                Check {
                    name: "flag".into(),
                    expected: Value::from(true),
                    actual: Value::from(pass),
                    pass,
                },
            ],
            vec![],
            5,
        )
    }

    #[test]
    fn status_follows_checks() {
        assert_eq!(sample(true).status, Status::Pass);
        let failed = sample(false);
        assert_eq!(failed.status, Status::Fail);
        assert_eq!(failed.first_failure().unwrap().name, "flag");
    }

    #[test]
    fn json_keys_are_ordered_and_integers_unquoted() {
        let s = emit_report(&sample(true), Format::Json);
        let keys = ["schema_version", "scenario", "status", "checks", "consumed_facts", "wall_time_ms"];
        let positions: Vec<usize> = keys.iter().map(|k| s.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"expected\": 168"));
        assert!(s.contains("\"status\": \"pass\""));
    }

    #[test]
    fn json_round_trip() {
        let r = sample(false);
        let back: ScenarioReport = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
        assert_eq!(emit_report(&r, Format::Json), emit_report(&back, Format::Json));
    }

    #[test]
    fn text_names_the_first_failure() {
        let t = emit_report(&sample(false), Format::Text);
        assert!(t.starts_with("demo: fail"));
        assert!(t.contains("first failing check: flag"));
    }
}
