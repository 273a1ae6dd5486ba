//! Per-assertion evaluation results and their text/JSON rendering.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AssertOutcome {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub label: String,
    pub status: AssertOutcome,
    /// Offending normal form / dimension / message on failure.
    pub witness: Option<String>,
    /// `file:line`.
    pub location: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub assertions: Vec<ReportEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn new(assertions: Vec<ReportEntry>) -> Self {
        let summary = Summary {
            pass: assertions
                .iter()
                .filter(|e| e.status == AssertOutcome::Pass)
                .count(),
            fail: assertions
                .iter()
                .filter(|e| e.status == AssertOutcome::Fail)
                .count(),
            error: assertions
                .iter()
                .filter(|e| e.status == AssertOutcome::Error)
                .count(),
        };
        Report {
            assertions,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    Text,
    Json,
}

pub fn format_report(report: &Report, mode: ReportMode) -> String {
    match mode {
        ReportMode::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        ReportMode::Text => {
            let mut out = String::new();
            for e in &report.assertions {
                let tag = match e.status {
                    AssertOutcome::Pass => "PASS",
                    AssertOutcome::Fail => "FAIL",
                    AssertOutcome::Error => "ERROR",
                };
                out.push_str(&format!("{tag} {}", e.label));
                if let Some(w) = &e.witness {
                    out.push_str(&format!("  [{w}]"));
                }
                out.push_str(&format!("  ({})", e.location));
                out.push('\n');
            }
            out.push_str(&format!(
                "summary: {} pass, {} fail, {} error\n",
                report.summary.pass, report.summary.fail, report.summary.error
            ));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_rendering() {
        let report = Report::new(vec![
            ReportEntry {
                label: "quartic relation".into(),
                status: AssertOutcome::Pass,
                witness: None,
                location: "scene.chow:3".into(),
            },
            ReportEntry {
                label: "broken".into(),
                status: AssertOutcome::Fail,
                witness: Some("H^3".into()),
                location: "scene.chow:4".into(),
            },
            ReportEntry {
                label: "missing".into(),
                status: AssertOutcome::Error,
                witness: Some("unknown ring `X`".into()),
                location: "scene.chow:5".into(),
            },
        ]);
        let text = format_report(&report, ReportMode::Text);
        assert!(text.contains("PASS quartic relation"));
        assert!(text.contains("FAIL broken  [H^3]"));
        assert!(text.contains("summary: 1 pass, 1 fail, 1 error"));
        let json = format_report(&report, ReportMode::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["assertions"][1]["status"], "fail");
        assert_eq!(v["assertions"][1]["witness"], "H^3");
        assert_eq!(v["summary"]["pass"], 1);
    }
}
