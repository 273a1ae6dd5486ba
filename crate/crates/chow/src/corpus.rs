//! The built-in case corpus: every case is a standalone scene file under
//! `corpus/` (usable with `chow check`), embedded here so the `paper-suite`
//! command needs no file-system layout.
//!
//! A case is expected to pass unless an assertion label appears in its
//! `expected_failures` list; those encode documented discrepancies that the
//! suite records rather than silently correcting.

use crate::scene::{
    eval_scene, parse_scene, resolve_names, AssertOutcome, EvalOptions, Report,
};

#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub name: &'static str,
    pub scene: &'static str,
    /// Labels of assertions that are expected to fail.
    pub expected_failures: &'static [&'static str],
}

macro_rules! case {
    ($name:literal) => {
        CorpusCase {
            name: $name,
            scene: include_str!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/../../corpus/",
                $name,
                ".chow"
            )),
            expected_failures: &[],
        }
    };
    ($name:literal, expect_fail = [$($label:literal),* $(,)?]) => {
        CorpusCase {
            name: $name,
            scene: include_str!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/../../corpus/",
                $name,
                ".chow"
            )),
            expected_failures: &[$($label),*],
        }
    };
}

pub fn cases() -> Vec<CorpusCase> {
    vec![
        case!("theorem-A-even"),
        case!("theorem-C-jacobian"),
        case!("lemma-cxc"),
        case!("theorem-D-CJ"),
        case!("cor-chow-p-xi"),
        case!("sec33-blowup"),
        case!("exp-blowup-transforms"),
        case!("lemma-expressions-consistency"),
        case!("theorem-B-ring"),
        case!("excision-ledger"),
        case!("lemma-minus-E-xi"),
        case!(
            "taut-odd",
            expect_fail = ["first character of the direct image, literal index variant"]
        ),
        case!("theorem-h-u"),
        case!("lemma-chern-e0-even"),
        case!("nu-xi-even"),
    ]
}

pub fn list_cases() -> Vec<&'static str> {
    cases().iter().map(|c| c.name).collect()
}

pub fn load_case(name: &str) -> Option<CorpusCase> {
    cases().into_iter().find(|c| c.name == name)
}

/// Run one case and report whether every assertion matched its expectation.
pub struct CaseResult {
    pub name: &'static str,
    pub report: Report,
    /// Assertion labels that did not match expectations (unexpected
    /// failures/errors, or expected failures that passed).
    pub mismatches: Vec<String>,
}

pub fn run_case(case: &CorpusCase) -> CaseResult {
    let opts = EvalOptions {
        file_name: format!("{}.chow", case.name),
    };
    let report = match parse_scene(case.scene).and_then(|s| {
        resolve_names(&s)?;
        Ok(s)
    }) {
        Ok(scene) => eval_scene(&scene, &opts),
        Err(e) => Report::new(vec![crate::scene::ReportEntry {
            label: "parse".into(),
            status: AssertOutcome::Error,
            witness: Some(e.to_string()),
            location: format!("{}.chow:{}", case.name, e.line),
        }]),
    };
    let mut mismatches = Vec::new();
    for entry in &report.assertions {
        let expected_fail = case.expected_failures.contains(&entry.label.as_str());
        let ok = match entry.status {
            AssertOutcome::Pass => !expected_fail,
            AssertOutcome::Fail => expected_fail,
            AssertOutcome::Error => false,
        };
        if !ok {
            mismatches.push(entry.label.clone());
        }
    }
    CaseResult {
        name: case.name,
        report,
        mismatches,
    }
}
