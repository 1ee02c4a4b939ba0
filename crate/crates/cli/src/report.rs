//! Per-file reports, exit codes and text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::format::Document;
use crate::scalar::{dispatch, FieldKind, Scalar, WithField};
use crate::store::{parse_document, LoadError, Store};
use crate::verify::{verify, Record, Selection, Status};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_CHECK: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Checked,
    ParseError,
    ValidationError,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileReport {
    pub file: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl FileReport {
    fn load_error(file: &str, field: Option<FieldKind>, e: LoadError) -> Self {
        let outcome = match e {
            LoadError::Parse(_) => Outcome::ParseError,
            LoadError::Validation(_) => Outcome::ValidationError,
        };
        FileReport {
            file: file.into(),
            outcome,
            field: field.map(FieldKind::descriptor),
            error: Some(e.to_string()),
            records: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Checked && self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::ParseError => EXIT_PARSE,
            Outcome::ValidationError => EXIT_VALIDATION,
            Outcome::Checked if self.passed() => EXIT_PASS,
            Outcome::Checked => EXIT_CHECK,
        }
    }
}

/// Parse errors outrank validation errors, which outrank check failures.
pub fn combined_exit_code(reports: &[FileReport]) -> i32 {
    let codes: Vec<i32> = reports.iter().map(FileReport::exit_code).collect();
    [EXIT_PARSE, EXIT_VALIDATION, EXIT_CHECK].into_iter().find(|c| codes.contains(c)).unwrap_or(EXIT_PASS)
}

struct Job<'a> {
    file: &'a str,
    doc: &'a Document,
    kind: FieldKind,
    sel: &'a Selection,
}

impl WithField for Job<'_> {
    type Output = FileReport;

    fn run<F: Scalar>(self) -> FileReport {
        let store = match Store::<F>::load(self.doc, self.kind) {
            Ok(s) => s,
            Err(e) => return FileReport::load_error(self.file, Some(self.kind), e),
        };
        let records = verify(&store, self.sel);
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        let summary = Summary { checks: records.len(), passed: count(Status::Pass), failed: count(Status::Fail), errors: count(Status::Error) };
        FileReport { file: self.file.into(), outcome: Outcome::Checked, field: Some(self.kind.descriptor()), error: None, records, summary }
    }
}

pub fn verify_document(file: &str, doc: &Document, kind: FieldKind, sel: &Selection) -> FileReport {
    dispatch(kind, Job { file, doc, kind, sel })
}

pub fn verify_text(file: &str, text: &str, sel: &Selection) -> FileReport {
    match parse_document(text) {
        Ok((doc, kind)) => verify_document(file, &doc, kind, sel),
        Err(e) => FileReport::load_error(file, None, e),
    }
}

pub fn render_text(reports: &[FileReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}:", r.file);
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  {e}");
            continue;
        }
        for rec in &r.records {
            let over = rec.over.as_deref().map(|o| format!(" over {o}")).unwrap_or_default();
            let status = match rec.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let _ = write!(out, "  {status} {} {}{over}", rec.object, rec.check);
            if let Some(id) = &rec.identity {
                let _ = write!(out, ": {id} at {:?}: lhs = [{}], rhs = [{}]", rec.indices, rec.lhs.join(", "), rec.rhs.join(", "));
            }
            if let Some(m) = &rec.message {
                let _ = write!(out, ": {m}");
            }
            let _ = writeln!(out);
        }
        let s = &r.summary;
        let _ = writeln!(out, "  {} checks: {} passed, {} failed, {} errors", s.checks, s.passed, s.failed, s.errors);
    }
    out
}
