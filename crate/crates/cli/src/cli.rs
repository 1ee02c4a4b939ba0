//! Command-line parsing and the four commands.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::construct::{construct, ConstructError, CONSTRUCTIONS};
use crate::format::Document;
use crate::gallery::{self, GALLERY};
use crate::report::{combined_exit_code, render_text, verify_text, FileReport, EXIT_PARSE, EXIT_PASS, EXIT_USAGE, EXIT_VALIDATION};
use crate::scalar::{dispatch, FieldKind, Scalar, WithField};
use crate::store::{parse_document, LoadError, Store};
use crate::verify::Selection;

/// Exact checks for Hom-corings, Hom-entwinings and Doi-Koppinen data.
///
/// Exit codes: 0 all checks pass, 1 usage or IO error, 2 parse error,
/// 3 validation error, 4 check failure.
#[derive(Parser, Debug)]
#[command(name = "homent", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every applicable checker on the objects of a file.
    Verify {
        file: String,
        /// Only check this object.
        #[arg(long)]
        object: Option<String>,
        /// Only run this check, e.g. `entwining` or `entwined-module`.
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Add a constructed object to a file and write the result.
    Construct {
        construction: String,
        file: String,
        /// Construction arguments, `key=value`.
        #[arg(long = "arg", value_name = "KEY=VALUE")]
        args: Vec<String>,
        out: String,
    },
    /// Verify several files and print one aggregated report.
    Report {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// List or print the built-in examples.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum GalleryAction {
    List,
    Emit { name: String },
}

/// Output of a command: text for stdout, text for stderr, and the exit code.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn failure(code: i32, msg: impl Into<String>) -> Output {
    Output { stdout: String::new(), stderr: msg.into() + "\n", code }
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

pub fn execute(command: Command) -> Output {
    match command {
        Command::Verify { file, object, check, json } => {
            let sel = Selection { object, check, ..Selection::default() };
            match fs::read_to_string(&file) {
                Ok(text) => render(vec![verify_text(&file, &text, &sel)], json),
                Err(e) => failure(EXIT_USAGE, format!("{file}: {e}")),
            }
        }
        Command::Report { files, json } => {
            let mut reports = Vec::new();
            for file in files {
                match fs::read_to_string(&file) {
                    Ok(text) => reports.push(verify_text(&file, &text, &Selection::default())),
                    Err(e) => return failure(EXIT_USAGE, format!("{file}: {e}")),
                }
            }
            render(reports, json)
        }
        Command::Construct { construction, file, args, out } => {
            let mut map = BTreeMap::new();
            for a in &args {
                match a.split_once('=') {
                    Some((k, v)) => {
                        map.insert(k.to_string(), v.to_string());
                    }
                    None => return failure(EXIT_USAGE, format!("--arg {a:?} is not key=value")),
                }
            }
            let text = match fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return failure(EXIT_USAGE, format!("{file}: {e}")),
            };
            match construct_text(&text, &construction, &map) {
                Ok((doc, added)) => match fs::write(&out, to_json(&doc)) {
                    Ok(()) => Output { stdout: format!("wrote {out}: added {}\n", added.join(", ")), stderr: String::new(), code: EXIT_PASS },
                    Err(e) => failure(EXIT_USAGE, format!("{out}: {e}")),
                },
                Err(ConstructError::Load(LoadError::Parse(m))) => failure(EXIT_PARSE, format!("parse error: {m}")),
                Err(e @ (ConstructError::Load(_) | ConstructError::Failed(_))) => failure(EXIT_VALIDATION, e.to_string()),
                Err(e @ ConstructError::Unknown(_)) => {
                    let names: Vec<&str> = CONSTRUCTIONS.iter().map(|c| c.0).collect();
                    failure(EXIT_USAGE, format!("{e}; available: {}", names.join(", ")))
                }
                Err(e @ ConstructError::Argument(_)) => failure(EXIT_USAGE, e.to_string()),
            }
        }
        Command::Gallery { action: GalleryAction::List } => {
            let stdout = GALLERY.iter().map(|(n, d)| format!("{n:<28}{d}\n")).collect();
            Output { stdout, stderr: String::new(), code: EXIT_PASS }
        }
        Command::Gallery { action: GalleryAction::Emit { name } } => match gallery::build(&name) {
            Ok(doc) => Output { stdout: to_json(&doc), stderr: String::new(), code: EXIT_PASS },
            Err(e) => failure(EXIT_USAGE, e.to_string()),
        },
    }
}

fn render(reports: Vec<FileReport>, json: bool) -> Output {
    let code = combined_exit_code(&reports);
    let stdout = if json { serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n" } else { render_text(&reports) };
    Output { stdout, stderr: String::new(), code }
}

struct ConstructJob<'a> {
    doc: &'a Document,
    kind: FieldKind,
    construction: &'a str,
    args: &'a BTreeMap<String, String>,
}

impl WithField for ConstructJob<'_> {
    type Output = Result<(Document, Vec<String>), ConstructError>;

    fn run<F: Scalar>(self) -> Self::Output {
        let mut store = Store::<F>::load(self.doc, self.kind)?;
        let added = construct(&mut store, self.construction, self.args)?;
        Ok((store.document(), added))
    }
}

/// Loads `text`, runs a construction and returns the extended document with the new names.
pub fn construct_text(text: &str, construction: &str, args: &BTreeMap<String, String>) -> Result<(Document, Vec<String>), ConstructError> {
    let (doc, kind) = parse_document(text)?;
    dispatch(kind, ConstructJob { doc: &doc, kind, construction, args })
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("homent")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code }
            } else {
                Output { stdout: text, stderr: String::new(), code }
            }
        }
    }
}

pub fn main_exit() -> i32 {
    let out = run(std::env::args_os().skip(1));
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
