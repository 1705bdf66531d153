//! Golden-file harness for the command line, shared by the CLI tests and
//! the acceptance run.
//!
//! Each case in `tests/golden/cases.json` names an argument vector and an
//! exit code; `tests/golden/<name>.out` holds the expected stdout. Set
//! `HIERLOG_UPDATE_GOLDEN=1` to rewrite the `.out` files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn golden_dir() -> PathBuf {
    crate_dir().join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.json")).expect("cases.json");
    serde_json::from_str(&text).expect("cases.json parses")
}

fn expand(arg: &str) -> String {
    let dir = crate_dir();
    arg.replace("{fixtures}", &dir.join("tests/fixtures").to_string_lossy())
        .replace("{data}", &dir.join("data").to_string_lossy())
}

/// Runs the command line in-process, as `hierlog <args>`.
pub fn run(args: &[String]) -> Run {
    let argv: Vec<String> = std::iter::once("hierlog".to_string())
        .chain(args.iter().map(|a| expand(a)))
        .collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = hierlog::cli::run(argv, &mut out, &mut err);
    let strip = |b: Vec<u8>| {
        String::from_utf8(b)
            .expect("utf-8 output")
            .replace(&*crate_dir().to_string_lossy(), "{crate}")
    };
    Run {
        code,
        stdout: strip(out),
        stderr: strip(err),
    }
}

/// Runs every case and returns one message per failure.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var("HIERLOG_UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    let mut failures = Vec::new();
    for case in cases() {
        let r = run(&case.args);
        let path = golden_dir().join(format!("{}.out", case.name));
        if update {
            std::fs::write(&path, &r.stdout).expect("write golden");
        }
        if r.code != case.exit {
            failures.push(format!(
                "{}: exit {} (expected {}); stderr: {}",
                case.name, r.code, case.exit, r.stderr
            ));
        }
        if case.exit == 2 && r.stderr.is_empty() {
            failures.push(format!(
                "{}: input error without a message on stderr",
                case.name
            ));
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == r.stdout => {}
            Ok(expected) => failures.push(format!(
                "{}: stdout differs from {}\n--- expected\n{}--- got\n{}",
                case.name,
                display(&path),
                expected,
                r.stdout
            )),
            Err(_) => failures.push(format!(
                "{}: missing golden file {}",
                case.name,
                display(&path)
            )),
        }
    }
    failures
}

fn display(p: &Path) -> String {
    p.strip_prefix(crate_dir())
        .unwrap_or(p)
        .display()
        .to_string()
}
