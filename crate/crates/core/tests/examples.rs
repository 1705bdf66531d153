//! Every example runs to completion and prints what it is meant to show.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::SystemTime;

fn newest(dir: &Path) -> SystemTime {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            let meta = e.metadata().unwrap();
            if meta.is_dir() {
                newest(&e.path())
            } else {
                meta.modified().unwrap()
            }
        })
        .max()
        .unwrap_or(SystemTime::UNIX_EPOCH)
}

fn run_example(name: &str) -> Output {
    // `cargo test` builds the examples next to the test binaries. When
    // only this target was built they may be missing or stale; go through
    // cargo then.
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let built: PathBuf = exe
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("examples")
        .join(name);
    let sources = newest(&root.join("src")).max(newest(&root.join("examples")));
    if built
        .metadata()
        .and_then(|m| m.modified())
        .is_ok_and(|t| t >= sources)
    {
        return Command::new(built).output().unwrap();
    }
    Command::new(env!("CARGO"))
        .args(["run", "--quiet", "--example", name])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn stdout_of(name: &str) -> String {
    let out = run_example(name);
    assert!(
        out.status.success(),
        "{} failed: {}",
        name,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn parse_and_render() {
    let out = stdout_of("parse_and_render");
    assert!(out.contains("index 1 must exceed inner index 1"));
    assert!(out.contains("rendered: []1([]0 p -> []0 q)"));
}

#[test]
fn translations() {
    let out = stdout_of("translations");
    assert!(out.contains("b(A)   = []3([]1([]0 p -> []0 q) -> ([]0 r & []0 q))"));
    assert!(out.contains("((p ->1 q) ->2 r) ->3 s"));
}

#[test]
fn hilbert_proofs() {
    let out = stdout_of("hilbert_proofs");
    assert!(out.contains("K4h: Ok(())"));
    assert!(out.contains("schema Th is not an axiom of K4h"));
    assert!(out.contains("S4h: valid"));
}

#[test]
fn natural_deduction() {
    let out = stdout_of("natural_deduction");
    assert!(out.contains("grafted: valid"));
    assert!(out.contains("direct: at node root: index too small: found 1, required > 2"));
}

#[test]
fn derived_schemas() {
    let out = stdout_of("derived_schemas");
    assert_eq!(out.matches("Ok(())").count(), 4, "{}", out);
}

#[test]
fn sequent_search() {
    let out = stdout_of("sequent_search");
    assert_eq!(out.matches("check Ok(())").count(), 4, "{}", out);
    assert!(out.contains("GK4h: => ~[]0 F  NotProvable"));
}

#[test]
fn decide_propositional() {
    let out = stdout_of("decide_propositional");
    assert!(out.contains("BPCh  |- (T ->1 F) ->2 F: Some(false)"));
    assert!(out.contains("EBPCh |- (T ->1 F) ->2 F: Some(true)"));
    assert!(out.contains("split p | p ->1 F: Ok(NotATheorem)"));
}

#[test]
fn corpus_runner() {
    assert!(stdout_of("corpus_runner").ends_with("30 of 30 matched\n"));
}

#[test]
fn random_formulas() {
    assert_eq!(stdout_of("random_formulas").lines().count(), 10);
}

#[test]
fn oracle_crosscheck() {
    let out = stdout_of("oracle_crosscheck");
    for line in out.lines() {
        let search = line.contains("search true");
        assert_eq!(search, line.contains("Provable"), "{}", line);
    }
}
