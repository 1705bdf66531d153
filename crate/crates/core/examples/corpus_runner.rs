//! Running the bundled corpus of judgments.
//!
//! cargo run --example corpus_runner [file.jsonl]

use hierlog::decide::{load_corpus, run_corpus, CorpusOptions};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/curated.jsonl").to_string());
    let text = std::fs::read_to_string(&path).expect("readable corpus");
    let entries = load_corpus(&text).expect("valid JSON lines");
    let report = run_corpus(
        &entries,
        &CorpusOptions {
            timing: true,
            ..Default::default()
        },
    );
    for e in &report.entries {
        println!(
            "{} {:<5} {:<40} {:?}{}",
            if e.matches { "ok  " } else { "FAIL" },
            e.system,
            e.goal,
            e.verdict,
            e.proof_size
                .map(|n| format!(" ({} nodes)", n))
                .unwrap_or_default()
        );
    }
    println!("{} of {} matched", report.matched, report.total);
    std::process::exit(if report.success() { 0 } else { 1 });
}
