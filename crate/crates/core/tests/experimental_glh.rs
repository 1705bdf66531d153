//! The GGLh calculus is experimental, so it is only checked one way: every
//! Hilbert proof the kernel accepts in GLh must end in a sequent the search
//! proves.

use hierlog::hilbert::{check_hilbert, HilbertProof, SystemSpec};
use hierlog::parse_modal;
use hierlog::sequent::{
    check_sequent_proof, prove_sequent, Budget, CalculusSpec, SearchOutcome, Sequent,
};
use serde::Deserialize;

mod common;

#[derive(Deserialize)]
struct Entry {
    system: String,
    goal: String,
    proof: HilbertProof,
}

const GLH_PROOFS: &str = r#"
{"system": "GLh", "goal": "[]1([]0 p -> p) -> []0 p", "proof": [{"op": "axiom", "schema": "Lh", "n": 0, "a": "p"}]}
{"system": "GLh", "goal": "[]2([]1 []0 q -> []0 q) -> []1 []0 q", "proof": [{"op": "axiom", "schema": "Lh", "n": 1, "a": "[]0 q"}]}
{"system": "GLh", "goal": "[]1([]0 F -> F) -> []0 F", "proof": [{"op": "axiom", "schema": "Lh", "n": 0, "a": "F"}]}
{"system": "GLh", "goal": "[]2([]1 p -> p) -> []1 p", "proof": [{"op": "axiom", "schema": "Lh", "n": 1, "a": "p"}]}
{"system": "GLh", "goal": "[]0 p -> []1 []0 p", "proof": [{"op": "axiom", "schema": "4h", "n": 0, "a": "p"}]}
"#;

fn entries() -> Vec<Entry> {
    let corpus =
        std::fs::read_to_string(common::crate_dir().join("data/hilbert_corpus.jsonl")).unwrap();
    let mut out: Vec<Entry> = GLH_PROOFS
        .lines()
        .chain(corpus.lines())
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // K4h is contained in GLh, so its proofs count too.
    out.retain(|e| e.system == "GLh" || e.system == "K4h");
    out
}

#[test]
fn hilbert_glh_theorems_are_found() {
    let glh = SystemSpec::glh();
    let entries = entries();
    assert!(entries.len() >= 15);
    for e in entries {
        let goal = parse_modal(&e.goal).unwrap();
        check_hilbert(&glh, &e.proof, &goal).unwrap_or_else(|x| panic!("{}: {}", e.goal, x));
        let s = Sequent::new(vec![], vec![goal]);
        match prove_sequent(CalculusSpec::GGLhExperimental, &s, Budget::default()) {
            SearchOutcome::Provable(p) => {
                assert_eq!(
                    check_sequent_proof(CalculusSpec::GGLhExperimental, &p),
                    Ok(()),
                    "{}",
                    s
                )
            }
            other => panic!("{}: {:?}", s, other),
        }
    }
}
