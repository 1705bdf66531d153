//! Cut-free proof search in the hierarchical sequent calculi, with the
//! proofs rechecked independently.
//!
//! cargo run --example sequent_search

use hierlog::sequent::{
    check_sequent_proof, prove_sequent, Budget, CalculusSpec, SearchOutcome, Sequent,
};

fn main() {
    let cases = [
        (CalculusSpec::GK4h, "[]0 p => []1 []0 p"),
        (CalculusSpec::GK4h, "=> ~[]0 F"),
        (CalculusSpec::GKD4h, "=> ~[]0 F"),
        (CalculusSpec::GS4h, "[]1 ([]0 p -> []0 q), []1 []0 p => q"),
        (
            CalculusSpec::GGLhExperimental,
            "=> []1 ([]0 p -> p) -> []0 p",
        ),
    ];
    for (calc, text) in cases {
        let s: Sequent = text.parse().unwrap();
        match prove_sequent(calc, &s, Budget::default()) {
            SearchOutcome::Provable(proof) => {
                println!(
                    "{}: {}  proved, height {}, check {:?}",
                    calc,
                    s,
                    proof.height(),
                    check_sequent_proof(calc, &proof)
                );
                print!("{}", proof.render());
            }
            other => println!("{}: {}  {:?}", calc, s, other),
        }
    }
}
