//! Comparing the optimized searcher with the naive depth-bounded oracle.
//!
//! cargo run --example oracle_crosscheck

use hierlog::sequent::{oracle_exhaustive, prove_sequent, Budget, CalculusSpec, Sequent};

fn main() {
    let sequents = [
        "=> []0 p -> []1 []0 p",
        "=> ~[]0 F",
        "=> []0 p -> p",
        "[]0 (p | q) => []0 p | []0 q",
    ];
    for calc in [CalculusSpec::GK4h, CalculusSpec::GKD4h, CalculusSpec::GS4h] {
        for text in sequents {
            let s: Sequent = text.parse().unwrap();
            let search = prove_sequent(calc, &s, Budget::default()).is_provable();
            let oracle = oracle_exhaustive(calc, &s, 8);
            println!(
                "{:<6} {:<32} search {:<5} oracle {:?}",
                calc.to_string(),
                text,
                search,
                oracle
            );
        }
    }
}
