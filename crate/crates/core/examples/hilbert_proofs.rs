//! Checking line-based Hilbert proofs, including one that fails.
//!
//! cargo run --example hilbert_proofs

use hierlog::hilbert::{check_hilbert, AxiomSchema, HilbertLine, HilbertProof, SystemSpec};
use hierlog::parse_modal;

fn main() {
    let m = |s: &str| parse_modal(s).unwrap();
    // []0 p -> []2 p from two instances of H.
    let proof = HilbertProof::new(vec![
        HilbertLine::Axiom {
            schema: AxiomSchema::H,
            n: 0,
            a: m("p"),
            b: None,
        },
        HilbertLine::Axiom {
            schema: AxiomSchema::H,
            n: 1,
            a: m("p"),
            b: None,
        },
        HilbertLine::Taut {
            formula: m("([]0 p -> []1 p) -> (([]1 p -> []2 p) -> ([]0 p -> []2 p))"),
        },
        HilbertLine::Mp { minor: 0, major: 2 },
        HilbertLine::Mp { minor: 1, major: 3 },
    ]);
    let goal = m("[]0 p -> []2 p");
    println!("{}", serde_json::to_string(&proof).unwrap());
    println!(
        "K4h: {:?}",
        check_hilbert(&SystemSpec::k4h(), &proof, &goal)
    );

    let reflexive = HilbertProof::new(vec![HilbertLine::Axiom {
        schema: AxiomSchema::Th,
        n: 0,
        a: m("p"),
        b: None,
    }]);
    for sys in [SystemSpec::k4h(), SystemSpec::s4h()] {
        match check_hilbert(&sys, &reflexive, &m("[]0 p -> p")) {
            Ok(()) => println!("{}: valid", sys.name),
            Err(e) => println!("{}: {}", sys.name, e),
        }
    }
}
