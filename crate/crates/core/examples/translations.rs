//! The Gödel translation, index erasure, witnesses and the provability
//! reading of a formula.
//!
//! cargo run --example translations

use hierlog::parse_prop;
use hierlog::syntax::parse_untyped_prop;
use hierlog::translate::{
    apply_witness, bhk_unfold, canonical_witness, godel_b, witness_of, AtomNaming, Forget,
};

fn main() {
    let a = parse_prop("(p ->1 q) ->3 (r & q)").unwrap();
    println!("A      = {}", a);
    println!("b(A)   = {}", godel_b(&a));
    println!("f(A)   = {}", a.forget());

    let (shape, w) = witness_of(&a);
    println!("shape  = {}, witness {}", shape, w);

    let untyped = parse_untyped_prop("((p -> q) -> r) -> s").unwrap();
    let least = canonical_witness(&untyped);
    println!(
        "least indexing of {}: {}",
        untyped,
        apply_witness(&untyped, &least).unwrap()
    );

    let names: AtomNaming = [("p", "0=1"), ("q", "Con"), ("r", "G"), ("s", "H")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    println!("unfolded: {}", bhk_unfold(&a, &names).unwrap());
}
