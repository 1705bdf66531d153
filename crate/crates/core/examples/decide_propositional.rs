//! Deciding propositional judgments through the modal translation, and
//! splitting provable disjunctions.
//!
//! cargo run --example decide_propositional

use hierlog::decide::{decide_prop, split_disjunction, PropSystem};
use hierlog::parse_prop;
use hierlog::sequent::Budget;

fn main() {
    let budget = Budget::default();
    let essential = parse_prop("(T ->1 F) ->2 F").unwrap();
    for sys in PropSystem::ALL {
        let d = decide_prop(sys, &[], &essential, budget).unwrap();
        println!("{:<5} |- {}: {:?}", sys, essential, d.as_bool());
    }

    let gamma = [parse_prop("p").unwrap(), parse_prop("p ->1 q").unwrap()];
    let q = parse_prop("q").unwrap();
    for sys in PropSystem::ALL {
        println!(
            "{:<5} p, p ->1 q |- q: {:?}",
            sys,
            decide_prop(sys, &gamma, &q, budget).unwrap().as_bool()
        );
    }

    for (a, b) in [("T", "F"), ("p", "p ->1 F"), ("p", "q ->1 q")] {
        let (a, b) = (parse_prop(a).unwrap(), parse_prop(b).unwrap());
        println!(
            "split {} | {}: {:?}",
            a,
            b,
            split_disjunction(PropSystem::BPCh, &a, &b, budget)
        );
    }
}
