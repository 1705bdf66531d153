//! Building and checking natural deduction trees. The second tree
//! discharges nothing but keeps an open hypothesis whose index is too high
//! for the implication it introduces.
//!
//! cargo run --example natural_deduction

use hierlog::natded::{check_nd, NdProof, NdRule, NdSystem};
use hierlog::{parse_prop, PropFormula};

fn node(rule: NdRule, c: &str, children: Vec<NdProof<PropFormula>>) -> NdProof<PropFormula> {
    NdProof::node(rule, parse_prop(c).unwrap(), children)
}

fn main() {
    let hyp = parse_prop("p & (T ->2 q)").unwrap();
    let goal = parse_prop("T ->1 p").unwrap();
    let get_p = || node(NdRule::AndEL, "p", vec![NdProof::hyp(hyp.clone())]);

    let good = node(
        NdRule::Tr { label: 1 },
        "T ->1 p",
        vec![
            get_p(),
            node(
                NdRule::ImpI { label: None },
                "T ->1 p",
                vec![NdProof::hyp_labelled(parse_prop("p").unwrap(), 1)],
            ),
        ],
    );
    let bad = node(NdRule::ImpI { label: None }, "T ->1 p", vec![get_p()]);

    for (name, tree) in [("grafted", &good), ("direct", &bad)] {
        match check_nd(NdSystem::BPCh, tree, std::slice::from_ref(&hyp), &goal) {
            Ok(()) => println!(
                "{}: valid, {} nodes, rules {:?}",
                name,
                tree.size(),
                tree.rules_used()
            ),
            Err(e) => println!("{}: {}", name, e),
        }
    }
    println!("\n{}", serde_json::to_string_pretty(&good).unwrap());
}
