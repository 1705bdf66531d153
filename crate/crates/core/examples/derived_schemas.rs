//! Generated proofs of derived rules, each checked by the kernel.
//!
//! cargo run --example derived_schemas

use hierlog::natded::{
    check_nd, open_hypotheses, schema_primed_rule, schema_reindex, schema_star_rule, NdSystem,
    Simulation,
};
use hierlog::{parse_prop, Index, PropFormula};

fn main() {
    let (p, q) = (parse_prop("p").unwrap(), parse_prop("q & r").unwrap());

    // Lowering an index costs one use of L per step.
    for (m, n) in [(1, 3), (3, 1)] {
        let proof = schema_reindex(&p, &q, Index(m), Index(n)).unwrap();
        let hyp = PropFormula::imp(m, p.clone(), q.clone());
        let verdict = check_nd(
            NdSystem::FPLh,
            &proof,
            std::slice::from_ref(&hyp),
            &proof.conclusion,
        );
        println!(
            "{} / {}: {:?}, {} nodes, rules {:?}",
            hyp,
            proof.conclusion,
            verdict,
            proof.size(),
            proof.rules_used()
        );
    }

    let sim = schema_primed_rule(Simulation::RFromRPrime, &p, &q, Index(2)).unwrap();
    let hyps = open_hypotheses(&sim);
    println!(
        "R simulated in IPCh: {:?}",
        check_nd(NdSystem::IPCh, &sim, &hyps, &sim.conclusion)
    );

    let untyped = schema_star_rule();
    let hyps = open_hypotheses(&untyped);
    println!(
        "untyped FPL, {} from {}: {:?}",
        untyped.conclusion,
        hyps[0],
        check_nd(NdSystem::FPLh, &untyped, &hyps, &untyped.conclusion)
    );
}
