//! Acceptance run: one PASS/FAIL line per criterion, each with a pinned
//! time limit. Runs as its own harness so the lines show up in plain
//! `cargo test` output.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use hierlog::decide::{decide_prop, split_disjunction, PropSystem, SplitError};
use hierlog::gen::{mutate_index, random_modal, random_prop, GenConfig};
use hierlog::hilbert::{
    check_hilbert, instantiate_axiom, AxiomSchema, HilbertLine, HilbertProof, SystemSpec,
};
use hierlog::natded::{
    check_nd, open_hypotheses, schema_primed_rule, schema_reindex, schema_rewitness, NdProof,
    NdRule, NdSystem, Simulation,
};
use hierlog::sequent::{
    check_sequent_proof, decide_modal, oracle_exhaustive, prove_sequent, Budget, CalculusSpec,
    Decision, ModalSystem, OracleOutcome, SearchOutcome, Sequent, SequentProof,
};
use hierlog::syntax::AstNode;
use hierlog::translate::{godel_b, witness_of};
use hierlog::{parse_modal, parse_prop, Index, ModalFormula, ParseError, PropFormula};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Deserialize;

type Verdict = Result<String, String>;

fn main() {
    type Criterion = (u32, &'static str, Duration, fn() -> Verdict);
    let criteria: [Criterion; 10] = [
        (
            1,
            "well-formedness fidelity",
            Duration::from_secs(5),
            c1_well_formedness,
        ),
        (
            2,
            "grafted-tree vectors",
            Duration::from_secs(1),
            c2_grafted_trees,
        ),
        (3, "axiom completeness", Duration::from_secs(60), c3_axioms),
        (
            4,
            "translation boxing suite",
            Duration::from_secs(300),
            c4_boxing,
        ),
        (
            5,
            "searcher/oracle equivalence",
            Duration::from_secs(600),
            c5_oracle,
        ),
        (
            6,
            "schema soundness coherence",
            Duration::from_secs(120),
            c6_schemas,
        ),
        (
            7,
            "disjunction property",
            Duration::from_secs(600),
            c7_disjunction,
        ),
        (
            8,
            "separation facts",
            Duration::from_secs(300),
            c8_separations,
        ),
        (
            9,
            "Hilbert/sequent coherence",
            Duration::from_secs(120),
            c9_hilbert,
        ),
        (10, "CLI contract", Duration::from_secs(10), c10_cli),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{}; over time limit", d)),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {} {:<28} {:>8.2}s / {:>4}s  {}",
            id,
            if ok { "PASS" } else { "FAIL" },
            name,
            took.as_secs_f64(),
            limit.as_secs(),
            detail
        );
    }
    if failed > 0 {
        eprintln!("{} criteria failed", failed);
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// 1

/// Independent well-formedness check: the level of a formula is the
/// largest index in it (0 if none); every implication must be at least 1
/// and above the levels of both sides.
fn level_prop(f: &PropFormula) -> Option<u32> {
    match f {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => Some(0),
        PropFormula::And(a, b) | PropFormula::Or(a, b) => Some(level_prop(a)?.max(level_prop(b)?)),
        PropFormula::Imp(n, a, b) => {
            let inner = level_prop(a)?.max(level_prop(b)?);
            (n.0 >= 1 && n.0 > inner).then_some(n.0)
        }
    }
}

/// Boxes may carry 0, so an unboxed formula has no level at all.
fn level_modal(f: &ModalFormula) -> Option<Option<u32>> {
    match f {
        ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => Some(None),
        ModalFormula::Not(a) => level_modal(a),
        ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
            Some(level_modal(a)?.max(level_modal(b)?))
        }
        ModalFormula::Box(n, a) => {
            let inner = level_modal(a)?;
            inner.is_none_or(|m| n.0 > m).then_some(Some(n.0))
        }
    }
}

fn c1_well_formedness() -> Verdict {
    ensure(parse_prop("((p ->1 q) & r) ->2 s").is_ok(), || {
        "first exemplar rejected".into()
    })?;
    ensure(
        matches!(parse_prop("p ->1 (q ->1 r)"), Err(ParseError::IllTyped(_))),
        || "second exemplar not rejected as ill-typed".into(),
    )?;
    let mut rng = StdRng::seed_from_u64(1);
    let cfg = GenConfig::default();
    for _ in 0..1000 {
        let f = random_prop(&mut rng, &cfg);
        ensure(level_prop(&f).is_some() && f.is_well_formed(), || {
            format!("generated `{}` is ill-typed", f)
        })?;
        ensure(parse_prop(&f.to_string()).as_ref() == Ok(&f), || {
            format!("`{}` does not re-parse", f)
        })?;
        let g = random_modal(&mut rng, &cfg);
        ensure(level_modal(&g).is_some() && g.is_well_formed(), || {
            format!("generated `{}` is ill-typed", g)
        })?;
    }
    let mut mutants = 0;
    while mutants < 1000 {
        let f = random_prop(&mut rng, &cfg);
        let Some(bad) = mutate_index(&mut rng, &f) else {
            continue;
        };
        mutants += 1;
        ensure(level_prop(&bad).is_none(), || {
            format!("mutant `{}` passes the reference check", bad)
        })?;
        ensure(!bad.is_well_formed(), || {
            format!("mutant `{}` accepted", bad)
        })?;
        ensure(
            matches!(parse_prop(&bad.to_string()), Err(ParseError::IllTyped(_))),
            || format!("mutant `{}` accepted by the parser", bad),
        )?;
    }
    Ok("2 exemplars, 1000 generated (+1000 modal), 1000 mutants".into())
}

// ---------------------------------------------------------------------------
// 2

fn c2_grafted_trees() -> Verdict {
    let p = |s: &str| parse_prop(s).unwrap();
    let node = |rule, c: &str, ch| NdProof::node(rule, p(c), ch);
    let hyp = p("p & (T ->2 q)");
    let get_p = || node(NdRule::AndEL, "p", vec![NdProof::hyp(hyp.clone())]);
    let left = node(
        NdRule::Tr { label: 1 },
        "T ->1 p",
        vec![
            get_p(),
            node(
                NdRule::ImpI { label: None },
                "T ->1 p",
                vec![NdProof::hyp_labelled(p("p"), 1)],
            ),
        ],
    );
    let right = node(NdRule::ImpI { label: None }, "T ->1 p", vec![get_p()]);
    let goal = p("T ->1 p");
    let hyps = [hyp.clone()];
    check_nd(NdSystem::BPCh, &left, &hyps, &goal)
        .map_err(|e| format!("left tree rejected: {}", e))?;
    let expected = "at node root: index too small: found 1, required > 2";
    match check_nd(NdSystem::BPCh, &right, &hyps, &goal) {
        Ok(()) => Err("right tree accepted".into()),
        Err(e) if e.to_string() == expected => Ok(format!("left valid, right: \"{}\"", expected)),
        Err(e) => Err(format!("right tree: got \"{}\"", e)),
    }
}

// ---------------------------------------------------------------------------
// 3

fn boxed_level(fs: &[&ModalFormula]) -> u32 {
    fs.iter()
        .filter_map(|f| f.max_index())
        .map(|i| i.0 + 1)
        .max()
        .unwrap_or(0)
}

fn c3_axioms() -> Verdict {
    let pairs = [
        (
            ModalSystem::K4h,
            SystemSpec::k4h(),
            vec![AxiomSchema::H, AxiomSchema::Kh, AxiomSchema::FourH],
        ),
        (
            ModalSystem::KD4h,
            SystemSpec::kd4h(),
            vec![
                AxiomSchema::H,
                AxiomSchema::Kh,
                AxiomSchema::FourH,
                AxiomSchema::Dh,
            ],
        ),
        (
            ModalSystem::S4h,
            SystemSpec::s4h(),
            vec![
                AxiomSchema::H,
                AxiomSchema::Kh,
                AxiomSchema::FourH,
                AxiomSchema::Th,
            ],
        ),
    ];
    let mut rng = StdRng::seed_from_u64(3);
    let cfg = GenConfig {
        max_size: 5,
        max_index: 2,
        ..GenConfig::default()
    };
    let mut total = 0;
    for (sys, spec, schemas) in pairs {
        for schema in schemas {
            for _ in 0..20 {
                let (a, b) = (random_modal(&mut rng, &cfg), random_modal(&mut rng, &cfg));
                let n = Index(boxed_level(&[&a, &b]) + rng.gen_range(0..3));
                let f = instantiate_axiom(schema, n, &a, Some(&b))
                    .map_err(|e| format!("{}: {}", schema.name(), e))?;
                let line = HilbertProof::new(vec![HilbertLine::Axiom {
                    schema,
                    n: n.0,
                    a: a.clone(),
                    b: Some(b.clone()),
                }]);
                check_hilbert(&spec, &line, &f)
                    .map_err(|e| format!("{} instance `{}`: {}", schema.name(), f, e))?;
                match decide_modal(sys, &[], &f, Budget::default()) {
                    Decision::Provable(proof) => check_sequent_proof(sys.calculus(), &proof)
                        .map_err(|e| format!("{} proof of `{}` rejected: {}", sys, f, e))?,
                    other => return Err(format!("{} `{}`: {:?}", sys, f, other)),
                }
                total += 1;
            }
        }
    }
    Ok(format!("{} instances provable, proofs rechecked", total))
}

// ---------------------------------------------------------------------------
// 4

fn c4_boxing() -> Verdict {
    let mut rng = StdRng::seed_from_u64(4);
    let cfg = GenConfig::default();
    let mut done = 0;
    let mut largest = 0;
    while done < 200 {
        let a = random_prop(&mut rng, &cfg);
        if a.max_index().is_some_and(|m| m.0 > 4) {
            continue;
        }
        let b = godel_b(&a);
        let n = b.max_index().map_or(0, |m| m.0) + 1;
        let s = Sequent::new(vec![b.clone()], vec![ModalFormula::boxed(n, b)]);
        match prove_sequent(CalculusSpec::GK4h, &s, Budget::default()) {
            SearchOutcome::Provable(p) => {
                check_sequent_proof(CalculusSpec::GK4h, &p)
                    .map_err(|e| format!("`{}`: {}", s, e))?;
                largest = largest.max(p.size());
            }
            other => return Err(format!("`{}` for A = `{}`: {:?}", s, a, other)),
        }
        done += 1;
    }
    Ok(format!("200/200 provable, largest proof {} nodes", largest))
}

// ---------------------------------------------------------------------------
// 5

/// Formulas over p, q, T, F of depth at most `depth`, with indices at most
/// 2. A box whose body is already at level 2 is dropped.
fn small_modal(rng: &mut StdRng, depth: u32) -> ModalFormula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..8) {
            0 => ModalFormula::Top,
            1 => ModalFormula::Bot,
            2..=4 => ModalFormula::atom("p"),
            _ => ModalFormula::atom("q"),
        };
    }
    let choice = rng.gen_range(0..10);
    let mut sub = || small_modal(rng, depth - 1);
    match choice {
        0..=2 => ModalFormula::imp(sub(), sub()),
        3 => ModalFormula::and(sub(), sub()),
        4 => ModalFormula::or(sub(), sub()),
        5 => ModalFormula::not(sub()),
        _ => {
            let a = sub();
            let floor = a.max_index().map_or(0, |m| m.0 + 1);
            if floor > 2 {
                a
            } else {
                ModalFormula::boxed(rng.gen_range(floor..=2), a)
            }
        }
    }
}

fn connectives(f: &ModalFormula) -> usize {
    match f {
        ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => 0,
        ModalFormula::Not(a) | ModalFormula::Box(_, a) => 1 + connectives(a),
        ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
            1 + connectives(a) + connectives(b)
        }
    }
}

fn small_sequents(count: usize) -> Vec<Sequent> {
    let mut rng = StdRng::seed_from_u64(5);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let s = if rng.gen_bool(0.7) {
            Sequent::new(vec![], vec![small_modal(&mut rng, 3)])
        } else {
            Sequent::new(
                vec![small_modal(&mut rng, 2)],
                vec![small_modal(&mut rng, 2)],
            )
        };
        if seen.insert(s.to_string()) {
            out.push(s);
        }
    }
    out
}

fn c5_oracle() -> Verdict {
    let sequents = small_sequents(500);
    let mut summary = Vec::new();
    for calc in [CalculusSpec::GK4h, CalculusSpec::GKD4h, CalculusSpec::GS4h] {
        let mut provable = 0;
        for s in &sequents {
            let searched = match prove_sequent(calc, s, Budget::default()) {
                SearchOutcome::Provable(p) => {
                    check_sequent_proof(calc, &p)
                        .map_err(|e| format!("{} `{}`: {}", calc, s, e))?;
                    true
                }
                SearchOutcome::NotProvable { .. } => false,
                SearchOutcome::BudgetExceeded { .. } => {
                    return Err(format!("{} `{}`: budget exhausted", calc, s))
                }
            };
            // Every cut-free proof of these sequents needs at most one
            // logical step per connective occurrence per modal layer; the
            // bound below leaves room for two layers and a margin.
            let weight: usize = s.ante.iter().chain(&s.succ).map(connectives).sum();
            let oracle = oracle_exhaustive(calc, s, 2 * weight + 2);
            let by_oracle = matches!(oracle, OracleOutcome::Provable { .. });
            ensure(searched == by_oracle, || {
                format!(
                    "{} `{}`: searcher {}, oracle {:?}",
                    calc, s, searched, oracle
                )
            })?;
            provable += usize::from(searched);
        }
        summary.push(format!("{} {}/{}", calc, provable, sequents.len()));
    }
    Ok(format!("agree on all; provable: {}", summary.join(", ")))
}

// ---------------------------------------------------------------------------
// 6

/// A random re-indexing of `a` with every index at most `cap`, or `None`
/// when the nesting needs more.
fn reindex(rng: &mut StdRng, a: &PropFormula, cap: u32) -> Option<PropFormula> {
    Some(match a {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => a.clone(),
        PropFormula::And(x, y) => PropFormula::and(reindex(rng, x, cap)?, reindex(rng, y, cap)?),
        PropFormula::Or(x, y) => PropFormula::or(reindex(rng, x, cap)?, reindex(rng, y, cap)?),
        PropFormula::Imp(_, x, y) => {
            let (x, y) = (reindex(rng, x, cap)?, reindex(rng, y, cap)?);
            let floor = x.max_index().max(y.max_index()).map_or(1, |m| m.0 + 1);
            if floor > cap {
                return None;
            }
            PropFormula::imp(rng.gen_range(floor..=cap), x, y)
        }
    })
}

struct SchemaCase {
    home: NdSystem,
    proof: NdProof<PropFormula>,
    hyps: Vec<PropFormula>,
}

fn schema_cases() -> Result<Vec<SchemaCase>, String> {
    let mut rng = StdRng::seed_from_u64(6);
    let cfg = GenConfig {
        max_size: 5,
        max_index: 3,
        ..GenConfig::default()
    };
    let small = |rng: &mut StdRng| loop {
        let f = random_prop(rng, &cfg);
        if f.max_index().is_none_or(|m| m.0 <= 3) {
            return f;
        }
    };
    let mut cases = Vec::new();
    for i in 0..40 {
        let (a, b) = (small(&mut rng), small(&mut rng));
        let floor = a.max_index().max(b.max_index()).map_or(1, |m| m.0 + 1);
        let n = Index(rng.gen_range(floor..=4));
        let which = if i % 2 == 0 {
            Simulation::CFromCPrime
        } else {
            Simulation::RFromRPrime
        };
        let proof = schema_primed_rule(which, &a, &b, n).map_err(|e| e.to_string())?;
        let home = if which == Simulation::CFromCPrime {
            NdSystem::EBPCh
        } else {
            NdSystem::IPCh
        };
        cases.push(SchemaCase {
            home,
            hyps: open_hypotheses(&proof),
            proof,
        });

        let m = Index(rng.gen_range(floor..=4));
        let proof = schema_reindex(&a, &b, m, n).map_err(|e| e.to_string())?;
        cases.push(SchemaCase {
            home: NdSystem::FPLh,
            hyps: vec![PropFormula::imp(m, a.clone(), b.clone())],
            proof,
        });
    }
    let mut made = 0;
    while made < 40 {
        let a = small(&mut rng);
        let Some(v) = reindex(&mut rng, &a, 4) else {
            continue;
        };
        let (shape, wu) = witness_of(&a);
        let (_, wv) = witness_of(&v);
        let proof = schema_rewitness(&shape, &wu, &wv).map_err(|e| e.to_string())?;
        cases.push(SchemaCase {
            home: NdSystem::FPLh,
            hyps: vec![a],
            proof,
        });
        made += 1;
    }
    Ok(cases)
}

fn c6_schemas() -> Verdict {
    let cases = schema_cases()?;
    let mut judgments = 0;
    for c in &cases {
        let goal = &c.proof.conclusion;
        check_nd(c.home, &c.proof, &c.hyps, goal)
            .map_err(|e| format!("schema proof of `{}` invalid: {}", goal, e))?;
        for sys in PropSystem::ALL {
            let nd = match sys {
                PropSystem::BPCh => NdSystem::BPCh,
                PropSystem::EBPCh => NdSystem::EBPCh,
                PropSystem::IPCh => NdSystem::IPCh,
            };
            if check_nd(nd, &c.proof, &c.hyps, goal).is_err() {
                continue;
            }
            judgments += 1;
            let d =
                decide_prop(sys, &c.hyps, goal, Budget::default()).map_err(|e| e.to_string())?;
            ensure(d.is_provable(), || {
                let hyps: Vec<String> = c.hyps.iter().map(ToString::to_string).collect();
                format!(
                    "{}: [{}] |- {} has a proof but decides {:?}",
                    sys,
                    hyps.join(", "),
                    goal,
                    d.as_bool()
                )
            })?;
        }
    }
    ensure(judgments > 0, || {
        "no schema proof falls in a decidable system".into()
    })?;
    Ok(format!(
        "{} proofs valid, {} judgments in decidable systems all provable",
        cases.len(),
        judgments
    ))
}

// ---------------------------------------------------------------------------
// 7

fn c7_disjunction() -> Verdict {
    let mut rng = StdRng::seed_from_u64(7);
    let cfg = GenConfig {
        max_size: 6,
        max_index: 3,
        atoms: vec!["p".into(), "q".into()],
    };
    let mut summary = Vec::new();
    for sys in PropSystem::ALL {
        let (mut found, mut tried) = (0, 0);
        while found < 100 {
            tried += 1;
            ensure(tried <= 50_000, || {
                format!(
                    "{}: only {} provable disjunctions in {} tries",
                    sys, found, tried
                )
            })?;
            let (a, b) = (random_prop(&mut rng, &cfg), random_prop(&mut rng, &cfg));
            let disj = PropFormula::or(a.clone(), b.clone());
            match decide_prop(sys, &[], &disj, Budget::default())
                .map_err(|e| e.to_string())?
                .as_bool()
            {
                Some(true) => {}
                Some(false) => continue,
                None => return Err(format!("{}: `{}` inconclusive", sys, disj)),
            }
            found += 1;
            match split_disjunction(sys, &a, &b, Budget::default()) {
                Ok(_) => {}
                Err(SplitError::PropertyViolation { disjunction }) => {
                    return Err(format!("{}: property violated on `{}`", sys, disjunction))
                }
                Err(e) => return Err(format!("{}: `{}`: {}", sys, disj, e)),
            }
        }
        summary.push(format!("{} 100 of {}", sys, tried));
    }
    Ok(format!(
        "0 violations; provable pairs found: {}",
        summary.join(", ")
    ))
}

// ---------------------------------------------------------------------------
// 8

fn c8_separations() -> Verdict {
    let p = |s: &str| parse_prop(s).unwrap();
    let cases: [(PropSystem, Vec<PropFormula>, PropFormula, bool); 5] = [
        (PropSystem::EBPCh, vec![], p("(T ->1 F) ->2 F"), true),
        (PropSystem::BPCh, vec![], p("(T ->1 F) ->2 F"), false),
        (PropSystem::IPCh, vec![p("p"), p("p ->1 q")], p("q"), true),
        (PropSystem::BPCh, vec![], p("p | (p ->1 F)"), false),
        (PropSystem::IPCh, vec![], p("p | (p ->1 F)"), false),
    ];
    for (sys, gamma, a, expected) in &cases {
        let d = decide_prop(*sys, gamma, a, Budget::default()).map_err(|e| e.to_string())?;
        ensure(d.as_bool() == Some(*expected), || {
            format!("{} `{}`: got {:?}", sys, a, d.as_bool())
        })?;
        if !expected {
            let s = Sequent::new(gamma.iter().map(godel_b).collect(), vec![godel_b(a)]);
            let o = oracle_exhaustive(sys.counterpart().calculus(), &s, 6);
            ensure(o == OracleOutcome::NoProofWithinDepth, || {
                format!("oracle proves `{}`: {:?}", s, o)
            })?;
        }
    }
    Ok("5 verdicts reproduced, 3 negatives confirmed by the oracle at depth 6".into())
}

// ---------------------------------------------------------------------------
// 9

#[derive(Deserialize)]
struct HilbertEntry {
    system: String,
    goal: String,
    proof: HilbertProof,
}

fn c9_hilbert() -> Verdict {
    let text = std::fs::read_to_string(common::crate_dir().join("data/hilbert_corpus.jsonl"))
        .map_err(|e| e.to_string())?;
    let mut count = 0;
    let mut used = HashSet::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let e: HilbertEntry = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let spec: SystemSpec = e.system.parse()?;
        let sys: ModalSystem = e.system.parse()?;
        let goal = parse_modal(&e.goal).map_err(|x| x.to_string())?;
        check_hilbert(&spec, &e.proof, &goal)
            .map_err(|x| format!("{} `{}`: {}", e.system, e.goal, x))?;
        for l in &e.proof.lines {
            used.insert(match l {
                HilbertLine::Axiom { schema, .. } => format!("{}:{}", e.system, schema.name()),
                HilbertLine::Taut { .. } => "taut".into(),
                HilbertLine::Mp { .. } => "mp".into(),
                HilbertLine::Nec { .. } => "nec".into(),
            });
        }
        match decide_modal(sys, &[], &goal, Budget::default()) {
            Decision::Provable(p) => {
                check_sequent_proof(sys.calculus(), &p).map_err(|x| x.to_string())?
            }
            other => {
                return Err(format!(
                    "{} `{}` not sequent-provable: {:?}",
                    e.system, e.goal, other
                ))
            }
        }
        count += 1;
    }
    ensure(count == 30, || {
        format!("expected 30 proofs, found {}", count)
    })?;
    for need in [
        "K4h:H", "K4h:Kh", "K4h:4h", "KD4h:H", "KD4h:Kh", "KD4h:4h", "KD4h:Dh", "S4h:H", "S4h:4h",
        "S4h:Th", "mp", "nec",
    ] {
        ensure(used.contains(need), || {
            format!("corpus never uses {}", need)
        })?;
    }
    Ok(format!(
        "{} proofs kernel-valid and sequent-provable",
        count
    ))
}

// ---------------------------------------------------------------------------
// 10

fn c10_cli() -> Verdict {
    let failures = common::check_goldens();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let args: Vec<String> = [
        "--json", "prove", "--system", "IPCh", "--hyp", "p", "--hyp", "p ->1 q", "q",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let r = common::run(&args);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).map_err(|e| e.to_string())?;
    let proof: SequentProof =
        serde_json::from_value(v["proof"].clone()).map_err(|e| e.to_string())?;
    check_sequent_proof(CalculusSpec::GS4h, &proof).map_err(|e| e.to_string())?;
    ensure(
        serde_json::to_value(&proof).ok().as_ref() == Some(&v["proof"]),
        || "proof JSON does not round-trip".into(),
    )?;
    let parse: Vec<String> = ["--json", "parse", "--modal", "[]1 ([]0 p -> []0 q)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let v: serde_json::Value =
        serde_json::from_str(&common::run(&parse).stdout).map_err(|e| e.to_string())?;
    let ast: AstNode = serde_json::from_value(v["ast"].clone()).map_err(|e| e.to_string())?;
    ensure(
        ast.to_modal().ok() == parse_modal("[]1 ([]0 p -> []0 q)").ok(),
        || "AST JSON does not round-trip".into(),
    )?;
    Ok(format!(
        "{} golden cases, JSON round-trips verified",
        common::cases().len()
    ))
}
