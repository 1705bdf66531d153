use std::collections::{BTreeMap, BTreeSet};

use hierlog::decide::{decide_prop, PropSystem};
use hierlog::gen::mutate_index;
use hierlog::hilbert::check_tautology;
use hierlog::sequent::{
    check_sequent_proof, prove_sequent, Budget, CalculusSpec, SearchOutcome, Sequent,
};
use hierlog::syntax::AstNode;
use hierlog::translate::{apply_witness, godel_b, godel_b_untyped, witness_of, Forget};
use hierlog::{parse_modal, parse_prop, Index, ModalFormula, PropFormula};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn level(f: &PropFormula) -> u32 {
    f.max_index().map_or(0, |i| i.0)
}

fn prop_formula() -> impl Strategy<Value = PropFormula> {
    let leaf = prop_oneof![
        Just(PropFormula::Top),
        Just(PropFormula::Bot),
        "[pqr]".prop_map(PropFormula::Atom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PropFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PropFormula::or(a, b)),
            (inner.clone(), inner, 0u32..3).prop_map(|(a, b, bump)| {
                let n = level(&a).max(level(&b)) + 1 + bump;
                PropFormula::imp(n, a, b)
            }),
        ]
    })
}

fn modal_formula() -> impl Strategy<Value = ModalFormula> {
    let leaf = prop_oneof![
        Just(ModalFormula::Top),
        Just(ModalFormula::Bot),
        "[pq]".prop_map(ModalFormula::Atom),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ModalFormula::not),
            (inner.clone(), 0u32..2).prop_map(|(a, bump)| {
                let n = a.max_index().map_or(0, |i| i.0 + 1) + bump;
                ModalFormula::boxed(n, a)
            }),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ModalFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ModalFormula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ModalFormula::imp(a, b)),
        ]
    })
}

/// Truth-table reference for the tautology check: maximal boxed
/// subformulas are treated as atoms.
fn truth_table(f: &ModalFormula) -> bool {
    fn letters(f: &ModalFormula, out: &mut BTreeSet<String>) {
        match f {
            ModalFormula::Atom(_) | ModalFormula::Box(..) => {
                out.insert(f.to_string());
            }
            ModalFormula::Top | ModalFormula::Bot => {}
            ModalFormula::Not(a) => letters(a, out),
            ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
                letters(a, out);
                letters(b, out);
            }
        }
    }
    fn eval(f: &ModalFormula, v: &BTreeMap<String, bool>) -> bool {
        match f {
            ModalFormula::Atom(_) | ModalFormula::Box(..) => v[&f.to_string()],
            ModalFormula::Top => true,
            ModalFormula::Bot => false,
            ModalFormula::Not(a) => !eval(a, v),
            ModalFormula::And(a, b) => eval(a, v) && eval(b, v),
            ModalFormula::Or(a, b) => eval(a, v) || eval(b, v),
            ModalFormula::Imp(a, b) => !eval(a, v) || eval(b, v),
        }
    }
    let mut names = BTreeSet::new();
    letters(f, &mut names);
    let names: Vec<String> = names.into_iter().collect();
    (0u32..1 << names.len()).all(|bits| {
        let v = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), bits >> i & 1 == 1))
            .collect();
        eval(f, &v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn prop_text_round_trips(f in prop_formula()) {
        prop_assert!(f.is_well_formed());
        prop_assert_eq!(parse_prop(&f.to_string()), Ok(f));
    }

    #[test]
    fn modal_text_round_trips(f in modal_formula()) {
        prop_assert!(f.is_well_formed());
        prop_assert_eq!(parse_modal(&f.to_string()), Ok(f));
    }

    #[test]
    fn ast_json_round_trips(f in prop_formula(), g in modal_formula()) {
        let back: PropFormula = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
        let node: AstNode = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(node.to_modal(), Ok(g));
    }

    #[test]
    fn godel_translation_respects_levels(f in prop_formula()) {
        let b = godel_b(&f);
        prop_assert!(b.is_well_formed());
        prop_assert_eq!(b.max_index(), Some(Index(level(&f))));
        prop_assert_eq!(b.forget(), godel_b_untyped(&f.forget()));
    }

    #[test]
    fn witnesses_reassemble(f in prop_formula()) {
        let (shape, w) = witness_of(&f);
        prop_assert!(w.is_strict());
        prop_assert_eq!(apply_witness(&shape, &w), Ok(f));
    }

    #[test]
    fn mutants_are_ill_typed(f in prop_formula(), seed in any::<u64>()) {
        if let Some(bad) = mutate_index(&mut StdRng::seed_from_u64(seed), &f) {
            prop_assert!(!bad.is_well_formed());
            prop_assert!(parse_prop(&bad.to_string()).is_err());
        }
    }

    #[test]
    fn tautology_check_matches_truth_tables(f in modal_formula()) {
        prop_assert_eq!(check_tautology(&f), truth_table(&f));
    }

    #[test]
    fn sequent_text_round_trips(a in modal_formula(), b in modal_formula(), c in modal_formula()) {
        let s = Sequent::new(vec![a, b], vec![c]);
        prop_assert_eq!(s.to_string().parse::<Sequent>(), Ok(s));
    }

    #[test]
    fn found_proofs_check_and_respect_inclusions(a in modal_formula(), b in modal_formula()) {
        let s = Sequent::new(vec![a], vec![b]);
        let mut verdicts = Vec::new();
        for calc in [CalculusSpec::GK4h, CalculusSpec::GKD4h, CalculusSpec::GS4h] {
            match prove_sequent(calc, &s, Budget::default()) {
                SearchOutcome::Provable(p) => {
                    prop_assert_eq!(check_sequent_proof(calc, &p), Ok(()));
                    prop_assert_eq!(p.sequent.normalized(), s.normalized());
                    verdicts.push(true);
                }
                SearchOutcome::NotProvable { .. } => verdicts.push(false),
                SearchOutcome::BudgetExceeded { .. } => return Err(TestCaseError::fail("budget exhausted")),
            }
        }
        // K4h is contained in both KD4h and S4h.
        prop_assert!(!verdicts[0] || (verdicts[1] && verdicts[2]), "{}: {:?}", s, verdicts);
    }

    #[test]
    fn propositional_systems_are_nested(a in prop_formula(), h in prop_formula()) {
        let d = |sys| decide_prop(sys, std::slice::from_ref(&h), &a, Budget::default()).unwrap().as_bool().unwrap();
        if d(PropSystem::BPCh) {
            prop_assert!(d(PropSystem::EBPCh));
            prop_assert!(d(PropSystem::IPCh));
        }
        if d(PropSystem::EBPCh) {
            prop_assert!(d(PropSystem::IPCh));
        }
    }
}
