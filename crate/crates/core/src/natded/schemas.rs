//! Generators for derived-rule schemas, each producing a proof tree the
//! kernel accepts.

use super::{Label, NdProof, NdRule};
use crate::syntax::{IllTyped, Index, PropFormula, UntypedProp};
use crate::translate::{apply_witness, Witness, WitnessError};

type P = NdProof<PropFormula>;

struct Labels(Label);

impl Labels {
    fn fresh(&mut self) -> Label {
        self.0 += 1;
        self.0
    }
}

fn node(rule: NdRule, c: PropFormula, ch: Vec<P>) -> P {
    NdProof::node(rule, c, ch)
}

fn hyp_opt<F: Clone>(f: F, label: Option<Label>) -> NdProof<F> {
    NdProof::node(NdRule::Hyp { label }, f, vec![])
}

fn split_imp(f: &PropFormula) -> (Index, PropFormula, PropFormula) {
    match f {
        PropFormula::Imp(n, a, b) => (*n, (**a).clone(), (**b).clone()),
        _ => unreachable!("schema step applied to a non-implication"),
    }
}

/// Extends `premise`, a derivation of `A ->m B`, to one of `A ->n B`.
///
/// Raising uses H once. Lowering repeats the step
/// `A ->k+1 B` to `A ->k B`: discharge `A & (A ->k B)` to get
/// `(A & (A ->k B)) ->k+1 A`, chain with the premise by `TrF`, then apply L.
/// Fresh labels are drawn above `*next_label`.
pub fn reindex_on(premise: P, n: Index, next_label: &mut Label) -> Result<P, IllTyped> {
    let (m, a, b) = split_imp(&premise.conclusion);
    let target = PropFormula::try_imp(n, a.clone(), b.clone())?;
    if n == m {
        return Ok(premise);
    }
    if n > m {
        return Ok(node(NdRule::H, target, vec![premise]));
    }
    let mut labels = Labels(*next_label);
    let mut proof = premise;
    for k in (n.get()..m.get()).rev() {
        let step = PropFormula::imp(k, a.clone(), b.clone());
        let pair = PropFormula::and(a.clone(), step.clone());
        let l = labels.fresh();
        let proj = node(
            NdRule::ImpI { label: Some(l) },
            PropFormula::imp(k + 1, pair.clone(), a.clone()),
            vec![node(
                NdRule::AndEL,
                a.clone(),
                vec![NdProof::hyp_labelled(pair.clone(), l)],
            )],
        );
        let chained = node(
            NdRule::TrF,
            PropFormula::imp(k + 1, pair, b.clone()),
            vec![proj, proof],
        );
        proof = node(NdRule::L, step, vec![chained]);
    }
    *next_label = labels.0;
    Ok(proof)
}

/// `A ->m B` derives `A ->n B` in FPLh.
pub fn schema_reindex(a: &PropFormula, b: &PropFormula, m: Index, n: Index) -> Result<P, IllTyped> {
    let from = PropFormula::try_imp(m, a.clone(), b.clone())?;
    PropFormula::try_imp(n, a.clone(), b.clone())?;
    let mut next = 0;
    reindex_on(NdProof::hyp(from), n, &mut next)
}

/// `A(u)` derives `A(v)` in FPLh, for any two witnesses of `a`.
pub fn schema_rewitness(a: &UntypedProp, u: &Witness, v: &Witness) -> Result<P, WitnessError> {
    let fu = apply_witness(a, u)?;
    let fv = apply_witness(a, v)?;
    let mut labels = Labels(0);
    Ok(reindex(&fu, &fv, None, &mut labels))
}

/// Proof of `fv` from `fu`, the leaves of `fu` carrying `label`.
fn reindex(fu: &PropFormula, fv: &PropFormula, label: Option<Label>, labels: &mut Labels) -> P {
    use PropFormula as F;
    if fu == fv {
        return hyp_opt(fu.clone(), label);
    }
    match (fu, fv) {
        (F::And(x, y), F::And(x2, y2)) => {
            let (l1, l2) = (labels.fresh(), labels.fresh());
            let left = node(
                NdRule::Tr { label: l1 },
                (**x2).clone(),
                vec![
                    node(
                        NdRule::AndEL,
                        (**x).clone(),
                        vec![hyp_opt(fu.clone(), label)],
                    ),
                    reindex(x, x2, Some(l1), labels),
                ],
            );
            let right = node(
                NdRule::Tr { label: l2 },
                (**y2).clone(),
                vec![
                    node(
                        NdRule::AndER,
                        (**y).clone(),
                        vec![hyp_opt(fu.clone(), label)],
                    ),
                    reindex(y, y2, Some(l2), labels),
                ],
            );
            node(NdRule::AndI, fv.clone(), vec![left, right])
        }
        (F::Or(x, y), F::Or(x2, y2)) => {
            let (l1, l2) = (labels.fresh(), labels.fresh());
            let left = node(
                NdRule::OrIL,
                fv.clone(),
                vec![reindex(x, x2, Some(l1), labels)],
            );
            let right = node(
                NdRule::OrIR,
                fv.clone(),
                vec![reindex(y, y2, Some(l2), labels)],
            );
            node(
                NdRule::OrE {
                    left: Some(l1),
                    right: Some(l2),
                },
                fv.clone(),
                vec![hyp_opt(fu.clone(), label), left, right],
            )
        }
        (F::Imp(m, x, y), F::Imp(n, x2, y2)) => {
            let k = (*m).max(*n);
            let mut h = hyp_opt(fu.clone(), label);
            if k > *m {
                h = node(NdRule::H, F::imp(k, (**x).clone(), (**y).clone()), vec![h]);
            }
            let (l1, l2) = (labels.fresh(), labels.fresh());
            let pre = node(
                NdRule::ImpI { label: Some(l1) },
                F::imp(k, (**x2).clone(), (**x).clone()),
                vec![reindex(x2, x, Some(l1), labels)],
            );
            let post = node(
                NdRule::ImpI { label: Some(l2) },
                F::imp(k, (**y).clone(), (**y2).clone()),
                vec![reindex(y, y2, Some(l2), labels)],
            );
            let t1 = node(
                NdRule::TrF,
                F::imp(k, (**x2).clone(), (**y).clone()),
                vec![pre, h],
            );
            let t2 = node(
                NdRule::TrF,
                F::imp(k, (**x2).clone(), (**y2).clone()),
                vec![t1, post],
            );
            let mut next = labels.0;
            let out = reindex_on(t2, *n, &mut next).expect("target is a witness instance");
            labels.0 = next;
            out
        }
        _ => unreachable!("witness instances share their shape"),
    }
}

/// Which of the two simulations of a full rule by its `T`-restricted form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simulation {
    /// `A, A ->n F` gives `F` through `T ->n F`.
    CFromCPrime,
    /// `A, A ->n B` gives `B` through `T ->n B`.
    RFromRPrime,
}

impl std::str::FromStr for Simulation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "c" | "c-from-c-prime" => Ok(Simulation::CFromCPrime),
            "r" | "r-from-r-prime" => Ok(Simulation::RFromRPrime),
            _ => Err(format!("unknown simulation `{}` (expected c or r)", s)),
        }
    }
}

/// The rule at the root is applied only with `T` in the minor premise, so
/// the tree also witnesses the primed rule simulating the full one. `b` is
/// ignored for [`Simulation::CFromCPrime`].
pub fn schema_primed_rule(
    which: Simulation,
    a: &PropFormula,
    b: &PropFormula,
    n: Index,
) -> Result<P, IllTyped> {
    let (b, rule) = match which {
        Simulation::CFromCPrime => (PropFormula::Bot, NdRule::C),
        Simulation::RFromRPrime => (b.clone(), NdRule::R),
    };
    let major = PropFormula::try_imp(n, a.clone(), b.clone())?;
    let lift = node(
        NdRule::ImpI { label: None },
        PropFormula::try_imp(n, PropFormula::Top, a.clone())?,
        vec![NdProof::hyp(a.clone())],
    );
    let via_top = node(
        NdRule::TrF,
        PropFormula::try_imp(n, PropFormula::Top, b.clone())?,
        vec![lift, NdProof::hyp(major)],
    );
    Ok(node(
        rule,
        b,
        vec![node(NdRule::TopI, PropFormula::Top, vec![]), via_top],
    ))
}

type U = NdProof<UntypedProp>;

fn unode(rule: NdRule, c: UntypedProp, ch: Vec<U>) -> U {
    NdProof::node(rule, c, ch)
}

/// From `x`, a proof of `T -> (A -> B)`, derive `A -> B` using the open
/// assumptions `A` (labelled `a_label`) and `(A & (A -> B)) -> B`.
pub fn star_subproof(a: &UntypedProp, b: &UntypedProp, x: U, a_label: Option<Label>) -> U {
    use UntypedProp as F;
    let ab = F::imp(a.clone(), b.clone());
    let pair = F::and(a.clone(), ab.clone());
    let lob = F::imp(pair.clone(), b.clone());
    let top_a = unode(
        NdRule::ImpI { label: None },
        F::imp(F::Top, a.clone()),
        vec![hyp_opt(a.clone(), a_label)],
    );
    let top_pair = unode(NdRule::AndIf, F::imp(F::Top, pair), vec![top_a, x]);
    let top_b = unode(
        NdRule::TrF,
        F::imp(F::Top, b.clone()),
        vec![top_pair, NdProof::hyp(lob)],
    );
    let a_top = unode(
        NdRule::ImpI { label: None },
        F::imp(a.clone(), F::Top),
        vec![unode(NdRule::TopI, F::Top, vec![])],
    );
    unode(NdRule::TrF, ab, vec![a_top, top_b])
}

/// Untyped FPL: the rule `(T -> A) -> A / T -> A` simulates
/// `(A & (A -> B)) -> B / A -> B`. The result derives `A -> B` from the
/// single open assumption `(A & (A -> B)) -> B` without using L.
pub fn schema_star_rule_for(a: &UntypedProp, b: &UntypedProp) -> U {
    use UntypedProp as F;
    let ab = F::imp(a.clone(), b.clone());
    let top_ab = F::imp(F::Top, ab.clone());
    let pair = F::and(a.clone(), ab.clone());
    let lob = F::imp(pair.clone(), b.clone());

    let inner = star_subproof(a, b, NdProof::hyp_labelled(top_ab.clone(), 2), Some(1));
    let closed = unode(
        NdRule::ImpI { label: Some(2) },
        F::imp(top_ab.clone(), ab.clone()),
        vec![inner],
    );
    let lifted = unode(NdRule::LTop, top_ab, vec![closed]);
    let star = star_subproof(a, b, lifted, Some(1));
    let a_ab = unode(
        NdRule::ImpI { label: Some(1) },
        F::imp(a.clone(), ab),
        vec![star],
    );
    let a_a = unode(
        NdRule::ImpI { label: Some(4) },
        F::imp(a.clone(), a.clone()),
        vec![NdProof::hyp_labelled(a.clone(), 4)],
    );
    let a_pair = unode(NdRule::AndIf, F::imp(a.clone(), pair), vec![a_a, a_ab]);
    unode(
        NdRule::TrF,
        F::imp(a.clone(), b.clone()),
        vec![a_pair, NdProof::hyp(lob)],
    )
}

/// [`schema_star_rule_for`] at `A = p`, `B = q`.
pub fn schema_star_rule() -> U {
    schema_star_rule_for(&UntypedProp::atom("p"), &UntypedProp::atom("q"))
}

#[cfg(test)]
mod tests {
    use super::super::{check_nd, NdSystem};
    use super::*;
    use crate::syntax::{parse_prop, parse_untyped_prop};

    fn p(s: &str) -> PropFormula {
        parse_prop(s).unwrap()
    }

    fn u(s: &str) -> UntypedProp {
        parse_untyped_prop(s).unwrap()
    }

    #[test]
    fn reindex_cases() {
        let down = schema_reindex(&p("p"), &p("q"), Index(2), Index(1)).unwrap();
        assert_eq!(
            check_nd(NdSystem::FPLh, &down, &[p("p ->2 q")], &p("p ->1 q")),
            Ok(())
        );
        assert!(down.rules_used().contains("L"));
        let up = schema_reindex(&p("p"), &p("q"), Index(1), Index(2)).unwrap();
        assert_eq!(up.rule, NdRule::H);
        assert_eq!(
            check_nd(NdSystem::BPCh, &up, &[p("p ->1 q")], &p("p ->2 q")),
            Ok(())
        );
        let same = schema_reindex(&p("p"), &p("q"), Index(1), Index(1)).unwrap();
        assert_eq!(same.size(), 1);
        assert!(schema_reindex(&p("p ->2 q"), &p("q"), Index(2), Index(3)).is_err());
    }

    #[test]
    fn rewitness_cases() {
        let a = u("p -> q");
        let pr = schema_rewitness(
            &a,
            &Witness::imp(Witness::None, 1, Witness::None),
            &Witness::imp(Witness::None, 3, Witness::None),
        )
        .unwrap();
        assert_eq!(
            check_nd(NdSystem::FPLh, &pr, &[p("p ->1 q")], &p("p ->3 q")),
            Ok(())
        );

        let a = u("(p -> q) -> r");
        let w = |inner, outer| {
            Witness::imp(
                Witness::imp(Witness::None, inner, Witness::None),
                outer,
                Witness::None,
            )
        };
        let pr = schema_rewitness(&a, &w(1, 2), &w(2, 3)).unwrap();
        assert_eq!(
            check_nd(
                NdSystem::FPLh,
                &pr,
                &[p("(p ->1 q) ->2 r")],
                &p("(p ->2 q) ->3 r")
            ),
            Ok(())
        );
        let back = schema_rewitness(&a, &w(2, 3), &w(1, 2)).unwrap();
        assert_eq!(
            check_nd(
                NdSystem::FPLh,
                &back,
                &[p("(p ->2 q) ->3 r")],
                &p("(p ->1 q) ->2 r")
            ),
            Ok(())
        );

        let same = schema_rewitness(&a, &w(1, 2), &w(1, 2)).unwrap();
        assert_eq!(same.size(), 1);
    }

    #[test]
    fn primed_rule_trees() {
        let c = schema_primed_rule(Simulation::CFromCPrime, &p("p"), &p("q"), Index(1)).unwrap();
        assert_eq!(
            check_nd(NdSystem::EBPCh, &c, &[p("p"), p("p ->1 F")], &p("F")),
            Ok(())
        );
        let r = schema_primed_rule(Simulation::RFromRPrime, &p("p"), &p("q"), Index(1)).unwrap();
        assert_eq!(
            check_nd(NdSystem::IPCh, &r, &[p("p"), p("p ->1 q")], &p("q")),
            Ok(())
        );
        let t = schema_primed_rule(Simulation::RFromRPrime, &p("T"), &p("T"), Index(1)).unwrap();
        assert_eq!(
            check_nd(NdSystem::IPCh, &t, &[p("T"), p("T ->1 T")], &p("T")),
            Ok(())
        );
    }

    #[test]
    fn star_rule_tree() {
        let proof = schema_star_rule();
        assert_eq!(
            check_nd(
                NdSystem::FPLh,
                &proof,
                &[u("(p & (p -> q)) -> q")],
                &u("p -> q")
            ),
            Ok(())
        );
        assert!(!proof.rules_used().contains("L"));
    }
}
