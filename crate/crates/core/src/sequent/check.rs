use std::collections::BTreeMap;

use super::{CalculusSpec, ModalKind, SeqRule, Sequent, SequentProof};
use crate::natded::NodePath;
use crate::syntax::{IllTyped, Index, ModalFormula};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeqNodeError {
    #[error("rule {rule} is not a rule of {calculus}")]
    RuleNotInCalculus {
        rule: &'static str,
        calculus: &'static str,
    },
    #[error("rule {rule} takes {expected} premises, found {found}")]
    Arity {
        rule: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("sequent does not follow by {0}")]
    Mismatch(&'static str),
    #[error("index violation: side index {0} is not below {1}")]
    IndexViolation(Index, Index),
    #[error("{0}")]
    IllTyped(#[from] IllTyped),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at node {path}: {reason}")]
pub struct SeqError {
    pub path: NodePath,
    pub reason: SeqNodeError,
}

type Bag = BTreeMap<ModalFormula, usize>;

fn bag(v: &[ModalFormula]) -> Bag {
    let mut b = Bag::new();
    for f in v {
        *b.entry(f.clone()).or_default() += 1;
    }
    b
}

fn add(mut b: Bag, extra: &Bag) -> Bag {
    for (f, k) in extra {
        *b.entry(f.clone()).or_default() += k;
    }
    b
}

fn with(mut b: Bag, f: &ModalFormula) -> Bag {
    *b.entry(f.clone()).or_default() += 1;
    b
}

/// Removes one copy of `f`, or `None` when there is none.
fn without(mut b: Bag, f: &ModalFormula) -> Option<Bag> {
    let k = b.get_mut(f)?;
    *k -= 1;
    if *k == 0 {
        b.remove(f);
    }
    Some(b)
}

struct Sides {
    ante: Bag,
    succ: Bag,
}

impl Sides {
    fn of(s: &Sequent) -> Self {
        Sides {
            ante: bag(&s.ante),
            succ: bag(&s.succ),
        }
    }
}

/// Checks every node of `proof` against the rules of `calc`. Cut is
/// accepted.
pub fn check_sequent_proof(calc: CalculusSpec, proof: &SequentProof) -> Result<(), SeqError> {
    check_at(calc, proof, &NodePath::default())
}

fn check_at(calc: CalculusSpec, p: &SequentProof, path: &NodePath) -> Result<(), SeqError> {
    let err = |reason| SeqError {
        path: path.clone(),
        reason,
    };
    for f in p.sequent.ante.iter().chain(&p.sequent.succ) {
        f.check_well_formed().map_err(|e| err(e.into()))?;
    }
    check_node(calc, p).map_err(err)?;
    for (i, c) in p.children.iter().enumerate() {
        let mut child = path.0.clone();
        child.push(i);
        check_at(calc, c, &NodePath(child))?;
    }
    Ok(())
}

fn arity(rule: &SeqRule) -> usize {
    use SeqRule::*;
    match rule {
        Ax | BotL | TopR => 0,
        Cut { .. } | AndR { .. } | OrL { .. } | ImpL { .. } => 2,
        _ => 1,
    }
}

fn check_node(calc: CalculusSpec, p: &SequentProof) -> Result<(), SeqNodeError> {
    use ModalFormula as M;
    let rule = &p.rule;
    let name = rule.name();
    match rule {
        SeqRule::BoxL { .. } if !calc.has_box_left() => {
            return Err(SeqNodeError::RuleNotInCalculus {
                rule: name,
                calculus: calc.name(),
            })
        }
        SeqRule::ModalR { kind, .. } if !calc.allows(*kind) => {
            return Err(SeqNodeError::RuleNotInCalculus {
                rule: name,
                calculus: calc.name(),
            })
        }
        _ => {}
    }
    if p.children.len() != arity(rule) {
        return Err(SeqNodeError::Arity {
            rule: name,
            expected: arity(rule),
            found: p.children.len(),
        });
    }
    let node = Sides::of(&p.sequent);
    let prem: Vec<Sides> = p.children.iter().map(|c| Sides::of(&c.sequent)).collect();
    let ok = |b: bool| {
        if b {
            Ok(())
        } else {
            Err(SeqNodeError::Mismatch(name))
        }
    };
    let need = |b: Option<Bag>| b.ok_or(SeqNodeError::Mismatch(name));

    match rule {
        SeqRule::Ax => ok(p.sequent.ante.len() == 1 && p.sequent.ante == p.sequent.succ),
        SeqRule::BotL => ok(p.sequent.ante == [M::Bot] && p.sequent.succ.is_empty()),
        SeqRule::TopR => ok(p.sequent.ante.is_empty() && p.sequent.succ == [M::Top]),
        SeqRule::WL { formula } => {
            ok(node.ante == with(prem[0].ante.clone(), formula) && node.succ == prem[0].succ)
        }
        SeqRule::WR { formula } => {
            ok(node.succ == with(prem[0].succ.clone(), formula) && node.ante == prem[0].ante)
        }
        SeqRule::CL { formula } => ok(node.ante.contains_key(formula)
            && prem[0].ante == with(node.ante.clone(), formula)
            && node.succ == prem[0].succ),
        SeqRule::CR { formula } => ok(node.succ.contains_key(formula)
            && prem[0].succ == with(node.succ.clone(), formula)
            && node.ante == prem[0].ante),
        SeqRule::Cut { formula } => {
            let d0 = need(without(prem[0].succ.clone(), formula))?;
            let g1 = need(without(prem[1].ante.clone(), formula))?;
            ok(node.ante == add(prem[0].ante.clone(), &g1) && node.succ == add(d0, &prem[1].succ))
        }
        SeqRule::AndL { i, principal } => {
            let M::And(a0, a1) = principal else {
                return ok(false);
            };
            let ai = if *i == 0 { a0 } else { a1 };
            let ctx = need(without(node.ante.clone(), principal))?;
            ok(*i < 2 && prem[0].ante == with(ctx, ai) && prem[0].succ == node.succ)
        }
        SeqRule::OrR { i, principal } => {
            let M::Or(a0, a1) = principal else {
                return ok(false);
            };
            let ai = if *i == 0 { a0 } else { a1 };
            let ctx = need(without(node.succ.clone(), principal))?;
            ok(*i < 2 && prem[0].succ == with(ctx, ai) && prem[0].ante == node.ante)
        }
        SeqRule::ImpR { principal } => {
            let M::Imp(a, b) = principal else {
                return ok(false);
            };
            let ctx = need(without(node.succ.clone(), principal))?;
            ok(prem[0].ante == with(node.ante.clone(), a) && prem[0].succ == with(ctx, b))
        }
        SeqRule::NotL { principal } => {
            let M::Not(a) = principal else {
                return ok(false);
            };
            let ctx = need(without(node.ante.clone(), principal))?;
            ok(prem[0].ante == ctx && prem[0].succ == with(node.succ.clone(), a))
        }
        SeqRule::NotR { principal } => {
            let M::Not(a) = principal else {
                return ok(false);
            };
            let ctx = need(without(node.succ.clone(), principal))?;
            ok(prem[0].succ == ctx && prem[0].ante == with(node.ante.clone(), a))
        }
        SeqRule::BoxL { principal } => {
            let M::Box(_, a) = principal else {
                return ok(false);
            };
            let ctx = need(without(node.ante.clone(), principal))?;
            ok(prem[0].ante == with(ctx, a) && prem[0].succ == node.succ)
        }
        SeqRule::AndR { principal } => {
            let M::And(a, b) = principal else {
                return ok(false);
            };
            let d0 = need(without(prem[0].succ.clone(), a))?;
            let d1 = need(without(prem[1].succ.clone(), b))?;
            ok(node.ante == add(prem[0].ante.clone(), &prem[1].ante)
                && node.succ == with(add(d0, &d1), principal))
        }
        SeqRule::OrL { principal } => {
            let M::Or(a, b) = principal else {
                return ok(false);
            };
            let g0 = need(without(prem[0].ante.clone(), a))?;
            let g1 = need(without(prem[1].ante.clone(), b))?;
            ok(node.ante == with(add(g0, &g1), principal)
                && node.succ == add(prem[0].succ.clone(), &prem[1].succ))
        }
        SeqRule::ImpL { principal } => {
            let M::Imp(a, b) = principal else {
                return ok(false);
            };
            let d0 = need(without(prem[0].succ.clone(), a))?;
            let g1 = need(without(prem[1].ante.clone(), b))?;
            ok(node.ante == with(add(prem[0].ante.clone(), &g1), principal)
                && node.succ == add(d0, &prem[1].succ))
        }
        SeqRule::ModalR {
            kind,
            n,
            sigma,
            gamma,
        } => check_modal(*kind, Index(*n), sigma, gamma, &node, &prem[0], name),
    }
}

fn check_modal(
    kind: ModalKind,
    n: Index,
    sigma: &[ModalFormula],
    gamma: &[ModalFormula],
    node: &Sides,
    prem: &Sides,
    name: &'static str,
) -> Result<(), SeqNodeError> {
    use ModalFormula as M;
    let mismatch = SeqNodeError::Mismatch(name);
    let sigma_index = if kind == ModalKind::Lob { n.succ() } else { n };
    let mut concl_ante = Bag::new();
    let mut prem_ante = Bag::new();
    for s in sigma {
        concl_ante = with(concl_ante, &M::try_boxed(sigma_index, s.clone())?);
        prem_ante = with(prem_ante, s);
    }
    for g in gamma {
        let M::Box(m, inner) = g else {
            return Err(mismatch);
        };
        let fits = if kind == ModalKind::Lob {
            *m <= n
        } else {
            *m < n
        };
        if !fits {
            return Err(SeqNodeError::IndexViolation(*m, n));
        }
        concl_ante = with(concl_ante, g);
        prem_ante = with(prem_ante, g);
        if kind != ModalKind::S {
            prem_ante = with(prem_ante, inner);
        }
    }
    if node.ante != concl_ante {
        return Err(mismatch);
    }
    match kind {
        ModalKind::D => {
            if !node.succ.is_empty() || !prem.succ.is_empty() {
                return Err(mismatch);
            }
        }
        _ => {
            let mut it = node.succ.iter();
            let (Some((M::Box(k, a), 1)), None) = (it.next(), it.next()) else {
                return Err(mismatch);
            };
            if *k != n || prem.succ != bag(std::slice::from_ref(a)) {
                return Err(mismatch);
            }
            if kind == ModalKind::Lob {
                prem_ante = with(prem_ante, &M::Box(*k, a.clone()));
            }
        }
    }
    if prem.ante != prem_ante {
        return Err(mismatch);
    }
    Ok(())
}
