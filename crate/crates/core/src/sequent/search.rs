//! Cut-free backward search over set-based sequents.
//!
//! Formulas are interned once; a search state is a pair of sorted id sets
//! plus, for `G(S4h)`, the boxes already unboxed on the left since the last
//! right modal rule. Classical propositional rules are invertible and are
//! applied eagerly, principal formula consumed. At a saturated state each
//! right modal rule is tried with its largest premise: for the principal
//! `[]n A` every antecedent box of index below `n` plays γ and every box of
//! index `n` plays σ. The D rule takes `n` one above the largest box index,
//! which turns every box into a γ.
//!
//! The modal rules of `G(K4h)` and `G(S4h)` strictly lower the largest
//! index of the sequent, so search terminates on its own. D and the
//! experimental GL rule do not, and rely on a check for states repeated
//! along the current branch. Failures are memoized only when they did not
//! depend on such a check against a state further down the stack.
//!
//! A proof found on sets is rebuilt in the multiset calculus with explicit
//! weakening and contraction.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use super::{CalculusSpec, ModalKind, ModalSystem, SeqRule, Sequent, SequentProof};
use crate::syntax::{IllTyped, Index, ModalFormula};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Cap on the number of search states visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Provable(SequentProof),
    NotProvable { visited: u64, budget: u64 },
    BudgetExceeded { visited: u64 },
}

impl SearchOutcome {
    pub fn is_provable(&self) -> bool {
        matches!(self, SearchOutcome::Provable(_))
    }
}

type Id = u32;
/// Antecedent and succedent of a premise, as interned ids.
type Sides = (Vec<Id>, Vec<Id>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Atom(String),
    Top,
    Bot,
    Not(Id),
    And(Id, Id),
    Or(Id, Id),
    Imp(Id, Id),
    Box(Index, Id),
}

#[derive(Default)]
struct Arena {
    nodes: Vec<Node>,
    formulas: Vec<ModalFormula>,
    ids: HashMap<Node, Id>,
}

impl Arena {
    fn intern(&mut self, f: &ModalFormula) -> Id {
        use ModalFormula as M;
        let node = match f {
            M::Atom(p) => Node::Atom(p.clone()),
            M::Top => Node::Top,
            M::Bot => Node::Bot,
            M::Not(a) => Node::Not(self.intern(a)),
            M::And(a, b) => Node::And(self.intern(a), self.intern(b)),
            M::Or(a, b) => Node::Or(self.intern(a), self.intern(b)),
            M::Imp(a, b) => Node::Imp(self.intern(a), self.intern(b)),
            M::Box(n, a) => Node::Box(*n, self.intern(a)),
        };
        if let Some(&id) = self.ids.get(&node) {
            return id;
        }
        let id = self.nodes.len() as Id;
        self.ids.insert(node.clone(), id);
        self.nodes.push(node);
        self.formulas.push(f.clone());
        id
    }

    fn node(&self, id: Id) -> &Node {
        &self.nodes[id as usize]
    }

    fn formula(&self, id: Id) -> &ModalFormula {
        &self.formulas[id as usize]
    }

    fn formulas(&self, ids: &[Id]) -> Vec<ModalFormula> {
        ids.iter().map(|&i| self.formula(i).clone()).collect()
    }
}

fn insert(set: &[Id], extra: &[Id]) -> Vec<Id> {
    let mut out = set.to_vec();
    for &x in extra {
        if let Err(pos) = out.binary_search(&x) {
            out.insert(pos, x);
        }
    }
    out
}

fn remove(set: &[Id], x: Id) -> Vec<Id> {
    set.iter().copied().filter(|&y| y != x).collect()
}

#[derive(Debug)]
enum Step {
    BotL,
    TopR,
    Ax(Id),
    Left(Id),
    Right(Id),
    BoxL(Id),
    Modal {
        kind: ModalKind,
        n: Index,
        principal: Option<Id>,
        sigma: Vec<Id>,
        gamma: Vec<Id>,
    },
}

#[derive(Debug)]
struct SetProof {
    ante: Vec<Id>,
    succ: Vec<Id>,
    step: Step,
    children: Vec<Rc<SetProof>>,
}

const NO_LOOP: usize = usize::MAX;

enum Res {
    Proved(Rc<SetProof>),
    /// Smallest stack depth of a repeated state the failure relied on.
    Failed(usize),
}

struct OutOfBudget;

type Key = (Vec<Id>, Vec<Id>, Vec<Id>);

struct Search<'a> {
    arena: &'a Arena,
    calc: CalculusSpec,
    budget: u64,
    visited: u64,
    proved: HashMap<Key, Rc<SetProof>>,
    failed: HashSet<Key>,
    branch: HashMap<Key, usize>,
}

impl Search<'_> {
    fn prove(
        &mut self,
        ante: Vec<Id>,
        succ: Vec<Id>,
        used: Vec<Id>,
        depth: usize,
    ) -> Result<Res, OutOfBudget> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(OutOfBudget);
        }
        let key = (ante, succ, used);
        if let Some(p) = self.proved.get(&key) {
            return Ok(Res::Proved(p.clone()));
        }
        if self.failed.contains(&key) {
            return Ok(Res::Failed(NO_LOOP));
        }
        if let Some(&d) = self.branch.get(&key) {
            return Ok(Res::Failed(d));
        }
        let (ante, succ, _) = &key;
        let leaf = |step| {
            Res::Proved(Rc::new(SetProof {
                ante: ante.clone(),
                succ: succ.clone(),
                step,
                children: vec![],
            }))
        };
        let a = self.arena;
        if ante.iter().any(|&i| *a.node(i) == Node::Bot) {
            return Ok(leaf(Step::BotL));
        }
        if succ.iter().any(|&i| *a.node(i) == Node::Top) {
            return Ok(leaf(Step::TopR));
        }
        if let Some(&shared) = ante.iter().find(|i| succ.binary_search(i).is_ok()) {
            return Ok(leaf(Step::Ax(shared)));
        }

        self.branch.insert(key.clone(), depth);
        let res = self.expand(&key, depth);
        self.branch.remove(&key);
        Ok(match res? {
            Res::Proved(p) => {
                self.proved.insert(key, p.clone());
                Res::Proved(p)
            }
            Res::Failed(floor) if floor >= depth => {
                self.failed.insert(key);
                Res::Failed(NO_LOOP)
            }
            failed => failed,
        })
    }

    fn expand(&mut self, key: &Key, depth: usize) -> Result<Res, OutOfBudget> {
        let (ante, succ, used) = key;
        let a = self.arena;
        let premises: Option<(Step, Vec<Sides>)> = None
            .or_else(|| {
                ante.iter().find_map(|&p| match *a.node(p) {
                    Node::And(x, y) => Some((
                        Step::Left(p),
                        vec![(insert(&remove(ante, p), &[x, y]), succ.clone())],
                    )),
                    Node::Not(x) => {
                        Some((Step::Left(p), vec![(remove(ante, p), insert(succ, &[x]))]))
                    }
                    _ => None,
                })
            })
            .or_else(|| {
                succ.iter().find_map(|&p| match *a.node(p) {
                    Node::Or(x, y) => Some((
                        Step::Right(p),
                        vec![(ante.clone(), insert(&remove(succ, p), &[x, y]))],
                    )),
                    Node::Imp(x, y) => Some((
                        Step::Right(p),
                        vec![(insert(ante, &[x]), insert(&remove(succ, p), &[y]))],
                    )),
                    Node::Not(x) => {
                        Some((Step::Right(p), vec![(insert(ante, &[x]), remove(succ, p))]))
                    }
                    _ => None,
                })
            })
            .or_else(|| {
                ante.iter().find_map(|&p| match *a.node(p) {
                    Node::Or(x, y) => {
                        let rest = remove(ante, p);
                        Some((
                            Step::Left(p),
                            vec![
                                (insert(&rest, &[x]), succ.clone()),
                                (insert(&rest, &[y]), succ.clone()),
                            ],
                        ))
                    }
                    Node::Imp(x, y) => {
                        let rest = remove(ante, p);
                        Some((
                            Step::Left(p),
                            vec![
                                (rest.clone(), insert(succ, &[x])),
                                (insert(&rest, &[y]), succ.clone()),
                            ],
                        ))
                    }
                    _ => None,
                })
            })
            .or_else(|| {
                succ.iter().find_map(|&p| match *a.node(p) {
                    Node::And(x, y) => {
                        let rest = remove(succ, p);
                        Some((
                            Step::Right(p),
                            vec![
                                (ante.clone(), insert(&rest, &[x])),
                                (ante.clone(), insert(&rest, &[y])),
                            ],
                        ))
                    }
                    _ => None,
                })
            });

        if let Some((step, prems)) = premises {
            return self.all_of(key, step, prems, used.clone(), depth);
        }

        if self.calc.has_box_left() {
            let fresh = ante.iter().find_map(|&p| match *a.node(p) {
                Node::Box(_, x) if used.binary_search(&p).is_err() => Some((p, x)),
                _ => None,
            });
            if let Some((p, x)) = fresh {
                let prem = (insert(ante, &[x]), succ.clone());
                return self.all_of(key, Step::BoxL(p), vec![prem], insert(used, &[p]), depth);
            }
        }

        let mut floor = NO_LOOP;
        for (step, prem) in self.modal_options(ante, succ) {
            match self.prove(prem.0.clone(), prem.1.clone(), vec![], depth + 1)? {
                Res::Proved(child) => {
                    return Ok(Res::Proved(Rc::new(SetProof {
                        ante: ante.clone(),
                        succ: succ.clone(),
                        step,
                        children: vec![child],
                    })))
                }
                Res::Failed(f) => floor = floor.min(f),
            }
        }
        Ok(Res::Failed(floor))
    }

    fn all_of(
        &mut self,
        key: &Key,
        step: Step,
        prems: Vec<Sides>,
        used: Vec<Id>,
        depth: usize,
    ) -> Result<Res, OutOfBudget> {
        let mut children = Vec::with_capacity(prems.len());
        for (ante, succ) in prems {
            match self.prove(ante, succ, used.clone(), depth + 1)? {
                Res::Proved(c) => children.push(c),
                failed => return Ok(failed),
            }
        }
        Ok(Res::Proved(Rc::new(SetProof {
            ante: key.0.clone(),
            succ: key.1.clone(),
            step,
            children,
        })))
    }

    fn modal_options(&self, ante: &[Id], succ: &[Id]) -> Vec<(Step, Sides)> {
        let a = self.arena;
        let boxes: Vec<(Id, Index, Id)> = ante
            .iter()
            .filter_map(|&p| match *a.node(p) {
                Node::Box(m, x) => Some((p, m, x)),
                _ => None,
            })
            .collect();
        let mut out = Vec::new();
        let kinds: &[ModalKind] = match self.calc {
            CalculusSpec::GK4h => &[ModalKind::Four],
            CalculusSpec::GKD4h => &[ModalKind::Four, ModalKind::D],
            CalculusSpec::GS4h => &[ModalKind::S],
            CalculusSpec::GGLhExperimental => &[ModalKind::Lob],
        };
        for &kind in kinds {
            if kind == ModalKind::D {
                if boxes.is_empty() {
                    continue;
                }
                let n = boxes.iter().map(|b| b.1).max().expect("nonempty").succ();
                let gamma: Vec<Id> = boxes.iter().map(|b| b.0).collect();
                let contents: Vec<Id> = boxes.iter().map(|b| b.2).collect();
                let prem_ante = insert(&insert(&[], &gamma), &contents);
                out.push((
                    Step::Modal {
                        kind,
                        n,
                        principal: None,
                        sigma: vec![],
                        gamma,
                    },
                    (prem_ante, vec![]),
                ));
                continue;
            }
            for &p in succ {
                let Node::Box(n, target) = *a.node(p) else {
                    continue;
                };
                let (mut sigma, mut gamma, mut prem_ante) = (Vec::new(), Vec::new(), Vec::new());
                for &(b, m, x) in &boxes {
                    let (is_sigma, is_gamma) = match kind {
                        ModalKind::Lob => (m == n.succ(), m <= n),
                        _ => (m == n, m < n),
                    };
                    if is_sigma {
                        sigma.push(x);
                        prem_ante = insert(&prem_ante, &[x]);
                    } else if is_gamma {
                        gamma.push(b);
                        prem_ante = insert(&prem_ante, &[b]);
                        if kind != ModalKind::S {
                            prem_ante = insert(&prem_ante, &[x]);
                        }
                    }
                }
                if kind == ModalKind::Lob {
                    prem_ante = insert(&prem_ante, &[p]);
                }
                out.push((
                    Step::Modal {
                        kind,
                        n,
                        principal: Some(p),
                        sigma,
                        gamma,
                    },
                    (prem_ante, vec![target]),
                ));
            }
        }
        out
    }
}

fn node(sequent: Sequent, rule: SeqRule, children: Vec<SequentProof>) -> SequentProof {
    SequentProof::new(sequent, rule, children)
}

fn seq(ante: Vec<ModalFormula>, succ: Vec<ModalFormula>) -> Sequent {
    Sequent::new(ante, succ)
}

fn plus(v: &[ModalFormula], extra: &[&ModalFormula]) -> Vec<ModalFormula> {
    let mut out = v.to_vec();
    out.extend(extra.iter().map(|f| (*f).clone()));
    out
}

fn minus(v: &[ModalFormula], f: &ModalFormula) -> Vec<ModalFormula> {
    let mut out = v.to_vec();
    let pos = out
        .iter()
        .position(|x| x == f)
        .expect("principal formula present");
    out.remove(pos);
    out
}

/// Brings the conclusion of `proof` to `target` by weakening formulas in
/// and contracting surplus copies away.
fn adjust(proof: SequentProof, target: &Sequent) -> SequentProof {
    let mut proof = proof;
    for left in [true, false] {
        let count = |s: &Sequent, f: &ModalFormula| {
            let side = if left { &s.ante } else { &s.succ };
            side.iter().filter(|x| *x == f).count()
        };
        let wanted = if left { &target.ante } else { &target.succ };
        let current = if left {
            &proof.sequent.ante
        } else {
            &proof.sequent.succ
        };
        let mut seen: Vec<ModalFormula> = wanted.iter().chain(current).cloned().collect();
        seen.sort();
        seen.dedup();
        for f in seen {
            let (have, want) = (count(&proof.sequent, &f), count(target, &f));
            assert!(
                want > 0 || have == 0,
                "cannot remove `{}` from a derived sequent",
                f
            );
            for _ in have..want {
                let mut s = proof.sequent.clone();
                let rule = if left {
                    s.ante.push(f.clone());
                    SeqRule::WL { formula: f.clone() }
                } else {
                    s.succ.push(f.clone());
                    SeqRule::WR { formula: f.clone() }
                };
                proof = node(s, rule, vec![proof]);
            }
            for _ in want..have {
                let mut s = proof.sequent.clone();
                let rule = if left {
                    s.ante = minus(&s.ante, &f);
                    SeqRule::CL { formula: f.clone() }
                } else {
                    s.succ = minus(&s.succ, &f);
                    SeqRule::CR { formula: f.clone() }
                };
                proof = node(s, rule, vec![proof]);
            }
        }
    }
    proof
}

fn rebuild(a: &Arena, sp: &SetProof) -> SequentProof {
    use ModalFormula as M;
    let g = a.formulas(&sp.ante);
    let d = a.formulas(&sp.succ);
    let target = seq(g.clone(), d.clone());
    let child = |i: usize| rebuild(a, &sp.children[i]);
    let out = match &sp.step {
        Step::BotL => node(seq(vec![M::Bot], vec![]), SeqRule::BotL, vec![]),
        Step::TopR => node(seq(vec![], vec![M::Top]), SeqRule::TopR, vec![]),
        Step::Ax(x) => {
            let f = a.formula(*x).clone();
            node(seq(vec![f.clone()], vec![f]), SeqRule::Ax, vec![])
        }
        Step::Left(p) => {
            let pf = a.formula(*p);
            let g1 = minus(&g, pf);
            let principal = pf.clone();
            match pf {
                M::And(x, y) => {
                    let prem = adjust(child(0), &seq(plus(&g1, &[x, y]), d.clone()));
                    let n1 = node(
                        seq(plus(&g1, &[pf, y]), d.clone()),
                        SeqRule::AndL {
                            i: 0,
                            principal: principal.clone(),
                        },
                        vec![prem],
                    );
                    node(
                        seq(plus(&g1, &[pf, pf]), d.clone()),
                        SeqRule::AndL { i: 1, principal },
                        vec![n1],
                    )
                }
                M::Not(x) => {
                    let prem = adjust(child(0), &seq(g1.clone(), plus(&d, &[x])));
                    node(
                        seq(plus(&g1, &[pf]), d.clone()),
                        SeqRule::NotL { principal },
                        vec![prem],
                    )
                }
                M::Or(x, y) => {
                    let p0 = adjust(child(0), &seq(plus(&g1, &[x]), d.clone()));
                    let p1 = adjust(child(1), &seq(plus(&g1, &[y]), d.clone()));
                    let both = [g1.clone(), g1.clone()].concat();
                    node(
                        seq(plus(&both, &[pf]), [d.clone(), d.clone()].concat()),
                        SeqRule::OrL { principal },
                        vec![p0, p1],
                    )
                }
                M::Imp(x, y) => {
                    let p0 = adjust(child(0), &seq(g1.clone(), plus(&d, &[x])));
                    let p1 = adjust(child(1), &seq(plus(&g1, &[y]), d.clone()));
                    let both = [g1.clone(), g1.clone()].concat();
                    node(
                        seq(plus(&both, &[pf]), [d.clone(), d.clone()].concat()),
                        SeqRule::ImpL { principal },
                        vec![p0, p1],
                    )
                }
                _ => unreachable!("left rule on an atomic formula"),
            }
        }
        Step::Right(p) => {
            let pf = a.formula(*p);
            let d1 = minus(&d, pf);
            let principal = pf.clone();
            match pf {
                M::Or(x, y) => {
                    let prem = adjust(child(0), &seq(g.clone(), plus(&d1, &[x, y])));
                    let n1 = node(
                        seq(g.clone(), plus(&d1, &[pf, y])),
                        SeqRule::OrR {
                            i: 0,
                            principal: principal.clone(),
                        },
                        vec![prem],
                    );
                    node(
                        seq(g.clone(), plus(&d1, &[pf, pf])),
                        SeqRule::OrR { i: 1, principal },
                        vec![n1],
                    )
                }
                M::Imp(x, y) => {
                    let prem = adjust(child(0), &seq(plus(&g, &[x]), plus(&d1, &[y])));
                    node(
                        seq(g.clone(), plus(&d1, &[pf])),
                        SeqRule::ImpR { principal },
                        vec![prem],
                    )
                }
                M::Not(x) => {
                    let prem = adjust(child(0), &seq(plus(&g, &[x]), d1.clone()));
                    node(
                        seq(g.clone(), plus(&d1, &[pf])),
                        SeqRule::NotR { principal },
                        vec![prem],
                    )
                }
                M::And(x, y) => {
                    let p0 = adjust(child(0), &seq(g.clone(), plus(&d1, &[x])));
                    let p1 = adjust(child(1), &seq(g.clone(), plus(&d1, &[y])));
                    let both = [d1.clone(), d1.clone()].concat();
                    node(
                        seq([g.clone(), g.clone()].concat(), plus(&both, &[pf])),
                        SeqRule::AndR { principal },
                        vec![p0, p1],
                    )
                }
                _ => unreachable!("right rule on an atomic formula"),
            }
        }
        Step::BoxL(p) => {
            let pf = a.formula(*p);
            let M::Box(_, x) = pf else {
                unreachable!("BoxL on a non-box")
            };
            let prem = adjust(child(0), &seq(plus(&g, &[x]), d.clone()));
            node(
                seq(plus(&g, &[pf]), d.clone()),
                SeqRule::BoxL {
                    principal: pf.clone(),
                },
                vec![prem],
            )
        }
        Step::Modal {
            kind,
            n,
            principal,
            sigma,
            gamma,
        } => {
            let sigma_f = a.formulas(sigma);
            let gamma_f = a.formulas(gamma);
            let mut prem_ante = sigma_f.clone();
            prem_ante.extend(gamma_f.iter().cloned());
            if *kind != ModalKind::S {
                for g in &gamma_f {
                    let M::Box(_, inner) = g else {
                        unreachable!("gamma holds boxes")
                    };
                    prem_ante.push((**inner).clone());
                }
            }
            let (prem_succ, concl_succ) = match principal {
                Some(p) => {
                    let pf = a.formula(*p);
                    let M::Box(_, inner) = pf else {
                        unreachable!("principal is a box")
                    };
                    if *kind == ModalKind::Lob {
                        prem_ante.push(pf.clone());
                    }
                    (vec![(**inner).clone()], vec![pf.clone()])
                }
                None => (vec![], vec![]),
            };
            let prem = adjust(child(0), &seq(prem_ante, prem_succ));
            let sigma_index = if *kind == ModalKind::Lob {
                n.succ()
            } else {
                *n
            };
            let mut concl_ante: Vec<ModalFormula> = sigma_f
                .iter()
                .map(|s| M::boxed(sigma_index, s.clone()))
                .collect();
            concl_ante.extend(gamma_f.iter().cloned());
            node(
                seq(concl_ante, concl_succ),
                SeqRule::ModalR {
                    kind: *kind,
                    n: n.get(),
                    sigma: sigma_f,
                    gamma: gamma_f,
                },
                vec![prem],
            )
        }
    };
    adjust(out, &target)
}

/// Cut-free search for `s` in `calc`, visiting at most `budget` states.
pub fn prove_sequent(calc: CalculusSpec, s: &Sequent, budget: Budget) -> SearchOutcome {
    let mut arena = Arena::default();
    let mut ante: Vec<Id> = s.ante.iter().map(|f| arena.intern(f)).collect();
    let mut succ: Vec<Id> = s.succ.iter().map(|f| arena.intern(f)).collect();
    ante.sort_unstable();
    ante.dedup();
    succ.sort_unstable();
    succ.dedup();
    let mut search = Search {
        arena: &arena,
        calc,
        budget: budget.0,
        visited: 0,
        proved: HashMap::new(),
        failed: HashSet::new(),
        branch: HashMap::new(),
    };
    match search.prove(ante, succ, vec![], 0) {
        Ok(Res::Proved(p)) => {
            let mut proof = adjust(rebuild(&arena, &p), s);
            // Same multiset; keep the caller's order for display.
            proof.sequent = s.clone();
            SearchOutcome::Provable(proof)
        }
        Ok(Res::Failed(_)) => SearchOutcome::NotProvable {
            visited: search.visited,
            budget: budget.0,
        },
        Err(OutOfBudget) => SearchOutcome::BudgetExceeded {
            visited: search.visited,
        },
    }
}

/// Verdict of a decision procedure. Running out of budget is never
/// reported as `NotProvable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Provable(SequentProof),
    NotProvable,
    Inconclusive,
}

impl Decision {
    pub fn is_provable(&self) -> bool {
        matches!(self, Decision::Provable(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Decision::Provable(_) => Some(true),
            Decision::NotProvable => Some(false),
            Decision::Inconclusive => None,
        }
    }
}

impl From<SearchOutcome> for Decision {
    fn from(o: SearchOutcome) -> Self {
        match o {
            SearchOutcome::Provable(p) => Decision::Provable(p),
            SearchOutcome::NotProvable { .. } => Decision::NotProvable,
            SearchOutcome::BudgetExceeded { .. } => Decision::Inconclusive,
        }
    }
}

/// `Γ ⊢ A` in `sys`, decided on the sequent `Γ => A`.
pub fn decide_modal(
    sys: ModalSystem,
    gamma: &[ModalFormula],
    a: &ModalFormula,
    budget: Budget,
) -> Decision {
    let s = Sequent::new(gamma.to_vec(), vec![a.clone()]);
    prove_sequent(sys.calculus(), &s, budget).into()
}

/// Outcome of testing the strong disjunction property on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjunctionReport {
    pub disjunction: ModalFormula,
    pub disjunction_provable: bool,
    /// Only decided when the disjunction is provable.
    pub left_provable: Option<bool>,
    pub right_provable: Option<bool>,
}

impl DisjunctionReport {
    /// The disjunction is provable but neither boxed argument is.
    pub fn violated(&self) -> bool {
        self.disjunction_provable
            && self.left_provable == Some(false)
            && self.right_provable == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DisjunctionError {
    #[error(transparent)]
    IllTyped(#[from] IllTyped),
    #[error("search budget exhausted")]
    Inconclusive,
}

/// Decides `[]n a | []m b`, and when it is provable, `a` and `b`.
pub fn strong_disjunction_check(
    sys: ModalSystem,
    a: &ModalFormula,
    b: &ModalFormula,
    n: Index,
    m: Index,
    budget: Budget,
) -> Result<DisjunctionReport, DisjunctionError> {
    let disjunction = ModalFormula::or(
        ModalFormula::try_boxed(n, a.clone())?,
        ModalFormula::try_boxed(m, b.clone())?,
    );
    let decide = |f: &ModalFormula| {
        decide_modal(sys, &[], f, budget)
            .as_bool()
            .ok_or(DisjunctionError::Inconclusive)
    };
    let provable = decide(&disjunction)?;
    let (left, right) = if provable {
        (Some(decide(a)?), Some(decide(b)?))
    } else {
        (None, None)
    };
    Ok(DisjunctionReport {
        disjunction,
        disjunction_provable: provable,
        left_provable: left,
        right_provable: right,
    })
}

#[cfg(test)]
mod tests {
    use super::super::check_sequent_proof;
    use super::*;
    use crate::syntax::parse_modal;

    fn m(s: &str) -> ModalFormula {
        parse_modal(s).unwrap()
    }

    fn outcome(calc: CalculusSpec, s: &str) -> SearchOutcome {
        let out = prove_sequent(calc, &s.parse().unwrap(), Budget::default());
        if let SearchOutcome::Provable(p) = &out {
            assert_eq!(check_sequent_proof(calc, p), Ok(()), "{}", p.render());
            assert_eq!(p.sequent, s.parse().unwrap());
        }
        out
    }

    #[test]
    fn spec_examples() {
        use CalculusSpec::*;
        assert!(outcome(GK4h, "=> []0 p -> []1 []0 p").is_provable());
        assert!(outcome(GKD4h, "=> ~[]0 F").is_provable());
        assert!(!outcome(GK4h, "=> ~[]0 F").is_provable());
        assert!(outcome(GS4h, "=> []0 p -> p").is_provable());
        assert!(!outcome(GK4h, "=> []0 p -> p").is_provable());
        assert!(outcome(GK4h, "=> []0 T").is_provable());
        assert!(outcome(GK4h, "p, p & q => q | r").is_provable());
    }

    #[test]
    fn decide_examples() {
        let b = Budget::default();
        assert!(decide_modal(ModalSystem::K4h, &[], &m("[]0 p -> []1 p"), b).is_provable());
        assert!(decide_modal(ModalSystem::K4h, &[m("[]0 p")], &m("[]1 []0 p"), b).is_provable());
        assert_eq!(
            decide_modal(ModalSystem::K4h, &[], &m("[]0 p"), b),
            Decision::NotProvable
        );
        assert_eq!(
            decide_modal(ModalSystem::K4h, &[], &m("[]0 p"), Budget(1)),
            Decision::Inconclusive
        );
    }

    #[test]
    fn duplicates_in_input_are_kept() {
        let s: Sequent = "p, p => p".parse().unwrap();
        let SearchOutcome::Provable(p) = prove_sequent(CalculusSpec::GK4h, &s, Budget::default())
        else {
            panic!("not provable")
        };
        assert_eq!(check_sequent_proof(CalculusSpec::GK4h, &p), Ok(()));
        assert_eq!(p.sequent, s);
    }

    #[test]
    fn serial_d_needs_loop_check() {
        // Both unprovable; the D rule reproduces the same state.
        assert!(!outcome(CalculusSpec::GKD4h, "[]0 p => ").is_provable());
        assert!(!outcome(CalculusSpec::GKD4h, "[]0 (p | q), []1 ~[]0 p => []0 q").is_provable());
        assert!(outcome(CalculusSpec::GKD4h, "[]0 p, []0 ~p => ").is_provable());
    }

    #[test]
    fn experimental_lob_rule() {
        use CalculusSpec::GGLhExperimental as GL;
        assert!(outcome(GL, "=> []1([]0 p -> p) -> []0 p").is_provable());
        assert!(outcome(GL, "=> []0 p -> []1 []0 p").is_provable());
        assert!(!outcome(GL, "=> []0 p -> p").is_provable());
        assert!(!outcome(GL, "=> ~[]0 F").is_provable());
    }

    #[test]
    fn strong_disjunction_examples() {
        let b = Budget::default();
        let r = strong_disjunction_check(ModalSystem::K4h, &m("T"), &m("F"), Index(0), Index(0), b)
            .unwrap();
        assert!(r.disjunction_provable && r.left_provable == Some(true) && !r.violated());
        let r = strong_disjunction_check(
            ModalSystem::KD4h,
            &m("~[]0 F"),
            &m("F"),
            Index(1),
            Index(0),
            b,
        )
        .unwrap();
        assert!(r.disjunction_provable && r.left_provable == Some(true));
        let r = strong_disjunction_check(ModalSystem::K4h, &m("p"), &m("p"), Index(0), Index(0), b)
            .unwrap();
        assert!(!r.disjunction_provable && !r.violated());
        assert!(strong_disjunction_check(
            ModalSystem::K4h,
            &m("[]0 p"),
            &m("p"),
            Index(0),
            Index(0),
            b
        )
        .is_err());
    }
}
