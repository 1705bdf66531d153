//! Depth-bounded exhaustive search, kept deliberately naive so that it can
//! serve as a reference for the optimized searcher.
//!
//! Weakening and contraction are treated as free moves: they do not count
//! towards the depth. Under free contraction a multiset sequent is as good
//! as its underlying set, and under free weakening a premise is as good as
//! any superset of it, so the oracle runs on sets and always keeps the
//! principal formula. Every logical and modal rule is tried on every
//! formula at every node, in no particular order: there is no invertibility
//! shortcut, no saturation and no loop check. The D rule is tried at every
//! admissible index. Cut is never used.

use std::collections::{BTreeSet, HashMap};

use super::{CalculusSpec, Sequent};
use crate::syntax::{Index, ModalFormula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    /// Proof found whose longest branch has `depth` logical or modal
    /// inferences, axioms included.
    Provable {
        depth: usize,
    },
    NoProofWithinDepth,
}

type Set = BTreeSet<ModalFormula>;
type State = (Set, Set);

struct Oracle {
    calc: CalculusSpec,
    /// Least depth with a proof, or the largest depth known to fail.
    memo: HashMap<State, Result<usize, usize>>,
}

/// Iterative deepening up to `depth`.
pub fn oracle_exhaustive(calc: CalculusSpec, s: &Sequent, depth: usize) -> OracleOutcome {
    let state = (
        s.ante.iter().cloned().collect(),
        s.succ.iter().cloned().collect(),
    );
    let mut o = Oracle {
        calc,
        memo: HashMap::new(),
    };
    for d in 1..=depth {
        if o.provable(&state, d) {
            return OracleOutcome::Provable { depth: d };
        }
    }
    OracleOutcome::NoProofWithinDepth
}

fn plus(s: &Set, f: &ModalFormula) -> Set {
    let mut out = s.clone();
    out.insert(f.clone());
    out
}

impl Oracle {
    fn provable(&mut self, s: &State, d: usize) -> bool {
        if d == 0 {
            return false;
        }
        match self.memo.get(s) {
            Some(Ok(k)) if *k <= d => return true,
            Some(Err(k)) if *k >= d => return false,
            _ => {}
        }
        let found = self.axiom(s)
            || self
                .instances(s)
                .iter()
                .any(|prems| prems.iter().all(|p| self.provable(p, d - 1)));
        let entry = if found { Ok(d) } else { Err(d) };
        match self.memo.get(s) {
            Some(Ok(k)) if *k <= d => {}
            Some(Err(k)) if !found && *k >= d => {}
            _ => {
                self.memo.insert(s.clone(), entry);
            }
        }
        found
    }

    fn axiom(&self, (g, d): &State) -> bool {
        g.contains(&ModalFormula::Bot)
            || d.contains(&ModalFormula::Top)
            || g.iter().any(|f| d.contains(f))
    }

    /// Every rule instance with conclusion `s`, as its list of premises.
    fn instances(&self, s: &State) -> Vec<Vec<State>> {
        use ModalFormula as M;
        let (g, d) = s;
        let mut out: Vec<Vec<State>> = Vec::new();
        for f in g {
            match f {
                M::And(a, b) => {
                    out.push(vec![(plus(g, a), d.clone())]);
                    out.push(vec![(plus(g, b), d.clone())]);
                }
                M::Or(a, b) => out.push(vec![(plus(g, a), d.clone()), (plus(g, b), d.clone())]),
                M::Imp(a, b) => out.push(vec![(g.clone(), plus(d, a)), (plus(g, b), d.clone())]),
                M::Not(a) => out.push(vec![(g.clone(), plus(d, a))]),
                M::Box(_, a) if self.calc == CalculusSpec::GS4h => {
                    out.push(vec![(plus(g, a), d.clone())])
                }
                _ => {}
            }
        }
        for f in d {
            match f {
                M::And(a, b) => out.push(vec![(g.clone(), plus(d, a)), (g.clone(), plus(d, b))]),
                M::Or(a, b) => {
                    out.push(vec![(g.clone(), plus(d, a))]);
                    out.push(vec![(g.clone(), plus(d, b))]);
                }
                M::Imp(a, b) => out.push(vec![(plus(g, a), plus(d, b))]),
                M::Not(a) => out.push(vec![(plus(g, a), d.clone())]),
                M::Box(n, a) => {
                    if let Some(prem) = self.modal_premise(g, *n, Some(f), a) {
                        out.push(vec![prem]);
                    }
                }
                _ => {}
            }
        }
        if self.calc == CalculusSpec::GKD4h {
            let indices: BTreeSet<Index> = g
                .iter()
                .filter_map(|f| match f {
                    M::Box(n, _) => Some(*n),
                    _ => None,
                })
                .collect();
            let top = indices.iter().max().map_or(Index(0), |m| m.succ());
            for n in indices.iter().copied().chain([top]) {
                out.push(vec![self.d_premise(g, n)]);
            }
        }
        // A premise equal to its conclusion never helps.
        out.retain(|prems| prems.iter().all(|p| p != s));
        out
    }

    fn modal_premise(
        &self,
        g: &Set,
        n: Index,
        principal: Option<&ModalFormula>,
        a: &ModalFormula,
    ) -> Option<State> {
        use ModalFormula as M;
        let mut ante = Set::new();
        for f in g {
            let M::Box(m, x) = f else { continue };
            match self.calc {
                CalculusSpec::GK4h | CalculusSpec::GKD4h => {
                    if *m == n {
                        ante.insert((**x).clone());
                    } else if *m < n {
                        ante.insert((**x).clone());
                        ante.insert(f.clone());
                    }
                }
                CalculusSpec::GS4h => {
                    if *m == n {
                        ante.insert((**x).clone());
                    } else if *m < n {
                        ante.insert(f.clone());
                    }
                }
                CalculusSpec::GGLhExperimental => {
                    if *m == n.succ() {
                        ante.insert((**x).clone());
                    } else if *m <= n {
                        ante.insert((**x).clone());
                        ante.insert(f.clone());
                    }
                }
            }
        }
        if self.calc == CalculusSpec::GGLhExperimental {
            ante.insert(principal?.clone());
        }
        Some((ante, [a.clone()].into_iter().collect()))
    }

    fn d_premise(&self, g: &Set, n: Index) -> State {
        use ModalFormula as M;
        let mut ante = Set::new();
        for f in g {
            let M::Box(m, x) = f else { continue };
            if *m == n {
                ante.insert((**x).clone());
            } else if *m < n {
                ante.insert((**x).clone());
                ante.insert(f.clone());
            }
        }
        (ante, Set::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Sequent {
        t.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_exhaustive(CalculusSpec::GK4h, &s("p => p"), 1),
            OracleOutcome::Provable { depth: 1 }
        );
        for d in [1, 3, 6] {
            assert_eq!(
                oracle_exhaustive(CalculusSpec::GS4h, &s("=> p"), d),
                OracleOutcome::NoProofWithinDepth
            );
        }
        assert!(matches!(
            oracle_exhaustive(CalculusSpec::GKD4h, &s("=> ~[]0 F"), 4),
            OracleOutcome::Provable { .. }
        ));
        assert_eq!(
            oracle_exhaustive(CalculusSpec::GK4h, &s("=> ~[]0 F"), 6),
            OracleOutcome::NoProofWithinDepth
        );
    }
}
