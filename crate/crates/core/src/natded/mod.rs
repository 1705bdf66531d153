//! Natural deduction for the typed propositional systems and their untyped
//! counterparts.
//!
//! Proofs are trees that carry an explicit conclusion at every node. The
//! checker is local: each node is matched against its rule, and the only
//! global bookkeeping is the set of open assumptions flowing up from the
//! leaves, which the implication-introduction side condition consults.
//!
//! Assumptions are leaves. An unlabelled leaf stays open for good and must
//! be one of the hypotheses of the judgment. A labelled leaf must be
//! discharged by the unique binder (`ImpI`, `OrE` or `Tr`) carrying that
//! label, and must sit in the premise that binder discharges.
//!
//! Errors render as `at node <path>: <reason>`, where the path lists child
//! positions from the root (`root`, `root.1`, `root.1.0`, ...). The index
//! side condition of `ImpI` reports
//! `index too small: found <n>, required > <m>` with `m` the largest index
//! among the open assumptions and the discharged formula.

mod schemas;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::syntax::{IllTyped, Index, PropFormula, Shape, Syntax, UntypedProp};
use crate::translate::Forget;

pub use schemas::{
    reindex_on, schema_primed_rule, schema_reindex, schema_rewitness, schema_star_rule,
    schema_star_rule_for, star_subproof, Simulation,
};

/// Discharge label shared by a binder and the leaves it closes.
pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NdSystem {
    BPCh,
    EBPCh,
    FPLh,
    IPCh,
    CPCh,
}

impl NdSystem {
    pub const ALL: [NdSystem; 5] = [
        NdSystem::BPCh,
        NdSystem::EBPCh,
        NdSystem::FPLh,
        NdSystem::IPCh,
        NdSystem::CPCh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NdSystem::BPCh => "BPCh",
            NdSystem::EBPCh => "EBPCh",
            NdSystem::FPLh => "FPLh",
            NdSystem::IPCh => "IPCh",
            NdSystem::CPCh => "CPCh",
        }
    }

    /// Whether `rule` may be used. `typed` selects between the indexed
    /// system and its untyped counterpart; the latter additionally has the
    /// `LTop` rule in FPL.
    pub fn allows(self, rule: &NdRule, typed: bool) -> bool {
        use NdRule::*;
        match rule {
            C => self == NdSystem::EBPCh,
            R => matches!(self, NdSystem::IPCh | NdSystem::CPCh),
            D => self == NdSystem::CPCh,
            L => self == NdSystem::FPLh,
            LTop => self == NdSystem::FPLh && !typed,
            _ => true,
        }
    }
}

impl fmt::Display for NdSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for NdSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        NdSystem::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown natural deduction system `{}`", s))
    }
}

/// Inference rule at a proof node. Premise order is fixed per rule; see
/// [`check_nd`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum NdRule {
    /// Assumption leaf, optionally labelled for discharge.
    Hyp {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<Label>,
    },
    TopI,
    AndI,
    AndEL,
    AndER,
    OrIL,
    OrIR,
    /// Premises: `A | B`, `C` from `[A]left`, `C` from `[B]right`.
    OrE {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Label>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right: Option<Label>,
    },
    /// Premise: `B` from `[A]label`. The index is read off the conclusion.
    ImpI {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<Label>,
    },
    Exfalso,
    AndIf,
    OrEf,
    TrF,
    /// Premises: `A`, then `B` from `[A]label`.
    Tr {
        label: Label,
    },
    H,
    C,
    R,
    D,
    L,
    /// `(T -> A) -> A` gives `T -> A`; untyped FPL only.
    LTop,
}

impl NdRule {
    pub fn name(&self) -> &'static str {
        use NdRule::*;
        match self {
            Hyp { .. } => "Hyp",
            TopI => "TopI",
            AndI => "AndI",
            AndEL => "AndEL",
            AndER => "AndER",
            OrIL => "OrIL",
            OrIR => "OrIR",
            OrE { .. } => "OrE",
            ImpI { .. } => "ImpI",
            Exfalso => "Exfalso",
            AndIf => "AndIf",
            OrEf => "OrEf",
            TrF => "TrF",
            Tr { .. } => "Tr",
            H => "H",
            C => "C",
            R => "R",
            D => "D",
            L => "L",
            LTop => "LTop",
        }
    }

    fn arity(&self) -> usize {
        use NdRule::*;
        match self {
            Hyp { .. } | TopI | D => 0,
            AndEL | AndER | OrIL | OrIR | ImpI { .. } | Exfalso | H | L | LTop => 1,
            AndI | AndIf | OrEf | TrF | Tr { .. } | C | R => 2,
            OrE { .. } => 3,
        }
    }

    fn binders(&self) -> Vec<(Label, usize)> {
        match self {
            NdRule::OrE { left, right } => left
                .map(|l| (l, 1))
                .into_iter()
                .chain(right.map(|r| (r, 2)))
                .collect(),
            NdRule::ImpI { label: Some(l) } => vec![(*l, 0)],
            NdRule::Tr { label } => vec![(*label, 1)],
            _ => vec![],
        }
    }
}

/// Formula languages the kernel runs over.
pub trait NdFormula: Syntax + Clone + Eq + fmt::Display + fmt::Debug {
    const TYPED: bool;
    fn well_formed(&self) -> Result<(), IllTyped>;
    fn max_index(&self) -> Option<Index>;
}

impl NdFormula for PropFormula {
    const TYPED: bool = true;

    fn well_formed(&self) -> Result<(), IllTyped> {
        self.check_well_formed()
    }

    fn max_index(&self) -> Option<Index> {
        PropFormula::max_index(self)
    }
}

impl NdFormula for UntypedProp {
    const TYPED: bool = false;

    fn well_formed(&self) -> Result<(), IllTyped> {
        Ok(())
    }

    fn max_index(&self) -> Option<Index> {
        None
    }
}

/// Proof tree node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "F: fmt::Display",
    deserialize = "F: FromStr, F::Err: fmt::Display"
))]
pub struct NdProof<F> {
    #[serde(flatten)]
    pub rule: NdRule,
    #[serde(with = "crate::syntax::as_text")]
    pub conclusion: F,
    #[serde(default = "Vec::new", skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<NdProof<F>>,
}

impl<F: Clone> NdProof<F> {
    pub fn node(rule: NdRule, conclusion: F, children: Vec<NdProof<F>>) -> Self {
        NdProof {
            rule,
            conclusion,
            children,
        }
    }

    /// Open assumption leaf.
    pub fn hyp(f: F) -> Self {
        Self::node(NdRule::Hyp { label: None }, f, vec![])
    }

    pub fn hyp_labelled(f: F, label: Label) -> Self {
        Self::node(NdRule::Hyp { label: Some(label) }, f, vec![])
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(NdProof::size).sum::<usize>()
    }

    /// Rules occurring anywhere in the tree.
    pub fn rules_used(&self) -> BTreeSet<&'static str> {
        let mut out = BTreeSet::new();
        self.walk(&mut |n| {
            out.insert(n.rule.name());
        });
        out
    }

    fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a NdProof<F>)) {
        visit(self);
        for c in &self.children {
            c.walk(visit);
        }
    }

    pub fn map<G>(&self, f: &impl Fn(&F) -> G) -> NdProof<G> {
        NdProof {
            rule: self.rule.clone(),
            conclusion: f(&self.conclusion),
            children: self.children.iter().map(|c| c.map(f)).collect(),
        }
    }
}

impl NdProof<PropFormula> {
    /// Erases every index; the rule skeleton is unchanged.
    pub fn forget(&self) -> NdProof<UntypedProp> {
        self.map(&|f: &PropFormula| f.forget())
    }
}

/// Formulas of the undischarged leaves at the root, labelled leaves
/// included when no binder above them carries their label.
pub fn open_hypotheses<F: Clone>(proof: &NdProof<F>) -> Vec<F> {
    fn go<F: Clone>(p: &NdProof<F>, out: &mut Vec<(Option<Label>, F)>) {
        if let NdRule::Hyp { label } = p.rule {
            out.push((label, p.conclusion.clone()));
            return;
        }
        let binders = p.rule.binders();
        for (i, c) in p.children.iter().enumerate() {
            let mut sub = Vec::new();
            go(c, &mut sub);
            sub.retain(|(l, _)| !binders.iter().any(|(b, at)| *at == i && Some(*b) == *l));
            out.extend(sub);
        }
    }
    let mut out = Vec::new();
    go(proof, &mut out);
    out.into_iter().map(|(_, f)| f).collect()
}

/// Position of a node: child indices from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodePath(pub Vec<usize>);

impl NodePath {
    fn child(&self, i: usize) -> NodePath {
        let mut v = self.0.clone();
        v.push(i);
        NodePath(v)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, ".{}", i)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NodeError {
    #[error("rule {rule} is not available in {system}")]
    RuleNotInSystem { rule: &'static str, system: String },
    #[error("rule {rule} takes {expected} premises, found {found}")]
    Arity {
        rule: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("conclusion does not follow by {0}")]
    Shape(&'static str),
    #[error("index too small: found {found}, required > {required}")]
    IndexTooSmall { found: Index, required: Index },
    #[error("rule H cannot lower index {from} to {to}")]
    IndexLowered { from: Index, to: Index },
    #[error("{0}")]
    IllTyped(#[from] IllTyped),
    #[error("label {label} discharges `{found}`, expected `{expected}`")]
    DischargeMismatch {
        label: Label,
        expected: String,
        found: String,
    },
    #[error("label {0} is never discharged")]
    UndischargedLabel(Label),
    #[error("label {0} is bound twice")]
    DuplicateLabel(Label),
    #[error("open assumption `{0}` is not among the hypotheses")]
    NotAHypothesis(String),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NdError {
    #[error("at node {path}: {reason}")]
    BadNode { path: NodePath, reason: NodeError },
    #[error("proof concludes `{found}`, expected `{expected}`")]
    GoalMismatch { found: String, expected: String },
}

fn bad(path: &NodePath, reason: NodeError) -> NdError {
    NdError::BadNode {
        path: path.clone(),
        reason,
    }
}

struct Open<'a, F> {
    label: Option<Label>,
    formula: &'a F,
    path: NodePath,
}

/// Checks `proof` as a derivation of `goal` from `hypotheses` in `sys`.
///
/// Works over typed formulas ([`PropFormula`]) and, with index conditions
/// switched off, over untyped ones ([`UntypedProp`]).
pub fn check_nd<F: NdFormula>(
    sys: NdSystem,
    proof: &NdProof<F>,
    hypotheses: &[F],
    goal: &F,
) -> Result<(), NdError> {
    let mut seen = BTreeSet::new();
    check_labels(proof, &NodePath::default(), &mut seen)?;
    let open = check_node(sys, proof, &NodePath::default())?;
    for o in &open {
        match o.label {
            Some(l) => return Err(bad(&o.path, NodeError::UndischargedLabel(l))),
            None if !hypotheses.contains(o.formula) => {
                return Err(bad(
                    &o.path,
                    NodeError::NotAHypothesis(o.formula.to_string()),
                ))
            }
            None => {}
        }
    }
    if proof.conclusion != *goal {
        return Err(NdError::GoalMismatch {
            found: proof.conclusion.to_string(),
            expected: goal.to_string(),
        });
    }
    Ok(())
}

fn check_labels<F>(
    p: &NdProof<F>,
    path: &NodePath,
    seen: &mut BTreeSet<Label>,
) -> Result<(), NdError> {
    for (l, _) in p.rule.binders() {
        if !seen.insert(l) {
            return Err(bad(path, NodeError::DuplicateLabel(l)));
        }
    }
    for (i, c) in p.children.iter().enumerate() {
        check_labels(c, &path.child(i), seen)?;
    }
    Ok(())
}

fn as_and<F: Syntax>(f: &F) -> Option<(&F, &F)> {
    match f.shape() {
        Shape::And(a, b) => Some((a, b)),
        _ => None,
    }
}

fn as_or<F: Syntax>(f: &F) -> Option<(&F, &F)> {
    match f.shape() {
        Shape::Or(a, b) => Some((a, b)),
        _ => None,
    }
}

fn as_imp<F: Syntax>(f: &F) -> Option<(Option<Index>, &F, &F)> {
    match f.shape() {
        Shape::Imp(n, a, b) => Some((n, a, b)),
        _ => None,
    }
}

fn is_top<F: Syntax>(f: &F) -> bool {
    matches!(f.shape(), Shape::Top)
}

fn is_bot<F: Syntax>(f: &F) -> bool {
    matches!(f.shape(), Shape::Bot)
}

fn check_node<'a, F: NdFormula>(
    sys: NdSystem,
    p: &'a NdProof<F>,
    path: &NodePath,
) -> Result<Vec<Open<'a, F>>, NdError> {
    let rule = &p.rule;
    if !sys.allows(rule, F::TYPED) {
        let system = if F::TYPED {
            sys.name().to_string()
        } else {
            sys.name().trim_end_matches('h').to_string()
        };
        return Err(bad(
            path,
            NodeError::RuleNotInSystem {
                rule: rule.name(),
                system,
            },
        ));
    }
    if p.children.len() != rule.arity() {
        return Err(bad(
            path,
            NodeError::Arity {
                rule: rule.name(),
                expected: rule.arity(),
                found: p.children.len(),
            },
        ));
    }
    p.conclusion
        .well_formed()
        .map_err(|e| bad(path, e.into()))?;

    let mut opens: Vec<Vec<Open<'a, F>>> = Vec::with_capacity(p.children.len());
    for (i, c) in p.children.iter().enumerate() {
        opens.push(check_node(sys, c, &path.child(i))?);
    }

    let concl = &p.conclusion;
    let prem: Vec<&F> = p.children.iter().map(|c| &c.conclusion).collect();
    let shape_err = || bad(path, NodeError::Shape(rule.name()));
    let ok = |b: bool| if b { Ok(()) } else { Err(shape_err()) };

    // Formula the binder at child `i` discharges.
    let mut discharged: Vec<(Label, usize, &F)> = Vec::new();

    match rule {
        NdRule::Hyp { label } => {
            return Ok(vec![Open {
                label: *label,
                formula: concl,
                path: path.clone(),
            }]);
        }
        NdRule::TopI => ok(is_top(concl))?,
        NdRule::AndI => ok(as_and(concl) == Some((prem[0], prem[1])))?,
        NdRule::AndEL => ok(as_and(prem[0]).map(|x| x.0) == Some(concl))?,
        NdRule::AndER => ok(as_and(prem[0]).map(|x| x.1) == Some(concl))?,
        NdRule::OrIL => ok(as_or(concl).map(|x| x.0) == Some(prem[0]))?,
        NdRule::OrIR => ok(as_or(concl).map(|x| x.1) == Some(prem[0]))?,
        NdRule::OrE { left, right } => {
            let (a, b) = as_or(prem[0]).ok_or_else(shape_err)?;
            ok(prem[1] == concl && prem[2] == concl)?;
            if let Some(l) = left {
                discharged.push((*l, 1, a));
            }
            if let Some(r) = right {
                discharged.push((*r, 2, b));
            }
        }
        NdRule::ImpI { label } => {
            let (n, a, b) = as_imp(concl).ok_or_else(shape_err)?;
            ok(b == prem[0])?;
            if let Some(l) = label {
                discharged.push((*l, 0, a));
            }
            if let Some(n) = n {
                let required = opens[0]
                    .iter()
                    .map(|o| o.formula.max_index())
                    .fold(a.max_index(), crate::syntax::max_opt);
                if let Some(required) = required {
                    if n <= required {
                        return Err(bad(path, NodeError::IndexTooSmall { found: n, required }));
                    }
                }
            }
        }
        NdRule::Exfalso => ok(is_bot(prem[0]))?,
        NdRule::AndIf => {
            let (n, a, b) = as_imp(prem[0]).ok_or_else(shape_err)?;
            let (n2, a2, c) = as_imp(prem[1]).ok_or_else(shape_err)?;
            let (n3, a3, bc) = as_imp(concl).ok_or_else(shape_err)?;
            ok(n == n2 && n == n3 && a == a2 && a == a3 && as_and(bc) == Some((b, c)))?;
        }
        NdRule::OrEf => {
            let (n, a, c) = as_imp(prem[0]).ok_or_else(shape_err)?;
            let (n2, b, c2) = as_imp(prem[1]).ok_or_else(shape_err)?;
            let (n3, ab, c3) = as_imp(concl).ok_or_else(shape_err)?;
            ok(n == n2 && n == n3 && c == c2 && c == c3 && as_or(ab) == Some((a, b)))?;
        }
        NdRule::TrF => {
            let (n, a, b) = as_imp(prem[0]).ok_or_else(shape_err)?;
            let (n2, b2, c) = as_imp(prem[1]).ok_or_else(shape_err)?;
            let (n3, a3, c3) = as_imp(concl).ok_or_else(shape_err)?;
            ok(n == n2 && n == n3 && b == b2 && a == a3 && c == c3)?;
        }
        NdRule::Tr { label } => {
            ok(prem[1] == concl)?;
            discharged.push((*label, 1, prem[0]));
        }
        NdRule::H => {
            let (n, a, b) = as_imp(prem[0]).ok_or_else(shape_err)?;
            let (m, a2, b2) = as_imp(concl).ok_or_else(shape_err)?;
            ok(a == a2 && b == b2)?;
            if let (Some(n), Some(m)) = (n, m) {
                if m < n {
                    return Err(bad(path, NodeError::IndexLowered { from: n, to: m }));
                }
            }
        }
        NdRule::C => {
            let (_, a, f) = as_imp(prem[1]).ok_or_else(shape_err)?;
            ok(a == prem[0] && is_bot(f) && is_bot(concl))?;
        }
        NdRule::R => {
            let (_, a, b) = as_imp(prem[1]).ok_or_else(shape_err)?;
            ok(a == prem[0] && b == concl)?;
        }
        NdRule::D => {
            let (a, na) = as_or(concl).ok_or_else(shape_err)?;
            let (_, a2, f) = as_imp(na).ok_or_else(shape_err)?;
            ok(a == a2 && is_bot(f))?;
        }
        NdRule::L => {
            let (n, a, b) = as_imp(concl).ok_or_else(shape_err)?;
            let (n1, lhs, b1) = as_imp(prem[0]).ok_or_else(shape_err)?;
            let (a1, inner) = as_and(lhs).ok_or_else(shape_err)?;
            ok(a1 == a && b1 == b && inner == concl)?;
            if let (Some(n), Some(n1)) = (n, n1) {
                ok(n1 == n.succ())?;
            }
        }
        NdRule::LTop => {
            let (_, t, a) = as_imp(concl).ok_or_else(shape_err)?;
            let (_, lhs, a1) = as_imp(prem[0]).ok_or_else(shape_err)?;
            ok(is_top(t) && lhs == concl && a1 == a)?;
        }
    }

    let mut out = Vec::new();
    for (i, child_open) in opens.into_iter().enumerate() {
        for o in child_open {
            let binder = o
                .label
                .and_then(|l| discharged.iter().find(|(b, at, _)| *b == l && *at == i));
            match binder {
                Some((l, _, f)) => {
                    if o.formula != *f {
                        return Err(bad(
                            &o.path,
                            NodeError::DischargeMismatch {
                                label: *l,
                                expected: f.to_string(),
                                found: o.formula.to_string(),
                            },
                        ));
                    }
                }
                None => out.push(o),
            }
        }
    }
    Ok(out)
}
