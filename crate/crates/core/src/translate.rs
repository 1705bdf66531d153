//! Translations between the typed and untyped languages: the provability
//! translation `b`, the forgetful translation `f`, witnesses, and the
//! symbolic provability-predicate unfolding.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{
    max_opt, IllTyped, Index, ModalFormula, PropFormula, UntypedModal, UntypedProp,
};

/// `A^b`: atoms and constants become `[]0 x`, `A ->n B` becomes
/// `[]n(A^b -> B^b)`, conjunction and disjunction commute.
pub fn godel_b(a: &PropFormula) -> ModalFormula {
    match a {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => {
            let inner = match a {
                PropFormula::Atom(p) => ModalFormula::Atom(p.clone()),
                PropFormula::Top => ModalFormula::Top,
                _ => ModalFormula::Bot,
            };
            ModalFormula::boxed(0, inner)
        }
        PropFormula::And(x, y) => ModalFormula::and(godel_b(x), godel_b(y)),
        PropFormula::Or(x, y) => ModalFormula::or(godel_b(x), godel_b(y)),
        PropFormula::Imp(n, x, y) => {
            let body = ModalFormula::imp(godel_b(x), godel_b(y));
            // `n >= 1` and the body only carries indices below `n` or 0.
            debug_assert!(body.max_index().is_none_or(|m| m < *n));
            ModalFormula::boxed(*n, body)
        }
    }
}

/// The index-free counterpart of [`godel_b`].
pub fn godel_b_untyped(a: &UntypedProp) -> UntypedModal {
    match a {
        UntypedProp::Atom(p) => UntypedModal::boxed(UntypedModal::Atom(p.clone())),
        UntypedProp::Top => UntypedModal::boxed(UntypedModal::Top),
        UntypedProp::Bot => UntypedModal::boxed(UntypedModal::Bot),
        UntypedProp::And(x, y) => UntypedModal::and(godel_b_untyped(x), godel_b_untyped(y)),
        UntypedProp::Or(x, y) => UntypedModal::or(godel_b_untyped(x), godel_b_untyped(y)),
        UntypedProp::Imp(x, y) => {
            UntypedModal::boxed(UntypedModal::imp(godel_b_untyped(x), godel_b_untyped(y)))
        }
    }
}

/// Erases indices.
pub trait Forget {
    type Output;
    fn forget(&self) -> Self::Output;
}

impl Forget for PropFormula {
    type Output = UntypedProp;

    fn forget(&self) -> UntypedProp {
        match self {
            PropFormula::Atom(p) => UntypedProp::Atom(p.clone()),
            PropFormula::Top => UntypedProp::Top,
            PropFormula::Bot => UntypedProp::Bot,
            PropFormula::And(a, b) => UntypedProp::and(a.forget(), b.forget()),
            PropFormula::Or(a, b) => UntypedProp::or(a.forget(), b.forget()),
            PropFormula::Imp(_, a, b) => UntypedProp::imp(a.forget(), b.forget()),
        }
    }
}

impl Forget for ModalFormula {
    type Output = UntypedModal;

    fn forget(&self) -> UntypedModal {
        match self {
            ModalFormula::Atom(p) => UntypedModal::Atom(p.clone()),
            ModalFormula::Top => UntypedModal::Top,
            ModalFormula::Bot => UntypedModal::Bot,
            ModalFormula::Not(a) => UntypedModal::Not(Box::new(a.forget())),
            ModalFormula::And(a, b) => UntypedModal::and(a.forget(), b.forget()),
            ModalFormula::Or(a, b) => UntypedModal::or(a.forget(), b.forget()),
            ModalFormula::Imp(a, b) => UntypedModal::imp(a.forget(), b.forget()),
            ModalFormula::Box(_, a) => UntypedModal::boxed(a.forget()),
        }
    }
}

/// The forgetful translation `f`.
pub fn forgetful_f<F: Forget>(a: &F) -> F::Output {
    a.forget()
}

/// Assignment of indices to the implication occurrences of an untyped
/// formula.
///
/// `None` stands for a subtree without implications; it matches any such
/// subtree. `Pair` follows a conjunction or disjunction, `Imp` an
/// implication. Text form: `-`, `(u, v)` and `(u, n, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum Witness {
    None,
    Pair {
        lhs: Box<Witness>,
        rhs: Box<Witness>,
    },
    Imp {
        idx: u32,
        lhs: Box<Witness>,
        rhs: Box<Witness>,
    },
}

impl Witness {
    pub fn imp(lhs: Witness, n: u32, rhs: Witness) -> Self {
        Witness::Imp {
            idx: n,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    /// Pair constructor that collapses `(-, -)` to `-`.
    pub fn pair(lhs: Witness, rhs: Witness) -> Self {
        if lhs == Witness::None && rhs == Witness::None {
            Witness::None
        } else {
            Witness::Pair {
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            }
        }
    }

    pub fn max_index(&self) -> Option<Index> {
        match self {
            Witness::None => None,
            Witness::Pair { lhs, rhs } => max_opt(lhs.max_index(), rhs.max_index()),
            Witness::Imp { idx, lhs, rhs } => {
                max_opt(Some(Index(*idx)), max_opt(lhs.max_index(), rhs.max_index()))
            }
        }
    }

    /// Checks the strictly-increasing-outward constraint alone.
    pub fn is_strict(&self) -> bool {
        match self {
            Witness::None => true,
            Witness::Pair { lhs, rhs } => lhs.is_strict() && rhs.is_strict(),
            Witness::Imp { idx, lhs, rhs } => {
                *idx >= 1
                    && lhs.is_strict()
                    && rhs.is_strict()
                    && max_opt(lhs.max_index(), rhs.max_index()).is_none_or(|m| m.get() < *idx)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("-"),
            Witness::Pair { lhs, rhs } => write!(f, "({}, {})", lhs, rhs),
            Witness::Imp { idx, lhs, rhs } => write!(f, "({}, {}, {})", lhs, idx, rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("witness `{witness}` does not match the shape of `{formula}`")]
    ShapeMismatch { formula: String, witness: String },
    #[error(transparent)]
    IllTyped(#[from] IllTyped),
}

/// Splits a typed formula into its index-free shape and the indices.
pub fn witness_of(a: &PropFormula) -> (UntypedProp, Witness) {
    (a.forget(), read_witness(a))
}

fn read_witness(a: &PropFormula) -> Witness {
    match a {
        PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => Witness::None,
        PropFormula::And(x, y) | PropFormula::Or(x, y) => {
            Witness::pair(read_witness(x), read_witness(y))
        }
        PropFormula::Imp(n, x, y) => Witness::imp(read_witness(x), n.get(), read_witness(y)),
    }
}

/// `A(w)`: indexes each implication of `a` as `w` prescribes.
pub fn apply_witness(a: &UntypedProp, w: &Witness) -> Result<PropFormula, WitnessError> {
    let f = apply_shape(a, w).ok_or_else(|| WitnessError::ShapeMismatch {
        formula: a.to_string(),
        witness: w.to_string(),
    })?;
    f.check_well_formed()?;
    Ok(f)
}

fn apply_shape(a: &UntypedProp, w: &Witness) -> Option<PropFormula> {
    const NONE: &Witness = &Witness::None;
    Some(match (a, w) {
        (UntypedProp::Atom(p), Witness::None) => PropFormula::Atom(p.clone()),
        (UntypedProp::Top, Witness::None) => PropFormula::Top,
        (UntypedProp::Bot, Witness::None) => PropFormula::Bot,
        (UntypedProp::And(x, y), Witness::None) => {
            PropFormula::and(apply_shape(x, NONE)?, apply_shape(y, NONE)?)
        }
        (UntypedProp::Or(x, y), Witness::None) => {
            PropFormula::or(apply_shape(x, NONE)?, apply_shape(y, NONE)?)
        }
        (UntypedProp::And(x, y), Witness::Pair { lhs, rhs }) => {
            PropFormula::and(apply_shape(x, lhs)?, apply_shape(y, rhs)?)
        }
        (UntypedProp::Or(x, y), Witness::Pair { lhs, rhs }) => {
            PropFormula::or(apply_shape(x, lhs)?, apply_shape(y, rhs)?)
        }
        (UntypedProp::Imp(x, y), Witness::Imp { idx, lhs, rhs }) => {
            PropFormula::imp(*idx, apply_shape(x, lhs)?, apply_shape(y, rhs)?)
        }
        _ => return None,
    })
}

/// The least witness: every implication gets one more than the largest
/// index assigned inside it.
pub fn canonical_witness(a: &UntypedProp) -> Witness {
    match a {
        UntypedProp::Atom(_) | UntypedProp::Top | UntypedProp::Bot => Witness::None,
        UntypedProp::And(x, y) | UntypedProp::Or(x, y) => {
            Witness::pair(canonical_witness(x), canonical_witness(y))
        }
        UntypedProp::Imp(x, y) => {
            let (u, v) = (canonical_witness(x), canonical_witness(y));
            let inner = max_opt(u.max_index(), v.max_index()).map_or(0, Index::get);
            Witness::imp(u, inner + 1, v)
        }
    }
}

/// Symbolic arithmetic sentence names for atoms.
pub type AtomNaming = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("no arithmetic sentence assigned to atom `{0}`")]
pub struct MissingAtomName(pub String);

/// Renders `A^σ` with `Pr_n` as an uninterpreted predicate.
pub fn bhk_unfold(a: &PropFormula, names: &AtomNaming) -> Result<String, MissingAtomName> {
    let mut out = String::new();
    unfold_into(a, names, &mut out)?;
    Ok(out)
}

fn unfold_into(
    a: &PropFormula,
    names: &AtomNaming,
    out: &mut String,
) -> Result<(), MissingAtomName> {
    match a {
        PropFormula::Atom(p) => {
            let s = names.get(p).ok_or_else(|| MissingAtomName(p.clone()))?;
            out.push_str("Pr_0(");
            out.push_str(s);
            out.push(')');
        }
        PropFormula::Top => out.push_str("Pr_0(T)"),
        PropFormula::Bot => out.push_str("Pr_0(F)"),
        PropFormula::And(x, y) | PropFormula::Or(x, y) => {
            let op = if matches!(a, PropFormula::And(..)) {
                " & "
            } else {
                " | "
            };
            out.push('(');
            unfold_into(x, names, out)?;
            out.push_str(op);
            unfold_into(y, names, out)?;
            out.push(')');
        }
        PropFormula::Imp(n, x, y) => {
            out.push_str(&format!("Pr_{}(", n));
            unfold_into(x, names, out)?;
            out.push_str(" -> ");
            unfold_into(y, names, out)?;
            out.push(')');
        }
    }
    Ok(())
}
