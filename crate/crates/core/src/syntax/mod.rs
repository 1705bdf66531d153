//! Abstract syntax for the four formula languages.
//!
//! * [`PropFormula`]: propositional formulas whose implications carry an
//!   index `n >= 1` strictly above every implication index nested inside.
//! * [`ModalFormula`]: modal formulas whose boxes carry an index `n >= 0`
//!   strictly above every box index nested inside.
//! * [`UntypedProp`] and [`UntypedModal`]: the same shapes with the indices
//!   erased.
//!
//! The enums are plain data. Well-formedness is checked at the boundaries
//! (parsing, JSON import, the proof kernels) through
//! [`PropFormula::check_well_formed`] and [`ModalFormula::check_well_formed`].

mod json;
mod parse;
mod render;

use std::fmt;

pub use json::{as_text, as_text_vec, AstError, AstNode};
pub use parse::{
    parse_modal, parse_prop, parse_untyped_modal, parse_untyped_prop, ParseError, SyntaxError,
};
pub use render::{Shape, Syntax};

/// Hierarchy level attached to an implication or a box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(pub u32);

impl Index {
    pub const fn new(n: u32) -> Self {
        Index(n)
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    pub const fn succ(self) -> Self {
        Index(self.0 + 1)
    }
}

impl From<u32> for Index {
    fn from(n: u32) -> Self {
        Index(n)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Smallest index an implication may carry.
pub const MIN_IMP_INDEX: Index = Index(1);
/// Smallest index a box may carry.
pub const MIN_BOX_INDEX: Index = Index(0);

/// Maximum of two optional indices, with `None` below everything.
pub fn max_opt(a: Option<Index>, b: Option<Index>) -> Option<Index> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `n` is strictly above `inner` (where `None` is below every index).
pub fn strictly_above(n: Index, inner: Option<Index>) -> bool {
    inner.is_none_or(|m| n > m)
}

/// A violation of the index discipline.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IllTyped {
    /// An implication or box whose index does not exceed the largest index
    /// nested inside it.
    #[error("ill-typed `{subformula}`: index {index} must exceed inner index {inner}")]
    NotAbove {
        subformula: String,
        index: Index,
        inner: Index,
    },
    /// An implication carrying index 0.
    #[error("ill-typed `{subformula}`: implication index must be at least 1")]
    ZeroImplication { subformula: String },
}

/// Typed propositional formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropFormula {
    Atom(String),
    Top,
    Bot,
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Box<PropFormula>, Box<PropFormula>),
    Imp(Index, Box<PropFormula>, Box<PropFormula>),
}

/// Typed modal formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModalFormula {
    Atom(String),
    Top,
    Bot,
    Not(Box<ModalFormula>),
    And(Box<ModalFormula>, Box<ModalFormula>),
    Or(Box<ModalFormula>, Box<ModalFormula>),
    Imp(Box<ModalFormula>, Box<ModalFormula>),
    Box(Index, Box<ModalFormula>),
}

/// Propositional formula with a single, unindexed implication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UntypedProp {
    Atom(String),
    Top,
    Bot,
    And(Box<UntypedProp>, Box<UntypedProp>),
    Or(Box<UntypedProp>, Box<UntypedProp>),
    Imp(Box<UntypedProp>, Box<UntypedProp>),
}

/// Modal formula with a single, unindexed box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UntypedModal {
    Atom(String),
    Top,
    Bot,
    Not(Box<UntypedModal>),
    And(Box<UntypedModal>, Box<UntypedModal>),
    Or(Box<UntypedModal>, Box<UntypedModal>),
    Imp(Box<UntypedModal>, Box<UntypedModal>),
    Box(Box<UntypedModal>),
}

impl PropFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        PropFormula::Atom(name.into())
    }

    pub fn and(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: PropFormula, b: PropFormula) -> Self {
        PropFormula::Or(Box::new(a), Box::new(b))
    }

    /// Builds `a ->n b` without checking the index discipline.
    pub fn imp(n: impl Into<Index>, a: PropFormula, b: PropFormula) -> Self {
        PropFormula::Imp(n.into(), Box::new(a), Box::new(b))
    }

    /// Builds `a ->n b`, rejecting it when `n` is 0 or does not exceed the
    /// indices of `a` and `b`.
    pub fn try_imp(n: impl Into<Index>, a: PropFormula, b: PropFormula) -> Result<Self, IllTyped> {
        let f = Self::imp(n, a, b);
        f.check_node()?;
        Ok(f)
    }

    /// Largest implication index occurring in the formula.
    pub fn max_index(&self) -> Option<Index> {
        match self {
            PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => None,
            PropFormula::And(a, b) | PropFormula::Or(a, b) => max_opt(a.max_index(), b.max_index()),
            PropFormula::Imp(n, a, b) => max_opt(Some(*n), max_opt(a.max_index(), b.max_index())),
        }
    }

    fn check_node(&self) -> Result<(), IllTyped> {
        if let PropFormula::Imp(n, a, b) = self {
            if *n < MIN_IMP_INDEX {
                return Err(IllTyped::ZeroImplication {
                    subformula: self.to_string(),
                });
            }
            let inner = max_opt(a.max_index(), b.max_index());
            if let Some(m) = inner {
                if *n <= m {
                    return Err(IllTyped::NotAbove {
                        subformula: self.to_string(),
                        index: *n,
                        inner: m,
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks the index discipline bottom-up, reporting the innermost
    /// offending implication.
    pub fn check_well_formed(&self) -> Result<(), IllTyped> {
        match self {
            PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => Ok(()),
            PropFormula::And(a, b) | PropFormula::Or(a, b) => {
                a.check_well_formed()?;
                b.check_well_formed()
            }
            PropFormula::Imp(_, a, b) => {
                a.check_well_formed()?;
                b.check_well_formed()?;
                self.check_node()
            }
        }
    }

    pub fn is_well_formed(&self) -> bool {
        self.check_well_formed().is_ok()
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            PropFormula::Atom(_) | PropFormula::Top | PropFormula::Bot => 1,
            PropFormula::And(a, b) | PropFormula::Or(a, b) | PropFormula::Imp(_, a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Atom names in first-occurrence order, without repetition.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            PropFormula::Atom(p) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            PropFormula::Top | PropFormula::Bot => {}
            PropFormula::And(a, b) | PropFormula::Or(a, b) | PropFormula::Imp(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

/// `¬n a`, i.e. `a ->n ⊥`.
pub fn neg(n: impl Into<Index>, a: PropFormula) -> Result<PropFormula, IllTyped> {
    PropFormula::try_imp(n, a, PropFormula::Bot)
}

impl ModalFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        ModalFormula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: ModalFormula) -> Self {
        ModalFormula::Not(Box::new(a))
    }

    pub fn and(a: ModalFormula, b: ModalFormula) -> Self {
        ModalFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: ModalFormula, b: ModalFormula) -> Self {
        ModalFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: ModalFormula, b: ModalFormula) -> Self {
        ModalFormula::Imp(Box::new(a), Box::new(b))
    }

    /// Builds `[]n a` without checking the index discipline.
    pub fn boxed(n: impl Into<Index>, a: ModalFormula) -> Self {
        ModalFormula::Box(n.into(), Box::new(a))
    }

    pub fn try_boxed(n: impl Into<Index>, a: ModalFormula) -> Result<Self, IllTyped> {
        let f = Self::boxed(n, a);
        f.check_node()?;
        Ok(f)
    }

    /// Conjunction of a list, `⊤` when empty.
    pub fn conj(items: &[ModalFormula]) -> Self {
        let mut it = items.iter().cloned();
        match it.next() {
            None => ModalFormula::Top,
            Some(first) => it.fold(first, ModalFormula::and),
        }
    }

    pub fn max_index(&self) -> Option<Index> {
        match self {
            ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => None,
            ModalFormula::Not(a) => a.max_index(),
            ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
                max_opt(a.max_index(), b.max_index())
            }
            ModalFormula::Box(n, a) => max_opt(Some(*n), a.max_index()),
        }
    }

    fn check_node(&self) -> Result<(), IllTyped> {
        if let ModalFormula::Box(n, a) = self {
            if let Some(m) = a.max_index() {
                if *n <= m {
                    return Err(IllTyped::NotAbove {
                        subformula: self.to_string(),
                        index: *n,
                        inner: m,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_well_formed(&self) -> Result<(), IllTyped> {
        match self {
            ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => Ok(()),
            ModalFormula::Not(a) => a.check_well_formed(),
            ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
                a.check_well_formed()?;
                b.check_well_formed()
            }
            ModalFormula::Box(_, a) => {
                a.check_well_formed()?;
                self.check_node()
            }
        }
    }

    pub fn is_well_formed(&self) -> bool {
        self.check_well_formed().is_ok()
    }

    pub fn size(&self) -> usize {
        match self {
            ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => 1,
            ModalFormula::Not(a) | ModalFormula::Box(_, a) => 1 + a.size(),
            ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Nesting depth; atoms and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            ModalFormula::Atom(_) | ModalFormula::Top | ModalFormula::Bot => 0,
            ModalFormula::Not(a) | ModalFormula::Box(_, a) => 1 + a.depth(),
            ModalFormula::And(a, b) | ModalFormula::Or(a, b) | ModalFormula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}

impl UntypedProp {
    pub fn atom(name: impl Into<String>) -> Self {
        UntypedProp::Atom(name.into())
    }

    pub fn and(a: UntypedProp, b: UntypedProp) -> Self {
        UntypedProp::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: UntypedProp, b: UntypedProp) -> Self {
        UntypedProp::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: UntypedProp, b: UntypedProp) -> Self {
        UntypedProp::Imp(Box::new(a), Box::new(b))
    }
}

impl UntypedModal {
    pub fn atom(name: impl Into<String>) -> Self {
        UntypedModal::Atom(name.into())
    }

    pub fn and(a: UntypedModal, b: UntypedModal) -> Self {
        UntypedModal::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: UntypedModal, b: UntypedModal) -> Self {
        UntypedModal::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: UntypedModal, b: UntypedModal) -> Self {
        UntypedModal::Imp(Box::new(a), Box::new(b))
    }

    pub fn boxed(a: UntypedModal) -> Self {
        UntypedModal::Box(Box::new(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> PropFormula {
        PropFormula::atom("p")
    }
    fn q() -> PropFormula {
        PropFormula::atom("q")
    }

    #[test]
    fn max_index_examples() {
        assert_eq!(p().max_index(), None);
        assert_eq!(PropFormula::imp(1, p(), q()).max_index(), Some(Index(1)));
        let f = PropFormula::imp(
            2,
            PropFormula::and(PropFormula::imp(1, p(), q()), PropFormula::atom("r")),
            PropFormula::atom("s"),
        );
        assert_eq!(f.max_index(), Some(Index(2)));
    }

    #[test]
    fn neg_examples() {
        assert_eq!(
            neg(1, p()).unwrap(),
            PropFormula::imp(1, p(), PropFormula::Bot)
        );
        let pq = PropFormula::imp(1, p(), q());
        assert_eq!(
            neg(2, pq.clone()).unwrap(),
            PropFormula::imp(2, pq.clone(), PropFormula::Bot)
        );
        assert!(matches!(neg(1, pq), Err(IllTyped::NotAbove { .. })));
    }

    #[test]
    fn zero_implication_rejected() {
        let f = PropFormula::imp(0, p(), q());
        assert!(matches!(
            f.check_well_formed(),
            Err(IllTyped::ZeroImplication { .. })
        ));
    }

    #[test]
    fn box_strictness() {
        let bad = ModalFormula::boxed(0, ModalFormula::boxed(0, ModalFormula::atom("p")));
        assert!(!bad.is_well_formed());
        let good = ModalFormula::boxed(1, ModalFormula::boxed(0, ModalFormula::atom("p")));
        assert!(good.is_well_formed());
        // boolean connectives impose nothing
        let mixed = ModalFormula::imp(
            ModalFormula::boxed(3, ModalFormula::atom("p")),
            ModalFormula::boxed(0, ModalFormula::atom("p")),
        );
        assert!(mixed.is_well_formed());
    }

    #[test]
    fn empty_conjunction_is_top() {
        assert_eq!(ModalFormula::conj(&[]), ModalFormula::Top);
    }
}
