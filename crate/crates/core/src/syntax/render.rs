use std::fmt;

use super::{Index, ModalFormula, PropFormula, UntypedModal, UntypedProp};

/// Uniform read-only view over the four formula languages.
pub enum Shape<'a, F> {
    Atom(&'a str),
    Top,
    Bot,
    Not(&'a F),
    And(&'a F, &'a F),
    Or(&'a F, &'a F),
    Imp(Option<Index>, &'a F, &'a F),
    Box(Option<Index>, &'a F),
}

pub trait Syntax: Sized {
    fn shape(&self) -> Shape<'_, Self>;
}

impl Syntax for PropFormula {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            PropFormula::Atom(p) => Shape::Atom(p),
            PropFormula::Top => Shape::Top,
            PropFormula::Bot => Shape::Bot,
            PropFormula::And(a, b) => Shape::And(a, b),
            PropFormula::Or(a, b) => Shape::Or(a, b),
            PropFormula::Imp(n, a, b) => Shape::Imp(Some(*n), a, b),
        }
    }
}

impl Syntax for ModalFormula {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            ModalFormula::Atom(p) => Shape::Atom(p),
            ModalFormula::Top => Shape::Top,
            ModalFormula::Bot => Shape::Bot,
            ModalFormula::Not(a) => Shape::Not(a),
            ModalFormula::And(a, b) => Shape::And(a, b),
            ModalFormula::Or(a, b) => Shape::Or(a, b),
            ModalFormula::Imp(a, b) => Shape::Imp(None, a, b),
            ModalFormula::Box(n, a) => Shape::Box(Some(*n), a),
        }
    }
}

impl Syntax for UntypedProp {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            UntypedProp::Atom(p) => Shape::Atom(p),
            UntypedProp::Top => Shape::Top,
            UntypedProp::Bot => Shape::Bot,
            UntypedProp::And(a, b) => Shape::And(a, b),
            UntypedProp::Or(a, b) => Shape::Or(a, b),
            UntypedProp::Imp(a, b) => Shape::Imp(None, a, b),
        }
    }
}

impl Syntax for UntypedModal {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            UntypedModal::Atom(p) => Shape::Atom(p),
            UntypedModal::Top => Shape::Top,
            UntypedModal::Bot => Shape::Bot,
            UntypedModal::Not(a) => Shape::Not(a),
            UntypedModal::And(a, b) => Shape::And(a, b),
            UntypedModal::Or(a, b) => Shape::Or(a, b),
            UntypedModal::Imp(a, b) => Shape::Imp(None, a, b),
            UntypedModal::Box(a) => Shape::Box(None, a),
        }
    }
}

// Binary connectives are always parenthesised, implications only when they
// appear as an operand, so the printed form parses back to the same tree.
fn write_formula<F: Syntax>(f: &F, out: &mut fmt::Formatter<'_>, operand: bool) -> fmt::Result {
    match f.shape() {
        Shape::Atom(p) => out.write_str(p),
        Shape::Top => out.write_str("T"),
        Shape::Bot => out.write_str("F"),
        Shape::Not(a) => {
            out.write_str("~")?;
            write_formula(a, out, true)
        }
        Shape::And(a, b) => {
            out.write_str("(")?;
            write_formula(a, out, true)?;
            out.write_str(" & ")?;
            write_formula(b, out, true)?;
            out.write_str(")")
        }
        Shape::Or(a, b) => {
            out.write_str("(")?;
            write_formula(a, out, true)?;
            out.write_str(" | ")?;
            write_formula(b, out, true)?;
            out.write_str(")")
        }
        Shape::Imp(n, a, b) => {
            if operand {
                out.write_str("(")?;
            }
            write_formula(a, out, true)?;
            match n {
                Some(n) => write!(out, " ->{} ", n)?,
                None => out.write_str(" -> ")?,
            }
            write_formula(b, out, true)?;
            if operand {
                out.write_str(")")?;
            }
            Ok(())
        }
        Shape::Box(n, a) => {
            match n {
                Some(n) => write!(out, "[]{}", n)?,
                None => out.write_str("[]")?,
            }
            if !matches!(a.shape(), Shape::And(..) | Shape::Or(..) | Shape::Imp(..)) {
                out.write_str(" ")?;
            }
            write_formula(a, out, true)
        }
    }
}

macro_rules! display_via_render {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_formula(self, f, false)
            }
        }
    )*};
}

display_via_render!(PropFormula, ModalFormula, UntypedProp, UntypedModal);
