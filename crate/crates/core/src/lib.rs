//! Index-stratified ("typed") propositional and modal provability logics.
//!
//! Implications `A ->n B` and boxes `[]n A` carry a level, and every level
//! must exceed the levels nested inside it. On top of the syntax the crate
//! provides translations between the languages, checkers for Hilbert and
//! natural deduction proofs, cut-free sequent proof search for K4h, KD4h
//! and S4h, and decision procedures for BPCh, EBPCh and IPCh obtained by
//! translating into those calculi.

pub mod syntax;

pub use syntax::{
    neg, parse_modal, parse_prop, IllTyped, Index, ModalFormula, ParseError, PropFormula,
    UntypedModal, UntypedProp,
};

pub mod cli;
pub mod decide;
pub mod gen;
pub mod hilbert;
pub mod natded;
pub mod sequent;
pub mod translate;
