//! Sequent calculi `G(K4h)`, `G(KD4h)` and `G(S4h)`: multiset sequents,
//! proof objects with explicit structural rules, a checker, cut-free
//! backward search, and a small exhaustive oracle.
//!
//! Besides `A => A` and `F =>` the calculi here have the axiom `=> T`.
//! Without it `[]0 T`, the translation of the constant `T`, has no proof.

mod check;
mod oracle;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::syntax::{parse_modal, Index, ModalFormula, ParseError};

pub use check::{check_sequent_proof, SeqError, SeqNodeError};
pub use oracle::{oracle_exhaustive, OracleOutcome};
pub use search::{
    decide_modal, prove_sequent, strong_disjunction_check, Budget, Decision, DisjunctionError,
    DisjunctionReport, SearchOutcome, DEFAULT_BUDGET,
};

/// A sequent `Γ => Δ`. Both sides are multisets; the order of the vectors
/// carries no meaning.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub ante: Vec<ModalFormula>,
    pub succ: Vec<ModalFormula>,
}

impl Sequent {
    pub fn new(ante: Vec<ModalFormula>, succ: Vec<ModalFormula>) -> Self {
        Sequent { ante, succ }
    }

    /// Same sequent with both sides sorted, so that `==` is multiset
    /// equality.
    pub fn normalized(&self) -> Sequent {
        let (mut ante, mut succ) = (self.ante.clone(), self.succ.clone());
        ante.sort();
        succ.sort();
        Sequent { ante, succ }
    }

    pub fn max_index(&self) -> Option<Index> {
        self.ante
            .iter()
            .chain(&self.succ)
            .filter_map(ModalFormula::max_index)
            .max()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[ModalFormula]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match (self.ante.is_empty(), self.succ.is_empty()) {
            (true, true) => f.write_str("=>"),
            (true, false) => write!(f, "=> {}", side(&self.succ)),
            (false, true) => write!(f, "{} =>", side(&self.ante)),
            (false, false) => write!(f, "{} => {}", side(&self.ante), side(&self.succ)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequentParseError {
    #[error("a sequent needs exactly one `=>`")]
    Arrow,
    #[error("in formula {position} of the {side}: {error}")]
    Formula {
        side: &'static str,
        position: usize,
        error: ParseError,
    },
}

/// Splits at commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_side(s: &str, side: &'static str) -> Result<Vec<ModalFormula>, SequentParseError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    split_top_level(s)
        .into_iter()
        .enumerate()
        .map(|(i, part)| {
            parse_modal(part.trim()).map_err(|error| SequentParseError::Formula {
                side,
                position: i + 1,
                error,
            })
        })
        .collect()
}

impl FromStr for Sequent {
    type Err = SequentParseError;

    /// Text form `A1, A2 => B1, B2`; either side may be empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split("=>").collect();
        if parts.len() != 2 {
            return Err(SequentParseError::Arrow);
        }
        Ok(Sequent::new(
            parse_side(parts[0], "antecedent")?,
            parse_side(parts[1], "succedent")?,
        ))
    }
}

impl Serialize for Sequent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Sequent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CalculusSpec {
    GK4h,
    GKD4h,
    GS4h,
    /// GL-style rule for `GLh`. Not a calculus of the literature; sound by
    /// the argument in [`ModalKind::Lob`], completeness unknown.
    GGLhExperimental,
}

impl CalculusSpec {
    pub fn name(self) -> &'static str {
        match self {
            CalculusSpec::GK4h => "GK4h",
            CalculusSpec::GKD4h => "GKD4h",
            CalculusSpec::GS4h => "GS4h",
            CalculusSpec::GGLhExperimental => "GGLh",
        }
    }

    pub fn allows(self, kind: ModalKind) -> bool {
        use CalculusSpec::*;
        match kind {
            ModalKind::Four => matches!(self, GK4h | GKD4h),
            ModalKind::D => self == GKD4h,
            ModalKind::S => self == GS4h,
            ModalKind::Lob => self == GGLhExperimental,
        }
    }

    pub fn has_box_left(self) -> bool {
        self == CalculusSpec::GS4h
    }
}

impl fmt::Display for CalculusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CalculusSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gk4h" => Ok(CalculusSpec::GK4h),
            "gkd4h" => Ok(CalculusSpec::GKD4h),
            "gs4h" => Ok(CalculusSpec::GS4h),
            "gglh" => Ok(CalculusSpec::GGLhExperimental),
            _ => Err(format!("unknown calculus `{}`", s)),
        }
    }
}

/// Modal logics with a sequent calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModalSystem {
    K4h,
    KD4h,
    S4h,
}

impl ModalSystem {
    pub fn calculus(self) -> CalculusSpec {
        match self {
            ModalSystem::K4h => CalculusSpec::GK4h,
            ModalSystem::KD4h => CalculusSpec::GKD4h,
            ModalSystem::S4h => CalculusSpec::GS4h,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModalSystem::K4h => "K4h",
            ModalSystem::KD4h => "KD4h",
            ModalSystem::S4h => "S4h",
        }
    }
}

impl fmt::Display for ModalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ModalSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "k4h" => Ok(ModalSystem::K4h),
            "kd4h" => Ok(ModalSystem::KD4h),
            "s4h" => Ok(ModalSystem::S4h),
            _ => Err(format!("no sequent calculus for `{}`", s)),
        }
    }
}

/// The right rules for boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModalKind {
    /// `σ, γ, []γ => A` gives `[]n σ, []γ => []n A`.
    Four,
    /// As `Four` with empty succedents.
    D,
    /// `σ, []γ => A` gives `[]n σ, []γ => []n A`.
    S,
    /// Experimental: `σ, γ, []γ, []n A => A` gives `[]n+1 σ, []γ => []n A`
    /// with every γ index at most `n`. From the premise, necessitation at
    /// `n+1`, Kh, H and 4h give `[]n+1 σ, []γ => []n+1([]n A -> A)`, and Lh
    /// closes.
    Lob,
}

/// Inference rule of a sequent proof node, with enough data to check the
/// node without search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum SeqRule {
    Ax,
    BotL,
    TopR,
    WL {
        #[serde(with = "crate::syntax::as_text")]
        formula: ModalFormula,
    },
    WR {
        #[serde(with = "crate::syntax::as_text")]
        formula: ModalFormula,
    },
    CL {
        #[serde(with = "crate::syntax::as_text")]
        formula: ModalFormula,
    },
    CR {
        #[serde(with = "crate::syntax::as_text")]
        formula: ModalFormula,
    },
    Cut {
        #[serde(with = "crate::syntax::as_text")]
        formula: ModalFormula,
    },
    AndL {
        i: u8,
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    AndR {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    OrL {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    OrR {
        i: u8,
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    ImpL {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    ImpR {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    NotL {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    NotR {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    BoxL {
        #[serde(with = "crate::syntax::as_text")]
        principal: ModalFormula,
    },
    /// `sigma` lists the unboxed σ formulas, `gamma` the boxed `[]m γ`.
    ModalR {
        kind: ModalKind,
        n: u32,
        #[serde(with = "crate::syntax::as_text_vec")]
        sigma: Vec<ModalFormula>,
        #[serde(with = "crate::syntax::as_text_vec")]
        gamma: Vec<ModalFormula>,
    },
}

impl SeqRule {
    pub fn name(&self) -> &'static str {
        use SeqRule::*;
        match self {
            Ax => "Ax",
            BotL => "BotL",
            TopR => "TopR",
            WL { .. } => "wL",
            WR { .. } => "wR",
            CL { .. } => "cL",
            CR { .. } => "cR",
            Cut { .. } => "cut",
            AndL { .. } => "AndL",
            AndR { .. } => "AndR",
            OrL { .. } => "OrL",
            OrR { .. } => "OrR",
            ImpL { .. } => "ImpL",
            ImpR { .. } => "ImpR",
            NotL { .. } => "NotL",
            NotR { .. } => "NotR",
            BoxL { .. } => "BoxL",
            ModalR { kind, .. } => match kind {
                ModalKind::Four => "Box4R",
                ModalKind::D => "BoxDR",
                ModalKind::S => "BoxSR",
                ModalKind::Lob => "BoxLobR",
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequentProof {
    pub sequent: Sequent,
    #[serde(flatten)]
    pub rule: SeqRule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<SequentProof>,
}

impl SequentProof {
    pub fn new(sequent: Sequent, rule: SeqRule, children: Vec<SequentProof>) -> Self {
        SequentProof {
            sequent,
            rule,
            children,
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(SequentProof::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(SequentProof::height)
            .max()
            .unwrap_or(0)
    }

    /// Indented rendering, conclusion first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("{}    [{}]\n", self.sequent, self.rule.name()));
        for c in &self.children {
            c.render_into(depth + 1, out);
        }
    }
}
