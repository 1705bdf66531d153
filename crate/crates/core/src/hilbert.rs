//! Line-based proofs for the Hilbert systems `L(X)` and their checker.
//!
//! A proof is a list of lines. Each line is a classical tautology (checked
//! semantically, with maximal boxed subformulas read as fresh atoms), an
//! axiom instance with explicit parameters, modus ponens on two earlier
//! lines, or necessitation of an earlier line at an index above every box
//! index in it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::syntax::{as_text, IllTyped, Index, ModalFormula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxiomSchema {
    /// `[]n A -> []n+1 A`
    #[serde(rename = "H")]
    H,
    /// `[]n (A -> B) -> ([]n A -> []n B)`
    #[serde(rename = "Kh")]
    Kh,
    /// `[]n A -> []n+1 []n A`
    #[serde(rename = "4h")]
    FourH,
    /// `~[]n F`
    #[serde(rename = "Dh")]
    Dh,
    /// `[]n+1 ([]n A -> A) -> []n A`
    #[serde(rename = "Lh")]
    Lh,
    /// `[]n A -> A`
    #[serde(rename = "Th")]
    Th,
    /// `~[]n A -> []n+1 ~[]n A`
    #[serde(rename = "5h")]
    FiveH,
}

impl AxiomSchema {
    pub const ALL: [AxiomSchema; 7] = [
        AxiomSchema::H,
        AxiomSchema::Kh,
        AxiomSchema::FourH,
        AxiomSchema::Dh,
        AxiomSchema::Lh,
        AxiomSchema::Th,
        AxiomSchema::FiveH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomSchema::H => "H",
            AxiomSchema::Kh => "Kh",
            AxiomSchema::FourH => "4h",
            AxiomSchema::Dh => "Dh",
            AxiomSchema::Lh => "Lh",
            AxiomSchema::Th => "Th",
            AxiomSchema::FiveH => "5h",
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for AxiomSchema {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AxiomSchema::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown axiom schema `{}`", s))
    }
}

/// A Hilbert system, given by its axiom schemas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSpec {
    pub name: &'static str,
    pub axioms: BTreeSet<AxiomSchema>,
}

impl SystemSpec {
    fn of(name: &'static str, axioms: &[AxiomSchema]) -> Self {
        SystemSpec {
            name,
            axioms: axioms.iter().copied().collect(),
        }
    }

    pub fn k4h() -> Self {
        use AxiomSchema::*;
        Self::of("K4h", &[H, Kh, FourH])
    }

    pub fn kd4h() -> Self {
        use AxiomSchema::*;
        Self::of("KD4h", &[H, Kh, FourH, Dh])
    }

    pub fn s4h() -> Self {
        use AxiomSchema::*;
        Self::of("S4h", &[H, Kh, FourH, Th])
    }

    pub fn glh() -> Self {
        use AxiomSchema::*;
        Self::of("GLh", &[H, Kh, FourH, Lh])
    }

    pub fn kd45h() -> Self {
        use AxiomSchema::*;
        Self::of("KD45h", &[H, Kh, Dh, FourH, FiveH])
    }

    pub fn s5h() -> Self {
        use AxiomSchema::*;
        Self::of("S5h", &[H, Kh, FourH, Th, FiveH])
    }

    pub fn contains(&self, s: AxiomSchema) -> bool {
        self.axioms.contains(&s)
    }
}

impl FromStr for SystemSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let all = [
            Self::k4h(),
            Self::kd4h(),
            Self::s4h(),
            Self::glh(),
            Self::kd45h(),
            Self::s5h(),
        ];
        all.into_iter()
            .find(|sys| sys.name.eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Hilbert system `{}`", s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("schema {0} needs a second operand")]
    MissingOperand(AxiomSchema),
    #[error(transparent)]
    IllTyped(#[from] IllTyped),
}

/// Instance of `schema` at index `n`. `b` is only used by `Kh`.
pub fn instantiate_axiom(
    schema: AxiomSchema,
    n: Index,
    a: &ModalFormula,
    b: Option<&ModalFormula>,
) -> Result<ModalFormula, AxiomError> {
    use ModalFormula as M;
    let bx = |k: Index, f: ModalFormula| M::try_boxed(k, f);
    let f = match schema {
        AxiomSchema::H => M::imp(bx(n, a.clone())?, bx(n.succ(), a.clone())?),
        AxiomSchema::Kh => {
            let b = b.ok_or(AxiomError::MissingOperand(schema))?;
            M::imp(
                bx(n, M::imp(a.clone(), b.clone()))?,
                M::imp(bx(n, a.clone())?, bx(n, b.clone())?),
            )
        }
        AxiomSchema::FourH => {
            let na = bx(n, a.clone())?;
            M::imp(na.clone(), bx(n.succ(), na)?)
        }
        AxiomSchema::Dh => M::not(bx(n, M::Bot)?),
        AxiomSchema::Lh => {
            let na = bx(n, a.clone())?;
            M::imp(bx(n.succ(), M::imp(na.clone(), a.clone()))?, na)
        }
        AxiomSchema::Th => M::imp(bx(n, a.clone())?, a.clone()),
        AxiomSchema::FiveH => {
            let not_na = M::not(bx(n, a.clone())?);
            M::imp(not_na.clone(), bx(n.succ(), not_na)?)
        }
    };
    Ok(f)
}

/// Classical validity with atoms and boxed subformulas as propositional
/// variables. Decided by a classical sequent search, which terminates on
/// every input.
pub fn check_tautology(f: &ModalFormula) -> bool {
    classical(&mut vec![], &mut vec![f])
}

fn classical<'a>(ante: &mut Vec<&'a ModalFormula>, succ: &mut Vec<&'a ModalFormula>) -> bool {
    use ModalFormula as M;
    let is_atomic = |f: &ModalFormula| matches!(f, M::Atom(_) | M::Box(..) | M::Top | M::Bot);
    if let Some(pos) = ante.iter().position(|f| !is_atomic(f)) {
        let f = ante.swap_remove(pos);
        return match f {
            M::Not(a) => classical(ante, &mut with(succ, a)),
            M::And(a, b) => classical(&mut with(&with(ante, a), b), succ),
            M::Or(a, b) => {
                classical(&mut with(ante, a), &mut succ.clone())
                    && classical(&mut with(ante, b), succ)
            }
            M::Imp(a, b) => {
                classical(&mut ante.clone(), &mut with(succ, a))
                    && classical(&mut with(ante, b), succ)
            }
            _ => unreachable!(),
        };
    }
    if let Some(pos) = succ.iter().position(|f| !is_atomic(f)) {
        let f = succ.swap_remove(pos);
        return match f {
            M::Not(a) => classical(&mut with(ante, a), succ),
            M::Or(a, b) => classical(ante, &mut with(&with(succ, a), b)),
            M::And(a, b) => {
                classical(&mut ante.clone(), &mut with(succ, a))
                    && classical(ante, &mut with(succ, b))
            }
            M::Imp(a, b) => classical(&mut with(ante, a), &mut with(succ, b)),
            _ => unreachable!(),
        };
    }
    ante.iter().any(|f| matches!(f, M::Bot))
        || succ.iter().any(|f| matches!(f, M::Top))
        || ante.iter().any(|f| succ.contains(f))
}

fn with<'a>(v: &[&'a ModalFormula], f: &'a ModalFormula) -> Vec<&'a ModalFormula> {
    let mut out = v.to_vec();
    out.push(f);
    out
}

/// One justified line of a Hilbert proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum HilbertLine {
    Taut {
        #[serde(with = "as_text")]
        formula: ModalFormula,
    },
    Axiom {
        schema: AxiomSchema,
        n: u32,
        #[serde(with = "as_text")]
        a: ModalFormula,
        #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_text")]
        b: Option<ModalFormula>,
    },
    /// From line `minor` (`A`) and line `major` (`A -> B`) infer `B`.
    Mp { minor: usize, major: usize },
    /// From line `line` (`A`) infer `[]n A`.
    Nec { line: usize, n: u32 },
}

mod opt_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::syntax::ModalFormula;

    pub fn serialize<S: Serializer>(f: &Option<ModalFormula>, s: S) -> Result<S::Ok, S::Error> {
        match f {
            Some(f) => s.collect_str(f),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ModalFormula>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Proof as an ordered list of lines; the last line is the conclusion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertProof {
    pub lines: Vec<HilbertLine>,
}

impl HilbertProof {
    pub fn new(lines: Vec<HilbertLine>) -> Self {
        HilbertProof { lines }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LineError {
    #[error("not a classical tautology: `{0}`")]
    NotATautology(ModalFormula),
    #[error("schema {0} is not an axiom of {1}")]
    SchemaNotInSystem(AxiomSchema, &'static str),
    #[error("{0}")]
    Axiom(#[from] AxiomError),
    #[error("{0}")]
    IllTyped(#[from] IllTyped),
    #[error("line {0} is not an earlier line")]
    ForwardReference(usize),
    #[error("line {major} is not an implication with antecedent `{minor}`")]
    MpMismatch { minor: ModalFormula, major: usize },
    #[error("necessitation index {n} must exceed inner index {inner}")]
    NecIndex { n: Index, inner: Index },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HilbertError {
    #[error("line {line}: {reason}")]
    BadLine { line: usize, reason: LineError },
    #[error("empty proof")]
    EmptyProof,
    #[error("proof concludes `{found}`, expected `{expected}`")]
    GoalMismatch {
        found: ModalFormula,
        expected: ModalFormula,
    },
    #[error("`{0}` is not among the assumptions")]
    NotSubset(ModalFormula),
}

/// Computes the formula proved at each line, failing at the first invalid
/// line.
pub fn line_formulas(
    sys: &SystemSpec,
    proof: &HilbertProof,
) -> Result<Vec<ModalFormula>, HilbertError> {
    let mut proved: Vec<ModalFormula> = Vec::with_capacity(proof.lines.len());
    for (k, line) in proof.lines.iter().enumerate() {
        let bad = |reason: LineError| HilbertError::BadLine { line: k, reason };
        let earlier = |i: usize| {
            if i < k {
                Ok(proved[i].clone())
            } else {
                Err(bad(LineError::ForwardReference(i)))
            }
        };
        let f = match line {
            HilbertLine::Taut { formula } => {
                formula.check_well_formed().map_err(|e| bad(e.into()))?;
                if !check_tautology(formula) {
                    return Err(bad(LineError::NotATautology(formula.clone())));
                }
                formula.clone()
            }
            HilbertLine::Axiom { schema, n, a, b } => {
                if !sys.contains(*schema) {
                    return Err(bad(LineError::SchemaNotInSystem(*schema, sys.name)));
                }
                a.check_well_formed().map_err(|e| bad(e.into()))?;
                if let Some(b) = b {
                    b.check_well_formed().map_err(|e| bad(e.into()))?;
                }
                instantiate_axiom(*schema, Index(*n), a, b.as_ref()).map_err(|e| bad(e.into()))?
            }
            HilbertLine::Mp { minor, major } => {
                let a = earlier(*minor)?;
                let imp = earlier(*major)?;
                match imp {
                    ModalFormula::Imp(x, y) if *x == a => *y,
                    _ => {
                        return Err(bad(LineError::MpMismatch {
                            minor: a,
                            major: *major,
                        }))
                    }
                }
            }
            HilbertLine::Nec { line, n } => {
                let a = earlier(*line)?;
                let n = Index(*n);
                if let Some(inner) = a.max_index() {
                    if n <= inner {
                        return Err(bad(LineError::NecIndex { n, inner }));
                    }
                }
                ModalFormula::boxed(n, a)
            }
        };
        proved.push(f);
    }
    Ok(proved)
}

/// Checks `proof` in `sys` and that its last line is `goal`.
pub fn check_hilbert(
    sys: &SystemSpec,
    proof: &HilbertProof,
    goal: &ModalFormula,
) -> Result<(), HilbertError> {
    let proved = line_formulas(sys, proof)?;
    let last = proved.last().ok_or(HilbertError::EmptyProof)?;
    if last != goal {
        return Err(HilbertError::GoalMismatch {
            found: last.clone(),
            expected: goal.clone(),
        });
    }
    Ok(())
}

/// `Γ ⊢ A` witnessed by a finite `Δ ⊆ Γ` and a proof of `⋀Δ -> A`.
pub fn check_derives(
    sys: &SystemSpec,
    gamma: &[ModalFormula],
    delta: &[ModalFormula],
    proof: &HilbertProof,
    a: &ModalFormula,
) -> Result<(), HilbertError> {
    if let Some(missing) = delta.iter().find(|d| !gamma.contains(d)) {
        return Err(HilbertError::NotSubset(missing.clone()));
    }
    let goal = ModalFormula::imp(ModalFormula::conj(delta), a.clone());
    check_hilbert(sys, proof, &goal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_modal;

    fn m(s: &str) -> ModalFormula {
        parse_modal(s).unwrap()
    }

    #[test]
    fn axiom_instances() {
        let p = m("p");
        assert_eq!(
            instantiate_axiom(AxiomSchema::FourH, Index(0), &p, None).unwrap(),
            m("[]0 p -> []1 []0 p")
        );
        assert_eq!(
            instantiate_axiom(AxiomSchema::Lh, Index(0), &p, None).unwrap(),
            m("[]1([]0 p -> p) -> []0 p")
        );
        assert!(matches!(
            instantiate_axiom(AxiomSchema::Kh, Index(0), &m("[]0 p"), Some(&m("q"))),
            Err(AxiomError::IllTyped(_))
        ));
        assert_eq!(
            instantiate_axiom(AxiomSchema::Kh, Index(1), &m("[]0 p"), Some(&m("q"))).unwrap(),
            m("[]1([]0 p -> q) -> ([]1 []0 p -> []1 q)")
        );
        assert_eq!(
            instantiate_axiom(AxiomSchema::Dh, Index(2), &p, None).unwrap(),
            m("~[]2 F")
        );
        assert_eq!(
            instantiate_axiom(AxiomSchema::FiveH, Index(0), &p, None).unwrap(),
            m("~[]0 p -> []1 ~[]0 p")
        );
        assert_eq!(
            instantiate_axiom(AxiomSchema::Th, Index(0), &p, None).unwrap(),
            m("[]0 p -> p")
        );
        assert_eq!(
            instantiate_axiom(AxiomSchema::H, Index(0), &p, None).unwrap(),
            m("[]0 p -> []1 p")
        );
        assert!(matches!(
            instantiate_axiom(AxiomSchema::Kh, Index(0), &p, None),
            Err(AxiomError::MissingOperand(_))
        ));
    }

    #[test]
    fn tautology_examples() {
        assert!(check_tautology(&m("[]0 p | ~[]0 p")));
        assert!(!check_tautology(&m("[]0 p -> []1 []0 p")));
        assert!(check_tautology(&m("F -> p")));
        assert!(check_tautology(&m("T")));
        assert!(!check_tautology(&m("F")));
        assert!(check_tautology(&m("((p -> q) -> p) -> p")));
    }

    #[test]
    fn system_constants() {
        use AxiomSchema::*;
        assert_eq!(
            SystemSpec::k4h().axioms,
            [H, Kh, FourH].into_iter().collect()
        );
        assert!(SystemSpec::kd4h().contains(Dh));
        assert!(SystemSpec::s4h().contains(Th));
        assert!(!SystemSpec::s4h().contains(Dh));
        assert!(SystemSpec::glh().contains(Lh));
        assert_eq!(SystemSpec::kd45h().axioms.len(), 5);
        assert_eq!(SystemSpec::s5h().axioms.len(), 5);
        assert_eq!("kd4h".parse::<SystemSpec>().unwrap(), SystemSpec::kd4h());
    }

    #[test]
    fn single_axiom_proof() {
        let proof = HilbertProof::new(vec![HilbertLine::Axiom {
            schema: AxiomSchema::FourH,
            n: 0,
            a: m("p"),
            b: None,
        }]);
        assert!(check_hilbert(&SystemSpec::k4h(), &proof, &m("[]0 p -> []1 []0 p")).is_ok());
    }

    #[test]
    fn schema_outside_system() {
        let proof = HilbertProof::new(vec![HilbertLine::Axiom {
            schema: AxiomSchema::Th,
            n: 0,
            a: m("p"),
            b: None,
        }]);
        let e = check_hilbert(&SystemSpec::k4h(), &proof, &m("[]0 p -> p")).unwrap_err();
        assert_eq!(e.to_string(), "line 0: schema Th is not an axiom of K4h");
    }

    #[test]
    fn necessitation_index_checked() {
        let proof = HilbertProof::new(vec![
            HilbertLine::Taut {
                formula: m("[]0 F -> (T -> []0 F)"),
            },
            HilbertLine::Nec { line: 0, n: 0 },
        ]);
        let e = check_hilbert(&SystemSpec::k4h(), &proof, &m("T")).unwrap_err();
        assert!(matches!(
            e,
            HilbertError::BadLine {
                line: 1,
                reason: LineError::NecIndex { .. }
            }
        ));
        let ok = HilbertProof::new(vec![
            HilbertLine::Taut {
                formula: m("[]0 F -> (T -> []0 F)"),
            },
            HilbertLine::Nec { line: 0, n: 1 },
        ]);
        assert!(check_hilbert(&SystemSpec::k4h(), &ok, &m("[]1([]0 F -> (T -> []0 F))")).is_ok());
    }

    #[test]
    fn forward_reference_rejected() {
        let proof = HilbertProof::new(vec![HilbertLine::Mp { minor: 0, major: 1 }]);
        assert!(matches!(
            line_formulas(&SystemSpec::k4h(), &proof),
            Err(HilbertError::BadLine {
                line: 0,
                reason: LineError::ForwardReference(_)
            })
        ));
    }

    #[test]
    fn derives_from_assumption() {
        // 4h instance, an identity tautology on it, and modus ponens.
        let ax = m("[]0 p -> []1 []0 p");
        let proof = HilbertProof::new(vec![
            HilbertLine::Axiom {
                schema: AxiomSchema::FourH,
                n: 0,
                a: m("p"),
                b: None,
            },
            HilbertLine::Taut {
                formula: ModalFormula::imp(ax.clone(), ax.clone()),
            },
            HilbertLine::Mp { minor: 0, major: 1 },
        ]);
        let gamma = [m("[]0 p")];
        assert!(check_derives(&SystemSpec::k4h(), &gamma, &gamma, &proof, &m("[]1 []0 p")).is_ok());
        assert!(matches!(
            check_derives(
                &SystemSpec::k4h(),
                &gamma,
                &[m("q")],
                &proof,
                &m("[]1 []0 p")
            ),
            Err(HilbertError::NotSubset(_))
        ));
        let taut = HilbertProof::new(vec![HilbertLine::Taut {
            formula: m("T -> (p | ~p)"),
        }]);
        assert!(check_derives(&SystemSpec::k4h(), &gamma, &[], &taut, &m("p | ~p")).is_ok());
    }

    #[test]
    fn json_lines() {
        let text = r#"[{"op":"axiom","schema":"4h","n":0,"a":"p"},{"op":"nec","line":0,"n":2}]"#;
        let proof: HilbertProof = serde_json::from_str(text).unwrap();
        assert_eq!(proof.lines.len(), 2);
        let back = serde_json::to_string(&proof).unwrap();
        assert_eq!(back, text);
    }
}
