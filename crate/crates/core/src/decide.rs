//! Decision procedures for the propositional systems, by translation into
//! the modal sequent calculi, and a batch runner for corpora of judgments.
//!
//! `Γ ⊢ A` in BPCh, EBPCh or IPCh holds exactly when `Γᵇ ⊢ Aᵇ` holds in
//! K4h, KD4h or S4h respectively. That equivalence is a metatheorem and the
//! procedures below take it on trust; what they check at run time is the
//! modal side, with a proof object whenever the answer is yes.
//!
//! FPLh and CPCh have no decision procedure here. FPLh would need a
//! sequent calculus for GLh (only an experimental one exists, see
//! [`crate::sequent::CalculusSpec::GGLhExperimental`]); CPCh has no completeness result to
//! translate through.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::sequent::{decide_modal, Budget, Decision, ModalSystem};
use crate::syntax::{parse_modal, parse_prop, IllTyped, ModalFormula, PropFormula};
use crate::translate::godel_b;

/// Propositional systems with a decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropSystem {
    BPCh,
    EBPCh,
    IPCh,
}

impl PropSystem {
    pub const ALL: [PropSystem; 3] = [PropSystem::BPCh, PropSystem::EBPCh, PropSystem::IPCh];

    pub fn name(self) -> &'static str {
        match self {
            PropSystem::BPCh => "BPCh",
            PropSystem::EBPCh => "EBPCh",
            PropSystem::IPCh => "IPCh",
        }
    }

    /// The modal logic the Gödel translation lands in.
    pub fn counterpart(self) -> ModalSystem {
        match self {
            PropSystem::BPCh => ModalSystem::K4h,
            PropSystem::EBPCh => ModalSystem::KD4h,
            PropSystem::IPCh => ModalSystem::S4h,
        }
    }
}

impl fmt::Display for PropSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for PropSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bpch" => Ok(PropSystem::BPCh),
            "ebpch" => Ok(PropSystem::EBPCh),
            "ipch" => Ok(PropSystem::IPCh),
            "fplh" => Err(
                "FPLh has no decision procedure; check proofs with the ND kernel instead".into(),
            ),
            "cpch" => Err(
                "CPCh has no decision procedure; check proofs with the ND kernel instead".into(),
            ),
            _ => Err(format!("unknown propositional system `{}`", s)),
        }
    }
}

/// Decides `Γ ⊢ A` in `sys`. On success the proof is a sequent proof of
/// `Γᵇ => Aᵇ` in the counterpart calculus.
pub fn decide_prop(
    sys: PropSystem,
    gamma: &[PropFormula],
    a: &PropFormula,
    budget: Budget,
) -> Result<Decision, IllTyped> {
    for f in gamma.iter().chain([a]) {
        f.check_well_formed()?;
    }
    let gamma_b: Vec<ModalFormula> = gamma.iter().map(godel_b).collect();
    Ok(decide_modal(
        sys.counterpart(),
        &gamma_b,
        &godel_b(a),
        budget,
    ))
}

/// Which disjunct of a provable disjunction is itself provable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Left,
    Right,
    NotATheorem,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error(transparent)]
    IllTyped(#[from] IllTyped),
    #[error("search budget exhausted")]
    Inconclusive,
    /// The disjunction is provable and neither disjunct is. The systems
    /// have the disjunction property, so this means a bug in the searcher.
    #[error("disjunction property violated: `{disjunction}` is provable but neither side is")]
    PropertyViolation { disjunction: PropFormula },
}

/// Splits a provable `a | b` into a provable side, trying `a` first.
pub fn split_disjunction(
    sys: PropSystem,
    a: &PropFormula,
    b: &PropFormula,
    budget: Budget,
) -> Result<Split, SplitError> {
    let decide = |f: &PropFormula| -> Result<bool, SplitError> {
        decide_prop(sys, &[], f, budget)?
            .as_bool()
            .ok_or(SplitError::Inconclusive)
    };
    let disjunction = PropFormula::or(a.clone(), b.clone());
    if !decide(&disjunction)? {
        return Ok(Split::NotATheorem);
    }
    if decide(a)? {
        return Ok(Split::Left);
    }
    if decide(b)? {
        return Ok(Split::Right);
    }
    Err(SplitError::PropertyViolation { disjunction })
}

/// Expected or obtained verdict for a corpus entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Provable,
    NotProvable,
    Inconclusive,
    /// The entry could not be read: unknown system or bad formula.
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Provable => "provable",
            Verdict::NotProvable => "not_provable",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Error => "error",
        })
    }
}

/// One judgment `hypotheses ⊢ goal` in `system`, which names either a
/// propositional system (BPCh, EBPCh, IPCh) or a modal one (K4h, KD4h,
/// S4h).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub system: String,
    #[serde(default)]
    pub hypotheses: Vec<String>,
    pub goal: String,
    pub expected: Verdict,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("corpus line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

/// Reads JSON lines, skipping blank ones. Lines are numbered from 1.
pub fn load_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| CorpusError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CorpusOptions {
    pub budget: Budget,
    /// Record wall-clock time per entry. Off by default so that reports
    /// are byte-for-byte reproducible.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryResult {
    /// Position in the input, from 0.
    pub index: usize,
    pub system: String,
    pub goal: String,
    pub expected: Verdict,
    pub verdict: Verdict,
    pub matches: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proof_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Mismatches first, then everything else, each group in input order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub inconclusive: usize,
    pub entries: Vec<EntryResult>,
}

impl CorpusReport {
    pub fn success(&self) -> bool {
        self.mismatched == 0
    }
}

enum Judgment {
    Prop(PropSystem, Vec<PropFormula>, PropFormula),
    Modal(ModalSystem, Vec<ModalFormula>, ModalFormula),
}

fn read_entry(e: &CorpusEntry) -> Result<Judgment, String> {
    if let Ok(sys) = e.system.parse::<ModalSystem>() {
        let hyps = e
            .hypotheses
            .iter()
            .map(|h| parse_modal(h))
            .collect::<Result<_, _>>();
        let goal = parse_modal(&e.goal);
        return Ok(Judgment::Modal(
            sys,
            hyps.map_err(|x| x.to_string())?,
            goal.map_err(|x| x.to_string())?,
        ));
    }
    let sys: PropSystem = e.system.parse()?;
    let hyps = e
        .hypotheses
        .iter()
        .map(|h| parse_prop(h))
        .collect::<Result<_, _>>();
    let goal = parse_prop(&e.goal);
    Ok(Judgment::Prop(
        sys,
        hyps.map_err(|x| x.to_string())?,
        goal.map_err(|x| x.to_string())?,
    ))
}

fn run_entry(index: usize, e: &CorpusEntry, opts: &CorpusOptions) -> EntryResult {
    let start = Instant::now();
    let (verdict, proof_size, error) = match read_entry(e) {
        Err(msg) => (Verdict::Error, None, Some(msg)),
        Ok(j) => {
            let d = match j {
                Judgment::Prop(sys, g, a) => {
                    decide_prop(sys, &g, &a, opts.budget).expect("parsed formulas are well-formed")
                }
                Judgment::Modal(sys, g, a) => decide_modal(sys, &g, &a, opts.budget),
            };
            match d {
                Decision::Provable(p) => (Verdict::Provable, Some(p.size()), None),
                Decision::NotProvable => (Verdict::NotProvable, None, None),
                Decision::Inconclusive => (Verdict::Inconclusive, None, None),
            }
        }
    };
    EntryResult {
        index,
        system: e.system.clone(),
        goal: e.goal.clone(),
        expected: e.expected,
        verdict,
        // An inconclusive run is recorded but not held against the entry.
        matches: verdict == e.expected || verdict == Verdict::Inconclusive,
        proof_size,
        millis: opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
        error,
        note: e.note.clone(),
    }
}

/// Decides every entry. Never fails: unreadable entries come back with
/// verdict [`Verdict::Error`] and count as mismatches.
pub fn run_corpus(entries: &[CorpusEntry], opts: &CorpusOptions) -> CorpusReport {
    let results: Vec<EntryResult> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| run_entry(i, e, opts))
        .collect();
    let (bad, good): (Vec<_>, Vec<_>) = results.into_iter().partition(|r| !r.matches);
    let inconclusive = good
        .iter()
        .filter(|r| r.verdict == Verdict::Inconclusive)
        .count();
    CorpusReport {
        total: entries.len(),
        matched: good.len(),
        mismatched: bad.len(),
        inconclusive,
        entries: bad.into_iter().chain(good).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PropFormula {
        parse_prop(s).unwrap()
    }

    fn decide(sys: PropSystem, gamma: &[&str], a: &str) -> bool {
        let g: Vec<PropFormula> = gamma.iter().map(|s| p(s)).collect();
        decide_prop(sys, &g, &p(a), Budget::default())
            .unwrap()
            .as_bool()
            .unwrap()
    }

    #[test]
    fn separating_examples() {
        assert!(decide(PropSystem::EBPCh, &[], "(T ->1 F) ->2 F"));
        assert!(!decide(PropSystem::BPCh, &[], "(T ->1 F) ->2 F"));
        assert!(decide(PropSystem::IPCh, &["p", "p ->1 q"], "q"));
        assert!(!decide(PropSystem::BPCh, &["p", "p ->1 q"], "q"));
    }

    #[test]
    fn split_examples() {
        let b = Budget::default();
        assert_eq!(
            split_disjunction(PropSystem::IPCh, &p("T"), &p("F"), b),
            Ok(Split::Left)
        );
        assert_eq!(
            split_disjunction(PropSystem::IPCh, &p("p"), &p("p ->1 F"), b),
            Ok(Split::NotATheorem)
        );
        assert_eq!(
            split_disjunction(PropSystem::BPCh, &p("T ->1 T"), &p("p"), b),
            Ok(Split::Left)
        );
        assert_eq!(
            split_disjunction(PropSystem::BPCh, &p("p"), &p("q ->1 q"), b),
            Ok(Split::Right)
        );
    }

    #[test]
    fn excluded_systems_are_named_in_the_error() {
        assert!("FPLh".parse::<PropSystem>().unwrap_err().contains("FPLh"));
        assert!("CPCh".parse::<PropSystem>().is_err());
    }

    #[test]
    fn corpus_orders_mismatches_first() {
        let text = r#"{"system":"IPCh","hypotheses":["p","p ->1 q"],"goal":"q","expected":"provable"}

{"system":"BPCh","goal":"(T ->1 F) ->2 F","expected":"provable","note":"wrong on purpose"}
{"system":"K4h","goal":"[]0 p -> []1 []0 p","expected":"provable"}
{"system":"XYZ","goal":"p","expected":"provable"}"#;
        let entries = load_corpus(text).unwrap();
        assert_eq!(entries.len(), 4);
        let r = run_corpus(&entries, &CorpusOptions::default());
        assert_eq!((r.total, r.matched, r.mismatched), (4, 2, 2));
        assert_eq!(
            r.entries.iter().map(|e| e.index).collect::<Vec<_>>(),
            vec![1, 3, 0, 2]
        );
        assert_eq!(r.entries[1].verdict, Verdict::Error);
        assert!(r.entries.iter().all(|e| e.millis.is_none()));
        assert!(!r.success());
        assert!(run_corpus(&[], &CorpusOptions::default()).success());
    }

    #[test]
    fn bad_corpus_line_is_located() {
        let err = load_corpus("\n{\"system\":\"BPCh\"}").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
