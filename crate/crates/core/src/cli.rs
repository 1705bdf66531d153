//! The `hierlog` command line.
//!
//! Exit codes: 0 success (provable, valid), 1 negative answer (not
//! provable, invalid proof, corpus mismatch), 2 input error, 3 search
//! budget exhausted. Errors go to stderr; with `--json` stdout carries one
//! JSON document per run.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::decide::{
    decide_prop, load_corpus, run_corpus, split_disjunction, CorpusOptions, PropSystem, Split,
    SplitError,
};
use crate::hilbert::{check_hilbert, line_formulas, HilbertProof, SystemSpec};
use crate::natded::{
    check_nd, open_hypotheses, schema_primed_rule, schema_reindex, schema_rewitness,
    schema_star_rule_for, NdError, NdProof, NdSystem, Simulation,
};
use crate::sequent::{
    check_sequent_proof, decide_modal, prove_sequent, Budget, CalculusSpec, Decision, ModalSystem,
    Sequent, DEFAULT_BUDGET,
};
use crate::syntax::{
    parse_modal, parse_prop, parse_untyped_modal, parse_untyped_prop, AstNode, Index, ModalFormula,
    PropFormula, UntypedProp,
};
use crate::translate::{
    bhk_unfold, canonical_witness, godel_b, godel_b_untyped, witness_of, AtomNaming, Forget,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Names accepted by `hierlog schemas`.
pub const SCHEMA_NAMES: [&str; 4] = ["reindex", "rewitness", "primed-rule", "star-rule"];

#[derive(Parser, Debug)]
#[command(
    name = "hierlog",
    version,
    about = "Typed provability logics: parse, translate, prove, check"
)]
struct Cli {
    /// Print one JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Search node budget. Defaults to $HIERLOG_BUDGET, then 1000000.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and type-check a formula.
    Parse {
        formula: String,
        /// Modal language (boxes, `~`).
        #[arg(long)]
        modal: bool,
        /// Language without indices.
        #[arg(long)]
        untyped: bool,
    },
    /// Apply a translation.
    #[command(subcommand)]
    Translate(Translate),
    /// Decide a judgment.
    Prove(ProveArgs),
    /// Check a proof file (`-` reads stdin).
    CheckProof(CheckArgs),
    /// Find a provable disjunct of a provable disjunction.
    Split {
        #[arg(long)]
        system: String,
        a: String,
        b: String,
    },
    /// Batch runs over JSON-lines corpora.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Generate a derived-rule proof and check it.
    Schemas {
        name: String,
        params: Vec<String>,
        /// Write the proof here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Translate {
    /// Gödel translation into the modal language.
    B {
        formula: String,
        #[arg(long)]
        untyped: bool,
    },
    /// Erase all indices.
    F {
        formula: String,
        #[arg(long)]
        modal: bool,
    },
    /// Split a typed formula into shape and indices, or (with --untyped)
    /// give the least indexing of an untyped one.
    Witness {
        formula: String,
        #[arg(long)]
        untyped: bool,
    },
    /// Unfold into provability predicates. Atoms without --name keep
    /// their own name.
    Unfold {
        formula: String,
        /// `atom=sentence`, repeatable.
        #[arg(long = "name")]
        names: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct ProveArgs {
    /// BPCh, EBPCh, IPCh, K4h, KD4h or S4h.
    #[arg(long, conflicts_with = "calc", required_unless_present = "calc")]
    system: Option<String>,
    /// Sequent calculus (GK4h, GKD4h, GS4h, GGLh); the goal is then a
    /// sequent `A, B => C`.
    #[arg(long)]
    calc: Option<String>,
    /// Hypothesis, repeatable.
    #[arg(long = "hyp")]
    hyps: Vec<String>,
    /// Print the sequent proof.
    #[arg(long)]
    proof: bool,
    goal: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ProofKind {
    #[arg(long)]
    hilbert: bool,
    #[arg(long)]
    nd: bool,
    #[arg(long)]
    sequent: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    kind: ProofKind,
    /// Hilbert system, ND system, or calculus.
    #[arg(long)]
    system: String,
    /// Expected conclusion. Defaults to the proof's own.
    #[arg(long)]
    goal: Option<String>,
    /// Allowed open hypothesis (ND only), repeatable.
    #[arg(long = "hyp")]
    hyps: Vec<String>,
    /// Untyped formulas (ND only).
    #[arg(long)]
    untyped: bool,
    file: String,
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    Run {
        file: String,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<String>,
        /// Record per-entry wall-clock time.
        #[arg(long)]
        timing: bool,
    },
}

/// What a command produced: exit code plus both renderings.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn new(code: i32, text: impl Into<String>, json: Value) -> Self {
        Outcome {
            code,
            text: text.into(),
            json,
        }
    }
}

/// An input error; exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", rendered);
            return code;
        }
    };
    let json = cli.json;
    let result = budget(cli.budget).and_then(|b| dispatch(cli.command, b));
    match result {
        Ok(o) => {
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json value")
                );
            } else if !o.text.is_empty() {
                let _ = writeln!(out, "{}", o.text.trim_end());
            }
            o.code
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            if json {
                let _ = writeln!(out, "{}", json!({"status": "error", "message": msg}));
            }
            EXIT_INPUT
        }
    }
}

fn budget(flag: Option<u64>) -> Result<Budget, InputError> {
    if let Some(b) = flag {
        return Ok(Budget(b));
    }
    match std::env::var("HIERLOG_BUDGET") {
        Ok(v) => v.trim().parse().map(Budget).map_err(|_| {
            InputError(format!(
                "HIERLOG_BUDGET must be a non-negative integer, got `{}`",
                v
            ))
        }),
        Err(_) => Ok(Budget(DEFAULT_BUDGET)),
    }
}

fn dispatch(cmd: Command, budget: Budget) -> CmdResult {
    match cmd {
        Command::Parse {
            formula,
            modal,
            untyped,
        } => cmd_parse(&formula, modal, untyped),
        Command::Translate(t) => cmd_translate(t),
        Command::Prove(p) => cmd_prove(p, budget),
        Command::CheckProof(c) => cmd_check(c),
        Command::Split { system, a, b } => cmd_split(&system, &a, &b, budget),
        Command::Corpus(CorpusCmd::Run {
            file,
            report,
            timing,
        }) => cmd_corpus(&file, report.as_deref(), timing, budget),
        Command::Schemas { name, params, out } => cmd_schemas(&name, &params, out.as_deref()),
    }
}

fn read_input(path: &str) -> Result<String, InputError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {}", path, e)))
}

fn cmd_parse(text: &str, modal: bool, untyped: bool) -> CmdResult {
    let (rendered, ast, max_index, size) = match (modal, untyped) {
        (false, false) => {
            let f = parse_prop(text)?;
            (f.to_string(), AstNode::from(&f), f.max_index(), f.size())
        }
        (true, false) => {
            let f = parse_modal(text)?;
            (f.to_string(), AstNode::from(&f), f.max_index(), f.size())
        }
        (false, true) => {
            let f = parse_untyped_prop(text)?;
            (f.to_string(), AstNode::from(&f), None, 0)
        }
        (true, true) => {
            let f = parse_untyped_modal(text)?;
            (f.to_string(), AstNode::from(&f), None, 0)
        }
    };
    let json = json!({
        "formula": rendered,
        "ast": ast,
        "max_index": max_index.map(Index::get),
    });
    let mut text = rendered;
    if !untyped {
        let m = max_index.map_or("none".to_string(), |m| m.to_string());
        text.push_str(&format!("\nmax index: {}, size: {}", m, size));
    }
    Ok(Outcome::new(EXIT_OK, text, json))
}

fn cmd_translate(t: Translate) -> CmdResult {
    let (input, output) = match t {
        Translate::B {
            formula,
            untyped: false,
        } => (formula.clone(), godel_b(&parse_prop(&formula)?).to_string()),
        Translate::B {
            formula,
            untyped: true,
        } => (
            formula.clone(),
            godel_b_untyped(&parse_untyped_prop(&formula)?).to_string(),
        ),
        Translate::F {
            formula,
            modal: false,
        } => (formula.clone(), parse_prop(&formula)?.forget().to_string()),
        Translate::F {
            formula,
            modal: true,
        } => (formula.clone(), parse_modal(&formula)?.forget().to_string()),
        Translate::Witness {
            formula,
            untyped: false,
        } => {
            let (shape, w) = witness_of(&parse_prop(&formula)?);
            let text = format!("{}\n{}", shape, w);
            let json = json!({"input": formula, "shape": shape.to_string(), "witness": w});
            return Ok(Outcome::new(EXIT_OK, text, json));
        }
        Translate::Witness {
            formula,
            untyped: true,
        } => {
            let shape = parse_untyped_prop(&formula)?;
            let w = canonical_witness(&shape);
            let typed = crate::translate::apply_witness(&shape, &w)?;
            let text = format!("{}\n{}", w, typed);
            let json = json!({"input": formula, "witness": w, "output": typed.to_string()});
            return Ok(Outcome::new(EXIT_OK, text, json));
        }
        Translate::Unfold { formula, names } => {
            let f = parse_prop(&formula)?;
            let mut naming: AtomNaming = f.atoms().into_iter().map(|a| (a.clone(), a)).collect();
            for n in &names {
                let (atom, sentence) = n.split_once('=').ok_or_else(|| {
                    InputError(format!("--name expects atom=sentence, got `{}`", n))
                })?;
                naming.insert(atom.trim().to_string(), sentence.trim().to_string());
            }
            (formula, bhk_unfold(&f, &naming)?)
        }
    };
    let json = json!({"input": input, "output": output});
    Ok(Outcome::new(EXIT_OK, output, json))
}

enum Goal {
    Prop(PropSystem, Vec<PropFormula>, PropFormula),
    Modal(ModalSystem, Vec<ModalFormula>, ModalFormula),
    Sequent(CalculusSpec, Sequent),
}

fn read_goal(p: &ProveArgs) -> Result<Goal, InputError> {
    if let Some(calc) = &p.calc {
        let calc: CalculusSpec = calc.parse()?;
        if !p.hyps.is_empty() {
            return Err(InputError(
                "--hyp cannot be combined with --calc; put hypotheses in the sequent".into(),
            ));
        }
        return Ok(Goal::Sequent(calc, p.goal.parse()?));
    }
    let system = p
        .system
        .as_deref()
        .expect("clap requires --system or --calc");
    if let Ok(sys) = system.parse::<ModalSystem>() {
        let hyps = p
            .hyps
            .iter()
            .map(|h| parse_modal(h))
            .collect::<Result<_, _>>()?;
        return Ok(Goal::Modal(sys, hyps, parse_modal(&p.goal)?));
    }
    let sys: PropSystem = system.parse()?;
    let hyps = p
        .hyps
        .iter()
        .map(|h| parse_prop(h))
        .collect::<Result<_, _>>()?;
    Ok(Goal::Prop(sys, hyps, parse_prop(&p.goal)?))
}

fn cmd_prove(p: ProveArgs, budget: Budget) -> CmdResult {
    let goal = read_goal(&p)?;
    let (system, judgment, decision) = match goal {
        Goal::Prop(sys, g, a) => {
            let s = Sequent::new(g.iter().map(godel_b).collect(), vec![godel_b(&a)]);
            let d = decide_prop(sys, &g, &a, budget)?;
            (sys.to_string(), s, d)
        }
        Goal::Modal(sys, g, a) => {
            let d = decide_modal(sys, &g, &a, budget);
            (sys.to_string(), Sequent::new(g, vec![a]), d)
        }
        Goal::Sequent(calc, s) => {
            let d = Decision::from(prove_sequent(calc, &s, budget));
            (calc.to_string(), s, d)
        }
    };
    let (code, verdict) = match &decision {
        Decision::Provable(_) => (EXIT_OK, "provable"),
        Decision::NotProvable => (EXIT_NO, "not provable"),
        Decision::Inconclusive => (EXIT_INCONCLUSIVE, "inconclusive: search budget exhausted"),
    };
    let mut text = verdict.to_string();
    let mut json = json!({
        "system": system,
        "sequent": judgment.to_string(),
        "verdict": verdict.split(':').next().unwrap_or(verdict).replace(' ', "_"),
    });
    if let Decision::Provable(proof) = &decision {
        if p.proof {
            text.push('\n');
            text.push_str(&proof.render());
        }
        json["proof"] = serde_json::to_value(proof).expect("proof serializes");
    }
    Ok(Outcome::new(code, text, json))
}

fn verdict(result: Result<(), String>, conclusion: String) -> Outcome {
    match result {
        Ok(()) => Outcome::new(
            EXIT_OK,
            "valid",
            json!({"valid": true, "conclusion": conclusion}),
        ),
        Err(e) => Outcome::new(
            EXIT_NO,
            format!("invalid: {}", e),
            json!({"valid": false, "conclusion": conclusion, "error": e}),
        ),
    }
}

fn cmd_check(c: CheckArgs) -> CmdResult {
    let text = read_input(&c.file)?;
    if c.kind.hilbert {
        let sys: SystemSpec = c.system.parse()?;
        let proof: HilbertProof = serde_json::from_str(&text)?;
        let goal = match &c.goal {
            Some(g) => parse_modal(g)?,
            None => match line_formulas(&sys, &proof) {
                Ok(lines) => lines.last().cloned().unwrap_or(ModalFormula::Top),
                Err(e) => return Ok(verdict(Err(e.to_string()), String::new())),
            },
        };
        let r = check_hilbert(&sys, &proof, &goal).map_err(|e| e.to_string());
        return Ok(verdict(r, goal.to_string()));
    }
    if c.kind.sequent {
        let calc: CalculusSpec = match c.system.parse::<ModalSystem>() {
            Ok(sys) => sys.calculus(),
            Err(_) => c.system.parse()?,
        };
        let proof: crate::sequent::SequentProof = serde_json::from_str(&text)?;
        if let Some(g) = &c.goal {
            let g: Sequent = g.parse()?;
            if g.normalized() != proof.sequent.normalized() {
                let e = format!("proof concludes `{}`, expected `{}`", proof.sequent, g);
                return Ok(verdict(Err(e), proof.sequent.to_string()));
            }
        }
        let r = check_sequent_proof(calc, &proof).map_err(|e| e.to_string());
        return Ok(verdict(r, proof.sequent.to_string()));
    }
    let sys: NdSystem = c.system.parse()?;
    if c.untyped {
        let proof: NdProof<UntypedProp> = serde_json::from_str(&text)?;
        let hyps = c
            .hyps
            .iter()
            .map(|h| parse_untyped_prop(h))
            .collect::<Result<Vec<_>, _>>()?;
        let goal = c
            .goal
            .as_deref()
            .map(parse_untyped_prop)
            .transpose()?
            .unwrap_or(proof.conclusion.clone());
        let r = check_nd(sys, &proof, &hyps, &goal).map_err(|e| e.to_string());
        Ok(verdict(r, goal.to_string()))
    } else {
        let proof: NdProof<PropFormula> = serde_json::from_str(&text)?;
        let hyps = c
            .hyps
            .iter()
            .map(|h| parse_prop(h))
            .collect::<Result<Vec<_>, _>>()?;
        let goal = c
            .goal
            .as_deref()
            .map(parse_prop)
            .transpose()?
            .unwrap_or(proof.conclusion.clone());
        let r = check_nd(sys, &proof, &hyps, &goal).map_err(|e| e.to_string());
        Ok(verdict(r, goal.to_string()))
    }
}

fn cmd_split(system: &str, a: &str, b: &str, budget: Budget) -> CmdResult {
    let sys: PropSystem = system.parse()?;
    let (a, b) = (parse_prop(a)?, parse_prop(b)?);
    let (code, name) = match split_disjunction(sys, &a, &b, budget) {
        Ok(Split::Left) => (EXIT_OK, "left"),
        Ok(Split::Right) => (EXIT_OK, "right"),
        Ok(Split::NotATheorem) => (EXIT_NO, "not_a_theorem"),
        Err(SplitError::Inconclusive) => (EXIT_INCONCLUSIVE, "inconclusive"),
        Err(SplitError::PropertyViolation { .. }) => (EXIT_NO, "property_violation"),
        Err(SplitError::IllTyped(e)) => return Err(e.into()),
    };
    let json = json!({"system": sys.name(), "disjunction": PropFormula::or(a, b).to_string(), "split": name});
    Ok(Outcome::new(code, name, json))
}

fn cmd_corpus(file: &str, report_path: Option<&str>, timing: bool, budget: Budget) -> CmdResult {
    let entries = load_corpus(&read_input(file)?)?;
    let report = run_corpus(&entries, &CorpusOptions { budget, timing });
    let json = serde_json::to_value(&report).expect("report serializes");
    if let Some(path) = report_path {
        let body = serde_json::to_string_pretty(&json).expect("json value");
        fs::write(path, body + "\n").map_err(|e| InputError(format!("{}: {}", path, e)))?;
    }
    let mut text = format!(
        "{} entries: {} matched, {} mismatched, {} inconclusive",
        report.total, report.matched, report.mismatched, report.inconclusive
    );
    for e in report.entries.iter().filter(|e| !e.matches) {
        text.push_str(&format!(
            "\nMISMATCH #{} {} `{}`: expected {}, got {}",
            e.index, e.system, e.goal, e.expected, e.verdict
        ));
        if let Some(msg) = &e.error {
            text.push_str(&format!(" ({})", msg));
        }
    }
    let code = if !report.success() {
        EXIT_NO
    } else if report.inconclusive > 0 {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    Ok(Outcome::new(code, text, json))
}

fn param<'a>(params: &'a [String], i: usize, what: &str) -> Result<&'a str, InputError> {
    params
        .get(i)
        .map(String::as_str)
        .ok_or_else(|| InputError(format!("missing parameter {}: {}", i + 1, what)))
}

fn index_param(params: &[String], i: usize, what: &str) -> Result<Index, InputError> {
    let s = param(params, i, what)?;
    s.parse::<u32>().map(Index).map_err(|_| {
        InputError(format!(
            "parameter {} ({}) must be a number, got `{}`",
            i + 1,
            what,
            s
        ))
    })
}

fn arity(params: &[String], allowed: &[usize], usage: &str) -> Result<(), InputError> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        Err(InputError(format!("usage: hierlog schemas {}", usage)))
    }
}

fn cmd_schemas(name: &str, params: &[String], out: Option<&str>) -> CmdResult {
    let (system, hyps, goal, result, proof) = match name {
        "reindex" => {
            arity(params, &[4], "reindex A B M N")?;
            let a = parse_prop(param(params, 0, "A")?)?;
            let b = parse_prop(param(params, 1, "B")?)?;
            let (m, n) = (index_param(params, 2, "M")?, index_param(params, 3, "N")?);
            let proof = schema_reindex(&a, &b, m, n)?;
            let hyp = PropFormula::try_imp(m, a, b)?;
            typed_schema(NdSystem::FPLh, vec![hyp], proof)
        }
        "rewitness" => {
            arity(
                params,
                &[2],
                "rewitness A1 A2   (two indexings of one shape)",
            )?;
            let (u_shape, u) = witness_of(&parse_prop(param(params, 0, "A1")?)?);
            let (v_shape, v) = witness_of(&parse_prop(param(params, 1, "A2")?)?);
            if u_shape != v_shape {
                return Err(InputError(format!(
                    "`{}` and `{}` differ in more than indices",
                    u_shape, v_shape
                )));
            }
            let proof = schema_rewitness(&u_shape, &u, &v)?;
            let hyp = crate::translate::apply_witness(&u_shape, &u)?;
            typed_schema(NdSystem::FPLh, vec![hyp], proof)
        }
        "primed-rule" => {
            arity(params, &[4], "primed-rule c|r A B N")?;
            let which: Simulation = param(params, 0, "c or r")?.parse()?;
            let a = parse_prop(param(params, 1, "A")?)?;
            let b = parse_prop(param(params, 2, "B")?)?;
            let n = index_param(params, 3, "N")?;
            let proof = schema_primed_rule(which, &a, &b, n)?;
            let (sys, target) = match which {
                Simulation::CFromCPrime => (NdSystem::EBPCh, PropFormula::Bot),
                Simulation::RFromRPrime => (NdSystem::IPCh, b),
            };
            let major = PropFormula::try_imp(n, a.clone(), target)?;
            typed_schema(sys, vec![a, major], proof)
        }
        "star-rule" => {
            arity(params, &[0, 2], "star-rule [A B]   (untyped, default p q)")?;
            let (a, b) = if params.is_empty() {
                (UntypedProp::atom("p"), UntypedProp::atom("q"))
            } else {
                (
                    parse_untyped_prop(&params[0])?,
                    parse_untyped_prop(&params[1])?,
                )
            };
            let proof = schema_star_rule_for(&a, &b);
            let hyps = open_hypotheses(&proof);
            let goal = proof.conclusion.clone();
            let r = check_nd(NdSystem::FPLh, &proof, &hyps, &goal);
            let hyps: Vec<String> = hyps.iter().map(ToString::to_string).collect();
            (
                NdSystem::FPLh,
                hyps,
                goal.to_string(),
                r,
                Rendered::of(&proof),
            )
        }
        _ => {
            return Err(InputError(format!(
                "unknown schema `{}`; available: {}",
                name,
                SCHEMA_NAMES.join(", ")
            )))
        }
    };
    let valid = result.is_ok();
    let verdict_text = match &result {
        Ok(()) => "valid".to_string(),
        Err(e) => format!("invalid: {}", e),
    };
    let json = json!({
        "schema": name,
        "system": system.name(),
        "hypotheses": hyps,
        "goal": goal,
        "valid": valid,
        "proof": proof.value,
    });
    let pretty = proof.pretty;
    let text = match out {
        Some(path) => {
            fs::write(path, pretty + "\n").map_err(|e| InputError(format!("{}: {}", path, e)))?;
            format!("{} ({}, written to {})", verdict_text, system.name(), path)
        }
        None => format!("{}\n{} ({})", pretty, verdict_text, system.name()),
    };
    Ok(Outcome::new(
        if valid { EXIT_OK } else { EXIT_NO },
        text,
        json,
    ))
}

/// A proof as a JSON value and as text in declaration order.
struct Rendered {
    value: Value,
    pretty: String,
}

impl Rendered {
    fn of<T: serde::Serialize>(proof: &T) -> Self {
        Rendered {
            value: serde_json::to_value(proof).expect("proof serializes"),
            pretty: serde_json::to_string_pretty(proof).expect("proof serializes"),
        }
    }
}

type SchemaParts = (NdSystem, Vec<String>, String, Result<(), NdError>, Rendered);

fn typed_schema(sys: NdSystem, hyps: Vec<PropFormula>, proof: NdProof<PropFormula>) -> SchemaParts {
    let goal = proof.conclusion.clone();
    let r = check_nd(sys, &proof, &hyps, &goal);
    (
        sys,
        hyps.iter().map(ToString::to_string).collect(),
        goal.to_string(),
        r,
        Rendered::of(&proof),
    )
}
