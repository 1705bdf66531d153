//! Recursive-descent parser shared by the four languages.
//!
//! Text is first parsed into a raw tree that accepts every index decoration,
//! then lowered into the requested language. Language mismatches (a box in
//! a propositional formula, a missing index) are syntax errors; index
//! discipline violations are reported as [`IllTyped`].

use std::fmt;

use super::{IllTyped, Index, ModalFormula, PropFormula, UntypedModal, UntypedProp};

/// Grammar violation, with a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {column}: {message}")]
pub struct SyntaxError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    IllTyped(#[from] IllTyped),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    And,
    Or,
    Not,
    Arrow(Option<u32>),
    Box(Option<u32>),
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{}`", s),
            Tok::Top => f.write_str("`T`"),
            Tok::Bot => f.write_str("`F`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Not => f.write_str("`~`"),
            Tok::Arrow(_) => f.write_str("`->`"),
            Tok::Box(_) => f.write_str("`[]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn err(offset: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        column: offset + 1,
        message: message.into(),
    }
}

fn read_digits(bytes: &[u8], mut i: usize) -> (Option<&[u8]>, usize) {
    let start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == start {
        (None, i)
    } else {
        (Some(&bytes[start..i]), i)
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let index = |digits: Option<&[u8]>| -> Result<Option<u32>, SyntaxError> {
            digits
                .map(|d| {
                    std::str::from_utf8(d)
                        .ok()
                        .and_then(|s| s.parse::<u32>().ok())
                        .ok_or_else(|| err(start, "index out of range"))
                })
                .transpose()
        };
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            b'&' => {
                toks.push((Tok::And, start));
                i += 1;
            }
            b'|' => {
                toks.push((Tok::Or, start));
                i += 1;
            }
            b'~' => {
                toks.push((Tok::Not, start));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                let (digits, next) = read_digits(bytes, i + 2);
                toks.push((Tok::Arrow(index(digits)?), start));
                i = next;
            }
            b'[' if bytes.get(i + 1) == Some(&b']') => {
                let (digits, next) = read_digits(bytes, i + 2);
                toks.push((Tok::Box(index(digits)?), start));
                i = next;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character `{}`", ch)));
            }
        }
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

#[derive(Debug)]
enum RawKind {
    Atom(String),
    Top,
    Bot,
    Not(Box<Raw>),
    And(Box<Raw>, Box<Raw>),
    Or(Box<Raw>, Box<Raw>),
    Imp(Option<u32>, Box<Raw>, Box<Raw>),
    Box(Option<u32>, Box<Raw>),
}

#[derive(Debug)]
struct Raw {
    kind: RawKind,
    /// Offset of the connective (or of the atom).
    pos: usize,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn implication(&mut self) -> Result<Raw, SyntaxError> {
        let lhs = self.disjunction()?;
        if let Tok::Arrow(n) = *self.peek() {
            let (_, pos) = self.bump();
            let rhs = self.disjunction()?;
            if let Tok::Arrow(_) = self.peek() {
                return Err(err(self.pos(), "chained implication needs parentheses"));
            }
            return Ok(Raw {
                kind: RawKind::Imp(n, Box::new(lhs), Box::new(rhs)),
                pos,
            });
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Raw, SyntaxError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            let (_, pos) = self.bump();
            let rhs = self.conjunction()?;
            lhs = Raw {
                kind: RawKind::Or(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Raw, SyntaxError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            let (_, pos) = self.bump();
            let rhs = self.unary()?;
            lhs = Raw {
                kind: RawKind::And(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Raw, SyntaxError> {
        match self.peek().clone() {
            Tok::Not => {
                let (_, pos) = self.bump();
                let a = self.unary()?;
                Ok(Raw {
                    kind: RawKind::Not(Box::new(a)),
                    pos,
                })
            }
            Tok::Box(n) => {
                let (_, pos) = self.bump();
                let a = self.unary()?;
                Ok(Raw {
                    kind: RawKind::Box(n, Box::new(a)),
                    pos,
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Raw, SyntaxError> {
        let (tok, pos) = self.bump();
        let kind = match tok {
            Tok::Ident(name) => RawKind::Atom(name),
            Tok::Top => RawKind::Top,
            Tok::Bot => RawKind::Bot,
            Tok::LParen => {
                let inner = self.implication()?;
                let (close, cpos) = self.bump();
                if close != Tok::RParen {
                    return Err(err(cpos, format!("expected `)`, found {}", close)));
                }
                return Ok(inner);
            }
            other => return Err(err(pos, format!("expected a formula, found {}", other))),
        };
        Ok(Raw { kind, pos })
    }
}

fn parse_raw(text: &str) -> Result<Raw, SyntaxError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.implication()?;
    let (tok, pos) = p.bump();
    if tok != Tok::End {
        return Err(err(pos, format!("unexpected {}", tok)));
    }
    Ok(f)
}

fn lower_prop(r: Raw) -> Result<PropFormula, ParseError> {
    Ok(match r.kind {
        RawKind::Atom(p) => PropFormula::Atom(p),
        RawKind::Top => PropFormula::Top,
        RawKind::Bot => PropFormula::Bot,
        RawKind::Not(_) => {
            return Err(err(
                r.pos,
                "`~` is not part of the propositional language; write `A ->n F`",
            )
            .into())
        }
        RawKind::Box(..) => {
            return Err(err(r.pos, "boxes are not part of the propositional language").into())
        }
        RawKind::And(a, b) => PropFormula::and(lower_prop(*a)?, lower_prop(*b)?),
        RawKind::Or(a, b) => PropFormula::or(lower_prop(*a)?, lower_prop(*b)?),
        RawKind::Imp(None, ..) => return Err(err(r.pos, "implication is missing its index").into()),
        RawKind::Imp(Some(n), a, b) => {
            PropFormula::try_imp(Index(n), lower_prop(*a)?, lower_prop(*b)?)?
        }
    })
}

fn lower_modal(r: Raw) -> Result<ModalFormula, ParseError> {
    Ok(match r.kind {
        RawKind::Atom(p) => ModalFormula::Atom(p),
        RawKind::Top => ModalFormula::Top,
        RawKind::Bot => ModalFormula::Bot,
        RawKind::Not(a) => ModalFormula::not(lower_modal(*a)?),
        RawKind::And(a, b) => ModalFormula::and(lower_modal(*a)?, lower_modal(*b)?),
        RawKind::Or(a, b) => ModalFormula::or(lower_modal(*a)?, lower_modal(*b)?),
        RawKind::Imp(Some(_), ..) => {
            return Err(err(r.pos, "modal implication carries no index").into())
        }
        RawKind::Imp(None, a, b) => ModalFormula::imp(lower_modal(*a)?, lower_modal(*b)?),
        RawKind::Box(None, _) => return Err(err(r.pos, "box is missing its index").into()),
        RawKind::Box(Some(n), a) => ModalFormula::try_boxed(Index(n), lower_modal(*a)?)?,
    })
}

fn lower_untyped_prop(r: Raw) -> Result<UntypedProp, SyntaxError> {
    Ok(match r.kind {
        RawKind::Atom(p) => UntypedProp::Atom(p),
        RawKind::Top => UntypedProp::Top,
        RawKind::Bot => UntypedProp::Bot,
        RawKind::Not(_) | RawKind::Box(..) => {
            return Err(err(
                r.pos,
                "modal operators are not part of the propositional language",
            ))
        }
        RawKind::And(a, b) => UntypedProp::and(lower_untyped_prop(*a)?, lower_untyped_prop(*b)?),
        RawKind::Or(a, b) => UntypedProp::or(lower_untyped_prop(*a)?, lower_untyped_prop(*b)?),
        RawKind::Imp(Some(_), ..) => {
            return Err(err(r.pos, "untyped implication carries no index"))
        }
        RawKind::Imp(None, a, b) => {
            UntypedProp::imp(lower_untyped_prop(*a)?, lower_untyped_prop(*b)?)
        }
    })
}

fn lower_untyped_modal(r: Raw) -> Result<UntypedModal, SyntaxError> {
    Ok(match r.kind {
        RawKind::Atom(p) => UntypedModal::Atom(p),
        RawKind::Top => UntypedModal::Top,
        RawKind::Bot => UntypedModal::Bot,
        RawKind::Not(a) => UntypedModal::Not(Box::new(lower_untyped_modal(*a)?)),
        RawKind::And(a, b) => UntypedModal::and(lower_untyped_modal(*a)?, lower_untyped_modal(*b)?),
        RawKind::Or(a, b) => UntypedModal::or(lower_untyped_modal(*a)?, lower_untyped_modal(*b)?),
        RawKind::Imp(Some(_), ..) => {
            return Err(err(r.pos, "untyped implication carries no index"))
        }
        RawKind::Imp(None, a, b) => {
            UntypedModal::imp(lower_untyped_modal(*a)?, lower_untyped_modal(*b)?)
        }
        RawKind::Box(Some(_), _) => return Err(err(r.pos, "untyped box carries no index")),
        RawKind::Box(None, a) => UntypedModal::boxed(lower_untyped_modal(*a)?),
    })
}

/// Parses a typed propositional formula (`->n`, `&`, `|`, `T`, `F`).
pub fn parse_prop(text: &str) -> Result<PropFormula, ParseError> {
    lower_prop(parse_raw(text)?)
}

/// Parses a typed modal formula (`[]n`, `~`, `->`, `&`, `|`, `T`, `F`).
pub fn parse_modal(text: &str) -> Result<ModalFormula, ParseError> {
    lower_modal(parse_raw(text)?)
}

pub fn parse_untyped_prop(text: &str) -> Result<UntypedProp, SyntaxError> {
    lower_untyped_prop(parse_raw(text)?)
}

pub fn parse_untyped_modal(text: &str) -> Result<UntypedModal, SyntaxError> {
    lower_untyped_modal(parse_raw(text)?)
}

macro_rules! from_str_via {
    ($t:ty, $f:ident, $e:ty) => {
        impl std::str::FromStr for $t {
            type Err = $e;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                $f(s)
            }
        }
    };
}

from_str_via!(PropFormula, parse_prop, ParseError);
from_str_via!(ModalFormula, parse_modal, ParseError);
from_str_via!(UntypedProp, parse_untyped_prop, SyntaxError);
from_str_via!(UntypedModal, parse_untyped_modal, SyntaxError);
