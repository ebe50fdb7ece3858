//! Recursive-descent parser for the ASCII syntax.
//!
//! ```text
//! partition := items ";" items "=>" succ
//! sequent   := items "=>" succ
//! items     := [ item { "," item } ]
//! item      := [ "*" ] term            (star only in G3SDM sequents)
//! term      := or { "->" or }          ("->" only in the INT/CL language)
//! or        := and { "|" and }
//! and       := unary { "&" unary }
//! unary     := "~" unary | atom
//! atom      := var | "F" | "T" | "(" term ")"
//! var       := ident [ "'" | "''" ] | "#" ident
//! ```
//!
//! All binary operators associate to the left.

use super::{DmSequent, ImpTerm, IntSequent, Namespace, SdmSequent, Sequent, Structure, Term, Var};
use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Language {
    /// Terms of G3SDM and G3DM: `~`, `&`, `|`, base variables only.
    SdmDm,
    /// Terms of G3ip and G3ip+Gem-at: `&`, `|`, `->`; `~θ` reads `θ -> F`.
    IntCl,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(Var),
    Bottom,
    Top,
    Tilde,
    Amp,
    Bar,
    Arrow,
    FatArrow,
    Star,
    Comma,
    Semi,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '~' => out.push((start, Tok::Tilde)),
            '&' => out.push((start, Tok::Amp)),
            '|' => out.push((start, Tok::Bar)),
            '*' => out.push((start, Tok::Star)),
            ',' => out.push((start, Tok::Comma)),
            ';' => out.push((start, Tok::Semi)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((start, Tok::Arrow));
                    i += 1;
                } else {
                    return Err(syntax(start, "expected `->`"));
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((start, Tok::FatArrow));
                    i += 1;
                } else {
                    return Err(syntax(start, "expected `=>`"));
                }
            }
            '#' => {
                let (name, end) = ident(bytes, i + 1)
                    .ok_or_else(|| syntax(start, "expected a class variable name after `#`"))?;
                out.push((start, Tok::Ident(Var::new(Namespace::Class, name))));
                i = end;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let (name, mut end) = ident(bytes, i).expect("identifier start checked");
                let tok = match name {
                    "F" => Tok::Bottom,
                    "T" => Tok::Top,
                    _ => {
                        let mut primes = 0;
                        while bytes.get(end) == Some(&b'\'') {
                            primes += 1;
                            end += 1;
                        }
                        let ns = match primes {
                            0 => Namespace::Base,
                            1 => Namespace::Primed,
                            2 => Namespace::Doubled,
                            _ => return Err(syntax(start, "at most two primes allowed on a variable")),
                        };
                        Tok::Ident(Var::new(ns, name))
                    }
                };
                out.push((start, tok));
                i = end;
                continue;
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

fn ident(bytes: &[u8], start: usize) -> Option<(&str, usize)> {
    let first = *bytes.get(start)? as char;
    if !(first.is_ascii_alphabetic() || first == '_') {
        return None;
    }
    let mut end = start + 1;
    while let Some(&b) = bytes.get(end) {
        if (b as char).is_ascii_alphanumeric() || b == b'_' {
            end += 1;
        } else {
            break;
        }
    }
    Some((std::str::from_utf8(&bytes[start..end]).ok()?, end))
}

/// Language-neutral parse tree, converted afterwards.
#[derive(Debug)]
enum Raw {
    Var(usize, Var),
    Bottom,
    Top,
    Neg(Box<Raw>),
    And(Box<Raw>, Box<Raw>),
    Or(Box<Raw>, Box<Raw>),
    Imp(usize, Box<Raw>, Box<Raw>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(input)?, pos: 0, end: input.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(self.offset(), format!("unexpected {}", describe(t)))),
        }
    }

    fn term(&mut self) -> Result<Raw, ParseError> {
        let mut lhs = self.or()?;
        loop {
            let at = self.offset();
            if !self.eat(&Tok::Arrow) {
                return Ok(lhs);
            }
            let rhs = self.or()?;
            lhs = Raw::Imp(at, Box::new(lhs), Box::new(rhs));
        }
    }

    fn or(&mut self) -> Result<Raw, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.and()?;
            lhs = Raw::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Raw, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = Raw::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Raw, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Raw::Neg(Box::new(self.unary()?)));
        }
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Raw::Var(at, v))
            }
            Some(Tok::Bottom) => {
                self.pos += 1;
                Ok(Raw::Bottom)
            }
            Some(Tok::Top) => {
                self.pos += 1;
                Ok(Raw::Top)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                Ok(inner)
            }
            Some(t) => Err(syntax(at, format!("expected a term, found {}", describe(&t)))),
            None => Err(syntax(at, "expected a term, found end of input")),
        }
    }

    /// Parses `[*] term` and reports whether a star was present.
    fn item(&mut self) -> Result<(usize, bool, Raw), ParseError> {
        let at = self.offset();
        let starred = self.eat(&Tok::Star);
        Ok((at, starred, self.term()?))
    }

    /// Comma-separated items up to (not including) one of the stop tokens.
    fn items(&mut self, stops: &[Tok]) -> Result<Vec<(usize, bool, Raw)>, ParseError> {
        let mut out = Vec::new();
        if self.peek().map(|t| stops.contains(t)).unwrap_or(true) {
            return Ok(out);
        }
        loop {
            out.push(self.item()?);
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            let found = self.peek().map(describe).unwrap_or_else(|| "end of input".into());
            Err(syntax(self.offset(), format!("expected {}, found {found}", describe(&tok))))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(v) => format!("variable `{v}`"),
        Tok::Bottom => "`F`".into(),
        Tok::Top => "`T`".into(),
        Tok::Tilde => "`~`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::FatArrow => "`=>`".into(),
        Tok::Star => "`*`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Semi => "`;`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

fn to_term(raw: Raw) -> Result<Term, ParseError> {
    Ok(match raw {
        Raw::Var(pos, v) => {
            if v.ns != Namespace::Base {
                return Err(ParseError::Namespace { pos, var: v.to_string() });
            }
            Term::Var(v)
        }
        Raw::Bottom => Term::Bottom,
        Raw::Top => Term::top(),
        Raw::Neg(t) => Term::neg(to_term(*t)?),
        Raw::And(l, r) => Term::and(to_term(*l)?, to_term(*r)?),
        Raw::Or(l, r) => Term::or(to_term(*l)?, to_term(*r)?),
        Raw::Imp(pos, _, _) => {
            return Err(syntax(pos, "`->` is not part of the SDM/DM language"));
        }
    })
}

fn to_imp(raw: Raw) -> ImpTerm {
    match raw {
        Raw::Var(_, v) => ImpTerm::Var(v),
        Raw::Bottom => ImpTerm::Bottom,
        Raw::Top => ImpTerm::top(),
        Raw::Neg(t) => ImpTerm::neg(to_imp(*t)),
        Raw::And(l, r) => ImpTerm::and(to_imp(*l), to_imp(*r)),
        Raw::Or(l, r) => ImpTerm::or(to_imp(*l), to_imp(*r)),
        Raw::Imp(_, l, r) => ImpTerm::imp(to_imp(*l), to_imp(*r)),
    }
}

fn no_star(item: (usize, bool, Raw)) -> Result<Raw, ParseError> {
    let (pos, starred, raw) = item;
    if starred {
        Err(syntax(pos, "`*` is only allowed in G3SDM sequents"))
    } else {
        Ok(raw)
    }
}

fn to_structure(item: (usize, bool, Raw)) -> Result<Structure, ParseError> {
    let (_, starred, raw) = item;
    let t = to_term(raw)?;
    Ok(if starred { Structure::Starred(t) } else { Structure::Plain(t) })
}

/// Parses an SDM/DM term.
pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(input)?;
    let raw = p.term()?;
    p.expect_end()?;
    to_term(raw)
}

/// Parses a term of the implicational language.
pub fn parse_imp_term(input: &str) -> Result<ImpTerm, ParseError> {
    let mut p = Parser::new(input)?;
    let raw = p.term()?;
    p.expect_end()?;
    Ok(to_imp(raw))
}

/// Parses a basic SDM-structure, `φ` or `*φ`.
pub fn parse_structure(input: &str) -> Result<Structure, ParseError> {
    let mut p = Parser::new(input)?;
    let item = p.item()?;
    p.expect_end()?;
    to_structure(item)
}

fn parse_sequent_with<A, S>(
    input: &str,
    member: impl Fn((usize, bool, Raw)) -> Result<A, ParseError>,
    succ: impl Fn((usize, bool, Raw)) -> Result<S, ParseError>,
) -> Result<Sequent<A, S>, ParseError> {
    let mut p = Parser::new(input)?;
    let items = p.items(&[Tok::FatArrow])?;
    p.expect(Tok::FatArrow)?;
    let s = p.item()?;
    p.expect_end()?;
    let antecedent = items.into_iter().map(member).collect::<Result<Vec<_>, _>>()?;
    Ok(Sequent::new(antecedent, succ(s)?))
}

pub fn parse_sdm_sequent(input: &str) -> Result<SdmSequent, ParseError> {
    parse_sequent_with(input, to_structure, to_structure)
}

pub fn parse_dm_sequent(input: &str) -> Result<DmSequent, ParseError> {
    parse_sequent_with(input, |i| to_term(no_star(i)?), |i| to_term(no_star(i)?))
}

pub fn parse_int_sequent(input: &str) -> Result<IntSequent, ParseError> {
    parse_sequent_with(input, |i| Ok(to_imp(no_star(i)?)), |i| Ok(to_imp(no_star(i)?)))
}

/// `Γ₁ ; Γ₂ => β` split into its three components (G3SDM syntax; stars allowed).
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedPartition {
    pub left: Vec<Structure>,
    pub right: Vec<Structure>,
    pub succedent: Structure,
}

pub fn parse_partition(input: &str) -> Result<ParsedPartition, ParseError> {
    let mut p = Parser::new(input)?;
    let left = p.items(&[Tok::Semi])?;
    p.expect(Tok::Semi)?;
    let right = p.items(&[Tok::FatArrow])?;
    p.expect(Tok::FatArrow)?;
    let s = p.item()?;
    p.expect_end()?;
    Ok(ParsedPartition {
        left: left.into_iter().map(to_structure).collect::<Result<_, _>>()?,
        right: right.into_iter().map(to_structure).collect::<Result<_, _>>()?,
        succedent: to_structure(s)?,
    })
}
