//! Recursive-descent parsers for the inner and outer concrete syntax.
//!
//! Inner: `!` negation, `@` delta, `&`, `|`, `=>>` (lowest, non-associative),
//! `top`, `bot` and the probes `t( )`, `b( )`, `n( )`, `f( )`.
//! Outer: `~`, `@`, `&`, `|`, `-<` (left-associative), `->` (right-associative)
//! over modal atoms `B{ inner }`. `#` starts a comment running to end of line.

use std::fmt;

use crate::formula::{
    is_identifier, make_bot, make_internal_entailment, make_probe, make_top, InnerFormula,
    OuterFormula, Probe,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    /// 1-based line and column of `offset`.
    pub line: usize,
    pub column: usize,
    /// Descriptions of the tokens that would have been accepted.
    pub expected: Vec<String>,
    pub found: String,
    /// Set for errors that are not a token mismatch.
    pub message: Option<String>,
}

impl ParseError {
    pub fn custom(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_col(text, offset);
        ParseError {
            offset,
            line,
            column,
            expected: Vec::new(),
            found: String::new(),
            message: Some(message.into()),
        }
    }

    /// Re-bases an error produced on a slice starting at `base` within `full`.
    pub fn relocate(mut self, full: &str, base: usize) -> Self {
        self.offset += base;
        let (line, column) = line_col(full, self.offset);
        self.line = line;
        self.column = column;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: ", self.line, self.column)?;
        if let Some(msg) = &self.message {
            return f.write_str(msg);
        }
        match self.expected.as_slice() {
            [] => write!(f, "unexpected {}", self.found),
            [one] => write!(f, "expected {one}, found {}", self.found),
            many => write!(f, "expected one of {}, found {}", many.join(", "), self.found),
        }
    }
}

impl std::error::Error for ParseError {}

pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |nl| before.len() - nl - 1) + 1;
    (line, column)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Bang,
    At,
    Amp,
    Pipe,
    Entail,
    Tilde,
    Arrow,
    Coimp,
    Belief,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("`{name}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Bang => "`!`".into(),
            Tok::At => "`@`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Entail => "`=>>`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Coimp => "`-<`".into(),
            Tok::Belief => "`B`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let (tok, len) = if rest.starts_with("=>>") {
            (Tok::Entail, 3)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("-<") {
            (Tok::Coimp, 2)
        } else {
            match c {
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b'{' => (Tok::LBrace, 1),
                b'}' => (Tok::RBrace, 1),
                b'!' => (Tok::Bang, 1),
                b'@' => (Tok::At, 1),
                b'&' => (Tok::Amp, 1),
                b'|' => (Tok::Pipe, 1),
                b'~' => (Tok::Tilde, 1),
                b'B' => (Tok::Belief, 1),
                b'a'..=b'z' => {
                    let len = rest
                        .bytes()
                        .take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_')
                        .count();
                    (Tok::Ident(rest[..len].to_string()), len)
                }
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(ParseError::custom(text, start, format!("unexpected character `{ch}`")));
                }
            }
        };
        out.push((tok, start));
        i += len;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    expected: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Parser { text, toks: lex(text)?, pos: 0, expected: Vec::new() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let idx = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[idx].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        self.expected.clear();
        tok
    }

    fn note(&mut self, what: &str) {
        if !self.expected.iter().any(|e| e == what) {
            self.expected.push(what.to_string());
        }
    }

    /// Consumes `tok` if it is next; otherwise records it as expected.
    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            self.note(&tok.describe());
            false
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn error(&self) -> ParseError {
        let offset = self.offset();
        let (line, column) = line_col(self.text, offset);
        ParseError {
            offset,
            line,
            column,
            expected: self.expected.clone(),
            found: self.peek().describe(),
            message: None,
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.expect(&Tok::Eof)
    }

    // inner layer

    fn formula(&mut self) -> Result<InnerFormula, ParseError> {
        let lhs = self.disj()?;
        if self.eat(&Tok::Entail) {
            let rhs = self.disj()?;
            return Ok(make_internal_entailment(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<InnerFormula, ParseError> {
        let mut acc = self.conj()?;
        while self.eat(&Tok::Pipe) {
            acc = acc.or(self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<InnerFormula, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            acc = acc.and(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<InnerFormula, ParseError> {
        if self.eat(&Tok::Bang) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Tok::At) {
            return Ok(self.unary()?.delta());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<InnerFormula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let probe = match name.as_str() {
                    "t" | "b" | "n" | "f" if *self.peek_at(1) == Tok::LParen => {
                        Probe::from_symbol(name.chars().next().unwrap())
                    }
                    _ => None,
                };
                if let Some(kind) = probe {
                    self.bump();
                    self.bump();
                    let inner = self.formula()?;
                    self.expect(&Tok::RParen)?;
                    return Ok(make_probe(kind, inner));
                }
                match name.as_str() {
                    "top" => {
                        self.bump();
                        Ok(make_top())
                    }
                    "bot" => {
                        self.bump();
                        Ok(make_bot())
                    }
                    _ if is_identifier(&name) => {
                        self.bump();
                        Ok(InnerFormula::Var(name))
                    }
                    _ => {
                        self.note("a variable");
                        Err(self.error())
                    }
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            _ => {
                for what in ["`!`", "`@`", "a variable", "`top`", "`bot`", "a probe", "`(`"] {
                    self.note(what);
                }
                Err(self.error())
            }
        }
    }

    // outer layer

    fn oformula(&mut self) -> Result<OuterFormula, ParseError> {
        let lhs = self.ocoimp()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.oformula()?;
            return Ok(lhs.gimp(rhs));
        }
        Ok(lhs)
    }

    fn ocoimp(&mut self) -> Result<OuterFormula, ParseError> {
        let mut acc = self.odisj()?;
        while self.eat(&Tok::Coimp) {
            acc = acc.gcoimp(self.odisj()?);
        }
        Ok(acc)
    }

    fn odisj(&mut self) -> Result<OuterFormula, ParseError> {
        let mut acc = self.oconj()?;
        while self.eat(&Tok::Pipe) {
            acc = acc.gor(self.oconj()?);
        }
        Ok(acc)
    }

    fn oconj(&mut self) -> Result<OuterFormula, ParseError> {
        let mut acc = self.ounary()?;
        while self.eat(&Tok::Amp) {
            acc = acc.gand(self.ounary()?);
        }
        Ok(acc)
    }

    fn ounary(&mut self) -> Result<OuterFormula, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(self.ounary()?.gneg());
        }
        if self.eat(&Tok::At) {
            return Ok(self.ounary()?.gdelta());
        }
        if self.eat(&Tok::Belief) {
            self.expect(&Tok::LBrace)?;
            let inner = self.formula()?;
            self.expect(&Tok::RBrace)?;
            return Ok(OuterFormula::Modal(inner));
        }
        if self.eat(&Tok::LParen) {
            let inner = self.oformula()?;
            self.expect(&Tok::RParen)?;
            return Ok(inner);
        }
        Err(self.error())
    }
}

/// Parses an inner (BD with Delta) formula.
pub fn parse_inner(text: &str) -> Result<InnerFormula, ParseError> {
    let mut p = Parser::new(text)?;
    let phi = p.formula()?;
    p.finish()?;
    Ok(phi)
}

/// Parses an outer formula whose leaves are modal atoms `B{ ... }`.
pub fn parse_outer(text: &str) -> Result<OuterFormula, ParseError> {
    let mut p = Parser::new(text)?;
    let alpha = p.oformula()?;
    p.finish()?;
    Ok(alpha)
}
