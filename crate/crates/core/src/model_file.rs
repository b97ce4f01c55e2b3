//! Line-oriented text format for case models.
//!
//! ```text
//! # optional: `classical` marks a model over the Delta-free language
//! vars l s b
//! case c1 := t(l) & n(s) & f(b)
//! case c2 := n(l) & b(s) & t(b)
//! prefs c1 < c2
//! ```
//!
//! `prefs` is one chain over every case name; `<` moves to a strictly more
//! preferred rank and `=` stays on the same rank. The first case in the chain
//! gets rank 0. Without a `prefs` line all cases are tied at rank 0.

use std::fmt;

use crate::case_model::{Case, CaseModel, ClassicalCaseModel};
use crate::formula::{is_identifier, Signature};
use crate::parse::{parse_inner, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelFile {
    Bd(CaseModel),
    Classical(ClassicalCaseModel),
}

impl ModelFile {
    pub fn model(&self) -> &CaseModel {
        match self {
            ModelFile::Bd(m) => m,
            ModelFile::Classical(m) => m.as_model(),
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, ModelFile::Classical(_))
    }
}

/// A word of a line together with its byte offset in the whole file.
struct Word<'a> {
    text: &'a str,
    offset: usize,
}

fn words(line: &str, base: usize) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Word { text: &line[s..i], offset: base + s });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

pub fn parse_model_file(text: &str) -> Result<ModelFile, ParseError> {
    let err = |offset: usize, msg: String| ParseError::custom(text, offset, msg);

    let mut classical = false;
    let mut signature: Option<Signature> = None;
    let mut cases: Vec<(String, crate::formula::InnerFormula, usize)> = Vec::new();
    let mut prefs: Option<Vec<(String, usize, bool)>> = None;

    let mut base = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = base;
        base += raw.len();
        let line = raw.split('#').next().unwrap_or("").trim_end();
        let ws = words(line, line_start);
        let Some(keyword) = ws.first() else { continue };
        match keyword.text {
            "classical" => {
                if signature.is_some() || classical {
                    return Err(err(keyword.offset, "`classical` must come once, before `vars`".into()));
                }
                if ws.len() > 1 {
                    return Err(err(ws[1].offset, "unexpected text after `classical`".into()));
                }
                classical = true;
            }
            "vars" => {
                if signature.is_some() {
                    return Err(err(keyword.offset, "duplicate `vars` line".into()));
                }
                let mut names: Vec<&str> = Vec::new();
                for w in &ws[1..] {
                    if !is_identifier(w.text) {
                        return Err(err(w.offset, format!("`{}` is not a variable name", w.text)));
                    }
                    if names.contains(&w.text) {
                        return Err(err(w.offset, format!("variable `{}` declared twice", w.text)));
                    }
                    names.push(w.text);
                }
                signature = Some(Signature::new(names).map_err(|e| err(keyword.offset, e.to_string()))?);
            }
            "case" => {
                let Some(sig) = &signature else {
                    return Err(err(keyword.offset, "`case` before `vars`".into()));
                };
                if prefs.is_some() {
                    return Err(err(keyword.offset, "`case` after `prefs`".into()));
                }
                let Some(name) = ws.get(1) else {
                    return Err(err(line_start + line.len(), "expected a case name".into()));
                };
                if !is_identifier(name.text) {
                    return Err(err(name.offset, format!("`{}` is not a case name", name.text)));
                }
                if cases.iter().any(|c| c.0 == name.text) {
                    return Err(err(name.offset, format!("case `{}` defined twice", name.text)));
                }
                match ws.get(2) {
                    Some(w) if w.text == ":=" => {}
                    Some(w) => return Err(err(w.offset, format!("expected `:=`, found `{}`", w.text))),
                    None => return Err(err(line_start + line.len(), "expected `:=`".into())),
                }
                let after = ws[2].offset + 2;
                let line_end = line_start + line.len();
                let body_start = after + (text[after..line_end].len() - text[after..line_end].trim_start().len());
                let body = &text[body_start..line_end];
                let formula = parse_inner(body).map_err(|e| e.relocate(text, body_start))?;
                if let Some(var) = sig.first_unbound(&formula) {
                    return Err(err(body_start, format!("variable `{var}` is not declared in `vars`")));
                }
                if classical && formula.contains_delta() {
                    return Err(err(
                        body_start,
                        "classical cases cannot use `@`, probes, `top` or `bot`".into(),
                    ));
                }
                cases.push((name.text.to_string(), formula, name.offset));
            }
            "prefs" => {
                if prefs.is_some() {
                    return Err(err(keyword.offset, "duplicate `prefs` line".into()));
                }
                prefs = Some(parse_chain(text, &ws[1..], line_start + line.len())?);
            }
            other => {
                return Err(err(
                    keyword.offset,
                    format!("expected `classical`, `vars`, `case` or `prefs`, found `{other}`"),
                ))
            }
        }
    }

    let Some(signature) = signature else {
        return Err(err(text.len(), "missing `vars` line".into()));
    };
    if cases.is_empty() {
        return Err(err(text.len(), "a model needs at least one case".into()));
    }

    let mut ranks = vec![0u32; cases.len()];
    if let Some(chain) = prefs {
        let mut placed = vec![false; cases.len()];
        let mut rank = 0u32;
        for (i, (name, offset, step_up)) in chain.iter().enumerate() {
            if i > 0 && *step_up {
                rank += 1;
            }
            let Some(k) = cases.iter().position(|c| &c.0 == name) else {
                return Err(err(*offset, format!("`{name}` is not a case")));
            };
            if placed[k] {
                return Err(err(*offset, format!("case `{name}` appears twice in `prefs`")));
            }
            placed[k] = true;
            ranks[k] = rank;
        }
        if let Some(k) = placed.iter().position(|p| !p) {
            return Err(err(cases[k].2, format!("case `{}` is missing from `prefs`", cases[k].0)));
        }
    }

    let cases: Vec<Case> = cases
        .into_iter()
        .zip(ranks)
        .map(|((name, formula, _), rank)| Case::new(name, formula, rank))
        .collect();
    let structural = |e: crate::error::Error| err(0, e.to_string());
    Ok(if classical {
        ModelFile::Classical(ClassicalCaseModel::new(signature, cases).map_err(structural)?)
    } else {
        ModelFile::Bd(CaseModel::new(signature, cases).map_err(structural)?)
    })
}

/// Splits a chain such as `a = b < c` (spaces optional around the
/// operators) into names, offsets and whether a `<` precedes each name.
fn parse_chain(text: &str, ws: &[Word<'_>], end: usize) -> Result<Vec<(String, usize, bool)>, ParseError> {
    let err = |offset: usize, msg: String| ParseError::custom(text, offset, msg);
    let mut pieces: Vec<(&str, usize)> = Vec::new();
    for w in ws {
        let mut start = 0;
        for (i, c) in w.text.char_indices() {
            if c == '<' || c == '=' {
                if start < i {
                    pieces.push((&w.text[start..i], w.offset + start));
                }
                pieces.push((&w.text[i..i + 1], w.offset + i));
                start = i + 1;
            }
        }
        if start < w.text.len() {
            pieces.push((&w.text[start..], w.offset + start));
        }
    }
    let mut out = Vec::new();
    let mut expect_name = true;
    let mut step_up = false;
    for (piece, offset) in pieces {
        if expect_name {
            if !is_identifier(piece) {
                return Err(err(offset, format!("expected a case name, found `{piece}`")));
            }
            out.push((piece.to_string(), offset, step_up));
        } else {
            step_up = match piece {
                "<" => true,
                "=" => false,
                _ => return Err(err(offset, format!("expected `<` or `=`, found `{piece}`"))),
            };
        }
        expect_name = !expect_name;
    }
    if expect_name {
        return Err(err(end, "expected a case name".into()));
    }
    Ok(out)
}

fn write_model(f: &mut fmt::Formatter<'_>, model: &CaseModel) -> fmt::Result {
    writeln!(f, "vars {}", model.signature().vars().join(" "))?;
    for case in model.cases() {
        writeln!(f, "case {} := {}", case.name, case.formula)?;
    }
    let mut order: Vec<&Case> = model.cases().iter().collect();
    order.sort_by_key(|c| c.rank);
    let mut chain = String::new();
    for (i, case) in order.iter().enumerate() {
        if i > 0 {
            chain.push_str(if order[i - 1].rank == case.rank { " = " } else { " < " });
        }
        chain.push_str(&case.name);
    }
    writeln!(f, "prefs {chain}")
}

impl fmt::Display for CaseModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_model(f, self)
    }
}

impl fmt::Display for ClassicalCaseModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classical")?;
        write_model(f, self.as_model())
    }
}

impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelFile::Bd(m) => m.fmt(f),
            ModelFile::Classical(m) => m.fmt(f),
        }
    }
}
