//! Inner (BD with Delta) and outer (bi-Goedel over modal atoms) formula trees.
//!
//! The inner language has exactly five primitive constructors. Status probes,
//! `top`, `bot` and internal entailment are abbreviations: they are expanded
//! when built and re-sugared by the printer only when a subtree has exactly
//! the defining shape.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Variable name reserved for the expansion of `top` and `bot`.
pub const RESERVED_VAR: &str = "_c";

/// Returns true for names over `[a-z][a-z0-9_]*` that are not keywords.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !matches!(name, "top" | "bot")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InnerFormula {
    Var(String),
    Neg(Box<InnerFormula>),
    And(Box<InnerFormula>, Box<InnerFormula>),
    Or(Box<InnerFormula>, Box<InnerFormula>),
    Delta(Box<InnerFormula>),
}

/// The four status probes `t`, `b`, `n`, `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Probe {
    T,
    B,
    N,
    F,
}

impl Probe {
    pub const ALL: [Probe; 4] = [Probe::T, Probe::B, Probe::N, Probe::F];

    pub fn symbol(self) -> char {
        match self {
            Probe::T => 't',
            Probe::B => 'b',
            Probe::N => 'n',
            Probe::F => 'f',
        }
    }

    pub fn from_symbol(c: char) -> Option<Probe> {
        match c {
            't' => Some(Probe::T),
            'b' => Some(Probe::B),
            'n' => Some(Probe::N),
            'f' => Some(Probe::F),
            _ => None,
        }
    }

    /// Truth order on probe kinds: f below b and n, both below t.
    pub fn le(self, other: Probe) -> bool {
        matches!(
            (self, other),
            (Probe::F, _) | (_, Probe::T) | (Probe::B, Probe::B) | (Probe::N, Probe::N)
        )
    }
}

/// Pairs `(x, x')` with `x <= x'` in the order used by the internal
/// entailment disjunction.
pub const ENTAILMENT_PAIRS: [(Probe, Probe); 9] = [
    (Probe::F, Probe::F),
    (Probe::F, Probe::B),
    (Probe::F, Probe::N),
    (Probe::F, Probe::T),
    (Probe::B, Probe::B),
    (Probe::B, Probe::T),
    (Probe::N, Probe::N),
    (Probe::N, Probe::T),
    (Probe::T, Probe::T),
];

impl InnerFormula {
    pub fn var(name: impl Into<String>) -> Self {
        InnerFormula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        InnerFormula::Neg(Box::new(self))
    }

    pub fn and(self, rhs: InnerFormula) -> Self {
        InnerFormula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: InnerFormula) -> Self {
        InnerFormula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn delta(self) -> Self {
        InnerFormula::Delta(Box::new(self))
    }

    /// Left-associated conjunction of a non-empty sequence.
    pub fn conjoin(parts: impl IntoIterator<Item = InnerFormula>) -> Option<Self> {
        parts.into_iter().reduce(InnerFormula::and)
    }

    /// Left-associated disjunction of a non-empty sequence.
    pub fn disjoin(parts: impl IntoIterator<Item = InnerFormula>) -> Option<Self> {
        parts.into_iter().reduce(InnerFormula::or)
    }

    /// Variables in first-occurrence order, without the reserved `_c`.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            InnerFormula::Var(name) => {
                if name != RESERVED_VAR && !out.iter().any(|v| v == name) {
                    out.push(name.clone());
                }
            }
            InnerFormula::Neg(a) | InnerFormula::Delta(a) => a.collect_vars(out),
            InnerFormula::And(a, b) | InnerFormula::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn contains_delta(&self) -> bool {
        match self {
            InnerFormula::Var(_) => false,
            InnerFormula::Delta(_) => true,
            InnerFormula::Neg(a) => a.contains_delta(),
            InnerFormula::And(a, b) | InnerFormula::Or(a, b) => {
                a.contains_delta() || b.contains_delta()
            }
        }
    }

    /// True when every variable occurrence lies in the scope of a Delta.
    pub fn is_delta_guarded(&self) -> bool {
        match self {
            InnerFormula::Var(_) => false,
            InnerFormula::Delta(_) => true,
            InnerFormula::Neg(a) => a.is_delta_guarded(),
            InnerFormula::And(a, b) | InnerFormula::Or(a, b) => {
                a.is_delta_guarded() && b.is_delta_guarded()
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            InnerFormula::Var(_) => 1,
            InnerFormula::Neg(a) | InnerFormula::Delta(a) => 1 + a.size(),
            InnerFormula::And(a, b) | InnerFormula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            InnerFormula::Var(_) => 0,
            InnerFormula::Neg(a) | InnerFormula::Delta(a) => 1 + a.depth(),
            InnerFormula::And(a, b) | InnerFormula::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Replaces every variable `p` by `t(p)`. Only defined on Delta-free input.
    pub fn substitute_t(&self) -> Result<InnerFormula, Error> {
        if self.contains_delta() {
            return Err(Error::DeltaPresent);
        }
        Ok(self.map_vars(&|p| make_probe(Probe::T, InnerFormula::var(p))))
    }

    fn map_vars(&self, f: &dyn Fn(&str) -> InnerFormula) -> InnerFormula {
        match self {
            InnerFormula::Var(p) => f(p),
            InnerFormula::Neg(a) => a.map_vars(f).neg(),
            InnerFormula::Delta(a) => a.map_vars(f).delta(),
            InnerFormula::And(a, b) => a.map_vars(f).and(b.map_vars(f)),
            InnerFormula::Or(a, b) => a.map_vars(f).or(b.map_vars(f)),
        }
    }

    /// If this node is the expansion of a status probe, returns its kind and argument.
    pub fn as_probe(&self) -> Option<(Probe, &InnerFormula)> {
        use InnerFormula::*;
        let (l, r) = match self {
            And(l, r) => (l.as_ref(), r.as_ref()),
            _ => return None,
        };
        let (positive, arg) = match l {
            Delta(a) => (true, a.as_ref()),
            Neg(inner) => match inner.as_ref() {
                Delta(a) => (false, a.as_ref()),
                _ => return None,
            },
            _ => return None,
        };
        let (negative, neg_arg) = match r {
            Delta(a) => (true, a.as_ref()),
            Neg(inner) => match inner.as_ref() {
                Delta(a) => (false, a.as_ref()),
                _ => return None,
            },
            _ => return None,
        };
        match neg_arg {
            Neg(a) if a.as_ref() == arg => {}
            _ => return None,
        }
        let kind = match (positive, negative) {
            (true, false) => Probe::T,
            (true, true) => Probe::B,
            (false, false) => Probe::N,
            (false, true) => Probe::F,
        };
        Some((kind, arg))
    }

    pub fn is_top(&self) -> bool {
        *self == make_top()
    }

    pub fn is_bot(&self) -> bool {
        *self == make_bot()
    }

    /// If this node is exactly `phi =>> chi`, returns `(phi, chi)`.
    pub fn as_internal_entailment(&self) -> Option<(&InnerFormula, &InnerFormula)> {
        let mut node = self;
        for _ in 0..ENTAILMENT_PAIRS.len() - 1 {
            match node {
                InnerFormula::Or(l, _) => node = l,
                _ => return None,
            }
        }
        let (l, r) = match node {
            InnerFormula::And(l, r) => (l, r),
            _ => return None,
        };
        let (Probe::F, phi) = l.as_probe()? else {
            return None;
        };
        let (Probe::F, chi) = r.as_probe()? else {
            return None;
        };
        if make_internal_entailment(phi.clone(), chi.clone()) == *self {
            Some((phi, chi))
        } else {
            None
        }
    }

    fn level(&self) -> u8 {
        if self.is_top() || self.is_bot() || self.as_probe().is_some() {
            return 3;
        }
        if self.as_internal_entailment().is_some() {
            return 0;
        }
        match self {
            InnerFormula::Var(_) | InnerFormula::Neg(_) | InnerFormula::Delta(_) => 3,
            InnerFormula::And(..) => 2,
            InnerFormula::Or(..) => 1,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.level() < min;
        if parens {
            f.write_str("(")?;
        }
        self.write_bare(f)?;
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_top() {
            return f.write_str("top");
        }
        if self.is_bot() {
            return f.write_str("bot");
        }
        if let Some((kind, arg)) = self.as_probe() {
            write!(f, "{}(", kind.symbol())?;
            arg.write_prec(f, 0)?;
            return f.write_str(")");
        }
        if let Some((phi, chi)) = self.as_internal_entailment() {
            phi.write_prec(f, 1)?;
            f.write_str(" =>> ")?;
            return chi.write_prec(f, 1);
        }
        match self {
            InnerFormula::Var(name) => f.write_str(name),
            InnerFormula::Neg(a) => {
                f.write_str("!")?;
                a.write_prec(f, 3)
            }
            InnerFormula::Delta(a) => {
                f.write_str("@")?;
                a.write_prec(f, 3)
            }
            InnerFormula::And(a, b) => {
                a.write_prec(f, 2)?;
                f.write_str(" & ")?;
                b.write_prec(f, 3)
            }
            InnerFormula::Or(a, b) => {
                a.write_prec(f, 1)?;
                f.write_str(" | ")?;
                b.write_prec(f, 2)
            }
        }
    }
}

impl fmt::Display for InnerFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

/// Expansion of a status probe applied to `phi`.
pub fn make_probe(kind: Probe, phi: InnerFormula) -> InnerFormula {
    let pos = phi.clone().delta();
    let neg = phi.neg().delta();
    match kind {
        Probe::T => pos.and(neg.neg()),
        Probe::B => pos.and(neg),
        Probe::N => pos.neg().and(neg.neg()),
        Probe::F => pos.neg().and(neg),
    }
}

pub fn make_top() -> InnerFormula {
    let d = InnerFormula::var(RESERVED_VAR).delta();
    d.clone().or(d.neg())
}

pub fn make_bot() -> InnerFormula {
    make_top().neg()
}

/// The nine-disjunct formula that is valid exactly when `phi` entails `chi`.
pub fn make_internal_entailment(phi: InnerFormula, chi: InnerFormula) -> InnerFormula {
    InnerFormula::disjoin(
        ENTAILMENT_PAIRS
            .iter()
            .map(|&(x, y)| make_probe(x, phi.clone()).and(make_probe(y, chi.clone()))),
    )
    .expect("nine disjuncts")
}

/// Ordered list of distinct variable names fixing the enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(Vec<String>);

impl Signature {
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vars: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidSignature(format!("`{name}` is not a variable name")));
            }
            if vars.contains(&name) {
                return Err(Error::InvalidSignature(format!("duplicate variable `{name}`")));
            }
            vars.push(name);
        }
        Ok(Signature(vars))
    }

    /// Union of the variables of `formulas`, in first-occurrence order.
    pub fn of<'a>(formulas: impl IntoIterator<Item = &'a InnerFormula>) -> Self {
        let mut vars = Vec::new();
        for phi in formulas {
            phi.collect_vars(&mut vars);
        }
        Signature(vars)
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Returns the first variable of `phi` missing from this signature.
    pub fn first_unbound(&self, phi: &InnerFormula) -> Option<String> {
        phi.vars().into_iter().find(|v| !self.contains(v))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

/// Outer-layer formulas: bi-Goedel connectives over modal atoms `B{phi}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OuterFormula {
    Modal(InnerFormula),
    GNeg(Box<OuterFormula>),
    GAnd(Box<OuterFormula>, Box<OuterFormula>),
    GOr(Box<OuterFormula>, Box<OuterFormula>),
    GImp(Box<OuterFormula>, Box<OuterFormula>),
    GCoimp(Box<OuterFormula>, Box<OuterFormula>),
    GDelta(Box<OuterFormula>),
}

impl OuterFormula {
    pub fn belief(phi: InnerFormula) -> Self {
        OuterFormula::Modal(phi)
    }

    pub fn gneg(self) -> Self {
        OuterFormula::GNeg(Box::new(self))
    }

    pub fn gand(self, rhs: OuterFormula) -> Self {
        OuterFormula::GAnd(Box::new(self), Box::new(rhs))
    }

    pub fn gor(self, rhs: OuterFormula) -> Self {
        OuterFormula::GOr(Box::new(self), Box::new(rhs))
    }

    pub fn gimp(self, rhs: OuterFormula) -> Self {
        OuterFormula::GImp(Box::new(self), Box::new(rhs))
    }

    pub fn gcoimp(self, rhs: OuterFormula) -> Self {
        OuterFormula::GCoimp(Box::new(self), Box::new(rhs))
    }

    pub fn gdelta(self) -> Self {
        OuterFormula::GDelta(Box::new(self))
    }

    /// Inner formulas under modal atoms, left to right.
    pub fn modal_atoms(&self) -> Vec<&InnerFormula> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a InnerFormula>) {
        match self {
            OuterFormula::Modal(phi) => out.push(phi),
            OuterFormula::GNeg(a) | OuterFormula::GDelta(a) => a.collect_atoms(out),
            OuterFormula::GAnd(a, b)
            | OuterFormula::GOr(a, b)
            | OuterFormula::GImp(a, b)
            | OuterFormula::GCoimp(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            OuterFormula::GImp(..) => 0,
            OuterFormula::GCoimp(..) => 1,
            OuterFormula::GOr(..) => 2,
            OuterFormula::GAnd(..) => 3,
            OuterFormula::Modal(_) | OuterFormula::GNeg(_) | OuterFormula::GDelta(_) => 4,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.level() < min;
        if parens {
            f.write_str("(")?;
        }
        match self {
            OuterFormula::Modal(phi) => write!(f, "B{{ {phi} }}")?,
            OuterFormula::GNeg(a) => {
                f.write_str("~")?;
                a.write_prec(f, 4)?;
            }
            OuterFormula::GDelta(a) => {
                f.write_str("@")?;
                a.write_prec(f, 4)?;
            }
            OuterFormula::GImp(a, b) => {
                a.write_prec(f, 1)?;
                f.write_str(" -> ")?;
                b.write_prec(f, 0)?;
            }
            OuterFormula::GCoimp(a, b) => {
                a.write_prec(f, 1)?;
                f.write_str(" -< ")?;
                b.write_prec(f, 2)?;
            }
            OuterFormula::GOr(a, b) => {
                a.write_prec(f, 2)?;
                f.write_str(" | ")?;
                b.write_prec(f, 3)?;
            }
            OuterFormula::GAnd(a, b) => {
                a.write_prec(f, 3)?;
                f.write_str(" & ")?;
                b.write_prec(f, 4)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for OuterFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}
