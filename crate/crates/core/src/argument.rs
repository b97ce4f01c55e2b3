//! Arguments over case models and their coherent, presumptively valid and
//! conclusive statuses in three polarities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::case_model::{Case, CaseModel, ClassicalCaseModel};
use crate::entail::Bd;
use crate::error::Error;
use crate::formula::{make_probe, InnerFormula, Probe};

/// A premise and a conclusion; the case it describes is their conjunction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Argument {
    pub premise: InnerFormula,
    pub conclusion: InnerFormula,
}

impl Argument {
    pub fn new(premise: InnerFormula, conclusion: InnerFormula) -> Self {
        Argument { premise, conclusion }
    }

    pub fn target(&self, pol: Polarity) -> InnerFormula {
        target(pol, self)
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.premise, self.conclusion)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Positive,
    Negative,
    Strong,
}

impl Polarity {
    pub const ALL: [Polarity; 3] = [Polarity::Positive, Polarity::Negative, Polarity::Strong];

    /// The wrapper put around the conclusion.
    pub fn wrap(self, chi: &InnerFormula) -> InnerFormula {
        match self {
            Polarity::Positive => chi.clone().delta(),
            Polarity::Negative => chi.clone().neg().delta().neg(),
            Polarity::Strong => make_probe(Probe::T, chi.clone()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
            Polarity::Strong => "strong",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatusKind {
    Coherent,
    PresumptivelyValid,
    Conclusive,
}

impl StatusKind {
    pub const ALL: [StatusKind; 3] = [StatusKind::Coherent, StatusKind::PresumptivelyValid, StatusKind::Conclusive];

    pub fn name(self) -> &'static str {
        match self {
            StatusKind::Coherent => "coherent",
            StatusKind::PresumptivelyValid => "presumptively valid",
            StatusKind::Conclusive => "conclusive",
        }
    }
}

impl fmt::Display for StatusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The premise conjoined with the polarity's wrapper around the conclusion:
/// `phi & @chi`, `phi & !@!chi` or `phi & t(chi)`.
pub fn target(pol: Polarity, arg: &Argument) -> InnerFormula {
    arg.premise.clone().and(pol.wrap(&arg.conclusion))
}

/// What one case entails about one argument.
#[derive(Clone, Copy, Debug)]
struct Facts {
    premise: bool,
    target: [bool; 3],
}

fn facts(bd: &Bd, case: &Case, arg: &Argument, pols: &[Polarity]) -> Result<Facts, Error> {
    let mut out = Facts { premise: bd.entails(&case.formula, &arg.premise)?, target: [false; 3] };
    if out.premise {
        // every target contains the premise as a conjunct
        for &pol in pols {
            out.target[pol.index()] = bd.entails(&case.formula, &target(pol, arg))?;
        }
    }
    Ok(out)
}

/// Per-case entailment facts for an argument, computed once and queried
/// for any status.
struct Table<'m> {
    cases: &'m [Case],
    facts: Vec<Facts>,
}

impl<'m> Table<'m> {
    fn new(bd: &Bd, model: &'m CaseModel, arg: &Argument, pols: &[Polarity]) -> Result<Self, Error> {
        let facts = model
            .cases()
            .iter()
            .map(|c| facts(bd, c, arg, pols))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Table { cases: model.cases(), facts })
    }

    fn names(&self, keep: impl Fn(usize, &Facts) -> bool) -> Vec<String> {
        self.facts
            .iter()
            .enumerate()
            .filter(|(i, f)| keep(*i, f))
            .map(|(i, _)| self.cases[i].name.clone())
            .collect()
    }

    fn coherent(&self, pol: Polarity) -> (bool, Vec<String>) {
        let w = self.names(|_, f| f.target[pol.index()]);
        (!w.is_empty(), w)
    }

    fn conclusive(&self, pol: Polarity) -> (bool, Vec<String>) {
        let (coherent, w) = self.coherent(pol);
        let all = self.facts.iter().all(|f| !f.premise || f.target[pol.index()]);
        if coherent && all {
            (true, w)
        } else {
            (false, Vec::new())
        }
    }

    fn presumptively_valid(&self, pol: Polarity) -> (bool, Vec<String>) {
        let top = self
            .facts
            .iter()
            .zip(self.cases)
            .filter(|(f, _)| f.premise)
            .map(|(_, c)| c.rank)
            .max();
        let Some(top) = top else { return (false, Vec::new()) };
        let w = self.names(|i, f| self.cases[i].rank == top && f.target[pol.index()]);
        (!w.is_empty(), w)
    }

    fn status(&self, kind: StatusKind, pol: Polarity) -> (bool, Vec<String>) {
        match kind {
            StatusKind::Coherent => self.coherent(pol),
            StatusKind::PresumptivelyValid => self.presumptively_valid(pol),
            StatusKind::Conclusive => self.conclusive(pol),
        }
    }
}

/// Some case entails the target; the witnesses are all such cases.
pub fn coherent(bd: &Bd, model: &CaseModel, arg: &Argument, pol: Polarity) -> Result<(bool, Vec<String>), Error> {
    Ok(Table::new(bd, model, arg, &[pol])?.coherent(pol))
}

/// Coherent, and every case entailing the premise entails the target.
pub fn conclusive(bd: &Bd, model: &CaseModel, arg: &Argument, pol: Polarity) -> Result<(bool, Vec<String>), Error> {
    Ok(Table::new(bd, model, arg, &[pol])?.conclusive(pol))
}

/// A most preferred case among those entailing the premise entails the
/// target. The witnesses are the witnessing cases.
pub fn presumptively_valid(
    bd: &Bd,
    model: &CaseModel,
    arg: &Argument,
    pol: Polarity,
) -> Result<(bool, Vec<String>), Error> {
    Ok(Table::new(bd, model, arg, &[pol])?.presumptively_valid(pol))
}

pub fn status(
    bd: &Bd,
    model: &CaseModel,
    arg: &Argument,
    kind: StatusKind,
    pol: Polarity,
) -> Result<(bool, Vec<String>), Error> {
    Ok(Table::new(bd, model, arg, &[pol])?.status(kind, pol))
}

/// One entry per polarity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ByPolarity<T> {
    pub pos: T,
    pub neg: T,
    pub strong: T,
}

impl<T> ByPolarity<T> {
    pub fn get(&self, pol: Polarity) -> &T {
        match pol {
            Polarity::Positive => &self.pos,
            Polarity::Negative => &self.neg,
            Polarity::Strong => &self.strong,
        }
    }

    fn from_fn(mut f: impl FnMut(Polarity) -> T) -> Self {
        ByPolarity { pos: f(Polarity::Positive), neg: f(Polarity::Negative), strong: f(Polarity::Strong) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ByKind<T> {
    pub coherent: T,
    pub presumptively_valid: T,
    pub conclusive: T,
}

impl<T> ByKind<T> {
    pub fn get(&self, kind: StatusKind) -> &T {
        match kind {
            StatusKind::Coherent => &self.coherent,
            StatusKind::PresumptivelyValid => &self.presumptively_valid,
            StatusKind::Conclusive => &self.conclusive,
        }
    }
}

/// All nine statuses of an argument with their witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgumentStatus {
    pub coherent: ByPolarity<bool>,
    pub presumptively_valid: ByPolarity<bool>,
    pub conclusive: ByPolarity<bool>,
    pub witnesses: ByKind<ByPolarity<Vec<String>>>,
    /// The premise does not entail the conclusion.
    pub presumptive: bool,
}

impl ArgumentStatus {
    pub fn get(&self, kind: StatusKind, pol: Polarity) -> bool {
        let row = match kind {
            StatusKind::Coherent => &self.coherent,
            StatusKind::PresumptivelyValid => &self.presumptively_valid,
            StatusKind::Conclusive => &self.conclusive,
        };
        *row.get(pol)
    }

    pub fn witnesses(&self, kind: StatusKind, pol: Polarity) -> &[String] {
        self.witnesses.get(kind).get(pol)
    }
}

pub fn classify(bd: &Bd, model: &CaseModel, arg: &Argument) -> Result<ArgumentStatus, Error> {
    let table = Table::new(bd, model, arg, &Polarity::ALL)?;
    let row = |kind| {
        let cells = ByPolarity::from_fn(|pol| table.status(kind, pol));
        let flags = ByPolarity { pos: cells.pos.0, neg: cells.neg.0, strong: cells.strong.0 };
        let wits = ByPolarity { pos: cells.pos.1, neg: cells.neg.1, strong: cells.strong.1 };
        (flags, wits)
    };
    let (coherent, coherent_w) = row(StatusKind::Coherent);
    let (presumptively_valid, presumptive_w) = row(StatusKind::PresumptivelyValid);
    let (conclusive, conclusive_w) = row(StatusKind::Conclusive);
    Ok(ArgumentStatus {
        coherent,
        presumptively_valid,
        conclusive,
        witnesses: ByKind { coherent: coherent_w, presumptively_valid: presumptive_w, conclusive: conclusive_w },
        presumptive: !bd.entails(&arg.premise, &arg.conclusion)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalStatus {
    pub coherent: bool,
    pub presumptively_valid: bool,
    pub conclusive: bool,
}

impl ClassicalStatus {
    pub fn get(&self, kind: StatusKind) -> bool {
        match kind {
            StatusKind::Coherent => self.coherent,
            StatusKind::PresumptivelyValid => self.presumptively_valid,
            StatusKind::Conclusive => self.conclusive,
        }
    }
}

/// The classical statuses, with `phi & chi` as the single target.
pub fn classify_classical(bd: &Bd, model: &ClassicalCaseModel, arg: &Argument) -> Result<ClassicalStatus, Error> {
    if arg.premise.contains_delta() || arg.conclusion.contains_delta() {
        return Err(Error::DeltaPresent);
    }
    let both = arg.premise.clone().and(arg.conclusion.clone());
    let mut rows = Vec::new();
    for case in model.cases() {
        let premise = bd.entails_classical(&case.formula, &arg.premise)?;
        let target = premise && bd.entails_classical(&case.formula, &both)?;
        rows.push((case.rank, premise, target));
    }
    let coherent = rows.iter().any(|r| r.2);
    let conclusive = coherent && rows.iter().all(|r| !r.1 || r.2);
    let top = rows.iter().filter(|r| r.1).map(|r| r.0).max();
    let presumptively_valid = top.is_some_and(|top| rows.iter().any(|r| r.0 == top && r.2));
    Ok(ClassicalStatus { coherent, presumptively_valid, conclusive })
}
