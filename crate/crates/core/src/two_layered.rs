//! Two-layered models: four-valued points under a capacity, outer formulas
//! evaluated in the bi-Goedel algebra, and the translation of case models
//! and argument statuses into that setting.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::argument::{classify, target, Argument, Polarity, StatusKind};
use crate::case_model::{Case, CaseModel};
use crate::entail::Bd;
use crate::error::Error;
use crate::formula::{make_internal_entailment, make_probe, InnerFormula, OuterFormula, Probe, Signature};
use crate::four::{FourValue, Valuation};
use crate::godel::GValue;
use crate::semantics::{eval4, extension, PointModel, PointSet};

/// A monotone set function on the points with `mu(empty) = 0` and `mu(W) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Capacity {
    /// A value for every subset of the points.
    Explicit(BTreeMap<PointSet, GValue>),
    /// `mu(A)` is the total mass in `A` over the total mass.
    AdditiveMasses(Vec<Ratio<i64>>),
}

impl Capacity {
    /// Largest point count accepted for explicit tables.
    pub const EXPLICIT_MAX_POINTS: usize = 16;

    pub fn measure(&self, set: PointSet) -> GValue {
        match self {
            Capacity::Explicit(table) => table[&set],
            Capacity::AdditiveMasses(masses) => {
                let total: Ratio<i64> = masses.iter().sum();
                let part: Ratio<i64> = set.iter().take_while(|&i| i < masses.len()).map(|i| masses[i]).sum();
                GValue::from_ratio(part / total).expect("masses are positive")
            }
        }
    }

    /// Checks the capacity laws on `n` points.
    pub fn validate(&self, n: usize) -> Result<(), Error> {
        match self {
            Capacity::AdditiveMasses(masses) => {
                if masses.len() != n {
                    return Err(Error::InvalidCapacity(format!("{} masses for {n} points", masses.len())));
                }
                if n == 0 {
                    return Err(Error::InvalidCapacity("no points to carry mass".into()));
                }
                if let Some(m) = masses.iter().find(|m| **m <= Ratio::zero()) {
                    return Err(Error::InvalidCapacity(format!("mass {m} is not positive")));
                }
                Ok(())
            }
            Capacity::Explicit(table) => {
                if n > Self::EXPLICIT_MAX_POINTS {
                    return Err(Error::InvalidCapacity(format!("explicit tables allow at most {} points", Self::EXPLICIT_MAX_POINTS)));
                }
                let full = PointSet::full(n);
                let subsets = 1usize << n;
                if table.len() != subsets || table.keys().any(|k| !k.is_subset(full)) {
                    return Err(Error::InvalidCapacity(format!("the table must give all {subsets} subsets")));
                }
                if !table[&PointSet::empty()].is_zero() || !table[&full].is_one() {
                    return Err(Error::InvalidCapacity("mu(empty) must be 0 and mu(W) must be 1".into()));
                }
                for (set, value) in table {
                    for i in 0..n {
                        if !set.contains(i) {
                            let mut bigger = *set;
                            bigger.insert(i);
                            if table[&bigger] < *value {
                                return Err(Error::InvalidCapacity(format!("not monotone at {:#b}", set.0)));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// Every nonempty set has positive measure and every proper subset
    /// measure below one.
    pub fn is_strict(&self, n: usize) -> bool {
        let full = PointSet::full(n);
        (1..(1u64 << n)).map(PointSet).all(|set| {
            let m = self.measure(set);
            !m.is_zero() && (set == full || !m.is_one())
        })
    }
}

/// Four-valued points under a capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGModel {
    pub points: PointModel,
    pub mu: Capacity,
}

impl QGModel {
    pub fn new(points: PointModel, mu: Capacity) -> Result<Self, Error> {
        mu.validate(points.len())?;
        Ok(QGModel { points, mu })
    }

    /// `model |= alpha`: the outer formula takes value 1.
    pub fn satisfies(&self, alpha: &OuterFormula) -> Result<bool, Error> {
        Ok(eval_outer(self, alpha)?.is_one())
    }
}

pub fn eval_outer(model: &QGModel, alpha: &OuterFormula) -> Result<GValue, Error> {
    Ok(match alpha {
        OuterFormula::Modal(phi) => model.mu.measure(extension(phi, &model.points)?.pos),
        OuterFormula::GNeg(a) => eval_outer(model, a)?.neg(),
        OuterFormula::GDelta(a) => eval_outer(model, a)?.delta(),
        OuterFormula::GAnd(a, b) => eval_outer(model, a)?.and(eval_outer(model, b)?),
        OuterFormula::GOr(a, b) => eval_outer(model, a)?.or(eval_outer(model, b)?),
        OuterFormula::GImp(a, b) => eval_outer(model, a)?.imp(eval_outer(model, b)?),
        OuterFormula::GCoimp(a, b) => eval_outer(model, a)?.coimp(eval_outer(model, b)?),
    })
}

/// The valuation a determinate case pins down: for every variable, the one
/// status probe the case entails.
///
/// The case must also be designated there, since it is false at every
/// other valuation and a point realizing it has to support it.
pub fn canonical_valuation(bd: &Bd, case: &Case, sig: &Signature) -> Result<Valuation, Error> {
    let mut values = Vec::with_capacity(sig.len());
    for var in sig.vars() {
        let p = InnerFormula::var(var.clone());
        let mut found = None;
        for (probe, value) in [(Probe::T, FourValue::T), (Probe::B, FourValue::B), (Probe::N, FourValue::N), (Probe::F, FourValue::F)] {
            if bd.entails(&case.formula, &make_probe(probe, p.clone()))? {
                found = Some(value);
                break;
            }
        }
        let value = found.ok_or_else(|| Error::NotDeterminate { case: case.name.clone(), var: var.clone() })?;
        values.push(value);
    }
    let v = Valuation::new(sig.clone(), values)?;
    if !eval4(&case.formula, &v)?.is_designated() {
        return Err(Error::NotRealizable { case: case.name.clone() });
    }
    Ok(v)
}

/// The two-layered model built from a case model, one point per case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuCounterpart {
    pub model: QGModel,
    /// `case_of_point[i]` is the case that point `i` realizes.
    pub case_of_point: Vec<String>,
    pub source: CaseModel,
}

impl MuCounterpart {
    pub fn point_of(&self, case: &str) -> Option<usize> {
        self.case_of_point.iter().position(|c| c == case)
    }

    pub fn point_name(&self, i: usize) -> &str {
        &self.model.points.points()[i]
    }

    /// Swaps in another capacity over the same points.
    pub fn with_capacity(mut self, mu: Capacity) -> Result<Self, Error> {
        mu.validate(self.model.points.len())?;
        self.model.mu = mu;
        Ok(self)
    }

    /// Mass of each point's singleton.
    pub fn singleton_measures(&self) -> Vec<GValue> {
        (0..self.case_of_point.len()).map(|i| self.model.mu.measure(PointSet::singleton(i))).collect()
    }
}

impl fmt::Display for MuCounterpart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, case) in self.case_of_point.iter().enumerate() {
            let mass = self.model.mu.measure(PointSet::singleton(i));
            let val = self.model.points.valuation(i);
            writeln!(f, "point {} from {case} mass {mass} val {val}", self.point_name(i))?;
        }
        match self.model.mu {
            Capacity::AdditiveMasses(_) => writeln!(f, "capacity additive"),
            Capacity::Explicit(_) => writeln!(f, "capacity explicit"),
        }
    }
}

/// Points `w1..wn` carrying the canonical valuations of the cases, with
/// additive masses `rank + 1`.
pub fn mu_counterpart(bd: &Bd, model: &CaseModel) -> Result<MuCounterpart, Error> {
    if model.is_empty() {
        return Err(Error::InvalidModel("a model without cases has no counterpart".into()));
    }
    let sig = model.signature();
    let mut points = Vec::with_capacity(model.len());
    for (i, case) in model.cases().iter().enumerate() {
        points.push((format!("w{}", i + 1), canonical_valuation(bd, case, sig)?));
    }
    let masses = model.cases().iter().map(|c| Ratio::from_integer(c.rank as i64 + 1)).collect();
    let qg = QGModel::new(PointModel::new(sig.clone(), points)?, Capacity::AdditiveMasses(masses))?;
    Ok(MuCounterpart {
        model: qg,
        case_of_point: model.cases().iter().map(|c| c.name.clone()).collect(),
        source: model.clone(),
    })
}

fn belief(phi: InnerFormula) -> OuterFormula {
    OuterFormula::belief(phi)
}

fn not_not(alpha: OuterFormula) -> OuterFormula {
    alpha.gneg().gneg()
}

/// The outer formula that holds on the counterpart exactly when the
/// argument has the given status.
///
/// Presumptive validity is stated relative to a witnessing case, which
/// must be given. The strong polarity is only available for coherence.
pub fn representation_formula(
    kind: StatusKind,
    pol: Polarity,
    arg: &Argument,
    witness: Option<&str>,
    model: &CaseModel,
) -> Result<OuterFormula, Error> {
    let phi = &arg.premise;
    let chi = &arg.conclusion;
    match (kind, pol) {
        (StatusKind::Coherent, _) => Ok(not_not(belief(target(pol, arg)))),
        (StatusKind::Conclusive, Polarity::Positive) => Ok(belief(phi.clone().and(chi.clone().delta().neg()))
            .gneg()
            .gand(not_not(belief(target(pol, arg))))),
        (StatusKind::Conclusive, Polarity::Negative) => Ok(belief(phi.clone().and(chi.clone().neg().delta()))
            .gneg()
            .gand(not_not(belief(target(pol, arg))))),
        (StatusKind::Conclusive, Polarity::Strong) => Err(Error::StrongUnrepresented("conclusive")),
        (StatusKind::PresumptivelyValid, Polarity::Strong) => Err(Error::StrongUnrepresented("presumptively valid")),
        (StatusKind::PresumptivelyValid, _) => {
            let name = witness.ok_or_else(|| Error::UnknownWitness(String::new()))?;
            let witness = model.case(name).ok_or_else(|| Error::UnknownWitness(name.to_string()))?;
            let wrapped = target(pol, arg);
            let mut out = not_not(belief(wrapped.clone()))
                .gand(belief(make_internal_entailment(witness.formula.clone(), wrapped)).gdelta());
            for other in model.cases() {
                let guard = belief(make_internal_entailment(other.formula.clone(), phi.clone())).gdelta();
                let preferred = belief(other.formula.clone()).gimp(belief(witness.formula.clone())).gdelta();
                out = out.gand(guard.gimp(preferred));
            }
            Ok(out)
        }
    }
}

/// One status checked on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub kind: StatusKind,
    pub polarity: Polarity,
    pub witness: Option<String>,
    /// The status as decided on the case model.
    pub holds: bool,
    /// Value of the representation formula on the counterpart.
    pub value: GValue,
}

impl Instance {
    pub fn agrees(&self) -> bool {
        self.holds == self.value.is_one()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.polarity, self.kind)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        write!(
            f,
            ": case model {}, counterpart {} [{}]",
            self.holds,
            self.value,
            if self.agrees() { "agree" } else { "DISAGREE" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub instances: Vec<Instance>,
    /// Set when the capacity is not strict, in which case disagreements
    /// are not counted as failures.
    pub warnings: Vec<String>,
}

impl RepresentationReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.agrees())
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements().next().is_none()
    }

    /// No disagreement, or only disagreements excused by a warning.
    pub fn ok(&self) -> bool {
        self.all_agree() || !self.warnings.is_empty()
    }
}

/// Compares every status of `arg` with its representation on the canonical
/// counterpart of `model`.
pub fn verify_representation(bd: &Bd, model: &CaseModel, arg: &Argument) -> Result<RepresentationReport, Error> {
    let report = model.validate(bd)?;
    if !report.ok {
        let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidModel(list.join("; ")));
    }
    let counterpart = mu_counterpart(bd, model)?;
    verify_on(bd, &counterpart, arg)
}

/// As [`verify_representation`], on a given counterpart whose capacity may
/// have been replaced.
pub fn verify_on(bd: &Bd, counterpart: &MuCounterpart, arg: &Argument) -> Result<RepresentationReport, Error> {
    let model = &counterpart.source;
    let status = classify(bd, model, arg)?;
    let qg = &counterpart.model;
    let mut instances = Vec::new();
    let mut push = |kind, polarity, witness: Option<&str>, holds| -> Result<(), Error> {
        let formula = representation_formula(kind, polarity, arg, witness, model)?;
        instances.push(Instance {
            kind,
            polarity,
            witness: witness.map(str::to_string),
            holds,
            value: eval_outer(qg, &formula)?,
        });
        Ok(())
    };
    for pol in Polarity::ALL {
        push(StatusKind::Coherent, pol, None, status.get(StatusKind::Coherent, pol))?;
    }
    for pol in [Polarity::Positive, Polarity::Negative] {
        push(StatusKind::Conclusive, pol, None, status.get(StatusKind::Conclusive, pol))?;
    }
    for pol in [Polarity::Positive, Polarity::Negative] {
        let witnesses = status.witnesses(StatusKind::PresumptivelyValid, pol);
        for case in model.cases() {
            push(StatusKind::PresumptivelyValid, pol, Some(&case.name), witnesses.contains(&case.name))?;
        }
    }

    let mut warnings = Vec::new();
    let n = qg.points.len();
    if !qg.mu.is_strict(n) {
        warnings.push("capacity gives some proper subset measure 1 or some nonempty set measure 0".to_string());
    }
    let singles = counterpart.singleton_measures();
    for (i, a) in model.cases().iter().enumerate() {
        for (j, b) in model.cases().iter().enumerate() {
            if (a.rank <= b.rank) != (singles[i] <= singles[j]) {
                warnings.push(format!("capacity does not order `{}` and `{}` as the preferences do", a.name, b.name));
            }
        }
    }
    Ok(RepresentationReport { instances, warnings })
}
