//! Case models: pairwise-exclusive, non-trivial cases under a total preorder.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::entail::Bd;
use crate::error::Error;
use crate::formula::{is_identifier, InnerFormula, Probe, Signature, RESERVED_VAR};

/// A named case. Higher rank means more preferred; equal ranks are tied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub formula: InnerFormula,
    pub rank: u32,
}

impl Case {
    pub fn new(name: impl Into<String>, formula: InnerFormula, rank: u32) -> Self {
        Case { name: name.into(), formula, rank }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseModel {
    signature: Signature,
    cases: Vec<Case>,
}

impl CaseModel {
    /// Builds a model after structural checks: case names are distinct
    /// identifiers and every formula stays within the signature. The
    /// semantic conditions are checked by [`CaseModel::validate`].
    pub fn new(signature: Signature, cases: Vec<Case>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for case in &cases {
            if !is_identifier(&case.name) {
                return Err(Error::InvalidModel(format!("`{}` is not a case name", case.name)));
            }
            if !seen.insert(case.name.as_str()) {
                return Err(Error::InvalidModel(format!("duplicate case `{}`", case.name)));
            }
            if let Some(var) = signature.first_unbound(&case.formula) {
                return Err(Error::UnboundVariable(var));
            }
        }
        Ok(CaseModel { signature, cases })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    pub fn case(&self, name: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.name == name)
    }

    pub fn rank(&self, name: &str) -> Option<u32> {
        self.case(name).map(|c| c.rank)
    }

    /// `a` is at most as preferred as `b`.
    pub fn preceq(&self, a: &str, b: &str) -> Option<bool> {
        Some(self.rank(a)? <= self.rank(b)?)
    }

    /// Checks non-triviality of each case and exclusivity of each pair.
    pub fn validate(&self, bd: &Bd) -> Result<ValidationReport, Error> {
        let mut violations = Vec::new();
        for case in &self.cases {
            if !bd.nontrivial(&case.formula)? {
                violations.push(Violation::new(ViolationKind::Trivial, [&case.name]));
            }
        }
        for (i, a) in self.cases.iter().enumerate() {
            for b in &self.cases[i + 1..] {
                if !bd.jointly_exclusive(&a.formula, &b.formula)? {
                    violations.push(Violation::new(ViolationKind::NotExclusive, [&a.name, &b.name]));
                }
            }
        }
        violations.extend(self.rank_gap());
        Ok(ValidationReport::from(violations))
    }

    fn rank_gap(&self) -> Option<Violation> {
        let ranks: BTreeSet<u32> = self.cases.iter().map(|c| c.rank).collect();
        let (lo, hi) = (ranks.first()?, ranks.last()?);
        if (hi - lo) as usize + 1 == ranks.len() {
            return None;
        }
        let names: Vec<&String> = self.cases.iter().map(|c| &c.name).collect();
        Some(Violation::new(ViolationKind::RankGap, names))
    }

    /// Cases entailing `phi` whose rank is maximal among such cases.
    pub fn most_preferred_supporting(&self, bd: &Bd, phi: &InnerFormula) -> Result<Vec<String>, Error> {
        let mut supporters = Vec::new();
        for case in &self.cases {
            if bd.entails(&case.formula, phi)? {
                supporters.push(case);
            }
        }
        let Some(top) = supporters.iter().map(|c| c.rank).max() else {
            return Ok(Vec::new());
        };
        Ok(supporters
            .into_iter()
            .filter(|c| c.rank == top)
            .map(|c| c.name.clone())
            .collect())
    }

    /// Every case is built from `t(p)` leaves by negation, conjunction and disjunction.
    pub fn is_quasi_classical(&self) -> bool {
        self.cases.iter().all(|c| is_t_probe_combination(&c.formula))
    }
}

fn is_t_probe_combination(phi: &InnerFormula) -> bool {
    if let Some((Probe::T, InnerFormula::Var(p))) = phi.as_probe() {
        return p != RESERVED_VAR;
    }
    match phi {
        InnerFormula::Neg(a) => is_t_probe_combination(a),
        InnerFormula::And(a, b) | InnerFormula::Or(a, b) => {
            is_t_probe_combination(a) && is_t_probe_combination(b)
        }
        InnerFormula::Var(_) | InnerFormula::Delta(_) => false,
    }
}

/// A case model over the Delta-free language, judged classically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalCaseModel(CaseModel);

impl ClassicalCaseModel {
    pub fn new(signature: Signature, cases: Vec<Case>) -> Result<Self, Error> {
        if cases.iter().any(|c| c.formula.contains_delta()) {
            return Err(Error::DeltaPresent);
        }
        Ok(ClassicalCaseModel(CaseModel::new(signature, cases)?))
    }

    pub fn as_model(&self) -> &CaseModel {
        &self.0
    }

    pub fn signature(&self) -> &Signature {
        self.0.signature()
    }

    pub fn cases(&self) -> &[Case] {
        self.0.cases()
    }

    /// Each case classically satisfiable, each pair classically incompatible.
    pub fn validate(&self, bd: &Bd) -> Result<ValidationReport, Error> {
        let cases = self.0.cases();
        let mut violations = Vec::new();
        for case in cases {
            if !bd.satisfiable_classical(&case.formula)? {
                violations.push(Violation::new(ViolationKind::Trivial, [&case.name]));
            }
        }
        for (i, a) in cases.iter().enumerate() {
            for b in &cases[i + 1..] {
                if bd.satisfiable_classical(&a.formula.clone().and(b.formula.clone()))? {
                    violations.push(Violation::new(ViolationKind::NotExclusive, [&a.name, &b.name]));
                }
            }
        }
        violations.extend(self.0.rank_gap());
        Ok(ValidationReport::from(violations))
    }

    /// The BD counterpart: every case mapped through `t`-substitution,
    /// names and ranks unchanged.
    pub fn counterpart(&self) -> Result<CaseModel, Error> {
        let cases = self
            .0
            .cases()
            .iter()
            .map(|c| Ok(Case::new(c.name.clone(), c.formula.substitute_t()?, c.rank)))
            .collect::<Result<Vec<_>, Error>>()?;
        CaseModel::new(self.0.signature().clone(), cases)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    Trivial,
    NotExclusive,
    RankGap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub cases: Vec<String>,
}

impl Violation {
    fn new<S: AsRef<str>>(kind: ViolationKind, cases: impl IntoIterator<Item = S>) -> Self {
        Violation { kind, cases: cases.into_iter().map(|s| s.as_ref().to_string()).collect() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.cases.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl From<Vec<Violation>> for ValidationReport {
    fn from(violations: Vec<Violation>) -> Self {
        ValidationReport { ok: violations.is_empty(), violations }
    }
}
