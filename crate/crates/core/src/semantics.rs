//! Four-valued evaluation, bilateral frame satisfaction, and point models.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::formula::{InnerFormula, Signature, RESERVED_VAR};
use crate::four::{FourValue, Valuation};

/// Truth-table evaluation.
pub fn eval4(phi: &InnerFormula, v: &Valuation) -> Result<FourValue, Error> {
    Ok(match phi {
        InnerFormula::Var(name) if name == RESERVED_VAR => FourValue::N,
        InnerFormula::Var(name) => v.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?,
        InnerFormula::Neg(a) => eval4(a, v)?.not(),
        InnerFormula::Delta(a) => eval4(a, v)?.delta(),
        InnerFormula::And(a, b) => eval4(a, v)?.meet(eval4(b, v)?),
        InnerFormula::Or(a, b) => eval4(a, v)?.join(eval4(b, v)?),
    })
}

/// A set of points of a model, at most 64 of them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const MAX_POINTS: usize = 64;

    pub fn empty() -> Self {
        PointSet(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

/// A finite model: named points, each carrying a four-valued valuation.
///
/// Equivalently the pair `v+`, `v-` mapping each variable to the points
/// that support resp. deny it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointModel {
    signature: Signature,
    points: Vec<String>,
    vals: Vec<Vec<FourValue>>,
}

impl PointModel {
    pub fn new(signature: Signature, points: Vec<(String, Valuation)>) -> Result<Self, Error> {
        if points.len() > PointSet::MAX_POINTS {
            return Err(Error::InvalidModel(format!(
                "{} points exceed the limit of {}",
                points.len(),
                PointSet::MAX_POINTS
            )));
        }
        let mut names = Vec::with_capacity(points.len());
        let mut vals = Vec::with_capacity(points.len());
        for (name, val) in points {
            if names.contains(&name) {
                return Err(Error::InvalidModel(format!("duplicate point `{name}`")));
            }
            let row = signature
                .vars()
                .iter()
                .map(|var| val.get(var).ok_or_else(|| Error::UnboundVariable(var.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            names.push(name);
            vals.push(row);
        }
        Ok(PointModel { signature, points: names, vals })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn valuation(&self, point: usize) -> Valuation {
        Valuation::new(self.signature.clone(), self.vals[point].clone()).expect("row matches signature")
    }

    /// `v+(var)`: the points supporting `var`.
    pub fn support(&self, var: &str) -> Option<PointSet> {
        let k = self.signature.index_of(var)?;
        Some(self.collect(|row| row[k].pos()))
    }

    /// `v-(var)`: the points denying `var`.
    pub fn denial(&self, var: &str) -> Option<PointSet> {
        let k = self.signature.index_of(var)?;
        Some(self.collect(|row| row[k].neg()))
    }

    fn collect(&self, pred: impl Fn(&[FourValue]) -> bool) -> PointSet {
        let mut out = PointSet::empty();
        for (i, row) in self.vals.iter().enumerate() {
            if pred(row) {
                out.insert(i);
            }
        }
        out
    }
}

/// Positive and negative interpretation of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub pos: PointSet,
    pub neg: PointSet,
}

/// Bilateral satisfaction `(w |=+ phi, w |=- phi)` by the recursive frame clauses.
pub fn sat(phi: &InnerFormula, model: &PointModel, point: &str) -> Result<(bool, bool), Error> {
    let w = model
        .point_index(point)
        .ok_or_else(|| Error::UnknownPoint(point.to_string()))?;
    Ok((sat_at(phi, model, w, true)?, sat_at(phi, model, w, false)?))
}

/// One side of the frame clauses at point index `w`.
pub fn sat_at(phi: &InnerFormula, model: &PointModel, w: usize, positive: bool) -> Result<bool, Error> {
    match phi {
        InnerFormula::Var(name) if name == RESERVED_VAR => Ok(false),
        InnerFormula::Var(name) => {
            let set = if positive { model.support(name) } else { model.denial(name) };
            set.map(|s| s.contains(w))
                .ok_or_else(|| Error::UnboundVariable(name.clone()))
        }
        InnerFormula::Neg(a) => sat_at(a, model, w, !positive),
        InnerFormula::And(a, b) => {
            let (x, y) = (sat_at(a, model, w, positive)?, sat_at(b, model, w, positive)?);
            Ok(if positive { x && y } else { x || y })
        }
        InnerFormula::Or(a, b) => {
            let (x, y) = (sat_at(a, model, w, positive)?, sat_at(b, model, w, positive)?);
            Ok(if positive { x || y } else { x && y })
        }
        InnerFormula::Delta(a) => {
            let supported = sat_at(a, model, w, true)?;
            Ok(if positive { supported } else { !supported })
        }
    }
}

pub fn extension(phi: &InnerFormula, model: &PointModel) -> Result<Extension, Error> {
    let mut ext = Extension { pos: PointSet::empty(), neg: PointSet::empty() };
    for w in 0..model.len() {
        if sat_at(phi, model, w, true)? {
            ext.pos.insert(w);
        }
        if sat_at(phi, model, w, false)? {
            ext.neg.insert(w);
        }
    }
    if model.is_empty() {
        // unbound variables are still an error on the empty model
        if let Some(var) = model.signature().first_unbound(phi) {
            return Err(Error::UnboundVariable(var));
        }
    }
    Ok(ext)
}

/// `M |= [phi |- chi]`: the sequent holds on this model.
pub fn sequent_holds(phi: &InnerFormula, chi: &InnerFormula, model: &PointModel) -> Result<bool, Error> {
    let a = extension(phi, model)?;
    let b = extension(chi, model)?;
    Ok(a.pos.is_subset(b.pos) && b.neg.is_subset(a.neg))
}

impl fmt::Display for PointModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in self.points.iter().enumerate() {
            writeln!(f, "{name}: {}", self.valuation(i))?;
        }
        Ok(())
    }
}
