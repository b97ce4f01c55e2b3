//! The bi-Goedel algebra on exact rationals in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A rational number in the unit interval. Serialized as text such as `2/3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct GValue(Ratio<i64>);

impl GValue {
    pub const ZERO: GValue = GValue(Ratio::new_raw(0, 1));
    pub const ONE: GValue = GValue(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidCapacity("zero denominator".into()));
        }
        GValue::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Self, Error> {
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(Error::InvalidCapacity(format!("{r} is outside [0, 1]")));
        }
        Ok(GValue(r))
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    pub fn is_one(self) -> bool {
        self == GValue::ONE
    }

    pub fn is_zero(self) -> bool {
        self == GValue::ZERO
    }

    pub fn and(self, b: GValue) -> GValue {
        self.min(b)
    }

    pub fn or(self, b: GValue) -> GValue {
        self.max(b)
    }

    pub fn imp(self, b: GValue) -> GValue {
        if self <= b {
            GValue::ONE
        } else {
            b
        }
    }

    pub fn coimp(self, b: GValue) -> GValue {
        if self <= b {
            GValue::ZERO
        } else {
            self
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> GValue {
        if self.is_zero() {
            GValue::ONE
        } else {
            GValue::ZERO
        }
    }

    pub fn delta(self) -> GValue {
        if self.is_one() {
            GValue::ONE
        } else {
            GValue::ZERO
        }
    }
}

impl fmt::Display for GValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for GValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let r: Ratio<i64> = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidCapacity(format!("`{s}` is not a rational")))?;
        GValue::from_ratio(r)
    }
}

impl From<GValue> for String {
    fn from(g: GValue) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for GValue {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GodelOp {
    And,
    Or,
    Imp,
    Coimp,
    Neg,
    Delta,
}

/// Applies `op`; the second argument is ignored by the unary operations.
pub fn godel(op: GodelOp, a: GValue, b: Option<GValue>) -> GValue {
    let b = || b.expect("binary operation needs two arguments");
    match op {
        GodelOp::And => a.and(b()),
        GodelOp::Or => a.or(b()),
        GodelOp::Imp => a.imp(b()),
        GodelOp::Coimp => a.coimp(b()),
        GodelOp::Neg => a.neg(),
        GodelOp::Delta => a.delta(),
    }
}
