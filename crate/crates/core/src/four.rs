//! Belnap-Dunn truth values and valuations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::formula::Signature;

/// A Belnap-Dunn value, viewed as a pair of (support, denial) bits.
///
/// | value | pos | neg |
/// |-------|-----|-----|
/// | `T`   | 1   | 0   |
/// | `B`   | 1   | 1   |
/// | `N`   | 0   | 0   |
/// | `F`   | 0   | 1   |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FourValue {
    T,
    B,
    N,
    F,
}

impl FourValue {
    /// Enumeration order used for valuations: classical values first.
    pub const ALL: [FourValue; 4] = [FourValue::T, FourValue::F, FourValue::B, FourValue::N];

    pub const fn from_bits(pos: bool, neg: bool) -> Self {
        match (pos, neg) {
            (true, false) => FourValue::T,
            (true, true) => FourValue::B,
            (false, false) => FourValue::N,
            (false, true) => FourValue::F,
        }
    }

    pub const fn pos(self) -> bool {
        matches!(self, FourValue::T | FourValue::B)
    }

    pub const fn neg(self) -> bool {
        matches!(self, FourValue::F | FourValue::B)
    }

    /// Designated values are those carrying support: `T` and `B`.
    pub const fn is_designated(self) -> bool {
        self.pos()
    }

    pub const fn is_classical(self) -> bool {
        matches!(self, FourValue::T | FourValue::F)
    }

    /// Truth order: support may only grow, denial may only shrink.
    pub const fn le(self, other: FourValue) -> bool {
        (!self.pos() || other.pos()) && (self.neg() || !other.neg())
    }

    pub const fn meet(self, other: FourValue) -> FourValue {
        FourValue::from_bits(self.pos() && other.pos(), self.neg() || other.neg())
    }

    pub const fn join(self, other: FourValue) -> FourValue {
        FourValue::from_bits(self.pos() || other.pos(), self.neg() && other.neg())
    }

    pub const fn not(self) -> FourValue {
        FourValue::from_bits(self.neg(), self.pos())
    }

    pub const fn delta(self) -> FourValue {
        FourValue::from_bits(self.pos(), !self.pos())
    }

    pub fn symbol(self) -> char {
        match self {
            FourValue::T => 'T',
            FourValue::B => 'B',
            FourValue::N => 'N',
            FourValue::F => 'F',
        }
    }

    pub fn from_symbol(c: char) -> Option<FourValue> {
        match c {
            'T' => Some(FourValue::T),
            'B' => Some(FourValue::B),
            'N' => Some(FourValue::N),
            'F' => Some(FourValue::F),
            _ => None,
        }
    }
}

impl fmt::Display for FourValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A total map from a signature's variables to four values.
///
/// The reserved `_c` is not stored; evaluation pins it to `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Valuation {
    signature: Signature,
    values: Vec<FourValue>,
}

impl Valuation {
    pub fn new(signature: Signature, values: Vec<FourValue>) -> Result<Self, Error> {
        if values.len() != signature.len() {
            return Err(Error::InvalidSignature(format!(
                "{} values given for {} variables",
                values.len(),
                signature.len()
            )));
        }
        Ok(Valuation { signature, values })
    }

    pub fn constant(signature: Signature, value: FourValue) -> Self {
        let values = vec![value; signature.len()];
        Valuation { signature, values }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, FourValue)>) -> Result<Self, Error> {
        let (names, values): (Vec<&str>, Vec<FourValue>) = pairs.into_iter().unzip();
        Valuation::new(Signature::new(names)?, values)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn values(&self) -> &[FourValue] {
        &self.values
    }

    pub fn get(&self, var: &str) -> Option<FourValue> {
        self.signature.index_of(var).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, FourValue)> {
        self.signature.vars().iter().map(String::as_str).zip(self.values.iter().copied())
    }

    /// Every valuation over `signature`, in enumeration order.
    pub fn all(signature: &Signature) -> impl Iterator<Item = Valuation> + '_ {
        let n = signature.len();
        (0..4usize.pow(n as u32)).map(move |index| Valuation::from_index(signature.clone(), index))
    }

    /// Decodes enumeration index `index`: variable `k` is base-4 digit `k`.
    pub fn from_index(signature: Signature, index: usize) -> Self {
        let values = (0..signature.len())
            .map(|k| FourValue::ALL[(index >> (2 * k)) & 3])
            .collect();
        Valuation { signature, values }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, x)| format!("{v}={x}")).collect();
        f.write_str(&parts.join(" "))
    }
}
