//! Two-valued semantics of the Delta-free fragment.

use std::collections::BTreeMap;

use crate::entail::Bd;
use crate::error::Error;
use crate::formula::{InnerFormula, Signature};

/// A total assignment of classical truth values.
pub type ClassicalValuation = BTreeMap<String, bool>;

pub fn eval2(phi: &InnerFormula, v: &ClassicalValuation) -> Result<bool, Error> {
    if phi.contains_delta() {
        return Err(Error::DeltaPresent);
    }
    eval2_unchecked(phi, v)
}

fn eval2_unchecked(phi: &InnerFormula, v: &ClassicalValuation) -> Result<bool, Error> {
    Ok(match phi {
        InnerFormula::Var(name) => *v.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?,
        InnerFormula::Neg(a) => !eval2_unchecked(a, v)?,
        InnerFormula::And(a, b) => eval2_unchecked(a, v)? && eval2_unchecked(b, v)?,
        InnerFormula::Or(a, b) => eval2_unchecked(a, v)? || eval2_unchecked(b, v)?,
        InnerFormula::Delta(_) => return Err(Error::DeltaPresent),
    })
}

/// Truth vector of `phi` over the 64 assignments of one word.
fn eval_word(phi: &InnerFormula, sig: &Signature, word: usize) -> u64 {
    match phi {
        InnerFormula::Var(name) => {
            let k = sig.index_of(name).expect("variable in signature");
            if k < 6 {
                let mut mask = 0u64;
                for j in 0..64 {
                    mask |= ((j >> k) & 1) << j;
                }
                mask
            } else if (word >> (k - 6)) & 1 == 1 {
                u64::MAX
            } else {
                0
            }
        }
        InnerFormula::Neg(a) => !eval_word(a, sig, word),
        InnerFormula::And(a, b) => eval_word(a, sig, word) & eval_word(b, sig, word),
        InnerFormula::Or(a, b) => eval_word(a, sig, word) | eval_word(b, sig, word),
        InnerFormula::Delta(_) => unreachable!("checked delta-free"),
    }
}

impl Bd {
    /// An assignment making `phi` true and `chi` false, if any.
    pub fn classical_counter_model(
        &self,
        phi: &InnerFormula,
        chi: &InnerFormula,
    ) -> Result<Option<ClassicalValuation>, Error> {
        if phi.contains_delta() || chi.contains_delta() {
            return Err(Error::DeltaPresent);
        }
        let sig = Signature::of([phi, chi]);
        let n = sig.len();
        if n > self.classical_var_cap {
            return Err(Error::CapacityExceeded { vars: n, cap: self.classical_var_cap });
        }
        let (words, valid_last) = if n >= 6 { (1usize << (n - 6), u64::MAX) } else { (1, (1u64 << (1u64 << n)) - 1) };
        for w in 0..words {
            let valid = if w + 1 == words { valid_last } else { u64::MAX };
            let bad = eval_word(phi, &sig, w) & !eval_word(chi, &sig, w) & valid;
            if bad != 0 {
                let index = w * 64 + bad.trailing_zeros() as usize;
                let v = sig
                    .vars()
                    .iter()
                    .enumerate()
                    .map(|(k, name)| (name.clone(), (index >> k) & 1 == 1))
                    .collect();
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    /// Classical consequence by enumeration of all assignments.
    pub fn entails_classical(&self, phi: &InnerFormula, chi: &InnerFormula) -> Result<bool, Error> {
        Ok(self.classical_counter_model(phi, chi)?.is_none())
    }

    /// Some assignment makes `phi` true.
    pub fn satisfiable_classical(&self, phi: &InnerFormula) -> Result<bool, Error> {
        let used = phi.vars();
        let fresh = (0..).map(|i| format!("z{i}")).find(|c| !used.contains(c)).expect("unbounded");
        let falsum = InnerFormula::var(fresh.clone()).and(InnerFormula::var(fresh).neg());
        Ok(!self.entails_classical(phi, &falsum)?)
    }
}

pub fn entails_classical(phi: &InnerFormula, chi: &InnerFormula) -> Result<bool, Error> {
    Bd::default().entails_classical(phi, chi)
}
