//! Exhaustive entailment checking over all four-valued valuations.
//!
//! Every subformula is evaluated on 64 valuations at once as two bit planes
//! (support, denial). Variable `k` of the union signature is base-4 digit `k`
//! of the valuation index, with digits ordered `T, F, B, N`.

use rayon::prelude::*;

use crate::error::Error;
use crate::formula::{make_bot, InnerFormula, Signature, RESERVED_VAR};
use crate::four::Valuation;

pub const DEFAULT_VAR_CAP: usize = 16;
pub const DEFAULT_CLASSICAL_VAR_CAP: usize = 20;

/// Word count above which enumeration is split across threads.
const PARALLEL_WORDS: usize = 1 << 12;

#[derive(Clone, Copy, Debug)]
enum Op {
    Var(usize),
    Neither,
    Neg,
    And,
    Or,
    Delta,
}

/// A formula flattened to postfix over variable indices of a signature.
#[derive(Clone, Debug)]
struct Program(Vec<Op>);

impl Program {
    fn compile(phi: &InnerFormula, sig: &Signature) -> Result<Self, Error> {
        let mut ops = Vec::with_capacity(phi.size());
        Self::emit(phi, sig, &mut ops)?;
        Ok(Program(ops))
    }

    fn emit(phi: &InnerFormula, sig: &Signature, ops: &mut Vec<Op>) -> Result<(), Error> {
        match phi {
            InnerFormula::Var(name) if name == RESERVED_VAR => ops.push(Op::Neither),
            InnerFormula::Var(name) => {
                let k = sig.index_of(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?;
                ops.push(Op::Var(k));
            }
            InnerFormula::Neg(a) => {
                Self::emit(a, sig, ops)?;
                ops.push(Op::Neg);
            }
            InnerFormula::Delta(a) => {
                Self::emit(a, sig, ops)?;
                ops.push(Op::Delta);
            }
            InnerFormula::And(a, b) => {
                Self::emit(a, sig, ops)?;
                Self::emit(b, sig, ops)?;
                ops.push(Op::And);
            }
            InnerFormula::Or(a, b) => {
                Self::emit(a, sig, ops)?;
                Self::emit(b, sig, ops)?;
                ops.push(Op::Or);
            }
        }
        Ok(())
    }

    fn run(&self, planes: &Planes, word: usize, stack: &mut Vec<(u64, u64)>) -> (u64, u64) {
        stack.clear();
        for op in &self.0 {
            match *op {
                Op::Var(k) => stack.push(planes.var(k, word)),
                Op::Neither => stack.push((0, 0)),
                Op::Neg => {
                    let (p, n) = stack.pop().expect("operand");
                    stack.push((n, p));
                }
                Op::Delta => {
                    let (p, _) = stack.pop().expect("operand");
                    stack.push((p, !p));
                }
                Op::And => {
                    let (p2, n2) = stack.pop().expect("operand");
                    let (p1, n1) = stack.pop().expect("operand");
                    stack.push((p1 & p2, n1 | n2));
                }
                Op::Or => {
                    let (p2, n2) = stack.pop().expect("operand");
                    let (p1, n1) = stack.pop().expect("operand");
                    stack.push((p1 | p2, n1 & n2));
                }
            }
        }
        stack.pop().expect("result")
    }
}

/// Support/denial masks of each variable for every word of the enumeration.
struct Planes {
    /// For variables whose digit changes inside a word: fixed in-word patterns.
    low: Vec<(u64, u64)>,
    words: usize,
    valid_last: u64,
}

impl Planes {
    fn new(n: usize) -> Self {
        let total_bits = 2 * n;
        let (words, valid_last) = if total_bits >= 6 {
            (1usize << (total_bits - 6), u64::MAX)
        } else {
            (1, (1u64 << (1u64 << total_bits)) - 1)
        };
        let low = (0..n.min(3))
            .map(|k| {
                let mut pos = 0u64;
                let mut neg = 0u64;
                for j in 0..64 {
                    let d = (j >> (2 * k)) & 3;
                    let (p, q) = digit_bits(d);
                    pos |= (p as u64) << j;
                    neg |= (q as u64) << j;
                }
                (pos, neg)
            })
            .collect();
        Planes { low, words, valid_last }
    }

    #[inline]
    fn var(&self, k: usize, word: usize) -> (u64, u64) {
        if k < 3 {
            self.low[k]
        } else {
            let d = (word >> (2 * k - 6)) & 3;
            let (p, q) = digit_bits(d);
            (if p { u64::MAX } else { 0 }, if q { u64::MAX } else { 0 })
        }
    }

    fn valid(&self, word: usize) -> u64 {
        if word + 1 == self.words {
            self.valid_last
        } else {
            u64::MAX
        }
    }
}

/// Digit order `T, F, B, N` as (support, denial) bits.
#[inline]
fn digit_bits(d: usize) -> (bool, bool) {
    (d & 1 == 0, (d & 1) ^ (d >> 1) == 1)
}

/// Decision procedures for BD with Delta by exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Bd {
    pub var_cap: usize,
    pub classical_var_cap: usize,
}

impl Default for Bd {
    fn default() -> Self {
        Bd { var_cap: DEFAULT_VAR_CAP, classical_var_cap: DEFAULT_CLASSICAL_VAR_CAP }
    }
}

impl Bd {
    pub fn with_cap(var_cap: usize) -> Self {
        Bd { var_cap, ..Bd::default() }
    }

    fn signature_for(&self, formulas: &[&InnerFormula]) -> Result<Signature, Error> {
        let sig = Signature::of(formulas.iter().copied());
        if sig.len() > self.var_cap {
            return Err(Error::CapacityExceeded { vars: sig.len(), cap: self.var_cap });
        }
        Ok(sig)
    }

    /// Index of the first word/bit where `violation` is non-zero.
    fn first_violation<F>(planes: &Planes, violation: F) -> Option<usize>
    where
        F: Fn(usize, &mut Vec<(u64, u64)>) -> u64 + Sync,
    {
        let check = |stack: &mut Vec<(u64, u64)>, w: usize| {
            let bad = violation(w, stack) & planes.valid(w);
            (bad != 0).then(|| w * 64 + bad.trailing_zeros() as usize)
        };
        if planes.words >= PARALLEL_WORDS {
            (0..planes.words)
                .into_par_iter()
                .map_init(Vec::new, |stack, w| check(stack, w))
                .find_first(Option::is_some)
                .flatten()
        } else {
            let mut stack = Vec::new();
            (0..planes.words).find_map(|w| check(&mut stack, w))
        }
    }

    /// A valuation at which `phi` is not below `chi` in the truth order, if any.
    pub fn counter_valuation(&self, phi: &InnerFormula, chi: &InnerFormula) -> Result<Option<Valuation>, Error> {
        let sig = self.signature_for(&[phi, chi])?;
        let lhs = Program::compile(phi, &sig)?;
        let rhs = Program::compile(chi, &sig)?;
        let planes = Planes::new(sig.len());
        let found = Self::first_violation(&planes, |w, stack| {
            let (p1, n1) = lhs.run(&planes, w, stack);
            let (p2, n2) = rhs.run(&planes, w, stack);
            (p1 & !p2) | (n2 & !n1)
        });
        Ok(found.map(|index| Valuation::from_index(sig, index)))
    }

    /// `phi |= chi`: under every valuation, `phi` is below `chi` in the truth order.
    pub fn entails(&self, phi: &InnerFormula, chi: &InnerFormula) -> Result<bool, Error> {
        Ok(self.counter_valuation(phi, chi)?.is_none())
    }

    /// A valuation at which `phi` is not `F`, if any.
    pub fn witness_nonfalse(&self, phi: &InnerFormula) -> Result<Option<Valuation>, Error> {
        let sig = self.signature_for(&[phi])?;
        let prog = Program::compile(phi, &sig)?;
        let planes = Planes::new(sig.len());
        let found = Self::first_violation(&planes, |w, stack| {
            let (p, n) = prog.run(&planes, w, stack);
            p | !n
        });
        Ok(found.map(|index| Valuation::from_index(sig, index)))
    }

    /// `phi` does not entail bottom.
    pub fn nontrivial(&self, phi: &InnerFormula) -> Result<bool, Error> {
        Ok(self.witness_nonfalse(phi)?.is_some())
    }

    /// `phi & psi` entails bottom.
    pub fn jointly_exclusive(&self, phi: &InnerFormula, psi: &InnerFormula) -> Result<bool, Error> {
        Ok(!self.nontrivial(&phi.clone().and(psi.clone()))?)
    }

    /// A valuation at which `phi` is not `T`, if any.
    pub fn counter_validity(&self, phi: &InnerFormula) -> Result<Option<Valuation>, Error> {
        let sig = self.signature_for(&[phi])?;
        let prog = Program::compile(phi, &sig)?;
        let planes = Planes::new(sig.len());
        let found = Self::first_violation(&planes, |w, stack| {
            let (p, n) = prog.run(&planes, w, stack);
            !p | n
        });
        Ok(found.map(|index| Valuation::from_index(sig, index)))
    }

    /// `phi` takes value `T` under every valuation.
    pub fn is_valid(&self, phi: &InnerFormula) -> Result<bool, Error> {
        Ok(self.counter_validity(phi)?.is_none())
    }

    /// Same as `entails(phi, bot)`, spelled out for callers that want the sequent form.
    pub fn entails_bot(&self, phi: &InnerFormula) -> Result<bool, Error> {
        self.entails(phi, &make_bot())
    }
}

/// `phi |= chi` with the default variable cap.
pub fn entails(phi: &InnerFormula, chi: &InnerFormula) -> Result<bool, Error> {
    Bd::default().entails(phi, chi)
}

pub fn nontrivial(phi: &InnerFormula) -> Result<bool, Error> {
    Bd::default().nontrivial(phi)
}

pub fn jointly_exclusive(phi: &InnerFormula, psi: &InnerFormula) -> Result<bool, Error> {
    Bd::default().jointly_exclusive(phi, psi)
}
