//! Seeded generators for formulas, valuations and case models.
//!
//! Case models are cut out of a random decision tree over variable values,
//! so pairwise exclusivity holds by construction; each case is a disjunction
//! of tree leaves conjoined with a random formula.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::case_model::{Case, CaseModel, ClassicalCaseModel};
use crate::entail::Bd;
use crate::formula::{make_bot, make_internal_entailment, make_probe, make_top, InnerFormula, Probe, Signature};
use crate::four::{FourValue, Valuation};
use crate::semantics::{eval4, PointModel};

#[derive(Debug)]
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn signature(&mut self, max_vars: usize) -> Signature {
        let n = self.rng.gen_range(1..=max_vars);
        Signature::new(["p", "q", "r", "s", "u", "v", "x", "y", "z"].into_iter().take(n)).expect("fixed names")
    }

    fn var(&mut self, sig: &Signature) -> InnerFormula {
        InnerFormula::var(sig.vars().choose(&mut self.rng).expect("nonempty signature").clone())
    }

    /// A formula of depth at most `depth` over the full language.
    pub fn formula(&mut self, sig: &Signature, depth: usize) -> InnerFormula {
        if depth == 0 || self.rng.gen_bool(0.2) {
            return self.var(sig);
        }
        let d = depth - 1;
        match self.rng.gen_range(0..10) {
            0 | 1 => self.formula(sig, d).neg(),
            2 | 3 => self.formula(sig, d).delta(),
            4 | 5 => self.formula(sig, d).and(self.formula(sig, d)),
            6 | 7 => self.formula(sig, d).or(self.formula(sig, d)),
            8 => {
                let kind = *Probe::ALL.choose(&mut self.rng).expect("four probes");
                make_probe(kind, self.formula(sig, d))
            }
            _ => match self.rng.gen_range(0..3) {
                0 => make_top(),
                1 => make_bot(),
                _ => make_internal_entailment(self.formula(sig, d.min(1)), self.formula(sig, d.min(1))),
            },
        }
    }

    /// A formula in which every variable occurrence lies under a Delta.
    pub fn guarded_formula(&mut self, sig: &Signature, depth: usize) -> InnerFormula {
        if depth <= 1 || self.rng.gen_bool(0.25) {
            return self.formula(sig, depth.saturating_sub(1)).delta();
        }
        let d = depth - 1;
        match self.rng.gen_range(0..4) {
            0 => self.guarded_formula(sig, d).neg(),
            1 => self.guarded_formula(sig, d).and(self.guarded_formula(sig, d)),
            2 => self.guarded_formula(sig, d).or(self.guarded_formula(sig, d)),
            _ => self.guarded_formula(sig, d).delta(),
        }
    }

    /// A formula over negation, conjunction and disjunction only.
    pub fn classical_formula(&mut self, sig: &Signature, depth: usize) -> InnerFormula {
        if depth == 0 || self.rng.gen_bool(0.25) {
            return self.var(sig);
        }
        let d = depth - 1;
        match self.rng.gen_range(0..3) {
            0 => self.classical_formula(sig, d).neg(),
            1 => self.classical_formula(sig, d).and(self.classical_formula(sig, d)),
            _ => self.classical_formula(sig, d).or(self.classical_formula(sig, d)),
        }
    }

    pub fn value(&mut self) -> FourValue {
        *FourValue::ALL.choose(&mut self.rng).expect("four values")
    }

    pub fn valuation(&mut self, sig: &Signature) -> Valuation {
        let values = (0..sig.len()).map(|_| self.value()).collect();
        Valuation::new(sig.clone(), values).expect("sized to signature")
    }

    pub fn point_model(&mut self, sig: &Signature, points: usize) -> PointModel {
        let pts = (0..points).map(|i| (format!("w{}", i + 1), self.valuation(sig))).collect();
        PointModel::new(sig.clone(), pts).expect("fresh point names")
    }

    /// Ranks `0..k` for `n` cases, with ties.
    pub fn ranks(&mut self, n: usize) -> Vec<u32> {
        let raw: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..n as u32)).collect();
        let mut distinct = raw.clone();
        distinct.sort_unstable();
        distinct.dedup();
        raw.iter().map(|r| distinct.binary_search(r).expect("present") as u32).collect()
    }

    /// Leaves of a random decision tree: partial assignments that pairwise
    /// conflict on some variable. With `full` every leaf assigns every variable.
    fn leaves(&mut self, sig: &Signature, values: &[FourValue], full: bool) -> Vec<Vec<(usize, FourValue)>> {
        let mut done = Vec::new();
        let mut open = vec![Vec::new()];
        while let Some(leaf) = open.pop() {
            let unassigned: Vec<usize> = (0..sig.len()).filter(|k| !leaf.iter().any(|(j, _)| j == k)).collect();
            let stop = unassigned.is_empty() || (!full && self.rng.gen_bool(0.3));
            if stop {
                done.push(leaf);
                continue;
            }
            let k = *unassigned.choose(&mut self.rng).expect("nonempty");
            for &x in values {
                let mut child = leaf.clone();
                child.push((k, x));
                open.push(child);
            }
        }
        done.shuffle(&mut self.rng);
        done
    }

    fn leaf_formula(sig: &Signature, leaf: &[(usize, FourValue)], classical: bool) -> InnerFormula {
        let parts = leaf.iter().map(|&(k, x)| {
            let p = InnerFormula::var(sig.vars()[k].clone());
            match (classical, x) {
                (true, FourValue::T) => p,
                (true, _) => p.neg(),
                (false, x) => make_probe(probe_for(x), p),
            }
        });
        InnerFormula::conjoin(parts).unwrap_or_else(|| if classical { tautology(sig) } else { make_top() })
    }

    fn group_leaves<T>(&mut self, mut leaves: Vec<T>, max_cases: usize) -> Vec<Vec<T>> {
        let k = self.rng.gen_range(1..=max_cases.min(leaves.len()).max(1));
        let mut groups: Vec<Vec<T>> = (0..k).map(|_| Vec::new()).collect();
        for (i, leaf) in leaves.drain(..).enumerate() {
            if i < k {
                groups[i].push(leaf);
            } else if self.rng.gen_bool(0.3) {
                let g = self.rng.gen_range(0..k);
                groups[g].push(leaf);
            }
        }
        groups
    }

    /// A valid case model with at most `max_cases` cases and tied ranks.
    pub fn case_model(&mut self, bd: &Bd, sig: &Signature, max_cases: usize) -> CaseModel {
        loop {
            let leaves = self.leaves(sig, &[FourValue::T, FourValue::B, FourValue::N, FourValue::F], false);
            let groups = self.group_leaves(leaves, max_cases);
            let mut formulas = Vec::new();
            for group in groups {
                let region = InnerFormula::disjoin(group.iter().map(|l| Self::leaf_formula(sig, l, false))).expect("nonempty group");
                let case = if self.rng.gen_bool(0.6) { region.clone().and(self.formula(sig, 2)) } else { region.clone() };
                let case = if bd.nontrivial(&case).expect("small signature") { case } else { region };
                formulas.push(case);
            }
            if let Some(model) = self.finish(bd, sig, formulas) {
                return model;
            }
        }
    }

    /// A valid model whose cases each fix every variable's value and are
    /// designated at that valuation.
    pub fn determinate_model(&mut self, bd: &Bd, sig: &Signature, max_cases: usize) -> CaseModel {
        loop {
            let leaves = self.leaves(sig, &[FourValue::T, FourValue::B, FourValue::N, FourValue::F], true);
            let k = self.rng.gen_range(1..=max_cases);
            let mut formulas = Vec::new();
            for leaf in leaves.into_iter().take(k) {
                let region = Self::leaf_formula(sig, &leaf, false);
                let mut values = vec![FourValue::T; sig.len()];
                for (j, x) in &leaf {
                    values[*j] = *x;
                }
                let v = Valuation::new(sig.clone(), values).expect("sized");
                let mut case = region.clone();
                if self.rng.gen_bool(0.5) {
                    let extra = self.formula(sig, 2);
                    if eval4(&extra, &v).expect("bound").is_designated() {
                        case = region.and(extra);
                    }
                }
                formulas.push(case);
            }
            if let Some(model) = self.finish(bd, sig, formulas) {
                return model;
            }
        }
    }

    /// A valid classical case model.
    pub fn classical_model(&mut self, bd: &Bd, sig: &Signature, max_cases: usize) -> ClassicalCaseModel {
        loop {
            let leaves = self.leaves(sig, &[FourValue::T, FourValue::F], false);
            let groups = self.group_leaves(leaves, max_cases);
            let mut formulas = Vec::new();
            for group in groups {
                let region = InnerFormula::disjoin(group.iter().map(|l| Self::leaf_formula(sig, l, true))).expect("nonempty group");
                let with_extra = region.clone().and(self.classical_formula(sig, 2));
                let case = if self.rng.gen_bool(0.6) && bd.satisfiable_classical(&with_extra).expect("small") {
                    with_extra
                } else {
                    region
                };
                formulas.push(case);
            }
            let ranks = self.ranks(formulas.len());
            let cases = formulas
                .into_iter()
                .zip(ranks)
                .enumerate()
                .map(|(i, (phi, r))| Case::new(format!("c{}", i + 1), phi, r))
                .collect();
            let model = ClassicalCaseModel::new(sig.clone(), cases).expect("well formed");
            if model.validate(bd).expect("small").ok {
                return model;
            }
        }
    }

    /// A quasi-classical model: the counterpart of a random classical one.
    pub fn quasi_classical_model(&mut self, bd: &Bd, sig: &Signature, max_cases: usize) -> CaseModel {
        self.classical_model(bd, sig, max_cases).counterpart().expect("classical cases are delta free")
    }

    fn finish(&mut self, bd: &Bd, sig: &Signature, formulas: Vec<InnerFormula>) -> Option<CaseModel> {
        let ranks = self.ranks(formulas.len());
        let cases = formulas
            .into_iter()
            .zip(ranks)
            .enumerate()
            .map(|(i, (phi, r))| Case::new(format!("c{}", i + 1), phi, r))
            .collect();
        let model = CaseModel::new(sig.clone(), cases).expect("well formed");
        model.validate(bd).expect("small").ok.then_some(model)
    }
}

fn probe_for(x: FourValue) -> Probe {
    match x {
        FourValue::T => Probe::T,
        FourValue::B => Probe::B,
        FourValue::N => Probe::N,
        FourValue::F => Probe::F,
    }
}

fn tautology(sig: &Signature) -> InnerFormula {
    let p = InnerFormula::var(sig.vars()[0].clone());
    p.clone().or(p.neg())
}
