//! Shared inputs for the benchmarks.

use paracase::random::Gen;
use paracase::{parse_model_file, Bd, CaseModel, InnerFormula, Signature};

pub const ROBBERY: &str = "\
vars l s b
case c1 := t(l) & n(s) & f(b)
case c2 := n(l) & b(s) & t(b)
case c3 := t(l) & t(s) & b(b)
prefs c1 < c2 < c3
";

pub fn robbery() -> CaseModel {
    parse_model_file(ROBBERY).expect("fixture parses").model().clone()
}

/// A conjunction of the first `n` variables and the last variable alone.
pub fn wide_pair(n: usize) -> (InnerFormula, InnerFormula) {
    let vars: Vec<InnerFormula> = (0..n).map(|i| InnerFormula::var(format!("v{i}"))).collect();
    let last = vars.last().expect("at least one variable").clone();
    (InnerFormula::conjoin(vars).expect("nonempty"), last)
}

/// `count` random formula pairs over `vars` variables.
pub fn random_pairs(seed: u64, vars: usize, depth: usize, count: usize) -> Vec<(InnerFormula, InnerFormula)> {
    let mut g = Gen::new(seed);
    let names = ["p", "q", "r", "s", "u", "v", "x", "y", "z"];
    let sig = Signature::new(names.into_iter().take(vars)).expect("fixed names");
    (0..count).map(|_| (g.formula(&sig, depth), g.formula(&sig, depth))).collect()
}

/// Random valid case models over three variables.
pub fn random_models(seed: u64, count: usize) -> Vec<CaseModel> {
    let bd = Bd::default();
    let mut g = Gen::new(seed);
    (0..count)
        .map(|_| {
            let sig = g.signature(3);
            g.case_model(&bd, &sig, 4)
        })
        .collect()
}
