//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero only when a criterion outside `EXPECTED_RED` fails.

// the tolerance is pinned at zero but kept as a named bound
#![allow(clippy::absurd_extreme_comparisons)]

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};

use paracase::random::Gen;
use paracase::{
    canonical_valuation, classify, classify_classical, entails, extension, make_internal_entailment, make_top, parse_inner,
    parse_model_file, sat, sequent_holds, verify_representation, Argument, ArgumentStatus, Bd, Case, CaseModel,
    GValue, InnerFormula, PointModel, Polarity, Signature, StatusKind, Valuation,
};
use rand::seq::SliceRandom;
use rand::Rng;

// Sample sizes and tolerances. Every comparison is exact: a single mismatch fails.
const SAT_PAIRS: usize = 10_000;
const SAT_MAX_VARS: usize = 4;
const SAT_DEPTH: usize = 6;
const SEQUENT_MODELS: usize = 1_000;
const GUARDED_FORMULAS: usize = 1_000;
const INTERNAL_PAIRS: usize = 1_000;
const INCLUSION_MODELS: usize = 500;
const QC_MODELS: usize = 200;
const QC_CONCLUSION_DEPTH: usize = 4;
const ROUND_TRIP_MODELS: usize = 200;
const REPRESENTATION_MODELS: usize = 200;
const ARGS_PER_MODEL: usize = 4;
const GRID_DENOMINATOR: i64 = 12;
const ALLOWED_MISMATCHES: usize = 0;

/// Criteria that fail on faithful implementations, with the reason.
const EXPECTED_RED: &[(u8, &str)] = &[
    (1, "c2 is T at l=N s=B b=T where s & @!s is only B, so <s,!s> is not positively coherent; c1 and c3 never deny s, so <l,s> is negatively conclusive"),
    (5, "with tied preferences Positive and Negative presumptive validity can be witnessed by different cases"),
    (6, "unguarded conclusions such as @q & (p | !p | !@p) separate the polarities on quasi-classical models"),
    (8, "a both-valued canonical point supports formulas its case does not entail"),
];

struct Verdict {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn f(s: &str) -> InnerFormula {
    parse_inner(s).unwrap()
}

fn arg(p: &str, c: &str) -> Argument {
    Argument::new(f(p), f(c))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn robbery() -> CaseModel {
    let text = std::fs::read_to_string(fixture("robbery.case")).unwrap();
    parse_model_file(&text).unwrap().model().clone()
}

/// Truth-table evaluation written against the bit pairs directly.
fn table_eval(phi: &InnerFormula, v: &HashMap<&str, (bool, bool)>) -> (bool, bool) {
    match phi {
        // the reserved constant behind top and bot is neither true nor false
        InnerFormula::Var(x) if x == "_c" => (false, false),
        InnerFormula::Var(x) => v[x.as_str()],
        InnerFormula::Neg(a) => {
            let (p, n) = table_eval(a, v);
            (n, p)
        }
        InnerFormula::And(a, b) => {
            let ((p1, n1), (p2, n2)) = (table_eval(a, v), table_eval(b, v));
            (p1 && p2, n1 || n2)
        }
        InnerFormula::Or(a, b) => {
            let ((p1, n1), (p2, n2)) = (table_eval(a, v), table_eval(b, v));
            (p1 || p2, n1 && n2)
        }
        InnerFormula::Delta(a) => {
            let p = table_eval(a, v).0;
            (p, !p)
        }
    }
}

fn bits(v: &Valuation) -> HashMap<&str, (bool, bool)> {
    v.iter().map(|(k, x)| (k, (x.pos(), x.neg()))).collect()
}

/// Entailment by enumerating every valuation with the table oracle.
fn table_entails(phi: &InnerFormula, chi: &InnerFormula) -> bool {
    let sig = Signature::of([phi, chi]);
    let holds = Valuation::all(&sig).all(|v| {
        let b = bits(&v);
        let ((p1, n1), (p2, n2)) = (table_eval(phi, &b), table_eval(chi, &b));
        (!p1 || p2) && (!n2 || n1)
    });
    holds
}

fn all_points(sig: &Signature) -> PointModel {
    let pts = Valuation::all(sig).enumerate().map(|(i, v)| (format!("w{i}"), v)).collect();
    PointModel::new(sig.clone(), pts).unwrap()
}

fn random_argument(g: &mut Gen, sig: &Signature, conclusion_depth: usize) -> Argument {
    let premise = if g.rng().gen_bool(0.3) { make_top() } else { g.formula(sig, 2) };
    let depth = g.rng().gen_range(1..=conclusion_depth);
    Argument::new(premise, g.formula(sig, depth))
}

fn polarities_coincide(s: &ArgumentStatus) -> bool {
    StatusKind::ALL.iter().all(|&k| {
        let pos = s.get(k, Polarity::Positive);
        pos == s.get(k, Polarity::Negative) && pos == s.get(k, Polarity::Strong)
    })
}

fn robbery_suite() -> Verdict {
    let bd = Bd::default();
    let m = robbery();
    let c = |p: &str, q: &str| classify(&bd, &m, &arg(p, q)).unwrap();
    let none = |s: &ArgumentStatus| !s.conclusive.pos && !s.conclusive.neg && !s.conclusive.strong;
    let l_s = c("l", "s");
    let s_not_s = c("s", "!s");
    let checks = [
        ("<top,l> negatively conclusive", c("top", "l").conclusive.neg),
        ("<top,s> not strongly conclusive", !c("top", "s").conclusive.strong),
        ("<top,!s> not strongly conclusive", !c("top", "!s").conclusive.strong),
        ("<l,s> not conclusive in any polarity", none(&l_s)),
        ("<l,!s> not conclusive in any polarity", none(&c("l", "!s"))),
        (
            "<l,s> strongly presumptively valid with witness c3",
            l_s.presumptively_valid.strong && l_s.witnesses(StatusKind::PresumptivelyValid, Polarity::Strong) == ["c3"],
        ),
        (
            "<s,!s> positively coherent with witness c2",
            s_not_s.coherent.pos
                && s_not_s.witnesses(StatusKind::Coherent, Polarity::Positive).iter().any(|w| w == "c2"),
        ),
        ("<top,!l> not positively coherent", !c("top", "!l").coherent.pos),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    Verdict {
        id: 1,
        name: "robbery fixture",
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("{}/{} checks fail: {}", failed.len(), checks.len(), failed.join("; "))
        },
    }
}

fn semantics_oracles() -> Verdict {
    let mut g = Gen::new(0x5eed_0002);
    let mut pairs = 0;
    let mut sat_bad = 0;
    while pairs < SAT_PAIRS {
        let sig = g.signature(SAT_MAX_VARS);
        let phi = g.formula(&sig, SAT_DEPTH);
        let model = g.point_model(&sig, 4);
        for (i, w) in model.points().iter().enumerate() {
            let oracle = table_eval(&phi, &bits(&model.valuation(i)));
            if sat(&phi, &model, w).unwrap() != oracle {
                sat_bad += 1;
            }
            pairs += 1;
        }
    }
    let mut seq_bad = 0;
    for _ in 0..SEQUENT_MODELS {
        let sig = g.signature(3);
        let (phi, chi) = (g.formula(&sig, 4), g.formula(&sig, 4));
        let e = entails(&phi, &chi).unwrap();
        let points = g.rng().gen_range(2..=8);
        let model = g.point_model(&sig, points);
        let reduced = e == sequent_holds(&phi, &chi, &all_points(&sig)).unwrap() && e == table_entails(&phi, &chi);
        let sound = !e || sequent_holds(&phi, &chi, &model).unwrap();
        if !(reduced && sound) {
            seq_bad += 1;
        }
    }
    Verdict {
        id: 2,
        name: "semantics oracle equivalence",
        pass: sat_bad <= ALLOWED_MISMATCHES && seq_bad <= ALLOWED_MISMATCHES,
        detail: format!(
            "sat vs table {sat_bad}/{pairs} mismatches; entailment vs sequent {seq_bad}/{SEQUENT_MODELS} mismatches"
        ),
    }
}

fn guarded_bivalence() -> Verdict {
    let mut g = Gen::new(0x5eed_0003);
    let mut bad = 0;
    for _ in 0..GUARDED_FORMULAS {
        let sig = g.signature(3);
        let phi = g.guarded_formula(&sig, 5);
        let model = all_points(&sig);
        let ext = extension(&phi, &model).unwrap();
        if ext.pos.0 ^ ext.neg.0 != model.all_points().0 || ext.pos.0 & ext.neg.0 != 0 {
            bad += 1;
        }
    }
    Verdict {
        id: 3,
        name: "guarded formulas are bivalent",
        pass: bad <= ALLOWED_MISMATCHES,
        detail: format!("{bad}/{GUARDED_FORMULAS} formulas with a point outside exactly one of support and denial"),
    }
}

fn internal_entailment() -> Verdict {
    let bd = Bd::default();
    let mut g = Gen::new(0x5eed_0004);
    let mut bad = 0;
    let mut holding = 0;
    for i in 0..INTERNAL_PAIRS {
        let sig = g.signature(3);
        let phi = g.formula(&sig, 3);
        // every fourth pair is built to hold, so both sides of the biconditional are exercised
        let chi = if i % 4 == 0 { phi.clone().or(g.formula(&sig, 2)) } else { g.formula(&sig, 3) };
        let e = table_entails(&phi, &chi);
        holding += e as usize;
        if bd.is_valid(&make_internal_entailment(phi, chi)).unwrap() != e {
            bad += 1;
        }
    }
    Verdict {
        id: 4,
        name: "internal entailment adequacy",
        pass: bad <= ALLOWED_MISMATCHES,
        detail: format!("{bad}/{INTERNAL_PAIRS} mismatches ({holding} entailments hold)"),
    }
}

fn linearised(g: &mut Gen, model: &CaseModel) -> CaseModel {
    let mut ranks: Vec<u32> = (0..model.len() as u32).collect();
    ranks.shuffle(g.rng());
    let cases = model.cases().iter().zip(ranks).map(|(c, r)| Case::new(c.name.clone(), c.formula.clone(), r)).collect();
    CaseModel::new(model.signature().clone(), cases).unwrap()
}

fn inclusion_matrix() -> (Verdict, String) {
    let bd = Bd::default();
    let mut g = Gen::new(0x5eed_0005);
    let (mut inclusion_bad, mut conclusive_bad, mut presumptive_bad, mut coherent_witness) = (0, 0, 0, 0);
    let mut linear_bad = 0;
    let mut samples = 0;
    for _ in 0..INCLUSION_MODELS {
        let sig = g.signature(3);
        let model = g.case_model(&bd, &sig, 4);
        let linear = linearised(&mut g, &model);
        for _ in 0..ARGS_PER_MODEL {
            let a = random_argument(&mut g, &sig, 3);
            let s = classify(&bd, &model, &a).unwrap();
            samples += 1;
            let chains = Polarity::ALL.iter().all(|&p| {
                (!s.get(StatusKind::Conclusive, p) || s.get(StatusKind::PresumptivelyValid, p))
                    && (!s.get(StatusKind::PresumptivelyValid, p) || s.get(StatusKind::Coherent, p))
            });
            let strong_in_both = StatusKind::ALL.iter().all(|&k| {
                !s.get(k, Polarity::Strong) || (s.get(k, Polarity::Positive) && s.get(k, Polarity::Negative))
            });
            inclusion_bad += !(chains && strong_in_both) as usize;
            conclusive_bad += (s.conclusive.strong != (s.conclusive.pos && s.conclusive.neg)) as usize;
            let pv = &s.presumptively_valid;
            presumptive_bad += (pv.strong != (pv.pos && pv.neg)) as usize;
            coherent_witness += (s.coherent.pos && s.coherent.neg && !s.coherent.strong) as usize;
            let l = classify(&bd, &linear, &a).unwrap().presumptively_valid;
            linear_bad += (l.strong != (l.pos && l.neg)) as usize;
        }
    }
    let pass = inclusion_bad <= ALLOWED_MISMATCHES
        && conclusive_bad <= ALLOWED_MISMATCHES
        && presumptive_bad <= ALLOWED_MISMATCHES
        && coherent_witness > 0;
    let verdict = Verdict {
        id: 5,
        name: "status inclusion matrix",
        pass,
        detail: format!(
            "{samples} arguments: inclusions {inclusion_bad} bad; conclusive strong=pos&neg {conclusive_bad} bad; \
             presumptive strong=pos&neg {presumptive_bad} bad; coherent pos&neg without strong {coherent_witness} found"
        ),
    };
    let info = format!("presumptive strong=pos&neg under strict preferences: {linear_bad}/{samples} mismatches");
    (verdict, info)
}

fn quasi_classical_collapse() -> (Verdict, String) {
    let bd = Bd::default();
    let mut g = Gen::new(0x5eed_0006);
    let (mut bad, mut t_bad, mut samples) = (0, 0, 0);
    let mut example = None;
    for _ in 0..QC_MODELS {
        let sig = g.signature(3);
        let model = g.quasi_classical_model(&bd, &sig, 4);
        for _ in 0..ARGS_PER_MODEL {
            let a = random_argument(&mut g, &sig, QC_CONCLUSION_DEPTH);
            samples += 1;
            if !polarities_coincide(&classify(&bd, &model, &a).unwrap()) {
                bad += 1;
                example.get_or_insert_with(|| a.to_string());
            }
            let premise = g.classical_formula(&sig, 2).substitute_t().unwrap();
            let conclusion = g.classical_formula(&sig, QC_CONCLUSION_DEPTH).substitute_t().unwrap();
            t_bad += !polarities_coincide(&classify(&bd, &model, &Argument::new(premise, conclusion)).unwrap()) as usize;
        }
    }
    // a retained counterexample, independent of the random draw
    let m = CaseModel::new(Signature::new(["p", "q"]).unwrap(), vec![Case::new("c", f("t(q) & !t(p)"), 0)]).unwrap();
    let pinned = polarities_coincide(&classify(&bd, &m, &arg("top", "@q & (p | !p | !@p)")).unwrap());
    let verdict = Verdict {
        id: 6,
        name: "quasi-classical collapse",
        pass: bad <= ALLOWED_MISMATCHES && pinned,
        detail: format!(
            "{bad}/{samples} random arguments separate the polarities{}; retained case t(q) & !t(p) with \
             <top, @q & (p | !p | !@p)> {}",
            example.map(|e| format!(" (first: {e})")).unwrap_or_default(),
            if pinned { "collapses" } else { "separates them" }
        ),
    };
    (verdict, format!("collapse on t-language arguments: {t_bad}/{samples} mismatches"))
}

fn classical_round_trip() -> Verdict {
    let bd = Bd::default();
    let mut g = Gen::new(0x5eed_0007);
    let (mut bad, mut samples) = (0, 0);
    for _ in 0..ROUND_TRIP_MODELS {
        let sig = g.signature(3);
        let classical = g.classical_model(&bd, &sig, 4);
        let counterpart = classical.counterpart().unwrap();
        for _ in 0..ARGS_PER_MODEL {
            let (phi, chi) = (g.classical_formula(&sig, 2), g.classical_formula(&sig, 3));
            let c = classify_classical(&bd, &classical, &Argument::new(phi.clone(), chi.clone())).unwrap();
            let t = Argument::new(phi.substitute_t().unwrap(), chi.substitute_t().unwrap());
            let s = classify(&bd, &counterpart, &t).unwrap();
            samples += 1;
            bad += StatusKind::ALL.iter().any(|&k| c.get(k) != s.get(k, Polarity::Strong)) as usize;
        }
    }
    Verdict {
        id: 7,
        name: "classical round trip",
        pass: bad <= ALLOWED_MISMATCHES,
        detail: format!("{bad}/{samples} arguments with a differing status"),
    }
}

fn representation() -> (Verdict, String) {
    let bd = Bd::default();
    let atoms = ["top", "l", "s", "b", "!l", "!s", "!b", "l & s", "s | b"];
    let m = robbery();
    let mut robbery_bad = Vec::new();
    for p in atoms {
        for c in atoms {
            let report = verify_representation(&bd, &m, &arg(p, c)).unwrap();
            if !report.all_agree() {
                robbery_bad.push(format!("<{p},{c}>"));
            }
        }
    }
    let mut g = Gen::new(0x5eed_0008);
    let (mut bad, mut classical_bad, mut classical_samples, mut presumptive_bad) = (0, 0, 0, 0);
    let samples = REPRESENTATION_MODELS * ARGS_PER_MODEL;
    for _ in 0..REPRESENTATION_MODELS {
        let sig = g.signature(3);
        let model = g.determinate_model(&bd, &sig, 4);
        let classical_points = model
            .cases()
            .iter()
            .all(|c| canonical_valuation(&bd, c, &sig).unwrap().values().iter().all(|x| x.is_classical()));
        for _ in 0..ARGS_PER_MODEL {
            let a = random_argument(&mut g, &sig, 2);
            let report = verify_representation(&bd, &model, &a).unwrap();
            bad += !report.all_agree() as usize;
            presumptive_bad +=
                report.disagreements().any(|i| i.kind == StatusKind::PresumptivelyValid) as usize;
            if classical_points {
                classical_samples += 1;
                classical_bad += !report.all_agree() as usize;
            }
        }
    }
    let verdict = Verdict {
        id: 8,
        name: "two-layered representation",
        pass: robbery_bad.is_empty() && bad <= ALLOWED_MISMATCHES,
        detail: format!(
            "robbery {}/{} arguments disagree{}; random determinate {bad}/{samples} disagree",
            robbery_bad.len(),
            atoms.len() * atoms.len(),
            robbery_bad.first().map(|a| format!(" (first: {a})")).unwrap_or_default()
        ),
    };
    let info = format!(
        "representation with classical canonical points: {classical_bad}/{classical_samples} disagree; \
         presumptive instances: {presumptive_bad}/{samples} disagree"
    );
    (verdict, info)
}

fn godel_grid() -> Verdict {
    let mut grid: Vec<GValue> =
        (1..=GRID_DENOMINATOR).flat_map(|d| (0..=d).map(move |n| GValue::new(n, d).unwrap())).collect();
    grid.sort();
    grid.dedup();
    let (one, zero) = (GValue::ONE, GValue::ZERO);
    let mut bad = 0;
    let mut checked = 0;
    for &a in &grid {
        let unary = a.delta() == one.coimp(one.coimp(a))
            && a.neg() == a.imp(zero)
            && a.delta() == if a == one { one } else { zero };
        bad += !unary as usize;
        for &b in &grid {
            let oracle_imp = if a <= b { one } else { b };
            let oracle_coimp = if a <= b { zero } else { a };
            let binary = a.imp(b) == oracle_imp
                && a.coimp(b) == oracle_coimp
                && a.coimp(b) == a.and(a.imp(b).delta().neg());
            bad += !binary as usize;
            for &c in &grid {
                checked += 1;
                let residuation = (a.and(b) <= c) == (a <= b.imp(c)) && (a.coimp(b) <= c) == (a <= b.or(c));
                bad += !residuation as usize;
            }
        }
    }
    Verdict {
        id: 9,
        name: "bi-Goedel algebra on the rational grid",
        pass: bad <= ALLOWED_MISMATCHES,
        detail: format!("{} grid values, {checked} triples, {bad} failed identities", grid.len()),
    }
}

fn cli_determinism() -> Verdict {
    let robbery = fixture("robbery.case");
    let weather = fixture("weather.case");
    let overlap = fixture("overlap.case");
    let undetermined = fixture("undetermined.case");
    let broken = fixture("broken.case");
    let matrix: Vec<(Vec<&str>, i32)> = vec![
        (vec!["validate", &robbery], 0),
        (vec!["validate", &overlap], 3),
        (vec!["validate", &broken], 2),
        (vec!["entails", "p & q", "p"], 0),
        (vec!["entails", "p & !p", "q"], 1),
        (vec!["entails", "--classical", "p & !p", "q"], 0),
        (vec!["entails", "--classical", "@p", "p"], 2),
        (vec!["--var-cap", "1", "entails", "p", "q"], 2),
        (vec!["classify", &robbery, "l", "s"], 0),
        (vec!["--json", "classify", &robbery, "top", "l"], 0),
        (vec!["classify", &weather, "r", "w"], 0),
        (vec!["classify", &overlap, "p", "q"], 3),
        (vec!["counterpart", &weather], 0),
        (vec!["counterpart", &robbery], 3),
        (vec!["mu", &robbery], 0),
        (vec!["--json", "mu", &robbery], 0),
        (vec!["mu", &undetermined], 5),
        (vec!["eval", &robbery, "B{l & s} -> B{l}"], 0),
        (vec!["eval", &robbery, "B{l}"], 1),
        (vec!["eval", &robbery, "B(l)"], 2),
        (vec!["verify", &robbery, "l", "s"], 0),
        (vec!["verify", &robbery, "b", "l"], 4),
        (vec!["verify", &undetermined, "p", "q"], 5),
        (vec!["frobnicate"], 2),
    ];
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_paracase")).args(args).output().unwrap();
    let mut problems = Vec::new();
    let mut codes = [false; 6];
    for (args, expected) in &matrix {
        let (first, second) = (run(args), run(args));
        let code = first.status.code().unwrap_or(-1);
        if first.stdout != second.stdout || first.stderr != second.stderr || first.status != second.status {
            problems.push(format!("`{}` differs between runs", args.join(" ")));
        }
        if code != *expected {
            problems.push(format!("`{}` exited {code}, expected {expected}", args.join(" ")));
        }
        if let Some(seen) = codes.get_mut(code as usize) {
            *seen = true;
        }
    }
    let covered = codes.iter().all(|&c| c);
    Verdict {
        id: 10,
        name: "CLI determinism and exit codes",
        pass: problems.is_empty() && covered,
        detail: if problems.is_empty() {
            format!("{} invocations run twice, exit codes 0-5 covered: {covered}", matrix.len())
        } else {
            problems.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let (v5, info5) = inclusion_matrix();
    let (v6, info6) = quasi_classical_collapse();
    let (v8, info8) = representation();
    let verdicts = [
        robbery_suite(),
        semantics_oracles(),
        guarded_bivalence(),
        internal_entailment(),
        v5,
        v6,
        classical_round_trip(),
        v8,
        godel_grid(),
        cli_determinism(),
    ];
    let mut unexpected = Vec::new();
    for v in &verdicts {
        let red = EXPECTED_RED.iter().find(|(id, _)| *id == v.id);
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {}: {}", v.id, v.name, v.detail);
        match (v.pass, red) {
            (false, Some((_, why))) => println!("             expected red: {why}"),
            (false, None) => unexpected.push(v.id),
            (true, Some(_)) => println!("             note: listed as expected red but passed"),
            (true, None) => {}
        }
    }
    println!("info: {info5}");
    println!("info: {info6}");
    println!("info: {info8}");
    if unexpected.is_empty() {
        println!("acceptance: all criteria outside the expected-red list pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in {unexpected:?}");
        ExitCode::FAILURE
    }
}
