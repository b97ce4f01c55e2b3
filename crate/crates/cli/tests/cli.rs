use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paracase")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn entails_reports_a_counter_valuation() {
    let o = run(&["entails", "p & !p", "q"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "does not hold\ncounter-valuation: p=B q=F\n");
    assert_eq!(code(&["entails", "p & q", "q | r"]), 0);
    assert_eq!(code(&["entails", "--classical", "p & !p", "q"]), 0);
    assert_eq!(code(&["entails", "--classical", "@p", "p"]), 2);
}

#[test]
fn json_counter_valuation() {
    let o = run(&["--json", "entails", "p", "q"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["counter_valuation"]["p"], "T");
}

#[test]
fn var_cap_is_enforced() {
    assert_eq!(code(&["--var-cap", "1", "entails", "p", "q"]), 2);
    assert_eq!(code(&["--var-cap", "2", "entails", "p", "p | q"]), 0);
    assert_eq!(code(&["--var-cap", "0", "entails", "p", "p"]), 2);
}

#[test]
fn validation() {
    assert_eq!(stdout(&run(&["validate", &fixture("robbery.case")])), "ok\n");
    let o = run(&["validate", &fixture("overlap.case")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "violation: NotExclusive(a, b)\n");
    assert_eq!(code(&["validate", &fixture("broken.case")]), 2);
    assert_eq!(code(&["validate", &fixture("missing.case")]), 2);
}

#[test]
fn classify_robbery() {
    let o = run(&["--json", "classify", &fixture("robbery.case"), "l", "s"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["presumptively_valid"]["strong"], true);
    assert_eq!(v["witnesses"]["presumptively_valid"]["strong"], serde_json::json!(["c3"]));
    assert_eq!(v["conclusive"]["pos"], false);
    assert_eq!(code(&["classify", &fixture("overlap.case"), "p", "q"]), 3);
}

#[test]
fn classical_files() {
    let o = run(&["classify", &fixture("weather.case"), "r", "w"]);
    assert_eq!(stdout(&o), "coherent              true\npresumptively valid   true\nconclusive            false\n");
    let o = run(&["counterpart", &fixture("weather.case")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("vars r w\ncase dry := !t(r) & !t(w)\n"), "{text}");
    assert_eq!(code(&["counterpart", &fixture("robbery.case")]), 3);
    assert_eq!(code(&["mu", &fixture("weather.case")]), 3);
}

#[test]
fn counterpart_output_is_a_model_file() {
    let text = stdout(&run(&["counterpart", &fixture("weather.case")]));
    let m = paracase::parse_model_file(&text).unwrap();
    assert!(!m.is_classical());
    assert!(m.model().is_quasi_classical());
}

#[test]
fn mu_and_eval() {
    let text = stdout(&run(&["mu", &fixture("robbery.case")]));
    assert_eq!(
        text,
        "point w1 from c1 mass 1/6 val l=T s=N b=F\n\
         point w2 from c2 mass 1/3 val l=N s=B b=T\n\
         point w3 from c3 mass 1/2 val l=T s=T b=B\n\
         capacity additive\n"
    );
    let o = run(&["eval", &fixture("robbery.case"), "B{l}"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "2/3\n".into()));
    assert_eq!(code(&["eval", &fixture("robbery.case"), "B{l & s} -> B{l}"]), 0);
    assert_eq!(code(&["eval", &fixture("robbery.case"), "B(l)"]), 2);
    assert_eq!(code(&["mu", &fixture("undetermined.case")]), 5);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", &fixture("robbery.case"), "l", "s"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("11 instances, 0 disagreements\n"));
    let o = run(&["verify", &fixture("robbery.case"), "b", "l"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("positive coherent: case model false, counterpart 1 [DISAGREE]"));
    assert_eq!(code(&["verify", &fixture("undetermined.case"), "p", "q"]), 5);
}

#[test]
fn errors_in_json_mode_are_objects() {
    let o = run(&["--json", "mu", &fixture("undetermined.case")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exit"], 5);
    assert!(!o.stderr.is_empty());
}

#[test]
fn documented_examples() {
    let o = run(&["counterpart", &fixture("coin.case")]);
    assert_eq!(stdout(&o), "vars p\ncase c1 := t(p)\ncase c2 := !t(p)\nprefs c1 < c2\n");
    let o = run(&["eval", &fixture("robbery.case"), "~~B{ top & !@!l }"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "1\n".into()));
    assert_eq!(code(&["entails", "p & !p & q", "p & !p"]), 0);
    assert_eq!(code(&["validate", &fixture("unranked.case")]), 2);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&run(&["eval", &fixture("robbery.case"), "B{s}"]));
    let json: serde_json::Value =
        serde_json::from_slice(&run(&["--json", "eval", &fixture("robbery.case"), "B{s}"]).stdout).unwrap();
    assert_eq!(text.trim(), json["value"]);
}
