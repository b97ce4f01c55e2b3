use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use paracase::{
    classify, classify_classical, eval_outer, mu_counterpart, parse_inner, parse_model_file, parse_outer,
    verify_representation, Argument, Bd, CaseModel, ClassicalCaseModel, Error, InnerFormula, ModelFile, Polarity,
    StatusKind, ValidationReport, Valuation,
};
use serde_json::{json, Value};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const USAGE: u8 = 2;
const BAD_MODEL: u8 = 3;
const MISMATCH: u8 = 4;
const UNDETERMINED: u8 = 5;

/// Case models over four-valued logic with Delta.
#[derive(Parser)]
#[command(name = "paracase", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of variables enumerated by entailment checks.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..=30))]
    var_cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the cases of a model are non-trivial and pairwise exclusive.
    Validate { file: PathBuf },
    /// Decide whether PHI entails CHI; prints a counter-valuation when it does not.
    Entails {
        /// Use two-valued classical consequence (no @, probes, top or bot).
        #[arg(long)]
        classical: bool,
        phi: String,
        chi: String,
    },
    /// Compute the nine statuses of the argument <PHI, CHI> with their witnesses.
    Classify { file: PathBuf, phi: String, chi: String },
    /// Translate a classical model into its four-valued counterpart.
    Counterpart { file: PathBuf },
    /// Build the two-layered model with one point per case.
    Mu { file: PathBuf },
    /// Evaluate an outer formula on the two-layered model of FILE.
    Eval { file: PathBuf, alpha: String },
    /// Compare every status of <PHI, CHI> with its outer-formula representation.
    Verify { file: PathBuf, phi: String, chi: String },
}

/// Text and JSON renderings of a result, plus the exit code.
struct Output {
    code: u8,
    text: String,
    json: Value,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidModel(_) | Error::InvalidSignature(_) | Error::InvalidCapacity(_) => BAD_MODEL,
            Error::NotDeterminate { .. } | Error::NotRealizable { .. } => UNDETERMINED,
            _ => USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bd = Bd::with_cap(cli.var_cap as usize);
    match run(&bd, &cli.command) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("plain JSON values") + "\n"
            } else {
                out.text
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            if cli.json {
                println!("{}", json!({ "error": f.message, "exit": f.code }));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(bd: &Bd, command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Validate { file } => validate(bd, file),
        Command::Entails { classical, phi, chi } => entails(bd, *classical, phi, chi),
        Command::Classify { file, phi, chi } => classify_cmd(bd, file, phi, chi),
        Command::Counterpart { file } => counterpart(bd, file),
        Command::Mu { file } => mu(bd, file),
        Command::Eval { file, alpha } => eval(bd, file, alpha),
        Command::Verify { file, phi, chi } => verify(bd, file, phi, chi),
    }
}

fn load(path: &PathBuf) -> Result<ModelFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_model_file(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn formula(text: &str) -> Result<InnerFormula, Failure> {
    parse_inner(text).map_err(|e| usage(format!("in `{text}`: {e}")))
}

fn report_of(bd: &Bd, file: &ModelFile) -> Result<ValidationReport, Failure> {
    Ok(match file {
        ModelFile::Bd(m) => m.validate(bd)?,
        ModelFile::Classical(m) => m.validate(bd)?,
    })
}

fn require_valid(bd: &Bd, file: &ModelFile) -> Result<(), Failure> {
    let report = report_of(bd, file)?;
    if report.ok {
        return Ok(());
    }
    let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    Err(Failure { code: BAD_MODEL, message: format!("invalid case model: {}", list.join("; ")) })
}

/// A valid four-valued model; classical files are rejected.
fn load_bd(bd: &Bd, path: &PathBuf) -> Result<CaseModel, Failure> {
    let file = load(path)?;
    let ModelFile::Bd(model) = &file else {
        return Err(Failure {
            code: BAD_MODEL,
            message: "this command needs a four-valued model; translate classical models with `counterpart`".into(),
        });
    };
    require_valid(bd, &file)?;
    Ok(model.clone())
}

fn valuation_json(v: &Valuation) -> Value {
    Value::Object(v.iter().map(|(k, x)| (k.to_string(), json!(x.to_string()))).collect())
}

fn validate(bd: &Bd, path: &PathBuf) -> Result<Output, Failure> {
    let file = load(path)?;
    let report = report_of(bd, &file)?;
    let mut text = String::new();
    if report.ok {
        text.push_str("ok\n");
    } else {
        for v in &report.violations {
            writeln!(text, "violation: {v}").unwrap();
        }
    }
    Ok(Output {
        code: if report.ok { HOLDS } else { BAD_MODEL },
        json: serde_json::to_value(&report).expect("serializable"),
        text,
    })
}

fn entails(bd: &Bd, classical: bool, phi: &str, chi: &str) -> Result<Output, Failure> {
    let (phi, chi) = (formula(phi)?, formula(chi)?);
    let (holds, counter_text, counter_json) = if classical {
        let cm = bd.classical_counter_model(&phi, &chi)?;
        let text = cm.as_ref().map(|m| {
            m.iter().map(|(k, b)| format!("{k}={}", if *b { 1 } else { 0 })).collect::<Vec<_>>().join(" ")
        });
        let json = cm.map(|m| Value::Object(m.into_iter().map(|(k, b)| (k, json!(b))).collect()));
        (text.is_none(), text, json)
    } else {
        let cv = bd.counter_valuation(&phi, &chi)?;
        (cv.is_none(), cv.as_ref().map(|v| v.to_string()), cv.as_ref().map(valuation_json))
    };
    let text = match &counter_text {
        None => "holds\n".to_string(),
        Some(cv) => format!("does not hold\ncounter-valuation: {cv}\n"),
    };
    Ok(Output {
        code: if holds { HOLDS } else { FAILS },
        text,
        json: json!({ "holds": holds, "counter_valuation": counter_json }),
    })
}

fn classify_cmd(bd: &Bd, path: &PathBuf, phi: &str, chi: &str) -> Result<Output, Failure> {
    let file = load(path)?;
    require_valid(bd, &file)?;
    let arg = Argument::new(formula(phi)?, formula(chi)?);
    if let ModelFile::Classical(m) = &file {
        return classify_classical_cmd(bd, m, &arg);
    }
    let status = classify(bd, file.model(), &arg)?;
    let mut text = String::new();
    writeln!(text, "{:<22}{:<10}{:<10}strong", "", "positive", "negative").unwrap();
    for kind in StatusKind::ALL {
        let cells: Vec<String> = Polarity::ALL.iter().map(|&p| status.get(kind, p).to_string()).collect();
        writeln!(text, "{:<22}{:<10}{:<10}{}", kind.name(), cells[0], cells[1], cells[2]).unwrap();
    }
    for kind in StatusKind::ALL {
        for pol in Polarity::ALL {
            let w = status.witnesses(kind, pol);
            if !w.is_empty() {
                writeln!(text, "witnesses {pol} {kind}: {}", w.join(" ")).unwrap();
            }
        }
    }
    writeln!(text, "presumptive: {}", status.presumptive).unwrap();
    Ok(Output { code: HOLDS, text, json: serde_json::to_value(&status).expect("serializable") })
}

fn classify_classical_cmd(bd: &Bd, model: &ClassicalCaseModel, arg: &Argument) -> Result<Output, Failure> {
    let status = classify_classical(bd, model, arg)?;
    let mut text = String::new();
    for kind in StatusKind::ALL {
        writeln!(text, "{:<22}{}", kind.name(), status.get(kind)).unwrap();
    }
    Ok(Output { code: HOLDS, text, json: serde_json::to_value(status).expect("serializable") })
}

fn model_json(model: &CaseModel) -> Value {
    let cases: Vec<Value> = model
        .cases()
        .iter()
        .map(|c| json!({ "name": c.name, "formula": c.formula.to_string(), "rank": c.rank }))
        .collect();
    json!({ "vars": model.signature().vars(), "cases": cases })
}

fn counterpart(bd: &Bd, path: &PathBuf) -> Result<Output, Failure> {
    let file = load(path)?;
    let ModelFile::Classical(classical) = &file else {
        return Err(Failure { code: BAD_MODEL, message: "counterpart needs a model marked `classical`".into() });
    };
    require_valid(bd, &file)?;
    let model = classical.counterpart()?;
    Ok(Output { code: HOLDS, text: model.to_string(), json: model_json(&model) })
}

fn mu(bd: &Bd, path: &PathBuf) -> Result<Output, Failure> {
    let model = load_bd(bd, path)?;
    let mu = mu_counterpart(bd, &model)?;
    let points: Vec<Value> = mu
        .case_of_point
        .iter()
        .zip(mu.singleton_measures())
        .enumerate()
        .map(|(i, (case, mass))| {
            json!({
                "point": mu.point_name(i),
                "case": case,
                "mass": mass.to_string(),
                "valuation": valuation_json(&mu.model.points.valuation(i)),
            })
        })
        .collect();
    Ok(Output { code: HOLDS, text: mu.to_string(), json: json!({ "points": points, "capacity": "additive" }) })
}

fn eval(bd: &Bd, path: &PathBuf, alpha: &str) -> Result<Output, Failure> {
    let model = load_bd(bd, path)?;
    let alpha = parse_outer(alpha).map_err(|e| usage(format!("in `{alpha}`: {e}")))?;
    let mu = mu_counterpart(bd, &model)?;
    let value = eval_outer(&mu.model, &alpha)?;
    Ok(Output {
        code: if value.is_one() { HOLDS } else { FAILS },
        text: format!("{value}\n"),
        json: json!({ "value": value.to_string(), "holds": value.is_one() }),
    })
}

fn verify(bd: &Bd, path: &PathBuf, phi: &str, chi: &str) -> Result<Output, Failure> {
    let model = load_bd(bd, path)?;
    let arg = Argument::new(formula(phi)?, formula(chi)?);
    let report = verify_representation(bd, &model, &arg)?;
    let mut text = String::new();
    for i in &report.instances {
        writeln!(text, "{i}").unwrap();
    }
    for w in &report.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    let disagreements = report.disagreements().count();
    writeln!(text, "{} instances, {disagreements} disagreements", report.instances.len()).unwrap();
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["agree"] = json!(report.ok());
    Ok(Output { code: if report.ok() { HOLDS } else { MISMATCH }, text, json })
}
