//! Command-line workbench for the six-valued logic Six.
//!
//! Exit codes: 0 = valid/provable/true, 1 = not, 2 = usage or parse
//! error, 3 = resource limit exceeded, 4 = engine disagreement.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sixlogic::export;
use sixlogic::formula::{parse_formula, Formula};
use sixlogic::gsix::{
    check_proof, decide, decide_backward, DecideError, Decision, DecisionOutcome, Engine,
    GsubMode,
};
use sixlogic::matrix::{eval6, m6, Assignment};
use sixlogic::rules::replay_table1;
use sixlogic::semantics::{
    degree_entails, falsifying_assignment, is_theorem, Caps, SemanticsError,
};
use sixlogic::sequent::{parse_sequent, parse_sequent_file, Sequent};
use sixlogic::signed::generate_sf;
use sixlogic::translate::translate_calculus;
use sixlogic::value::TruthValue;
use sixlogic::witness::six_witnesses;

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "sixlogic",
    about = "Workbench for the six-valued logic Six: evaluation, validity, \
             calculus generation, streamlining, proof search and checking",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Neg,
    Nabla,
    Circ,
    Bullet,
}

#[derive(Clone, Copy, ValueEnum)]
enum CalcKind {
    /// The 84-rule signed (6-sequent) calculus
    Sf,
    /// Its 230-rule two-sided translation
    Two,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under an assignment
    Eval {
        formula: String,
        /// Assignment such as `p=b,q=2/3`
        #[arg(long, default_value = "")]
        assign: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check semantic validity of a sequent
    Valid {
        sequent: String,
        #[arg(long)]
        var_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check degree-preserving entailment, e.g. `p & q |- p`
    Entails {
        /// `premises |- conclusion` with comma-separated premises
        judgement: String,
        #[arg(long)]
        var_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check theoremhood (value 1 under every assignment)
    Theorem {
        formula: String,
        #[arg(long)]
        var_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide provability of a sequent
    Decide {
        /// The sequent, unless --file is given
        sequent: Option<String>,
        /// Decide every sequent in a file (one per line, `#` comments)
        #[arg(long, conflicts_with = "sequent")]
        file: Option<PathBuf>,
        #[arg(long, default_value = "cross")]
        engine: Engine,
        #[arg(long)]
        gsub_cap: Option<usize>,
        #[arg(long)]
        var_cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a proof and emit a certificate
    Prove {
        sequent: String,
        /// Write the proof certificate to this path
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a proof certificate
    CheckProof {
        path: PathBuf,
        #[arg(long)]
        allow_cut: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a calculus and export its rules
    Gen {
        #[arg(value_enum)]
        calculus: CalcKind,
        /// Matrix to generate from (only `m6` is shipped)
        #[arg(long, default_value = "m6")]
        matrix: String,
        /// Write the rules as JSON to this path
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the generalized subformulas of a sequent
    Gsub {
        sequent: String,
        /// Use the literal closure (no disjunction clauses)
        #[arg(long)]
        literal: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Replay a recorded streamlining derivation
    Streamline {
        /// Name of the recorded script (only `table1` is shipped)
        #[arg(long)]
        replay: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print a unary truth table
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[command(flatten)]
        common: Common,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_RESOURCE,
            message: message.into(),
        }
    }
}

impl From<sixlogic::formula::ParseError> for Failure {
    fn from(e: sixlogic::formula::ParseError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Failure {
        match e {
            SemanticsError::Resource { .. } => Failure::resource(e.to_string()),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn caps_with(var_cap: Option<usize>, gsub_cap: Option<usize>) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = var_cap {
        caps.max_vars = v;
    }
    if let Some(g) = gsub_cap {
        caps.max_gsub = g;
    }
    caps
}

fn parse_assignment(text: &str) -> Result<Assignment, Failure> {
    let mut assignment = Assignment::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (var, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("bad assignment entry `{part}`, want var=value")))?;
        let value: TruthValue = value
            .parse()
            .map_err(|e: sixlogic::value::ParseTruthValueError| Failure::usage(e.to_string()))?;
        assignment.set(var.trim(), value);
    }
    Ok(assignment)
}

fn assignment_json(a: &Assignment) -> serde_json::Value {
    let map: BTreeMap<String, String> = a
        .iter()
        .map(|(k, v)| (k.to_string(), m6().name(v).to_string()))
        .collect();
    json!(map)
}

fn bool_exit(b: bool) -> u8 {
    if b {
        0
    } else {
        EXIT_FALSE
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Eval {
            formula,
            assign,
            common,
        } => {
            let f = parse_formula(&formula)?;
            let a = parse_assignment(&assign)?;
            let value = eval6(&f, &a).map_err(|e| Failure::usage(e.to_string()))?;
            match common.format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "formula": f.to_string(),
                        "assignment": assignment_json(&a),
                        "value": value.name(),
                        "designated": value.is_designated(),
                    })
                ),
            }
            Ok(bool_exit(value.is_designated()))
        }
        Command::Valid {
            sequent,
            var_cap,
            common,
        } => {
            let s = parse_sequent(&sequent)?;
            let caps = caps_with(var_cap, None);
            let counterexample = falsifying_assignment(&s, m6(), &caps)?;
            let valid = counterexample.is_none();
            match common.format {
                Format::Text => match &counterexample {
                    None => println!("valid"),
                    Some(a) => println!("not valid  (counterexample: {})", a.display(m6())),
                },
                Format::Json => println!(
                    "{}",
                    json!({
                        "sequent": s.to_string(),
                        "valid": valid,
                        "counterexample": counterexample.as_ref().map(assignment_json),
                    })
                ),
            }
            Ok(bool_exit(valid))
        }
        Command::Entails {
            judgement,
            var_cap,
            common,
        } => {
            let (premises, conclusion) = judgement
                .split_once("|-")
                .ok_or_else(|| Failure::usage("expected `premises |- conclusion`"))?;
            let premises: Vec<Formula> = premises
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| parse_formula(p.trim()))
                .collect::<Result<_, _>>()?;
            let conclusion = parse_formula(conclusion.trim())?;
            let caps = caps_with(var_cap, None);
            let holds = degree_entails(&premises, &conclusion, &caps)?;
            match common.format {
                Format::Text => println!("{}", if holds { "entails" } else { "does not entail" }),
                Format::Json => println!(
                    "{}",
                    json!({
                        "premises": premises.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "conclusion": conclusion.to_string(),
                        "entails": holds,
                    })
                ),
            }
            Ok(bool_exit(holds))
        }
        Command::Theorem {
            formula,
            var_cap,
            common,
        } => {
            let f = parse_formula(&formula)?;
            let caps = caps_with(var_cap, None);
            let holds = is_theorem(&f, &caps)?;
            match common.format {
                Format::Text => println!("{}", if holds { "theorem" } else { "not a theorem" }),
                Format::Json => println!(
                    "{}",
                    json!({ "formula": f.to_string(), "theorem": holds })
                ),
            }
            Ok(bool_exit(holds))
        }
        Command::Decide {
            sequent,
            file,
            engine,
            gsub_cap,
            var_cap,
            common,
        } => {
            let caps = caps_with(var_cap, gsub_cap);
            let targets: Vec<(String, Sequent)> = match (&sequent, &file) {
                (Some(text), None) => vec![(text.clone(), parse_sequent(text)?)],
                (None, Some(path)) => {
                    let content = std::fs::read_to_string(path)?;
                    parse_sequent_file(&content)?
                        .into_iter()
                        .map(|(line, s)| (format!("line {line}"), s))
                        .collect()
                }
                _ => return Err(Failure::usage("give a sequent or --file")),
            };
            let mut worst: u8 = 0;
            for (label, s) in targets {
                if engine == Engine::Cross {
                    let closure = sixlogic::gsix::gsub_sequent(&s).len();
                    let cap = caps.max_gsub.min(sixlogic::gsix::HARD_MAX_GSUB);
                    if closure > cap {
                        eprintln!(
                            "note: {label}: the {closure}-formula closure exceeds the \
                             saturation cap ({cap}); deciding by the semantic and \
                             backward engines"
                        );
                    }
                }
                match decide(&s, engine, &caps) {
                    Ok(decision) => {
                        report_decision(&label, &s, engine, &decision, common.format);
                        worst = worst.max(match decision.outcome {
                            DecisionOutcome::Provable { .. } => 0,
                            DecisionOutcome::NotProvable { .. } => EXIT_FALSE,
                            DecisionOutcome::ResourceExceeded { .. } => EXIT_RESOURCE,
                        });
                    }
                    Err(DecideError::Disagreement { sequent, verdicts }) => {
                        let line = verdicts
                            .iter()
                            .map(|v| format!("{}={}", v.engine, v.verdict))
                            .collect::<Vec<_>>()
                            .join(", ");
                        eprintln!("engine disagreement on `{sequent}`: {line}");
                        worst = worst.max(EXIT_DISAGREEMENT);
                    }
                }
            }
            Ok(worst)
        }
        Command::Prove {
            sequent,
            out,
            common,
        } => {
            let s = parse_sequent(&sequent)?;
            let decision = decide_backward(&s);
            match decision.outcome {
                DecisionOutcome::Provable { witness } => {
                    let proof = witness.expect("backward search returns witnesses");
                    let json = export::proof_to_json(&proof);
                    match &out {
                        Some(path) => std::fs::write(path, format!("{json}\n"))?,
                        None => {
                            if common.format == Format::Json {
                                println!("{json}");
                            }
                        }
                    }
                    if common.format == Format::Text {
                        print!("{proof}");
                        println!("provable ({} nodes)", proof.node_count());
                    }
                    Ok(0)
                }
                _ => {
                    let counterexample =
                        falsifying_assignment(&s, m6(), &Caps::default()).ok().flatten();
                    match common.format {
                        Format::Text => match counterexample {
                            Some(a) => {
                                println!("not provable (counterexample: {})", a.display(m6()))
                            }
                            None => println!("not provable"),
                        },
                        Format::Json => println!(
                            "{}",
                            json!({
                                "sequent": s.to_string(),
                                "verdict": "not provable",
                                "counterexample": counterexample.as_ref().map(assignment_json),
                            })
                        ),
                    }
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::CheckProof {
            path,
            allow_cut,
            common,
        } => {
            let content = std::fs::read_to_string(&path)?;
            let proof = export::proof_from_json(&content)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let result = check_proof(&proof, allow_cut);
            match common.format {
                Format::Text => match &result {
                    Ok(()) => println!("valid proof of `{}`", proof.sequent),
                    Err(e) => println!("invalid proof: {e}"),
                },
                Format::Json => println!(
                    "{}",
                    json!({
                        "sequent": proof.sequent.to_string(),
                        "valid": result.is_ok(),
                        "error": result.as_ref().err().map(|e| e.to_string()),
                    })
                ),
            }
            Ok(bool_exit(result.is_ok()))
        }
        Command::Gen {
            calculus,
            matrix,
            out,
            common,
        } => {
            if matrix != "m6" {
                return Err(Failure::usage(format!(
                    "unknown matrix `{matrix}` (only m6 is shipped)"
                )));
            }
            let sf = generate_sf(m6());
            let (json, summary) = match calculus {
                CalcKind::Sf => {
                    let by: BTreeMap<String, usize> =
                        sf.iter().fold(BTreeMap::new(), |mut acc, r| {
                            *acc.entry(r.connective.symbol().to_string()).or_default() += 1;
                            acc
                        });
                    (
                        export::signed_rules_to_json(&sf, m6()),
                        format!("{} signed rules ({:?})", sf.len(), by),
                    )
                }
                CalcKind::Two => {
                    let rules = translate_calculus(&sf, &six_witnesses(), m6());
                    let count = |sym: &str| {
                        rules
                            .iter()
                            .filter(|r| r.name.starts_with(&format!("({sym}_")))
                            .count()
                    };
                    let summary = format!(
                        "{} logic rules (~: {}, #: {}, |: {}, &: {})",
                        rules.len(),
                        count("~"),
                        count("#"),
                        count("|"),
                        count("&")
                    );
                    (export::schematic_rules_to_json(&rules), summary)
                }
            };
            match &out {
                Some(path) => {
                    std::fs::write(path, format!("{json}\n"))?;
                    if common.format == Format::Text {
                        println!("{summary} -> {}", path.display());
                    }
                }
                None => match common.format {
                    Format::Text => println!("{summary}"),
                    Format::Json => println!("{json}"),
                },
            }
            if common.format == Format::Json && out.is_some() {
                println!("{}", json!({ "summary": summary }));
            }
            Ok(0)
        }
        Command::Gsub {
            sequent,
            literal,
            common,
        } => {
            let s = parse_sequent(&sequent)?;
            let mode = if literal {
                GsubMode::Literal
            } else {
                GsubMode::Extended
            };
            let closure = sixlogic::gsix::gsub_sequent_with(&s, mode);
            match common.format {
                Format::Text => {
                    for f in &closure {
                        println!("{f}");
                    }
                    println!("({} formulas)", closure.len());
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "sequent": s.to_string(),
                        "count": closure.len(),
                        "formulas": closure.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Streamline { replay, common } => {
            if replay != "table1" {
                return Err(Failure::usage(format!(
                    "unknown replay script `{replay}` (only table1 is shipped)"
                )));
            }
            let trace = replay_table1().map_err(|e| Failure::usage(e.to_string()))?;
            match common.format {
                Format::Text => {
                    for step in &trace.steps {
                        let mut line = String::new();
                        let _ = write!(
                            line,
                            "({:>2}) {} + {} --[{}]--> {}",
                            step.id, step.inputs.0, step.inputs.1, step.principle, step.output
                        );
                        println!("{line}");
                    }
                }
                Format::Json => {
                    let steps: Vec<_> = trace
                        .steps
                        .iter()
                        .map(|s| {
                            json!({
                                "id": s.id,
                                "inputs": [s.inputs.0, s.inputs.1],
                                "principle": s.principle,
                                "output": {
                                    "premises": s.output.premises.iter()
                                        .map(|p| p.to_string()).collect::<Vec<_>>(),
                                    "conclusion": s.output.conclusion.to_string(),
                                },
                            })
                        })
                        .collect();
                    println!("{}", json!({ "script": "table1", "steps": steps }));
                }
            }
            Ok(0)
        }
        Command::Table { kind, common } => {
            let column = |v: TruthValue| -> TruthValue {
                match kind {
                    TableKind::Neg => v.neg(),
                    TableKind::Nabla => v.nabla(),
                    TableKind::Circ => {
                        let f = Formula::circ(Formula::var("p"));
                        eval6(&f, &Assignment::from_pairs([("p", v)])).unwrap()
                    }
                    TableKind::Bullet => {
                        let f = Formula::bullet(Formula::var("p"));
                        eval6(&f, &Assignment::from_pairs([("p", v)])).unwrap()
                    }
                }
            };
            match common.format {
                Format::Text => {
                    for v in TruthValue::ALL {
                        println!("{:>3} -> {}", v.name(), column(v));
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = TruthValue::ALL
                        .iter()
                        .map(|&v| json!({ "input": v.name(), "output": column(v).name() }))
                        .collect();
                    println!("{}", json!(rows));
                }
            }
            Ok(0)
        }
    }
}

fn report_decision(
    label: &str,
    sequent: &Sequent,
    engine: Engine,
    decision: &Decision,
    format: Format,
) {
    match format {
        Format::Text => {
            let detail = match &decision.outcome {
                DecisionOutcome::Provable { witness } => witness
                    .as_ref()
                    .map(|w| format!(" ({} proof nodes)", w.node_count()))
                    .unwrap_or_default(),
                DecisionOutcome::NotProvable { counterexample } => counterexample
                    .as_ref()
                    .map(|a| format!(" (counterexample: {})", a.display(m6())))
                    .unwrap_or_default(),
                DecisionOutcome::ResourceExceeded { details } => format!(" ({details})"),
            };
            println!("{label}: {}{detail}", decision.outcome.verdict());
        }
        Format::Json => {
            let witness = match &decision.outcome {
                DecisionOutcome::Provable { witness } => witness
                    .as_ref()
                    .map(|w| serde_json::from_str::<serde_json::Value>(&export::proof_to_json(w))
                        .expect("proof JSON parses")),
                _ => None,
            };
            let counterexample = match &decision.outcome {
                DecisionOutcome::NotProvable { counterexample } => {
                    counterexample.as_ref().map(assignment_json)
                }
                _ => None,
            };
            println!(
                "{}",
                json!({
                    "sequent": sequent.to_string(),
                    "engine": engine.name(),
                    "verdict": decision.outcome.verdict(),
                    "witness": witness,
                    "counterexample": counterexample,
                    "stats": {
                        "iterations": decision.stats.iterations,
                        "states": decision.stats.states,
                    },
                })
            );
        }
    }
}
