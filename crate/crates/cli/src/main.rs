use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use knotoid_core::biquandle::{parse_tables, validate};
use knotoid_core::{
    enumerate_colorings, parse_corpus, partition, serialize_corpus, AlexanderParams, Biquandle, CorpusEntry, Family,
    InvariantContext, InvariantKind, InvariantValue, KnotoidDiagram,
};

mod output;

#[derive(Parser)]
#[command(name = "knotoid", version, about = "Biquandle coloring invariants of knotoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a biquandle matrix file against the axioms
    CheckBiquandle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List all colorings
    Colorings(InvariantArgs),
    /// Counting invariant
    Count(InvariantArgs),
    /// Counting matrix indexed by initial and terminal colors
    CountMatrix(InvariantArgs),
    /// Multiset of longitude weights
    Longitude(InvariantArgs),
    /// Longitude exponent polynomial in u
    Ble(InvariantArgs),
    /// Two-variable longitude exponent polynomial in u (beta) and v (alpha)
    Ble2(InvariantArgs),
    /// Multiset of (beta, alpha) longitude weight pairs
    LongitudePairs(InvariantArgs),
    /// Longitude weights of an Alexander biquandle as affine maps
    AlexanderLongitude(InvariantArgs),
    /// Matrix of longitude exponent polynomials
    BleMatrix(InvariantArgs),
    /// Matrix of two-variable longitude exponent polynomials
    Ble2Matrix(InvariantArgs),
    /// Group a corpus by the value of an invariant
    Table {
        #[command(flatten)]
        args: InvariantArgs,
        /// count, count-matrix, longitude, ble, ble2, longitude-pairs, alexander-longitude, ble-matrix, ble2-matrix
        #[arg(long)]
        invariant: String,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the mirror image (all crossings switched)
    Mirror {
        #[command(flatten)]
        diagrams: DiagramArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct DiagramArgs {
    /// Gauss code, e.g. "U1- O2- O1- U2-"
    #[arg(long, allow_hyphen_values = true)]
    gauss: Option<String>,
    /// Corpus file with one `name: code` per line
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct BiquandleArgs {
    /// Biquandle matrix file
    #[arg(long)]
    biquandle: Option<PathBuf>,
    /// Alexander biquandle parameters n,t,s
    #[arg(long)]
    alexander: Option<String>,
}

#[derive(Args, Clone)]
struct InvariantArgs {
    #[command(flatten)]
    source: BiquandleArgs,
    #[command(flatten)]
    diagrams: DiagramArgs,
    /// Action family for single-family invariants
    #[arg(long, default_value = "beta")]
    family: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Core(String),
}

impl CliError {
    fn core(e: impl std::fmt::Display) -> Self {
        CliError::Core(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_diagrams(args: &DiagramArgs) -> Result<(Vec<CorpusEntry>, Value, bool), CliError> {
    if let Some(code) = &args.gauss {
        let diagram = KnotoidDiagram::parse_gauss(code).map_err(|e| CliError::Invalid(format!("gauss code: {e}")))?;
        let entry = CorpusEntry {
            name: "gauss".into(),
            diagram,
        };
        return Ok((vec![entry], json!({ "gauss": code }), false));
    }
    let path = args.corpus.as_ref().expect("clap requires one diagram source");
    let entries = parse_corpus(&read(path)?).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok((entries, json!({ "corpus": path.display().to_string() }), true))
}

fn load_context(args: &InvariantArgs) -> Result<(InvariantContext, Value), CliError> {
    let family: Family = args.family.parse().map_err(CliError::core)?;
    if let Some(text) = &args.source.alexander {
        let params: AlexanderParams = text.parse().map_err(CliError::core)?;
        let ctx = InvariantContext::alexander(params, family).map_err(CliError::core)?;
        return Ok((ctx, json!({ "alexander": params.to_string(), "family": family.name() })));
    }
    let path = args.source.biquandle.as_ref().expect("clap requires one biquandle source");
    let biquandle = Biquandle::parse_matrix(&read(path)?).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok((
        InvariantContext::new(biquandle, family),
        json!({ "biquandle": path.display().to_string(), "family": family.name() }),
    ))
}

fn merge(a: Value, b: Value) -> Value {
    let (Value::Object(mut a), Value::Object(b)) = (a, b) else {
        unreachable!("inputs are objects")
    };
    a.extend(b);
    Value::Object(a)
}

fn envelope(command: &str, inputs: Value, value: Value) -> String {
    let doc = json!({ "command": command, "inputs": inputs, "value": value });
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Text output: the bare value for a single diagram, `name: value` lines
/// (or a heading per matrix) for a corpus.
fn per_entry_text(results: &[(String, String)], is_corpus: bool) -> String {
    if !is_corpus {
        return results.first().map(|(_, v)| format!("{v}\n")).unwrap_or_default();
    }
    let mut out = String::new();
    for (name, value) in results {
        if value.contains('\n') {
            out.push_str(&format!("{name}:\n{value}\n"));
        } else {
            out.push_str(&format!("{name}: {value}\n"));
        }
    }
    out
}

fn per_entry_json(results: Vec<(String, Value)>, is_corpus: bool) -> Value {
    if !is_corpus {
        return results.into_iter().next().map(|(_, v)| v).unwrap_or(Value::Null);
    }
    Value::Array(
        results
            .into_iter()
            .map(|(name, value)| json!({ "name": name, "value": value }))
            .collect(),
    )
}

fn run_invariant(command: &str, kind: InvariantKind, args: &InvariantArgs) -> Result<String, CliError> {
    if kind == InvariantKind::AlexanderLongitude && args.source.alexander.is_none() {
        return Err(CliError::Invalid(format!("{command} requires --alexander n,t,s")));
    }
    let (ctx, source_inputs) = load_context(args)?;
    let (entries, diagram_inputs, is_corpus) = load_diagrams(&args.diagrams)?;
    let values = entries
        .iter()
        .map(|e| InvariantValue::compute(kind, &e.diagram, &ctx).map(|v| (e.name.clone(), v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::core)?;
    if args.json {
        let results = values.into_iter().map(|(n, v)| (n, output::value_json(&v))).collect();
        Ok(envelope(command, merge(source_inputs, diagram_inputs), per_entry_json(results, is_corpus)))
    } else {
        let results: Vec<(String, String)> = values.into_iter().map(|(n, v)| (n, v.to_string())).collect();
        Ok(per_entry_text(&results, is_corpus))
    }
}

fn run_colorings(args: &InvariantArgs) -> Result<String, CliError> {
    let (ctx, source_inputs) = load_context(args)?;
    let (entries, diagram_inputs, is_corpus) = load_diagrams(&args.diagrams)?;
    let colorings: Vec<(String, Vec<Vec<usize>>)> = entries
        .iter()
        .map(|e| {
            let list = enumerate_colorings(&e.diagram, &ctx.biquandle)
                .into_iter()
                .map(|f| f.colors().to_vec())
                .collect();
            (e.name.clone(), list)
        })
        .collect();
    if args.json {
        let results = colorings.into_iter().map(|(n, c)| (n, json!(c))).collect();
        return Ok(envelope("colorings", merge(source_inputs, diagram_inputs), per_entry_json(results, is_corpus)));
    }
    let show = |list: &[Vec<usize>]| -> String {
        list.iter()
            .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let mut out = String::new();
    for (name, list) in &colorings {
        if is_corpus {
            out.push_str(&format!("{name}: {} colorings\n", list.len()));
        }
        if !list.is_empty() {
            out.push_str(&show(list));
            out.push('\n');
        }
    }
    Ok(out)
}

fn run_table(args: &InvariantArgs, invariant: &str, out: Option<&Path>) -> Result<String, CliError> {
    let kind: InvariantKind = invariant.parse().map_err(CliError::core)?;
    if args.diagrams.corpus.is_none() {
        return Err(CliError::Invalid("table requires --corpus".into()));
    }
    if kind == InvariantKind::AlexanderLongitude && args.source.alexander.is_none() {
        return Err(CliError::Invalid("alexander-longitude requires --alexander n,t,s".into()));
    }
    let (ctx, source_inputs) = load_context(args)?;
    let (entries, diagram_inputs, _) = load_diagrams(&args.diagrams)?;
    let report = partition(&entries, kind, &ctx).map_err(CliError::core)?;
    let text = if args.json {
        let inputs = merge(merge(source_inputs, diagram_inputs), json!({ "invariant": kind.name() }));
        envelope("table", inputs, output::report_json(&report))
    } else {
        report.to_string()
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn run_check(file: &Path, as_json: bool) -> Result<(String, bool), CliError> {
    let text = read(file)?;
    let tables = parse_tables(&text).map_err(|e| CliError::Input {
        path: file.display().to_string(),
        message: e.to_string(),
    })?;
    let report = validate(&tables).map_err(CliError::core)?;
    let valid = report.is_valid();
    let rendered = if as_json {
        let violations: Vec<Value> = report
            .violations
            .iter()
            .map(|v| json!({ "axiom": v.axiom(), "message": v.to_string() }))
            .collect();
        envelope(
            "check-biquandle",
            json!({ "biquandle": file.display().to_string() }),
            json!({ "valid": valid, "order": report.order, "violations": violations }),
        )
    } else {
        format!("{report}\n")
    };
    Ok((rendered, valid))
}

fn run_mirror(diagrams: &DiagramArgs, as_json: bool) -> Result<String, CliError> {
    let (entries, inputs, is_corpus) = load_diagrams(diagrams)?;
    let mirrored: Vec<CorpusEntry> = entries
        .into_iter()
        .map(|e| CorpusEntry {
            name: e.name,
            diagram: e.diagram.mirror(),
        })
        .collect();
    if as_json {
        let results = mirrored
            .iter()
            .map(|e| (e.name.clone(), Value::String(e.diagram.to_string())))
            .collect();
        return Ok(envelope("mirror", inputs, per_entry_json(results, is_corpus)));
    }
    if is_corpus {
        Ok(serialize_corpus(&mirrored))
    } else {
        Ok(format!("{}\n", mirrored[0].diagram))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::CheckBiquandle { file, json } => match run_check(file, *json) {
            Ok((text, true)) => Ok(text),
            Ok((text, false)) => {
                if *json {
                    print!("{text}");
                }
                eprint!("{}: {text}", file.display());
                return ExitCode::FAILURE;
            }
            Err(e) => Err(e),
        },
        Command::Colorings(args) => run_colorings(args),
        Command::Count(args) => run_invariant("count", InvariantKind::Count, args),
        Command::CountMatrix(args) => run_invariant("count-matrix", InvariantKind::CountMatrix, args),
        Command::Longitude(args) => run_invariant("longitude", InvariantKind::Longitude, args),
        Command::Ble(args) => run_invariant("ble", InvariantKind::Ble, args),
        Command::Ble2(args) => run_invariant("ble2", InvariantKind::Ble2, args),
        Command::LongitudePairs(args) => run_invariant("longitude-pairs", InvariantKind::LongitudePairs, args),
        Command::AlexanderLongitude(args) => {
            run_invariant("alexander-longitude", InvariantKind::AlexanderLongitude, args)
        }
        Command::BleMatrix(args) => run_invariant("ble-matrix", InvariantKind::BleMatrix, args),
        Command::Ble2Matrix(args) => run_invariant("ble2-matrix", InvariantKind::Ble2Matrix, args),
        Command::Table { args, invariant, out } => run_table(args, invariant, out.as_deref()),
        Command::Mirror { diagrams, json } => run_mirror(diagrams, *json),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
