use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nf_core::census::{census, CensusOptions};
use nf_core::dualize::minimal_vertex_covers;
use nf_core::format::{parse_complex, to_json, to_line};
use nf_core::orbit::{nf_iterate, nf_number_with, nf_period_with, orbit_trace_with, OrbitConfig};
use nf_core::{canon, literal, nf_step, Error, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// NF-complexes: iterate the Stanley–Reisner-of-facet-ideal operator.
///
/// INPUT is a JSON or line-format file, `-` for stdin, or a family literal
/// (`path:8`, `cycle:6`, `complete:5`, `knm:3,4`, `bipartite:3,4`,
/// `empty:3`, `simplex:3`, `closed-form:3,4,k=6`).
#[derive(Parser, Debug)]
#[command(name = "nf-lab", version)]
struct Cli {
    /// Output format (default: text; json for `family` and `closed-form`).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One NF-step.
    Step { input: String },
    /// The k-th NF-complex.
    Iterate {
        input: String,
        #[arg(long, short)]
        k: u64,
    },
    /// Smallest t >= 1 with δ^(t) isomorphic to the input.
    NfNumber {
        input: String,
        #[arg(long, default_value_t = nf_core::orbit::DEFAULT_MAX_ITERATIONS)]
        max_iterations: u64,
    },
    /// Smallest q >= 1 with δ^(q) equal to the input.
    Period {
        input: String,
        #[arg(long, default_value_t = nf_core::orbit::DEFAULT_MAX_ITERATIONS)]
        max_iterations: u64,
    },
    /// The orbit, one line per step, through the period or the limit.
    Trace {
        input: String,
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// Minimal vertex covers as prime components of the facet ideal.
    Covers { input: String },
    /// Exit 0 and print a witness if the complexes are isomorphic, else exit 1.
    Isomorphic { a: String, b: String },
    /// Emit a named family.
    Family { spec: String },
    /// Closed-form facets of δ^(k)(K_n ⊔ K_m), given as `n,m,k=K`.
    ClosedForm { spec: String },
    /// Enumerate all complexes on [n] and count NF-equivalence classes.
    Census {
        #[arg(long)]
        n: usize,
        /// Write one representative per class (its smallest member) as JSON.
        #[arg(long)]
        classes: Option<PathBuf>,
        #[arg(long, env = "NF_LAB_THREADS", default_value_t = 1)]
        threads: usize,
        /// Extension: also count classes after identifying isomorphic complexes.
        #[arg(long)]
        up_to_iso: bool,
    },
}

enum Failure {
    /// Predicate answered "no".
    False,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(input: &str) -> Result<SimplicialComplex, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        buf
    } else {
        match std::fs::read_to_string(input) {
            Ok(text) => text,
            Err(e) => {
                return match literal::parse_family(input) {
                    Some(result) => Ok(result?),
                    None => Err(Failure::Usage(format!("{input}: {e}"))),
                }
            }
        }
    };
    let (complex, dropped) = parse_complex(&text)?;
    if dropped > 0 {
        eprintln!("warning: {input}: dropped {dropped} duplicate or non-maximal face(s)");
    }
    Ok(complex)
}

fn emit(complex: &SimplicialComplex, format: Format) {
    match format {
        Format::Text => println!("{}", to_line(complex)),
        Format::Json => println!("{}", to_json(complex)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let text_default = cli.format.unwrap_or(Format::Text);
    let json_default = cli.format.unwrap_or(Format::Json);
    match cli.command {
        Command::Step { input } => emit(&nf_step(&load(&input)?), text_default),
        Command::Iterate { input, k } => emit(&nf_iterate(&load(&input)?, k), text_default),
        Command::NfNumber { input, max_iterations } => {
            let config = OrbitConfig { max_iterations, ..OrbitConfig::default() };
            let t = nf_number_with(&load(&input)?, &config)?;
            match text_default {
                Format::Text => println!("{t}"),
                Format::Json => println!("{{\"nf_number\": {t}}}"),
            }
        }
        Command::Period { input, max_iterations } => {
            let config = OrbitConfig { max_iterations, ..OrbitConfig::default() };
            let q = nf_period_with(&load(&input)?, &config)?;
            match text_default {
                Format::Text => println!("{q}"),
                Format::Json => println!("{{\"period\": {q}}}"),
            }
        }
        Command::Trace { input, limit } => {
            if limit == 0 {
                return Err(Failure::Usage("--limit must be at least 1".into()));
            }
            let trace = orbit_trace_with(&load(&input)?, limit, &OrbitConfig::default());
            match text_default {
                Format::Text => print!("{}", trace.to_text()),
                Format::Json => println!("{}", trace.to_json()),
            }
        }
        Command::Covers { input } => {
            let covers = minimal_vertex_covers(&load(&input)?)?;
            match text_default {
                Format::Text => {
                    for component in covers.ideal_components() {
                        println!("{component}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "covers": covers.cover_lists() })
                ),
            }
        }
        Command::Isomorphic { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let witness = canon::isomorphism(&a, &b);
            match (text_default, &witness) {
                (Format::Text, Some(w)) => println!("{w}"),
                (Format::Text, None) => println!("not isomorphic"),
                (Format::Json, _) => println!(
                    "{}",
                    serde_json::json!({
                        "isomorphic": witness.is_some(),
                        "witness": witness.as_ref().map(|w| w.to_string()),
                    })
                ),
            }
            if witness.is_none() {
                return Err(Failure::False);
            }
        }
        Command::Family { spec } => match literal::parse_family(&spec) {
            Some(result) => emit(&result?, json_default),
            None => return Err(Failure::Usage(format!("unknown family literal `{spec}`"))),
        },
        Command::ClosedForm { spec } => {
            let (n, m, k) = literal::closed_form_args(&spec)?;
            emit(&literal::closed_form(n, m, k)?, json_default);
        }
        Command::Census { n, classes, threads, up_to_iso } => {
            let report = census(n, &CensusOptions { threads: threads.max(1), up_to_iso })?;
            let verdict = if report.bijection.is_bijection() { "ok" } else { "FAILED" };
            let histogram = report.size_histogram();
            match text_default {
                Format::Text => {
                    println!(
                        "universe={} bijection={verdict} classes={}",
                        report.universe_size,
                        report.class_count()
                    );
                    for (size, count) in &histogram {
                        println!("class_size={size} count={count}");
                    }
                    if let Some(iso) = report.classes_up_to_iso {
                        println!("classes_up_to_iso={iso}");
                    }
                    for (a, b) in &report.bijection.collisions {
                        println!("collision {a} {b}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "universe": report.universe_size,
                        "bijection": report.bijection.is_bijection(),
                        "classes": report.class_count(),
                        "class_sizes": histogram
                            .iter()
                            .map(|(s, c)| (s.to_string(), serde_json::Value::from(*c)))
                            .collect::<serde_json::Map<_, _>>(),
                        "classes_up_to_iso": report.classes_up_to_iso,
                    })
                ),
            }
            if let Some(path) = classes {
                let reps: Vec<serde_json::Value> = report
                    .classes
                    .iter()
                    .map(|class| {
                        serde_json::json!({
                            "size": class.len(),
                            "representative": serde_json::from_str::<serde_json::Value>(&to_json(&class[0]))
                                .expect("canonical json"),
                        })
                    })
                    .collect();
                let body = serde_json::to_string_pretty(&reps).expect("serializes");
                std::fs::write(&path, body + "\n")
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::False) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
