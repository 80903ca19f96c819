//! The `specgraph` command line.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 capacity or oracle cost
//! guard, 3 internal invariant failure (including oracle disagreement).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::crosscheck::crosscheck;
use crate::decompose::Decomposition;
use crate::document::{Case, InputDocument};
use crate::error::{Error, Result};
use crate::graph::{
    codim_one_graph, connectivity, facet_ridge_graph, off_locus_graph, punctured_graph, GraphKind,
};
use crate::ideal::SquarefreeIdeal;
use crate::report::{
    AnalyzeJson, CertificateJson, CheckJson, DecompositionJson, GraphCommandJson, GraphJson,
    MinPrimesJson, Render, SplitJson, VerifyJson, SCHEMA,
};
use crate::sample;
use crate::verdicts::split_hc;

#[derive(Debug, Parser)]
#[command(name = "specgraph", version, about = "Connectedness verdicts for squarefree monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
struct Common {
    /// Input document; stdin when omitted or `-`.
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Process every `*.json` file in a directory.
    #[arg(long, conflicts_with = "input")]
    batch: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Def51,
    Def61,
    Punctured,
    FacetRidge,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: decomposition and every applicable verdict.
    Analyze(Common),
    /// Minimal primes, height and dimension of I.
    MinPrimes(Common),
    /// One prime graph with its connectivity certificate.
    Graph {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        common: Common,
    },
    /// The ideals I_1..I_t splitting H^c_I(R).
    Split(Common),
    /// Cross-check the input against the enumeration oracle.
    Verify {
        /// Also sweep this many seeded random ideals (seed from SPECGRAPH_SEED).
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one subcommand: rendered output, or an error with its exit code.
struct Outcome {
    text: String,
    code: i32,
}

fn emit<T: Render>(value: &T, format: Format) -> String {
    match format {
        Format::Json => value.to_json(),
        Format::Text => value.to_text(),
    }
}

fn run_analyze(case: &Case, format: Format) -> Result<String> {
    Ok(emit(&AnalyzeJson::for_case(case)?, format))
}

fn run_min_primes(case: &Case, format: Format) -> Result<String> {
    let dec = Decomposition::of(&case.ideal)?;
    let out = MinPrimesJson {
        schema: SCHEMA,
        command: "min-primes",
        variables: case.ctx.names().to_vec(),
        ideal: case.ideal.to_string(),
        decomposition: DecompositionJson::new(&case.ctx, &dec),
    };
    Ok(emit(&out, format))
}

fn run_graph(case: &Case, kind: KindArg, format: Format) -> Result<String> {
    let zero = SquarefreeIdeal::zero(&case.ctx);
    let graph = match kind {
        KindArg::Def51 => off_locus_graph(case.quotient.as_ref().unwrap_or(&zero), &case.ideal)?,
        KindArg::Def61 => codim_one_graph(&case.ideal)?,
        KindArg::Punctured => punctured_graph(&case.ideal)?,
        KindArg::FacetRidge => match &case.complex {
            Some(c) => facet_ridge_graph(c),
            None => {
                return Err(Error::Input(
                    "the facet-ridge graph needs a document with \"facets\"".into(),
                ))
            }
        },
    };
    debug_assert_eq!(Some(graph.kind), GraphKind::from_cli_name(graph.kind.cli_name()));
    let cert = connectivity(&graph);
    if !cert.validate(&graph) {
        return Err(Error::Invariant("connectivity certificate failed to re-validate".into()));
    }
    let out = GraphCommandJson {
        schema: SCHEMA,
        command: "graph",
        variables: case.ctx.names().to_vec(),
        graph: GraphJson::new(&case.ctx, &graph),
        certificate: CertificateJson::new(&cert),
    };
    Ok(emit(&out, format))
}

fn run_split(case: &Case, format: Format) -> Result<String> {
    let parts = split_hc(&case.ideal)?;
    let out = SplitJson {
        schema: SCHEMA,
        command: "split",
        variables: case.ctx.names().to_vec(),
        ideal: case.ideal.to_string(),
        ideal_top: Decomposition::of(&case.ideal)?.ideal_top().to_string(),
        components: parts.iter().map(ToString::to_string).collect(),
    };
    Ok(emit(&out, format))
}

fn run_verify(case: &Case, random: usize, format: Format) -> Result<String> {
    let mut checks: Vec<CheckJson> = crosscheck(case)?
        .into_iter()
        .map(|c| CheckJson { name: c.name, agree: c.agree, detail: c.detail })
        .collect();
    if random > 0 {
        let seed = sample::seed_from_env();
        let mut rng = sample::rng(seed);
        let mut failures = Vec::new();
        for _ in 0..random {
            let n = rand::Rng::gen_range(&mut rng, 3..=10);
            let ctx = sample::numbered_context(n)?;
            let ideal = sample::random_ideal(&mut rng, &ctx, 12);
            let sub = Case { ctx: ctx.clone(), quotient: None, ideal: ideal.clone(), complex: None };
            if crosscheck(&sub)?.iter().any(|c| !c.agree) {
                let doc = InputDocument {
                    variables: ctx.names().to_vec(),
                    quotient: None,
                    ideal: Some(ideal.to_string()),
                    facets: None,
                };
                failures.push(doc.to_json());
            }
        }
        let detail = if failures.is_empty() {
            format!("{random} ideals, seed {seed}")
        } else {
            format!("seed {seed}; failing inputs: {}", failures.join(" "))
        };
        checks.push(CheckJson { name: "random_sweep".into(), agree: failures.is_empty(), detail });
    }
    let all_agree = checks.iter().all(|c| c.agree);
    let out = VerifyJson { schema: SCHEMA, command: "verify", checks, all_agree };
    let text = emit(&out, format);
    if all_agree {
        Ok(text)
    } else {
        Err(Error::Invariant(format!("main path and oracle disagree\n{text}")))
    }
}

fn run_one(command: &Command, path: Option<&Path>) -> Result<String> {
    let case = InputDocument::load(path)?.resolve()?;
    match command {
        Command::Analyze(c) => run_analyze(&case, c.format),
        Command::MinPrimes(c) => run_min_primes(&case, c.format),
        Command::Graph { kind, common } => run_graph(&case, *kind, common.format),
        Command::Split(c) => run_split(&case, c.format),
        Command::Verify { random, common } => run_verify(&case, *random, common.format),
    }
}

fn finish(result: Result<String>) -> Outcome {
    match result {
        Ok(text) => Outcome { text, code: 0 },
        Err(e) => Outcome { text: format!("error: {e}\n"), code: e.exit_code() },
    }
}

fn run_batch(command: &Command, dir: &Path, format: Format) -> Result<(String, i32)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let outcomes: Vec<Outcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| scope.spawn(move || finish(run_one(command, Some(f)))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("batch worker panicked")).collect()
    });
    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(0);
    let text = match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = files
                .iter()
                .zip(&outcomes)
                .map(|(f, o)| {
                    let name = f.file_name().map(|n| n.to_string_lossy().into_owned());
                    if o.code != 0 {
                        let msg = o.text.trim_end().trim_start_matches("error: ");
                        return serde_json::json!({ "file": name, "exit_code": o.code, "error": msg });
                    }
                    let output = serde_json::from_str::<serde_json::Value>(&o.text)
                        .unwrap_or_else(|_| serde_json::Value::from(o.text.trim_end()));
                    serde_json::json!({ "file": name, "exit_code": o.code, "output": output })
                })
                .collect();
            let doc = serde_json::json!({ "schema": SCHEMA, "batch": entries });
            let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Text => files
            .iter()
            .zip(&outcomes)
            .map(|(f, o)| format!("==> {} <== (exit {})\n{}", f.display(), o.code, o.text))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((text, code))
}

/// Parses `argv` (including the program name), runs the command, prints
/// its output and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let common = match &cli.command {
        Command::Analyze(c) | Command::MinPrimes(c) | Command::Split(c) => c,
        Command::Graph { common, .. } | Command::Verify { common, .. } => common,
    };
    if let Some(dir) = &common.batch {
        return match run_batch(&cli.command, dir, common.format) {
            Ok((text, code)) => {
                print!("{text}");
                code
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        };
    }
    let outcome = finish(run_one(&cli.command, common.input.as_deref()));
    if outcome.code == 0 {
        print!("{}", outcome.text);
    } else {
        eprint!("{}", outcome.text);
    }
    outcome.code
}
