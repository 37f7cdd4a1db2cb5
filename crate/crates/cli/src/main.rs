mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pernull_core::permanent::{
    per_nullity_oracle_with, perm_polynomial_interpolation_with, perm_polynomial_sachs_with,
};
use pernull_core::verify::{CorpusSpec, Stage};
use pernull_core::{
    gallai_edmonds, per_nullity_structural, run_verification, to_graph6, Check, Error, Graph,
    Guard, PermPolynomial, VertexSet,
};

use input::Source;

#[derive(Parser)]
#[command(name = "pernull", version, about = "Permanental nullity of graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run exponential computations past their size guards.
    #[arg(long, global = true)]
    unsafe_override_guards: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Jsonl,
}

#[derive(Args)]
struct InputArgs {
    /// Graphs in graph6; read from standard input when omitted.
    #[arg(conflicts_with = "edges")]
    graphs: Vec<String>,

    /// Read one graph from an edge-list file (first token is n).
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

impl InputArgs {
    fn source(self) -> Source {
        Source::new(self.graphs, self.edges)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Sachs,
    Interp,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Permanental nullity from the matching structure.
    Nullity {
        /// Also compute the nullity from the permanental polynomial.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Gallai-Edmonds decomposition.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Coefficients b_0..b_n of per(xI - A).
    Polynomial {
        #[arg(long, value_enum, default_value_t = Method::Sachs)]
        method: Method,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run named checks over a generated corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("corpus").args([
    "all_labeled", "connected", "connected_iso", "gnp", "unicyclic", "tree_plus",
])))]
struct VerifyArgs {
    /// Every labeled graph up to N vertices.
    #[arg(long, value_name = "N")]
    all_labeled: Option<usize>,
    /// Every connected labeled graph up to N vertices.
    #[arg(long, value_name = "N")]
    connected: Option<usize>,
    /// One connected graph per isomorphism class, up to N vertices.
    #[arg(long, value_name = "N")]
    connected_iso: Option<usize>,
    /// COUNT random G(n, p) graphs.
    #[arg(long, value_name = "COUNT")]
    gnp: Option<usize>,
    /// COUNT random unicyclic graphs.
    #[arg(long, value_name = "COUNT")]
    unicyclic: Option<usize>,
    /// COUNT random connected graphs (random tree plus extra edges).
    #[arg(long, value_name = "COUNT")]
    tree_plus: Option<usize>,

    /// Fix the order of random graphs.
    #[arg(long, value_name = "N", conflicts_with_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long, value_name = "N")]
    n_min: Option<usize>,
    /// Largest order of random graphs.
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace each graph by its line graph.
    #[arg(long)]
    line_graphs: bool,
    /// Keep only factor-critical graphs.
    #[arg(long)]
    factor_critical: bool,

    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
}

/// An error with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Scale { .. } => 3,
            Error::Invariant(_) | Error::WellDefinedness(_) | Error::TheoremViolation(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: format!("cannot write output: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guard = if cli.unsafe_override_guards {
        Guard::Override
    } else {
        Guard::Enforce
    };
    let per_graph = !matches!(cli.command, Command::Verify(_));
    let mut out = Output::new(cli.format, per_graph);
    let result = match cli.command {
        Command::Nullity { oracle, input } => nullity(&mut out, input.source(), oracle, guard),
        Command::Decompose { input } => decompose(&mut out, input.source()),
        Command::Polynomial { method, input } => {
            polynomial(&mut out, input.source(), method, guard)
        }
        Command::Verify(args) => verify(&mut out, args, guard),
    };
    let result = result.and_then(|()| out.finish());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes records in input order. JSON collects them into one array;
/// JSONL writes one object per line; text writes lines as given.
struct Output {
    format: Format,
    stdout: io::StdoutLock<'static>,
    /// Records held back for a single JSON array; `None` when the command
    /// writes its own output.
    collected: Option<Vec<serde_json::Value>>,
}

impl Output {
    fn new(format: Format, per_graph: bool) -> Self {
        Output {
            format,
            stdout: io::stdout().lock(),
            collected: per_graph.then(Vec::new),
        }
    }

    fn record<T: Serialize>(
        &mut self,
        value: &T,
        text: impl FnOnce() -> String,
    ) -> Result<(), Failure> {
        match self.format {
            Format::Text => writeln!(self.stdout, "{}", text())?,
            Format::Jsonl => {
                let line = serde_json::to_string(value).expect("records serialize");
                writeln!(self.stdout, "{line}")?;
            }
            Format::Json => self
                .collected
                .get_or_insert_with(Vec::new)
                .push(serde_json::to_value(value).expect("records serialize")),
        }
        Ok(())
    }

    fn finish(mut self) -> Result<(), Failure> {
        if let (Format::Json, Some(records)) = (self.format, &self.collected) {
            let text = serde_json::to_string_pretty(records).expect("records serialize");
            writeln!(self.stdout, "{text}")?;
        }
        self.stdout.flush()?;
        Ok(())
    }
}

fn nullity(out: &mut Output, source: Source, oracle: bool, guard: Guard) -> Result<(), Failure> {
    let mut mismatch = None;
    source.for_each(|g| -> Result<(), Failure> {
        let mut report = per_nullity_structural(&g)?;
        if oracle {
            let eta = per_nullity_oracle_with(&g, guard)?;
            report.eta_oracle = Some(eta);
            if eta != report.eta_structural && mismatch.is_none() {
                mismatch = Some(to_graph6(&g)?);
            }
        }
        let record = report.record(&g)?;
        out.record(&record, || {
            let mut line = format!(
                "{}  n={} nu={} M={} eta={}",
                record.graph6, record.n, record.nu, record.m_stat, record.eta_structural
            );
            if let Some(o) = record.eta_oracle {
                line.push_str(&format!(" eta_oracle={o}"));
            }
            let cases: Vec<String> = record
                .case_fired
                .iter()
                .map(|c| {
                    serde_json::to_value(c)
                        .expect("case serializes")
                        .as_str()
                        .unwrap_or_default()
                        .to_string()
                })
                .collect();
            line.push_str(&format!(" [{}]", cases.join(",")));
            line
        })
    })?;
    match mismatch {
        Some(g6) => Err(Failure::from(Error::Invariant(format!(
            "structural and oracle nullity disagree on {g6}"
        )))),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct DecompositionRecord {
    graph6: String,
    n: usize,
    d: VertexSet,
    b: VertexSet,
    c: VertexSet,
    d_components: Vec<VertexSet>,
    singletons: Vec<VertexSet>,
    factor_critical: Vec<VertexSet>,
    nu: usize,
    /// (|V| - c(D) + |B|) / 2, which must equal nu.
    nu_from_partition: usize,
}

fn decompose(out: &mut Output, source: Source) -> Result<(), Failure> {
    source.for_each(|g| -> Result<(), Failure> {
            let dec = gallai_edmonds(&g);
            dec.verify(&g, &dec.matching)?;
            let pick = |idx: &[usize]| idx.iter().map(|&k| dec.d_components[k].clone()).collect();
            let record = DecompositionRecord {
                graph6: to_graph6(&g)?,
                n: g.n(),
                d: dec.d.clone(),
                b: dec.b.clone(),
                c: dec.c.clone(),
                d_components: dec.d_components.clone(),
                singletons: pick(&dec.singletons),
                factor_critical: pick(&dec.factor_critical),
                nu: dec.matching_number,
                nu_from_partition: dec.tutte_berge_size(),
            };
            let sets = |s: &[VertexSet]| {
                if s.is_empty() {
                    "none".to_string()
                } else {
                    s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
                }
            };
            let text = || {
                format!(
                    "{}\n  D = {}\n  B = {}\n  C = {}\n  components of G[D]: {}\n  singletons: {}\n  order >= 3: {}\n  nu = {}, (|V| - c(D) + |B|)/2 = {}",
                    record.graph6,
                    record.d,
                    record.b,
                    record.c,
                    sets(&record.d_components),
                    sets(&record.singletons),
                    sets(&record.factor_critical),
                    record.nu,
                    record.nu_from_partition
                )
            };
            out.record(&record, text)
        })
}

#[derive(Serialize)]
struct PolynomialRecord {
    graph6: String,
    n: usize,
    method: Method,
    /// b_0..b_n as decimal strings.
    coefficients: Vec<String>,
    nullity: usize,
}

fn polynomial(
    out: &mut Output,
    source: Source,
    method: Method,
    guard: Guard,
) -> Result<(), Failure> {
    let compute = |g: &Graph| -> Result<PermPolynomial, Error> {
        match method {
            Method::Sachs => perm_polynomial_sachs_with(g, guard),
            Method::Interp => perm_polynomial_interpolation_with(g, guard),
            Method::Both => {
                let a = perm_polynomial_sachs_with(g, guard)?;
                let b = perm_polynomial_interpolation_with(g, guard)?;
                if a != b {
                    return Err(Error::Invariant(format!(
                        "Sachs expansion gives {a}, interpolation gives {b}"
                    )));
                }
                Ok(a)
            }
        }
    };
    source.for_each(|g| -> Result<(), Failure> {
        let p = compute(&g)?;
        let record = PolynomialRecord {
            graph6: to_graph6(&g)?,
            n: g.n(),
            method,
            coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
            nullity: p.zero_multiplicity(),
        };
        out.record(&record, || record.coefficients.join(" "))
    })
}

fn corpus_spec(args: &VerifyArgs, guard: Guard) -> Result<CorpusSpec, Error> {
    let exhaustive_min = args.n_min.unwrap_or(1);
    let (lo, hi) = match args.n {
        Some(n) => (n, n),
        None => (args.n_min.unwrap_or(3), args.n_max.unwrap_or(10)),
    };
    let spec = if let Some(n) = args.all_labeled {
        CorpusSpec::all_labeled(exhaustive_min, n)
    } else if let Some(n) = args.connected {
        CorpusSpec::all_connected_labeled(exhaustive_min, n)
    } else if let Some(n) = args.connected_iso {
        CorpusSpec::connected_up_to_iso(exhaustive_min, n)
    } else if let Some(count) = args.gnp {
        CorpusSpec::random_gnp(lo, hi, count, args.p, args.seed)
    } else if let Some(count) = args.unicyclic {
        CorpusSpec::random_unicyclic(lo, hi, count, args.seed)
    } else if let Some(count) = args.tree_plus {
        CorpusSpec::random_tree_plus(lo, hi, count, args.p, args.seed)
    } else {
        return Err(Error::Argument(
            "choose a corpus: --all-labeled, --connected, --connected-iso, --gnp, --unicyclic or --tree-plus".into(),
        ));
    };
    let mut spec = spec.with_guard(guard);
    if args.line_graphs {
        spec = spec.then(Stage::LineGraphsOf);
    }
    if args.factor_critical {
        spec = spec.then(Stage::FactorCriticalFilter);
    }
    Ok(spec)
}

fn verify(out: &mut Output, args: VerifyArgs, guard: Guard) -> Result<(), Failure> {
    let checks = Check::parse_list(&args.checks)?;
    let names: Vec<&str> = checks.iter().map(|c| c.name()).collect();
    let spec = corpus_spec(&args, guard)?;
    let result = run_verification(&spec, &names)?;
    match out.format {
        Format::Text => write!(out.stdout, "{}", result.table())?,
        Format::Json => writeln!(out.stdout, "{}", result.to_json())?,
        Format::Jsonl => writeln!(
            out.stdout,
            "{}",
            serde_json::to_string(&result).expect("result serializes")
        )?,
    }
    if result.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: format!("{} check failures", result.failures_total),
        })
    }
}
