use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use interval_total::bounds::{bound_report, known_chi_double_prime, known_exact_values};
use interval_total::constructions::{construct, ConstructionRequest};
use interval_total::dot::{to_dot, DotColors};
use interval_total::family::default_names;
use interval_total::search::{compute_spectrum, exists_coloring, SearchConfig, TVerdict, Verdict};
use interval_total::transform::{lift_coloring, verify_interval_edge, AuxiliaryGraph, EdgeColoring};
use interval_total::{invert, Certificate, Color, FamilySpec, Graph, RegularBipartite};

mod table;

#[derive(Parser)]
#[command(name = "itcolor", version, about = "Interval total colorings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family graph as JSON
    Generate(GraphInput),
    /// Build the construction for (family, t)
    Color {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<Color>,
        /// Append a JSON line naming the construction used
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Check a certificate; exit status 0 iff valid
    Verify { certificate: PathBuf },
    /// Decide a single t with the exact search
    Search {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        t: Color,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Decide every t in a range with the exact search
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        t_min: Option<Color>,
        #[arg(long, allow_hyphen_values = true)]
        t_max: Option<Color>,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Closed-form bounds on the fewest and most colors
    Bounds(GraphInput),
    /// Auxiliary bipartite graph and the lifted edge coloring
    Lift { certificate: PathBuf },
    /// Replace every color x by t + 1 - x
    Invert { certificate: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Tree,
    Cube,
    BalancedComplete,
    EvenCycle,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Order (for balanced-complete: the degree r)
    #[arg(long)]
    n: Option<usize>,
    /// First part size for complete-bipartite
    #[arg(long)]
    m: Option<usize>,
    /// Seed for random trees
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct GraphSource {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Graph JSON file ({"n": .., "edges": [[u, v], ..]}), or - for stdin
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct GraphInput {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, requires = "family")]
    m: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "family")]
    seed: u64,
}

#[derive(Args)]
struct Tuning {
    /// Node cap per first-element color choice
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Tuning {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            jobs: self.jobs.max(1),
            ..SearchConfig::default()
        }
    }
}

enum Failure {
    /// Bad flags or unreadable input: exit 2.
    Usage(String),
    /// Invalid certificate or an infeasible t: exit 1.
    Negative(String),
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure::Usage(msg.to_string())
}

fn family_spec(name: FamilyName, n: Option<usize>, m: Option<usize>, seed: u64) -> Result<FamilySpec, Failure> {
    let need_n = || n.ok_or_else(|| usage("--n is required for this family"));
    let spec = match name {
        FamilyName::Path => FamilySpec::Path { n: need_n()? },
        FamilyName::Cycle => FamilySpec::Cycle { n: need_n()? },
        FamilyName::Complete => FamilySpec::Complete { n: need_n()? },
        FamilyName::CompleteBipartite => FamilySpec::CompleteBipartite {
            m: m.ok_or_else(|| usage("--m is required for complete-bipartite"))?,
            n: need_n()?,
        },
        FamilyName::Wheel => FamilySpec::Wheel { n: need_n()? },
        FamilyName::Tree => FamilySpec::TreeRandom { n: need_n()?, seed },
        FamilyName::Cube => FamilySpec::RegularBipartiteNamed(RegularBipartite::Cube),
        FamilyName::BalancedComplete => {
            FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r: need_n()? })
        }
        FamilyName::EvenCycle => {
            FamilySpec::RegularBipartiteNamed(RegularBipartite::EvenCycle { n: need_n()? })
        }
    };
    spec.validate().map_err(usage)?;
    Ok(spec)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_certificate(path: &Path) -> Result<Certificate, Failure> {
    serde_json::from_str(&read_input(path)?)
        .map_err(|e| usage(format!("{}: not a certificate: {e}", path.display())))
}

/// The graph, its display names, and the family when it came from one.
fn load_graph(input: &GraphInput) -> Result<(Graph, Vec<String>, Option<FamilySpec>), Failure> {
    if let Some(path) = &input.source.graph {
        let g: Graph = serde_json::from_str(&read_input(path)?)
            .map_err(|e| usage(format!("{}: not a graph: {e}", path.display())))?;
        let names = default_names(g.vertex_count());
        return Ok((g, names, None));
    }
    let name = input.source.family.expect("clap enforces one source");
    let spec = family_spec(name, input.n, input.m, input.seed)?;
    let g = spec.generate().map_err(usage)?;
    Ok((g, spec.vertex_names(), Some(spec)))
}

struct Out {
    path: Option<PathBuf>,
}

impl Out {
    fn emit(&self, text: &str) -> Outcome {
        match &self.path {
            Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
            None => {
                let mut stdout = io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| usage(format!("stdout: {e}")))
            }
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Outcome {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        self.emit(&s)
    }
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage("this subcommand does not support that --format"))
    }
}

fn certificate_dot(cert: &Certificate, names: &[String]) -> String {
    to_dot(
        &cert.graph,
        names,
        DotColors {
            vertices: Some(&cert.coloring.vertex_colors),
            edges: Some(&cert.coloring.edge_colors),
        },
    )
}

fn emit_certificate(out: &Out, format: Format, cert: &Certificate, names: &[String]) -> Outcome {
    match format {
        Format::Json => out.json(cert),
        Format::Dot => out.emit(&certificate_dot(cert, names)),
        Format::Table => out.emit(&table::certificate(cert, names)),
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Out { path: cli.output };
    let format = cli.format;
    match cli.command {
        Command::Generate(input) => {
            let (g, names, _) = load_graph(&input)?;
            match pick(format, Format::Json, &[Format::Json, Format::Dot])? {
                Format::Dot => out.emit(&to_dot(&g, &names, DotColors::default())),
                _ => out.json(&g),
            }
        }
        Command::Color {
            family,
            t,
            manifest,
        } => {
            let f = pick(format, Format::Json, &[Format::Json, Format::Dot, Format::Table])?;
            let spec = family_spec(family.family, family.n, family.m, family.seed)?;
            let built = construct(&ConstructionRequest { family: spec, t }).map_err(usage)?;
            if let Some(path) = manifest {
                let mut line = serde_json::to_string(&built.manifest_entry()).expect("serializable");
                line.push('\n');
                fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&path)
                    .and_then(|mut file| file.write_all(line.as_bytes()))
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            emit_certificate(&out, f, &built.certificate, &spec.vertex_names())
        }
        Command::Verify { certificate } => {
            let f = pick(format, Format::Table, &[Format::Json, Format::Table])?;
            let cert = read_certificate(&certificate)?;
            let outcome = cert.verify().map_err(|e| Failure::Negative(e.to_string()))?;
            match f {
                Format::Json => out.json(&outcome)?,
                _ => out.emit(&table::verify(&outcome))?,
            }
            if outcome.valid {
                Ok(())
            } else {
                Err(Failure::Negative(format!(
                    "certificate invalid: {} violation(s)",
                    outcome.failures.len()
                )))
            }
        }
        Command::Search { input, t, tuning } => {
            let f = pick(format, Format::Table, &[Format::Json, Format::Dot, Format::Table])?;
            let (g, names, _) = load_graph(&input)?;
            let verdict = exists_coloring(&g, t, &tuning.config()).map_err(usage)?;
            let infeasible = verdict == Verdict::Infeasible;
            let row = TVerdict {
                t,
                status: verdict.status(),
                certificate: match verdict {
                    Verdict::Feasible(coloring) => Some(Certificate { graph: g, coloring }),
                    _ => None,
                },
            };
            match (f, &row.certificate) {
                (Format::Json, _) => out.json(&row)?,
                (Format::Dot, Some(cert)) => out.emit(&certificate_dot(cert, &names))?,
                (Format::Dot, None) => out.emit(&format!("// t = {t}: {}\n", table::status(row.status)))?,
                (_, cert) => {
                    let mut text = format!("t = {t}: {}\n", table::status(row.status));
                    if let Some(cert) = cert {
                        text.push_str(&table::certificate(cert, &names));
                    }
                    out.emit(&text)?
                }
            }
            if infeasible {
                Err(Failure::Negative(format!("no interval total {t}-coloring")))
            } else {
                Ok(())
            }
        }
        Command::Spectrum {
            input,
            t_min,
            t_max,
            tuning,
        } => {
            let f = pick(format, Format::Table, &[Format::Json, Format::Table])?;
            let (g, _, _) = load_graph(&input)?;
            let cfg = SearchConfig {
                t_min,
                t_max,
                ..tuning.config()
            };
            let result = compute_spectrum(&g, &cfg).map_err(usage)?;
            match f {
                Format::Json => out.json(&result),
                _ => out.emit(&table::spectrum(&result)),
            }
        }
        Command::Bounds(input) => {
            let f = pick(format, Format::Table, &[Format::Json, Format::Table])?;
            let (g, _, spec) = load_graph(&input)?;
            let report = bound_report(&g);
            match f {
                Format::Json => out.json(&report),
                _ => {
                    let mut text = table::bounds(&report);
                    if let Some(spec) = spec {
                        let exact = known_exact_values(&spec).ok();
                        let chi = known_chi_double_prime(&spec).ok();
                        text.push_str(&table::family_values(exact, chi));
                    }
                    out.emit(&text)
                }
            }
        }
        Command::Lift { certificate } => {
            let f = pick(format, Format::Json, &[Format::Json, Format::Dot])?;
            let cert = read_certificate(&certificate)?;
            let (aux, ec) = lift_coloring(&cert.graph, &cert.coloring)
                .map_err(|e| Failure::Negative(e.to_string()))?;
            match f {
                Format::Dot => {
                    let n = cert.graph.vertex_count();
                    let names: Vec<String> = (1..=n)
                        .map(|i| format!("u{i}"))
                        .chain((1..=n).map(|i| format!("w{i}")))
                        .collect();
                    out.emit(&to_dot(
                        &aux.h,
                        &names,
                        DotColors {
                            vertices: None,
                            edges: Some(&ec.colors),
                        },
                    ))
                }
                _ => {
                    let valid = verify_interval_edge(&aux.h, &ec)
                        .map(|o| o.valid)
                        .unwrap_or(false);
                    out.json(&LiftOutput {
                        graph: &aux,
                        edge_coloring: &ec,
                        valid,
                    })
                }
            }
        }
        Command::Invert { certificate } => {
            let f = pick(format, Format::Json, &[Format::Json, Format::Dot, Format::Table])?;
            let cert = read_certificate(&certificate)?;
            let inverted = Certificate {
                coloring: invert(&cert.coloring),
                graph: cert.graph,
            };
            let names = default_names(inverted.graph.vertex_count());
            emit_certificate(&out, f, &inverted, &names)
        }
    }
}

#[derive(Serialize)]
struct LiftOutput<'a> {
    graph: &'a AuxiliaryGraph,
    edge_coloring: &'a EdgeColoring,
    valid: bool,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    kind: &'a str,
}

fn report(json: bool, kind: &str, msg: &str) {
    if json {
        let body = serde_json::to_string(&ErrorJson { error: msg, kind }).expect("serializable");
        eprintln!("{body}");
    } else {
        eprintln!("itcolor: {msg}");
    }
}

/// Whether `--format json` appears, for errors raised before parsing ends.
fn wants_json(args: &[String]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let json = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            if json {
                report(true, "usage", e.to_string().trim());
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            report(json, "usage", &msg);
            ExitCode::from(2)
        }
        Err(Failure::Negative(msg)) => {
            report(json, "negative", &msg);
            ExitCode::from(1)
        }
    }
}
