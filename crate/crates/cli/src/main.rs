//! Command-line front end.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 precondition violated,
//! 4 internal verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use transversal::contraction::minimal_presenting_graph;
use transversal::cotransversal::AlphaTable;
use transversal::oracle::{random_path_circular, PathLimits};
use transversal::path_circular::{bicircular, multipath};
use transversal::{
    alpha_table, contract_presentation, is_contraction_transversal, is_cotransversal,
    maximal_presentation, normalize_presentation, selftest, Dual, ElementSet, Error,
    PathCircularInstance, PivotKind, Presentation, RankOracle, TransversalMatroid,
    DEFAULT_MAX_GROUND,
};

#[derive(Parser)]
#[command(name = "transversal", version, about = "Transversal matroid contractions and path-circular matroids")]
struct Cli {
    /// Largest ground set for exhaustive operations.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GROUND)]
    max_ground: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of a subset (default: the ground set).
    Rank(SetArgs),
    /// Rank of a subset in the dual.
    DualRank(SetArgs),
    /// Closure of a subset.
    Closure(ClosureArgs),
    /// Maximal presentation (coclosure of every set).
    Maximal(FileArgs),
    /// Alpha values of all cyclic flats.
    Alpha(DualArgs),
    /// Whether alpha is nonnegative on every subset.
    IsCotransversal(DualArgs),
    /// Whether contracting an element leaves a transversal matroid.
    ContractCheck(ElementArgs),
    /// A verified presentation of the contraction.
    Contract(ElementArgs),
    /// The minimal presenting graph as DOT.
    MinimalGraph(ElementArgs),
    /// Check the path-circular conditions.
    PcValidate(FileArgs),
    /// Build a path-circular instance.
    PcBuild(BuildArgs),
    /// Delete a path.
    PcDelete(ElementArgs),
    /// Contract a path.
    PcContract(ElementArgs),
    /// Run the seeded property suites.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct FileArgs {
    input: PathBuf,
}

#[derive(Args)]
struct SetArgs {
    input: PathBuf,
    /// Comma-separated element labels.
    #[arg(long, value_delimiter = ',')]
    subset: Option<Vec<String>>,
}

#[derive(Args)]
struct ClosureArgs {
    input: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    subset: Vec<String>,
    /// Closure in the dual.
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct DualArgs {
    input: PathBuf,
    /// Work in the dual matroid.
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct ElementArgs {
    input: PathBuf,
    #[arg(long)]
    element: String,
    /// Write the presenting graph as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    /// One path per edge of the input graph.
    Bicircular,
    /// Cyclic intervals on a cycle of `--n` vertices.
    Multipath,
    /// A seeded random valid instance.
    Random,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: BuildKind,
    /// Graph for `bicircular`; paths in the file are ignored.
    input: Option<PathBuf>,
    /// Cycle length for `multipath`.
    #[arg(long)]
    n: Option<usize>,
    /// Interval `start:end` for `multipath`, repeatable.
    #[arg(long = "interval")]
    intervals: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the instance as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    cases: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DuplicateLabel(_)
            | Error::EmptyLabel
            | Error::UnknownLabel(_)
            | Error::OutOfGround { .. }
            | Error::Parse(_) => 2,
            Error::Internal(_) => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load_matroid(path: &Path) -> Result<TransversalMatroid, Failure> {
    Ok(TransversalMatroid::new(Presentation::parse(&read(path)?)?))
}

fn load_instance(path: &Path) -> Result<PathCircularInstance, Failure> {
    Ok(PathCircularInstance::parse(&read(path)?)?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn subset(m: &TransversalMatroid, labels: &Option<Vec<String>>) -> Result<ElementSet, Failure> {
    match labels {
        None => Ok(m.full()),
        Some(labels) => {
            let labels: Vec<&str> = labels.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
            Ok(m.ground().subset(&labels)?)
        }
    }
}

fn alpha_json(table: &AlphaTable, m: &TransversalMatroid) -> String {
    json(&table.to_json(m.ground()))
}

fn run(cli: Cli) -> Outcome {
    let max = cli.max_ground;
    match cli.command {
        Command::Rank(a) => {
            let m = load_matroid(&a.input)?;
            let x = subset(&m, &a.subset)?;
            Ok(format!("r({}) = {}\n", m.ground().format_set(x), m.rank(x)))
        }
        Command::DualRank(a) => {
            let m = load_matroid(&a.input)?;
            let x = subset(&m, &a.subset)?;
            Ok(format!("r*({}) = {}\n", m.ground().format_set(x), m.dual_rank(x)))
        }
        Command::Closure(a) => {
            let m = load_matroid(&a.input)?;
            let x = subset(&m, &Some(a.subset))?;
            let (name, c) = if a.dual {
                ("cl*", m.dual_closure(x))
            } else {
                ("cl", m.closure(x))
            };
            let g = m.ground();
            Ok(format!("{name}({}) = {}\n", g.format_set(x), g.format_set(c)))
        }
        Command::Maximal(a) => {
            let m = load_matroid(&a.input)?;
            let (normalized, _) = normalize_presentation(&m, max)?;
            Ok(json(&maximal_presentation(&normalized)?.to_json()))
        }
        Command::Alpha(a) => {
            let m = load_matroid(&a.input)?;
            let table = if a.dual {
                alpha_table(&Dual(&m), max)?
            } else {
                alpha_table(&m, max)?
            };
            Ok(alpha_json(&table, &m))
        }
        Command::IsCotransversal(a) => {
            let m = load_matroid(&a.input)?;
            let verdict = if a.dual {
                is_cotransversal(&Dual(&m), max)?
            } else {
                is_cotransversal(&m, max)?
            };
            Ok(match verdict.witness {
                None => "COTRANSVERSAL (alpha is nonnegative on every subset)\n".to_string(),
                Some((x, v)) => format!(
                    "NOT COTRANSVERSAL (alpha({}) = {v})\n",
                    m.ground().format_set(x)
                ),
            })
        }
        Command::ContractCheck(a) => {
            let m = load_matroid(&a.input)?;
            let e = m.ground().require(&a.element)?;
            let check = is_contraction_transversal(&m, e, max)?;
            if let Some(path) = &a.dot {
                write(path, &check.graph.to_dot(&check.matroid))?;
            }
            let mut out = match check.kind {
                PivotKind::Loop => format!("TRANSVERSAL ({} is a loop)\n", a.element),
                PivotKind::Coloop => format!("TRANSVERSAL ({} is a coloop)\n", a.element),
                PivotKind::Ordinary if check.transversal => {
                    "TRANSVERSAL (minimal presenting graph is a tree)\n".to_string()
                }
                PivotKind::Ordinary => {
                    "NOT TRANSVERSAL (minimal presenting graph has a cycle)\n".to_string()
                }
            };
            if check.kind == PivotKind::Ordinary {
                out += &format!("edges: {}\n", check.graph.describe_edges());
            }
            if let Some(kept) = &check.kept_sets {
                out += &format!("normalized to sets {kept:?}\n");
            }
            Ok(out)
        }
        Command::Contract(a) => {
            let m = load_matroid(&a.input)?;
            let e = m.ground().require(&a.element)?;
            let out = contract_presentation(&m, e, max).map_err(|err| match err {
                Error::NotTransversal { .. } => Failure {
                    code: 3,
                    message: format!("NOT TRANSVERSAL (minimal presenting graph has a cycle)\n{err}"),
                },
                other => other.into(),
            })?;
            if let Some(path) = &a.dot {
                write(path, &out.check.graph.to_dot(&out.check.matroid))?;
            }
            Ok(json(&out.presentation.to_json()) + "VERIFIED\n")
        }
        Command::MinimalGraph(a) => {
            let m = load_matroid(&a.input)?;
            let e = m.ground().require(&a.element)?;
            let (normalized, _) = normalize_presentation(&m, max)?;
            let dot = minimal_presenting_graph(&normalized, e)?.to_dot(&normalized);
            match &a.dot {
                Some(path) => {
                    write(path, &dot)?;
                    Ok(String::new())
                }
                None => Ok(dot),
            }
        }
        Command::PcValidate(a) => {
            let inst = load_instance(&a.input)?;
            let v = inst.validate();
            if v.is_valid() {
                return Ok("VALID\n".to_string());
            }
            let lines: Vec<String> = v.violations.iter().map(|x| inst.describe_violation(x)).collect();
            Err(Failure {
                code: 3,
                message: format!("INVALID\n{}", lines.join("\n")),
            })
        }
        Command::PcBuild(a) => {
            let inst = match a.kind {
                BuildKind::Bicircular => {
                    let input = a.input.as_ref().ok_or_else(|| usage("bicircular needs an input graph"))?;
                    bicircular(load_instance(input)?.graph())?
                }
                BuildKind::Multipath => {
                    let n = a.n.ok_or_else(|| usage("multipath needs --n"))?;
                    let intervals = a
                        .intervals
                        .iter()
                        .map(|s| parse_interval(s))
                        .collect::<Result<Vec<_>, _>>()?;
                    multipath(n, &intervals)?
                }
                BuildKind::Random => random_path_circular(a.seed, &PathLimits::default())?,
            };
            if let Some(path) = &a.dot {
                write(path, &inst.to_dot())?;
            }
            Ok(json(&inst.to_json()))
        }
        Command::PcDelete(a) => {
            let inst = load_instance(&a.input)?;
            Ok(json(&inst.delete_path(&a.element)?.to_json()))
        }
        Command::PcContract(a) => {
            let inst = load_instance(&a.input)?;
            let out = inst.contract_path(&a.element, max)?;
            if let Some(path) = &a.dot {
                write(path, &out.to_dot())?;
            }
            Ok(json(&out.to_json()))
        }
        Command::Selftest(a) => {
            let report = selftest::run_all(a.seed, a.cases);
            let text = json(&report);
            if report.failures > 0 {
                return Err(Failure { code: 4, message: text });
            }
            Ok(text)
        }
    }
}

fn parse_interval(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("interval `{s}` is not of the form start:end"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
