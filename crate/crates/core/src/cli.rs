//! The `knotforge` command line. [`run`] returns the process exit code:
//! 0 on success, 1 when a computation fails (an invalid diagram, say) and
//! 2 for usage errors such as unknown names.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diagram::Diagram;
use crate::group::{FiniteGroup, GroupJson};
use crate::knots::{
    builtin, builtins, distinguish, report, resolve_group, resolve_quandle, KnotRecord, NamedGroup,
    NamedQuandle,
};
use crate::presentation::{
    abelianize, alexander_briggs, hom_count, tietze_simplify, wirtinger, GroupPresentation,
    DEFAULT_LENGTH_CAP,
};
use crate::quandle::{count_colorings, list_colorings, FiniteQuandle, QuandleJson};
use crate::reidemeister::walk_steps;

pub const THREADS_ENV: &str = "KNOTFORGE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "knotforge",
    version,
    about = "Knot diagram invariants: quandle colorings and knot group presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct Input {
    /// PD code, e.g. "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]" or "U".
    #[arg(long)]
    pd: Vec<String>,
    /// Built-in knot: unknot, trefoil, figure8.
    #[arg(long)]
    knot: Vec<String>,
}

#[derive(Debug, Args)]
struct QuandleArgs {
    /// Named quandle: R<n> or QS4.
    #[arg(long = "quandle")]
    quandle_names: Vec<String>,
    /// Quandle table as JSON: {"order": n, "table": [[...]]}.
    #[arg(long = "quandle-file")]
    quandle_files: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Named group: S<k>, A<k> or Z<n>.
    #[arg(long = "group")]
    group_names: Vec<String>,
    /// Group table as JSON: {"order": n, "table": [[...]], "identity": e}.
    #[arg(long = "group-file")]
    group_files: Vec<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Wirtinger,
    Ab,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a diagram and print its basic data.
    Validate(Input),
    /// Coloring counts, presentation sizes, hom counts and abelianization.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        quandles: QuandleArgs,
        #[command(flatten)]
        groups: GroupArgs,
    },
    /// Count (and optionally list) quandle colorings.
    Colorings {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        quandles: QuandleArgs,
        /// List up to this many colorings.
        #[arg(long, default_value_t = 0)]
        list: usize,
    },
    /// Wirtinger presentation.
    Wirtinger(Input),
    /// Alexander-Briggs presentation.
    Ab {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        base_edge: usize,
    },
    /// Tietze-simplified presentation.
    Simplify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Source::Wirtinger)]
        from: Source,
        #[arg(long, default_value_t = 1)]
        base_edge: usize,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
    },
    /// Count homomorphisms from the knot group into finite groups.
    Homcount {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        groups: GroupArgs,
        #[arg(long, value_enum, default_value_t = Source::Wirtinger)]
        from: Source,
        #[arg(long, default_value_t = 1)]
        base_edge: usize,
    },
    /// Reidemeister moves.
    #[command(subcommand)]
    Moves(MovesCommand),
    /// Try to tell two knots apart by coloring counts.
    Distinguish {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        quandles: QuandleArgs,
    },
}

#[derive(Debug, Subcommand)]
enum MovesCommand {
    /// Random walk of Reidemeister moves; prints the PD code of each step.
    Walk {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(thread_default)
}

fn thread_default() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

fn records(input: &Input) -> Result<Vec<KnotRecord>, Failure> {
    let mut out = Vec::new();
    for name in &input.knot {
        out.push(builtin(name).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    for (i, pd) in input.pd.iter().enumerate() {
        let name = if input.pd.len() == 1 {
            "input".to_string()
        } else {
            format!("input{}", i + 1)
        };
        out.push(KnotRecord::new(name, pd.clone(), "user PD code"));
    }
    Ok(out)
}

fn diagram_of(record: &KnotRecord) -> Result<Diagram, Failure> {
    record
        .diagram()
        .map_err(|e| Failure::Compute(format!("{}: {e}", record.name)))
}

/// Exactly one input diagram.
fn single(input: &Input) -> Result<(KnotRecord, Diagram), Failure> {
    let mut rs = records(input)?;
    if rs.len() != 1 {
        return Err(Failure::Usage(format!(
            "expected exactly one --pd or --knot, got {}",
            rs.len()
        )));
    }
    let r = rs.remove(0);
    let d = diagram_of(&r)?;
    Ok((r, d))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: invalid JSON: {e}", path.display())))
}

fn quandles(args: &QuandleArgs, default: &[&str]) -> Result<Vec<NamedQuandle>, Failure> {
    let mut out = Vec::new();
    let names: Vec<String> = if args.quandle_names.is_empty() && args.quandle_files.is_empty() {
        default.iter().map(|s| s.to_string()).collect()
    } else {
        args.quandle_names.clone()
    };
    for n in &names {
        out.push(resolve_quandle(n).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    for path in &args.quandle_files {
        let json: QuandleJson = read_json(path)?;
        let quandle = FiniteQuandle::from_json(&json)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        out.push(NamedQuandle {
            name: path.display().to_string(),
            quandle,
        });
    }
    Ok(out)
}

fn groups(args: &GroupArgs, default: &[&str]) -> Result<Vec<NamedGroup>, Failure> {
    let mut out = Vec::new();
    let names: Vec<String> = if args.group_names.is_empty() && args.group_files.is_empty() {
        default.iter().map(|s| s.to_string()).collect()
    } else {
        args.group_names.clone()
    };
    for n in &names {
        out.push(resolve_group(n).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    for path in &args.group_files {
        let json: GroupJson = read_json(path)?;
        let group = FiniteGroup::from_json(&json)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        out.push(NamedGroup {
            name: path.display().to_string(),
            group,
        });
    }
    Ok(out)
}

fn presentation(d: &Diagram, from: Source, base_edge: usize) -> Result<GroupPresentation, Failure> {
    match from {
        Source::Wirtinger => Ok(wirtinger(d)),
        Source::Ab => alexander_briggs(d, base_edge).map_err(|e| Failure::Compute(e.to_string())),
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}").map_err(io_failure)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Compute(format!("write failed: {e}"))
}

fn emit_presentation(out: &mut dyn Write, json: bool, p: &GroupPresentation) -> Outcome {
    if json {
        emit_json(out, &p.to_json())
    } else {
        writeln!(out, "{p}").map_err(io_failure)
    }
}

#[derive(Serialize)]
struct ValidateJson {
    pd: String,
    crossings: usize,
    edges: usize,
    writhe: i32,
    arcs: usize,
    regions: usize,
    gauss: String,
}

#[derive(Serialize)]
struct ColoringJson {
    quandle: String,
    total: u64,
    nontrivial: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    colorings: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct HomJson {
    group: String,
    count: u64,
}

#[derive(Serialize)]
struct WalkJson {
    step: usize,
    #[serde(rename = "move")]
    site: Option<String>,
    pd: String,
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io_failure);
    match &cli.command {
        Command::Validate(input) => {
            let (_, d) = single(input)?;
            let v = ValidateJson {
                pd: d.to_string(),
                crossings: d.crossing_count(),
                edges: d.edge_count(),
                writhe: d.writhe(),
                arcs: d.arcs().len(),
                regions: d.regions().len(),
                gauss: d.to_gauss(),
            };
            if cli.json {
                emit_json(out, &v)
            } else {
                w(
                    out,
                    format!(
                        "valid: {} crossings, {} edges, {} arcs, {} regions, writhe {}\ngauss {}",
                        v.crossings, v.edges, v.arcs, v.regions, v.writhe, v.gauss
                    ),
                )
            }
        }
        Command::Invariants {
            input,
            quandles: q,
            groups: g,
        } => {
            let knots = if input.knot.is_empty() && input.pd.is_empty() {
                builtins()
            } else {
                records(input)?
            };
            let qs = quandles(q, &["R3", "QS4"])?;
            let gs = groups(g, &["S3", "S4", "A4"])?;
            let r =
                report(&knots, &qs, &gs, threads()).map_err(|e| Failure::Compute(e.to_string()))?;
            if cli.json {
                emit_json(out, &r)
            } else {
                write!(out, "{r}").map_err(io_failure)
            }
        }
        Command::Colorings {
            input,
            quandles: q,
            list,
        } => {
            let (_, d) = single(input)?;
            let rows: Vec<ColoringJson> = quandles(q, &["R3"])?
                .into_iter()
                .map(|nq| {
                    let c = count_colorings(&d, &nq.quandle);
                    ColoringJson {
                        quandle: nq.name,
                        total: c.total,
                        nontrivial: c.nontrivial,
                        colorings: list_colorings(&d, &nq.quandle, *list)
                            .into_iter()
                            .map(|c| c.assignment)
                            .collect(),
                    }
                })
                .collect();
            if cli.json {
                return emit_json(out, &rows);
            }
            for r in rows {
                w(
                    out,
                    format!(
                        "{}: {} total, {} nontrivial",
                        r.quandle, r.total, r.nontrivial
                    ),
                )?;
                for c in r.colorings {
                    w(out, format!("  {c:?}"))?;
                }
            }
            Ok(())
        }
        Command::Wirtinger(input) => {
            let (_, d) = single(input)?;
            emit_presentation(out, cli.json, &wirtinger(&d))
        }
        Command::Ab { input, base_edge } => {
            let (_, d) = single(input)?;
            let p = presentation(&d, Source::Ab, *base_edge)?;
            emit_presentation(out, cli.json, &p)
        }
        Command::Simplify {
            input,
            from,
            base_edge,
            cap,
        } => {
            let (_, d) = single(input)?;
            let p = presentation(&d, *from, *base_edge)?;
            let s = tietze_simplify(&p, *cap);
            if cli.json {
                emit_presentation(out, true, &s)
            } else {
                let ab: Vec<String> = abelianize(&s).iter().map(i64::to_string).collect();
                w(out, format!("{s}\nabelianization ({})", ab.join(",")))
            }
        }
        Command::Homcount {
            input,
            groups: g,
            from,
            base_edge,
        } => {
            let (_, d) = single(input)?;
            let p = presentation(&d, *from, *base_edge)?;
            let rows: Vec<HomJson> = groups(g, &["S3"])?
                .into_iter()
                .map(|ng| HomJson {
                    count: hom_count(&p, &ng.group),
                    group: ng.name,
                })
                .collect();
            if cli.json {
                return emit_json(out, &rows);
            }
            for r in rows {
                w(out, format!("{}: {}", r.group, r.count))?;
            }
            Ok(())
        }
        Command::Moves(MovesCommand::Walk { input, steps, cap }) => {
            let (_, d) = single(input)?;
            if d.crossing_count() > *cap {
                return Err(Failure::Usage(format!(
                    "cap {cap} is below the diagram's {} crossings",
                    d.crossing_count()
                )));
            }
            let rows: Vec<WalkJson> = walk_steps(&d, *steps, cli.seed, *cap)
                .into_iter()
                .enumerate()
                .map(|(step, s)| WalkJson {
                    step,
                    site: s.site.map(|m| m.to_string()),
                    pd: s.diagram.to_string(),
                })
                .collect();
            if cli.json {
                return emit_json(out, &rows);
            }
            for r in rows {
                let m = r.site.unwrap_or_else(|| "-".into());
                w(out, format!("{}\t{}\t{}", r.step, m, r.pd))?;
            }
            Ok(())
        }
        Command::Distinguish { input, quandles: q } => {
            let rs = records(input)?;
            if rs.len() != 2 {
                return Err(Failure::Usage(format!(
                    "distinguish needs exactly two knots, got {}",
                    rs.len()
                )));
            }
            let a = diagram_of(&rs[0])?;
            let b = diagram_of(&rs[1])?;
            let verdict = distinguish(&a, &b, &quandles(q, &["R3", "QS4"])?);
            if cli.json {
                emit_json(out, &verdict)
            } else {
                w(out, format!("{} vs {}: {verdict}", rs[0].name, rs[1].name))
            }
        }
    }
}
