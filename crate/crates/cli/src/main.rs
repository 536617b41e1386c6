//! `amalgadim`: local metric dimension of graphs and amalgams from the command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use amalgadim::audit::fuzz;
use amalgadim::bounds::{bound_report, BoundOptions, CotraversalScope};
use amalgadim::constructions::{catalogue, Construction, CONSTRUCTION_NAMES};
use amalgadim::family::{generate, FamilySpec};
use amalgadim::hitting::SearchOptions;
use amalgadim::io::{
    format_graph, format_host, read_amalgam, read_graph, write_amalgam, write_file,
};
use amalgadim::localmetric::local_metric_dimension;
use amalgadim::report::{amalgam_records, bound_records, join_names, Format, Report};
use amalgadim::verify::{verify_instance, Outcome, Status};
use amalgadim::Error;

#[derive(Parser, Debug)]
#[command(
    name = "amalgadim",
    version,
    about = "Exact local metric dimension of graphs and amalgams"
)]
struct Cli {
    /// Worker threads for the branch-and-bound search.
    #[arg(long, global = true, env = "AMALGADIM_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    /// Wall-clock budget per search, in seconds.
    #[arg(long, global = true, env = "AMALGADIM_TIMEOUT", default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
    timeout: u64,
    /// Branch-node budget per search.
    #[arg(long, global = true, env = "AMALGADIM_NODES", default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    nodes: u64,
    #[arg(long, global = true, env = "AMALGADIM_FORMAT", value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for `fuzz`.
    #[arg(long, global = true, env = "AMALGADIM_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Tsv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Tsv => Format::Tsv,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local metric dimension and a lexicographically smallest basis of a `.gr` graph.
    Dim { graph: PathBuf },
    /// Build the host graph of a `.amg` spec and write it as `.gr`.
    Amalgamate {
        spec: PathBuf,
        #[arg(short = 'o', long = "out", env = "AMALGADIM_O")]
        out: PathBuf,
    },
    /// Traversals, co-traversals, covers and every bound of a `.amg` spec.
    Bounds {
        spec: PathBuf,
        /// Also compute dim_l(H) exactly.
        #[arg(long)]
        exact: bool,
        /// Let every traversal help the co-traversal.
        #[arg(long)]
        pooled: bool,
    },
    /// Write a named construction (`.amg` plus parts) or a graph family (`.gr`).
    #[command(
        after_help = "Constructions: one-plus-one, spider N, wheel-prism N, watermelon N, \
crude-tight R M1,M2,.., fan-chain M N, fan-chain-spaced M N, chi J M, subdivided-join J R, \
join-kbar J M1,M2,.., sum-tight, sum-tight-second N, k5-pair, k5-c5-covers, k4-gadget, fan-pair, \
lower-tight-join, odd-paths L1,L2,...\n\
Families: path:N cycle:N complete:N empty:N prism:N fan:M,N wheel:M,N spider:L1,L2,.. (or L^K)."
    )]
    Gen {
        /// Construction or family name followed by its parameters.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short = 'o', long = "out", env = "AMALGADIM_O")]
        out: PathBuf,
    },
    /// Check every catalogued instance against its claims.
    VerifyPaper {
        /// Keep instances whose label contains this substring.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Audit random isometric amalgams.
    Fuzz {
        count: usize,
        size_cap: usize,
        /// Directory for counterexample bundles.
        #[arg(short = 'o', long = "out", env = "AMALGADIM_O")]
        out: Option<PathBuf>,
    },
}

struct Failure {
    error: Error,
    /// Records completed before the failure.
    partial: Report,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        Failure {
            error,
            partial: Report::new(),
        }
    }
}

/// Output text plus the exit status.
struct Run {
    text: String,
    status: u8,
}

impl Run {
    fn ok(text: String) -> Run {
        Run { text, status: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io { .. }
        | Error::BadParameter(_)
        | Error::DuplicateVertex(_)
        | Error::UnknownEndpoint(_)
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::BadName(_) => 2,
        Error::Disconnected | Error::DisconnectedPart(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::InvalidEmbedding(_) | Error::UnknownVertex(_) => 5,
        _ => 1,
    }
}

fn search_options(cli: &Cli) -> SearchOptions {
    SearchOptions {
        workers: cli.threads as usize,
        node_limit: cli.nodes,
        timeout: Some(Duration::from_secs(cli.timeout)),
    }
}

fn cmd_dim(path: &Path, opts: &SearchOptions, format: Format) -> Result<Run, Failure> {
    let g = read_graph(path)?;
    let mut r = Report::new();
    r.push("n", g.order());
    r.push("m", g.size());
    match local_metric_dimension(&g, opts) {
        Ok(b) => {
            r.push("dim_l", b.size);
            r.push("basis", join_names(&g, &b.witness));
            Ok(Run::ok(r.render(format)))
        }
        Err(error @ Error::BudgetExceeded { .. }) => {
            r.push("dim_l", "timeout");
            Err(Failure { error, partial: r })
        }
        Err(error) => Err(Failure { error, partial: r }),
    }
}

fn cmd_amalgamate(spec: &Path, out: &Path, format: Format) -> Result<Run, Failure> {
    let am = read_amalgam(spec)?;
    write_file(out, &format_host(&am))?;
    let mut r = amalgam_records(&am);
    r.push("out", out.display());
    Ok(Run::ok(r.render(format)))
}

fn cmd_bounds(
    spec: &Path,
    exact: bool,
    pooled: bool,
    opts: &SearchOptions,
    format: Format,
) -> Result<Run, Failure> {
    let am = read_amalgam(spec)?;
    let bopts = BoundOptions {
        search: opts.clone(),
        compute_exact: exact,
        scope: if pooled {
            CotraversalScope::AllTraversals
        } else {
            CotraversalScope::OwnTraversal
        },
    };
    match bound_report(&am, &bopts) {
        Ok(rep) => {
            let r = bound_records(&am, &rep);
            let text = r.render(format);
            if r.get("exact") == Some("timeout") {
                Ok(Run { text, status: 4 })
            } else {
                Ok(Run::ok(text))
            }
        }
        Err(error) => {
            let mut partial = amalgam_records(&am);
            if matches!(error, Error::BudgetExceeded { .. }) {
                partial.push("exact", "timeout");
            }
            Err(Failure { error, partial })
        }
    }
}

fn cmd_gen(spec: &[String], out: &Path, format: Format) -> Result<Run, Failure> {
    let name = spec[0].as_str();
    let is_construction = !name.contains(':') && CONSTRUCTION_NAMES.contains(&name);
    let mut r = Report::new();
    if is_construction {
        let c = Construction::parse(spec)?;
        let inst = c.build()?;
        write_amalgam(&inst.amalgam, out)?;
        r.push("instance", inst.label());
        r.extend(amalgam_records(&inst.amalgam));
    } else {
        let fam = FamilySpec::parse(spec)?;
        let g = generate(&fam)?;
        write_file(out, &format_graph(&g, &[fam.to_string()]))?;
        r.push("family", &fam);
        r.push("n", g.order());
        r.push("m", g.size());
    }
    r.push("out", out.display());
    Ok(Run::ok(r.render(format)))
}

fn outcome_line(o: &Outcome, format: Format) -> String {
    let note = o.note.as_deref().unwrap_or("");
    match format {
        Format::Tsv => format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            o.status, o.instance, o.quantity, o.expected, o.observed, note
        ),
        Format::Text => {
            let mut line = format!(
                "{:<7} {} | {} | expected {} | observed {}",
                o.status, o.instance, o.quantity, o.expected, o.observed
            );
            if !note.is_empty() {
                let _ = write!(line, " | {note}");
            }
            line.push('\n');
            line
        }
    }
}

fn cmd_verify(filter: Option<&str>, opts: &SearchOptions, format: Format) -> Result<Run, Failure> {
    let mut text = String::new();
    let (mut pass, mut fail, mut flagged) = (0usize, 0usize, 0usize);
    for c in catalogue() {
        let inst = c.build()?;
        if filter.is_some_and(|f| !inst.label().contains(f)) {
            continue;
        }
        for o in verify_instance(&inst, opts)? {
            match o.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Flagged => flagged += 1,
            }
            text.push_str(&outcome_line(&o, format));
        }
    }
    let mut r = Report::new();
    r.push("pass", pass);
    r.push("fail", fail);
    r.push("flagged", flagged);
    text.push_str(&r.render(format));
    Ok(Run {
        text,
        status: u8::from(fail > 0),
    })
}

fn cmd_fuzz(
    count: usize,
    size_cap: usize,
    seed: u64,
    out: Option<&Path>,
    opts: &SearchOptions,
    format: Format,
) -> Result<Run, Failure> {
    let s = fuzz(count, size_cap, seed, opts, out)?;
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut r = Report::new();
    r.push("cases", s.cases);
    r.push("seed", seed);
    r.push("size_cap", size_cap);
    r.push("max_order", s.max_order);
    r.push("invariant_violations", s.violations.len());
    for (case, msg) in &s.violations {
        r.push(format!("violation.{case}"), msg);
    }
    r.push("lower_violations", s.lower_violations.len());
    r.push("lower_violation_cases", list(&s.lower_violations));
    r.push("crude_violations", s.crude_violations.len());
    r.push("crude_violation_cases", list(&s.crude_violations));
    r.push("m_set_findings", s.m_set_findings);
    r.push("bundles", s.bundles.len());
    Ok(Run {
        text: r.render(format),
        status: u8::from(!s.violations.is_empty()),
    })
}

fn run(cli: &Cli) -> Result<Run, Failure> {
    let opts = search_options(cli);
    let format = Format::from(cli.format);
    match &cli.command {
        Command::Dim { graph } => cmd_dim(graph, &opts, format),
        Command::Amalgamate { spec, out } => cmd_amalgamate(spec, out, format),
        Command::Bounds {
            spec,
            exact,
            pooled,
        } => cmd_bounds(spec, *exact, *pooled, &opts, format),
        Command::Gen { spec, out } => cmd_gen(spec, out, format),
        Command::VerifyPaper { filter } => cmd_verify(filter.as_deref(), &opts, format),
        Command::Fuzz {
            count,
            size_cap,
            out,
        } => cmd_fuzz(*count, *size_cap, cli.seed, out.as_deref(), &opts, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = Format::from(cli.format);
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(r.status)
        }
        Err(f) => {
            print!("{}", f.partial.render(format));
            eprintln!("error: {}", f.error);
            ExitCode::from(exit_code(&f.error))
        }
    }
}
