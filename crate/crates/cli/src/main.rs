use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chibound::c5::{partition_of, verify_properties};
use chibound::generators::{mycielski_graph, random_graph, schlafli_complement, RandomSpec};
use chibound::groetzsch::{
    dihedral_closure, enumerate_labellings, format_labelling, groetzsch_graph, Domains,
};
use chibound::io::{decode_auto, decode_coloring, Format};
use chibound::oracles::{chromatic_number, clique_number};
use chibound::{class_membership, color, verify_coloring, Graph, Membership};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Recognise and colour (P6, diamond)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph encoding of the input (and of `gen` output).
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,

    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Json)]
    output: OutputArg,

    /// Seed for `gen random`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Vertex count for `gen random`, order for `gen mycielski`.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Edge probability for `gen random`.
    #[arg(long, global = true, default_value_t = 0.5)]
    p: f64,

    /// `labellings`: search from unrestricted domains.
    #[arg(long, global = true)]
    exhaustive: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership, with a forbidden-pattern witness on failure.
    Check { file: Option<PathBuf> },
    /// Colour a class member with at most omega + 3 colours.
    Color { file: Option<PathBuf> },
    /// Check a colouring file against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Exact chromatic number.
    Chi { file: Option<PathBuf> },
    /// Exact clique number.
    Omega { file: Option<PathBuf> },
    /// Partition around an induced C5 and the property report.
    Partition { file: Option<PathBuf> },
    /// Valid labellings of the Grötzsch graph.
    Labellings,
    /// Print a named or random graph.
    Gen { name: GenName },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    G6,
    Dimacs,
    Json,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenName {
    C5,
    Groetzsch,
    Mycielski,
    SchlafliComplement,
    Random,
}

/// Exit status for a completed run.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Violation,
}

struct Report {
    status: Status,
    json: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Status> {
    let report = match &cli.command {
        Command::Check { file } => check(&read_graph(cli, file.as_deref())?),
        Command::Color { file } => color_cmd(&read_graph(cli, file.as_deref())?)?,
        Command::Verify { graph, coloring } => {
            let g = read_graph(cli, Some(graph))?;
            let text = read_input(Some(coloring))?;
            let c = decode_coloring(&text)
                .with_context(|| format!("reading {}", coloring.display()))?;
            verify(&g, &c)
        }
        Command::Chi { file } => chi(&read_graph(cli, file.as_deref())?)?,
        Command::Omega { file } => omega(&read_graph(cli, file.as_deref())?),
        Command::Partition { file } => partition(&read_graph(cli, file.as_deref())?)?,
        Command::Labellings => return labellings(cli.exhaustive),
        Command::Gen { name } => return gen(cli, *name),
    };
    emit(cli, &report)?;
    Ok(report.status)
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .context("reading standard input")?;
    Ok(s)
}

fn read_graph(cli: &Cli, path: Option<&Path>) -> Result<Graph> {
    let text = read_input(path)?;
    let file = path.filter(|p| *p != Path::new("-"));
    let graph = match cli.format {
        FormatArg::Auto => decode_auto(file, &text).map(|(_, g)| g),
        explicit => format_of(explicit).decode(&text),
    };
    graph.with_context(|| match file {
        Some(p) => format!("reading {}", p.display()),
        None => "reading standard input".to_string(),
    })
}

fn format_of(arg: FormatArg) -> Format {
    match arg {
        FormatArg::G6 | FormatArg::Auto => Format::Graph6,
        FormatArg::Dimacs => Format::Dimacs,
        FormatArg::Json => Format::Json,
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let mut out = io::stdout().lock();
    match cli.output {
        OutputArg::Json => {
            writeln!(out, "{}", serde_json::to_string(&report.json)?)?;
            eprintln!("{}", report.text);
        }
        OutputArg::Text => {
            let paint = out.is_terminal() && std::env::var_os("NO_COLOR").is_none();
            let code = if report.status == Status::Ok {
                "32"
            } else {
                "31"
            };
            if paint {
                writeln!(out, "\x1b[{code}m{}\x1b[0m", report.text)?;
            } else {
                writeln!(out, "{}", report.text)?;
            }
        }
    }
    Ok(())
}

fn check(g: &Graph) -> Report {
    match class_membership(g) {
        Membership::Member => Report {
            status: Status::Ok,
            json: json!({ "result": "member" }),
            text: "member".into(),
        },
        Membership::NonMember { witness } => Report {
            status: Status::Violation,
            text: format!(
                "non-member: induced {} on {:?}",
                witness.pattern, witness.vertices
            ),
            json: json!({ "result": "non-member", "witness": witness }),
        },
    }
}

fn color_cmd(g: &Graph) -> Result<Report> {
    if let Membership::NonMember { .. } = class_membership(g) {
        return Ok(check(g));
    }
    let (c, trace) = color(g).context("colouring failed")?;
    if let Err(v) = verify_coloring(g, &c) {
        bail!("internal error: produced colouring fails verification: {v}");
    }
    let omega = clique_number(g).0;
    Ok(Report {
        status: Status::Ok,
        text: format!(
            "{} colours, omega {omega}, {} trace steps",
            c.palette,
            trace.len()
        ),
        json: json!({
            "palette": c.palette,
            "colors": c.colors,
            "omega": omega,
            "trace": trace,
        }),
    })
}

fn verify(g: &Graph, c: &chibound::Coloring) -> Report {
    match verify_coloring(g, c) {
        Ok(()) => Report {
            status: Status::Ok,
            json: json!({ "valid": true, "palette": c.palette }),
            text: format!("valid {}-colouring", c.palette),
        },
        Err(v) => Report {
            status: Status::Violation,
            text: format!("invalid: {v}"),
            json: json!({ "valid": false, "violation": v }),
        },
    }
}

fn chi(g: &Graph) -> Result<Report> {
    let (k, c) = chromatic_number(g)?;
    Ok(Report {
        status: Status::Ok,
        json: json!({ "chi": k, "colors": c.colors }),
        text: format!("chi = {k}"),
    })
}

fn omega(g: &Graph) -> Report {
    let (w, clique) = clique_number(g);
    Report {
        status: Status::Ok,
        json: json!({ "omega": w, "clique": clique }),
        text: format!("omega = {w}, clique {clique:?}"),
    }
}

fn partition(g: &Graph) -> Result<Report> {
    let part = match partition_of(g) {
        None => {
            return Ok(Report {
                status: Status::Ok,
                json: json!({ "c5": null }),
                text: "no induced C5".into(),
            })
        }
        Some(Err(e)) => {
            return Ok(Report {
                status: Status::Violation,
                json: json!({ "error": e.to_string() }),
                text: e.to_string(),
            })
        }
        Some(Ok(p)) => p,
    };
    let report = verify_properties(g, &part);
    let violated = report.violated();
    let mut text = format!("C5 on {:?}", part.q);
    for v in g.vertices() {
        if let Some(name) = part.set_name(v) {
            text.push_str(&format!("\n  {v}: {name}"));
        }
    }
    text.push_str(&if violated.is_empty() {
        "\nall 21 properties hold".to_string()
    } else {
        format!("\nviolated properties: {violated:?}")
    });
    Ok(Report {
        status: if violated.is_empty() {
            Status::Ok
        } else {
            Status::Violation
        },
        json: json!({ "partition": part, "properties": report }),
        text,
    })
}

fn labellings(exhaustive: bool) -> Result<Status> {
    let start = if exhaustive {
        Domains::full()
    } else {
        Domains::initial()
    };
    let ls = enumerate_labellings(&start);
    let mut out = io::stdout().lock();
    for l in &ls {
        writeln!(out, "{}", format_labelling(l))?;
    }
    if exhaustive {
        let base = enumerate_labellings(&Domains::initial());
        let closed = dihedral_closure(&base) == ls;
        eprintln!(
            "{} labellings; {} the rotations and reflections of the {} with vertex 0 in {{1, 25}}",
            ls.len(),
            if closed { "equal to" } else { "NOT equal to" },
            base.len()
        );
    } else {
        eprintln!("{} labellings", ls.len());
    }
    Ok(Status::Ok)
}

fn gen(cli: &Cli, name: GenName) -> Result<Status> {
    let g = match name {
        GenName::C5 => Graph::cycle(5),
        GenName::Groetzsch => groetzsch_graph(),
        GenName::Mycielski => {
            let k = cli.n.unwrap_or(4);
            if !(1..=8).contains(&k) {
                bail!("mycielski order must be between 1 and 8, got {k}");
            }
            mycielski_graph(k)
        }
        GenName::SchlafliComplement => schlafli_complement(),
        GenName::Random => {
            if !(0.0..=1.0).contains(&cli.p) {
                bail!("--p must lie in [0, 1], got {}", cli.p);
            }
            random_graph(RandomSpec {
                n: cli.n.unwrap_or(10),
                p: cli.p,
                seed: cli.seed,
            })
        }
    };
    print!("{}", format_of(cli.format).encode(&g));
    Ok(Status::Ok)
}
