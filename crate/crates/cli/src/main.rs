//! `sunlet`: build, verify, render and cross-check sunlet coverings of
//! toroidal grids.
//!
//! Exit codes: 0 success, 1 usage or unreadable input, 2 verification
//! failure, 3 parameter out of range.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sunlet_core::export::{self, JsonError, Layout};
use sunlet_core::oracle::{self, SearchOptions};
use sunlet_core::verify::{self, GraphMap, Limits};
use sunlet_core::{make_sunlet, make_torus, Error, Theorem};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_RANGE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sunlet",
    version,
    about = "Sunlet factorizations of toroidal grids"
)]
struct Cli {
    /// Accepted for scripting; every command is deterministic regardless.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one of the three coverings and write it out.
    Build(BuildArgs),
    /// Check a covering document; exits 2 if any check fails.
    Verify(VerifyArgs),
    /// Brute-force and literal-walk oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LayoutArg {
    Flat,
    Annular,
}

impl From<LayoutArg> for Layout {
    fn from(l: LayoutArg) -> Self {
        match l {
            LayoutArg::Flat => Layout::Flat,
            LayoutArg::Annular => Layout::Annular,
        }
    }
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Which construction: 1 (one sunlet), 2 (n sunlets) or 3 (n² sunlets).
    #[arg(long, value_parser = ["1", "2", "3"])]
    theorem: String,
    #[arg(long)]
    n: usize,
    /// Output file; standard output when absent or `-`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, value_enum, default_value = "flat")]
    layout: LayoutArg,
    /// Embed a verification report in JSON output.
    #[arg(long)]
    report: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Document to check; `-` reads standard input.
    #[arg(long = "in")]
    input: PathBuf,
    /// Keep every counterexample instead of the first few per check.
    #[arg(long)]
    full: bool,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Count orientations of S¹_p with out-degree one everywhere.
    FsmCount {
        #[arg(long)]
        p: usize,
    },
    /// Enumerate all edge partitions of C_rows □ C_cols into copies of S¹_p.
    Decompose {
        #[arg(long, default_value_t = 4)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<usize>,
        /// Also print every solution as edge lists.
        #[arg(long)]
        list: bool,
    },
    /// Walk the Hamiltonian cycle of C_n □ C_n row by row.
    ExpandH {
        #[arg(long)]
        n: usize,
    },
    /// Walk the n closed staircases of C_2n □ C_2n and check they tile it.
    Staircases {
        #[arg(long)]
        n: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_RANGE,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        let code = match e {
            JsonError::Malformed(_)
            | JsonError::UnknownSchemaVersion(_)
            | JsonError::MissingSchemaVersion => EXIT_USAGE,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text),
        _ => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
    }
}

fn build(args: &BuildArgs) -> Result<(), Failure> {
    let theorem: Theorem = args.theorem.parse().map_err(Failure::usage)?;
    let covering = theorem.build(args.n)?;
    let text = match args.format {
        Format::Json => {
            let report = args.report.then(|| verify::report_covering(&covering));
            export::to_json(&covering, report.as_ref())
        }
        Format::Dot => export::to_dot(
            &covering,
            &export::default_palette(covering.domain().copies()),
        )?,
        Format::Svg => export::to_svg(&covering, args.layout.into()),
    };
    write_output(args.out.as_ref(), &text)?;
    Ok(())
}

fn verify_document(args: &VerifyArgs) -> Result<(), Failure> {
    let text = read_input(&args.input)?;
    let (covering, _) = export::from_json(&text)?;
    let limits = if args.full {
        Limits::unlimited()
    } else {
        Limits::default()
    };
    let report = verify::report(&GraphMap::from(&covering), limits);
    io::stdout()
        .lock()
        .write_all(export::report_to_json(&report).as_bytes())?;
    if report.passes() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFY,
            message: format!(
                "{} n={}: verification failed",
                covering.theorem(),
                covering.n()
            ),
        })
    }
}

fn run_oracle(cmd: &OracleCommand) -> Result<(), Failure> {
    let mut out = String::new();
    match *cmd {
        OracleCommand::FsmCount { p } => {
            let sunlet = make_sunlet(p)?;
            let found = oracle::enumerate_fsm_orientations(sunlet.graph())?;
            out.push_str(&format!("{}\n", found.count));
        }
        OracleCommand::Decompose {
            p,
            rows,
            cols,
            limit,
            list,
        } => {
            let grid = make_torus(rows, cols)?;
            let search = oracle::brute_force_decompositions(
                &grid,
                p,
                SearchOptions {
                    limit,
                    ..SearchOptions::default()
                },
            )?;
            out.push_str(&format!(
                "solutions: {}{}\n",
                search.solutions.len(),
                if search.exhaustive { "" } else { " (capped)" }
            ));
            if list {
                for solution in &search.solutions {
                    let classes: Vec<String> = solution
                        .classes
                        .iter()
                        .map(|class| {
                            let edges: Vec<String> = class
                                .iter()
                                .map(|&e| {
                                    let (u, v) = grid.graph().edge(e);
                                    let (a, b) = (grid.coords(u), grid.coords(v));
                                    format!("{},{}-{},{}", a.0, a.1, b.0, b.1)
                                })
                                .collect();
                            format!("[{}]", edges.join(" "))
                        })
                        .collect();
                    out.push_str(&classes.join(" "));
                    out.push('\n');
                }
            }
        }
        OracleCommand::ExpandH { n } => {
            let walk = oracle::t1_expand_h(n)?;
            let line: Vec<String> = walk.iter().map(|(x, y)| format!("({x},{y})")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        OracleCommand::Staircases { n } => {
            if n < 2 {
                return Err(Error::TooSmall {
                    what: "n",
                    min: 2,
                    got: n,
                }
                .into());
            }
            for i in 0..n {
                let line: Vec<String> = oracle::walk_staircase(i, n)
                    .iter()
                    .map(|(x, y)| format!("({x},{y})"))
                    .collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            let ok = oracle::check_staircase_tiling(n);
            out.push_str(&format!("tiling: {}\n", if ok { "ok" } else { "FAILED" }));
            io::stdout().lock().write_all(out.as_bytes())?;
            if !ok {
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: "staircases do not tile the grid".into(),
                });
            }
            return Ok(());
        }
    }
    io::stdout().lock().write_all(out.as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Build(args) => build(args),
        Command::Verify(args) => verify_document(args),
        Command::Oracle(cmd) => run_oracle(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sunlet: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
