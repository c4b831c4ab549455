use clap::{Parser, Subcommand, ValueEnum};
use liesplit::commands::{self, Flags, GenerateKind};
use liesplit::report::EXIT_INPUT;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Decompose split Lie algebras and weight modules given as JSON files.
///
/// Exit codes: 0 all checks pass, 1 input error, 2 a theorem check failed
/// although its hypotheses held, 3 some hypothesis does not hold.
#[derive(Parser)]
#[command(name = "liesplit", version)]
struct Cli {
    /// Emit the report as canonical JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Chain length bound for the brute-force connection oracle.
    #[arg(long, global = true, value_name = "N")]
    max_depth: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check Jacobi, splitness, the module axiom and symmetry.
    Validate { file: PathBuf },
    /// Roots and root spaces of an algebra (or of a module's algebra).
    Roots { file: PathBuf },
    /// Weights and weight spaces of a module.
    Weights { file: PathBuf },
    /// Classes of the weight connection relation, cross-checked by chain enumeration.
    ConnectWeights { file: PathBuf },
    /// Classes of the root connection relation, cross-checked by chain enumeration.
    ConnectRoots { file: PathBuf },
    /// Ideals indexed by root classes.
    DecomposeAlgebra { file: PathBuf },
    /// Submodules indexed by weight classes.
    DecomposeModule { file: PathBuf },
    /// Match module pieces with the ideals acting on them.
    Pair {
        /// A module file, optionally preceded by the file of its algebra.
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
    },
    /// Minimal submodules and the simple / split-pair verdict.
    SimpleComponents { file: PathBuf },
    /// Build the fixed subalgebra and the anti-fixed module of an involution.
    InvolutionSplit { file: PathBuf },
    /// Print a built-in example as an input file.
    Fixture {
        /// One of the names listed by `liesplit fixture --list`.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Print a seeded random input file.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "module")]
        kind: Kind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Module,
    System,
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = Flags { max_depth: cli.max_depth };
    let (name, paths) = match cli.command {
        Command::Validate { file } => ("validate", vec![file]),
        Command::Roots { file } => ("roots", vec![file]),
        Command::Weights { file } => ("weights", vec![file]),
        Command::ConnectWeights { file } => ("connect-weights", vec![file]),
        Command::ConnectRoots { file } => ("connect-roots", vec![file]),
        Command::DecomposeAlgebra { file } => ("decompose-algebra", vec![file]),
        Command::DecomposeModule { file } => ("decompose-module", vec![file]),
        Command::Pair { files } => ("pair", files),
        Command::SimpleComponents { file } => ("simple-components", vec![file]),
        Command::InvolutionSplit { file } => ("involution-split", vec![file]),
        Command::Fixture { list: true, .. } => {
            emit(&(liesplit::fixtures::NAMES.join("\n") + "\n"));
            return ExitCode::SUCCESS;
        }
        Command::Fixture { name, .. } => {
            let name = name.unwrap_or_default();
            return match commands::fixture_json(&name) {
                Some(v) => {
                    emit(&commands::pretty(&v));
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!("unknown fixture {name:?}; known: {}", liesplit::fixtures::NAMES.join(", "));
                    ExitCode::from(EXIT_INPUT as u8)
                }
            };
        }
        Command::Generate { seed, kind } => {
            let kind = match kind {
                Kind::Module => GenerateKind::Module,
                Kind::System => GenerateKind::System,
            };
            emit(&commands::pretty(&commands::generate_json(kind, seed)));
            return ExitCode::SUCCESS;
        }
    };
    let report = commands::run(name, &paths, &flags);
    if report.exit_code == EXIT_INPUT {
        if let Some(e) = report.results.get("error").and_then(|e| e.as_str()) {
            eprintln!("error: {e}");
        }
    }
    emit(&report.render(cli.json));
    ExitCode::from(report.exit_code as u8)
}
