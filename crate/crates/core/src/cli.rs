//! The `anthem` command line: `translate`, `analyze`, and `verify`.
//!
//! Exit codes: 0 success; 1 inconclusive (or, for `analyze`, property does
//! not hold); 2 usage or input errors; 3 refusal to verify (non-tight
//! program or private recursion).

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analyze::{check_regularity, check_tightness, Property};
use crate::asp::{parse_program, Program};
use crate::atp::ProverConfig;
use crate::control::{Direction, ProofOutline, Specification, UserGuide};
use crate::fol::Theory;
use crate::transform::{completion, gamma};
use crate::translate::{mu, natural, tau_star, TranslationKind};
use crate::verify::{
    assemble_external_equivalence, assemble_strong_equivalence, run_verification, weak_equivalence_guide,
    ExternalEquivalence, FormulaRepresentation, RunOptions, Side, Verdict,
};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "anthem",
    version,
    about = "Translate answer set programs and verify their equivalence"
)]
pub struct Cli {
    /// Print progress information to standard error.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Equivalence {
    Strong,
    External,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Translate a program into a theory, or transform a theory.
    Translate {
        /// Input file; `-` reads standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
        /// tau-star, natural, or mu (programs); completion or gamma (theories).
        #[arg(long = "with")]
        with: TranslationKind,
    },
    /// Check a syntactic property of a program.
    Analyze {
        /// Input file; `-` reads standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
        /// tightness or regularity.
        #[arg(long, default_value = "tightness")]
        property: Property,
    },
    /// Verify the equivalence of two programs, or of a program and a specification.
    Verify {
        /// strong: all rules, under any extension; external: the public behavior under a user guide.
        #[arg(long)]
        equivalence: Equivalence,
        /// Input files, classified by extension: .lp, .spec, .ug, .po.
        files: Vec<PathBuf>,
        /// How programs are translated for strong equivalence: tau-star or mu.
        #[arg(long, default_value = "tau-star")]
        formula_representation: FormulaRepresentation,
        /// Which entailments to prove: universal (both), forward, or backward.
        #[arg(long, default_value = "universal")]
        direction: Direction,
        /// Skip the tightness and private-recursion checks.
        #[arg(long)]
        bypass_tightness: bool,
        /// Prover time limit per claim in seconds.
        #[arg(short = 't', long = "time-limit", default_value_t = 60)]
        time_limit: u64,
        /// Prover cores per claim.
        #[arg(short = 'm', long = "cores", default_value_t = 1)]
        cores: usize,
        /// Write every problem sent to the prover into this directory.
        #[arg(long)]
        save_problems: Option<PathBuf>,
        /// Report format.
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Left-hand program or specification (instead of positional files).
        #[arg(long)]
        left: Option<PathBuf>,
        /// Right-hand program.
        #[arg(long)]
        right: Option<PathBuf>,
        /// User guide (.ug) for external equivalence.
        #[arg(long)]
        user_guide: Option<PathBuf>,
        /// Proof outline (.po) of definitions and lemmas.
        #[arg(long)]
        proof_outline: Option<PathBuf>,
    },
}

/// Failure carrying the exit code it maps to.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_input(path: &Path) -> Result<String, Exit> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn parse_with<T, E: std::fmt::Display>(path: &Path, parse: impl Fn(&str) -> Result<T, E>) -> Result<T, Exit> {
    let text = read_input(path)?;
    parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_program(path: &Path) -> Result<Program, Exit> {
    parse_with(path, parse_program)
}

fn translate(input: &Path, with: TranslationKind) -> Result<Theory, Exit> {
    if with.takes_program() {
        let program = load_program(input)?;
        Ok(match with {
            TranslationKind::TauStar => tau_star(&program),
            TranslationKind::Mu => mu(&program),
            _ => natural(&program).map_err(|e| usage(e.to_string()))?,
        })
    } else {
        let theory: Theory = parse_with(input, str::parse)?;
        match with {
            TranslationKind::Completion => completion(&theory).map_err(|e| usage(e.to_string())),
            _ => Ok(gamma(&theory)),
        }
    }
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn side_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_side(path: &Path) -> Result<Side, Exit> {
    let name = side_name(path);
    match extension(path) {
        "lp" => Ok(Side::Program {
            name,
            program: load_program(path)?,
        }),
        "spec" => Ok(Side::Specification {
            name,
            specification: parse_with(path, str::parse::<Specification>)?,
        }),
        _ => Err(usage(format!(
            "{}: expected a program (.lp) or a specification (.spec)",
            path.display()
        ))),
    }
}

/// The files of a verification task, sorted by role.
#[derive(Debug, Default, PartialEq, Eq)]
struct Files {
    sides: Vec<PathBuf>,
    user_guide: Option<PathBuf>,
    proof_outline: Option<PathBuf>,
}

fn classify(
    files: &[PathBuf],
    left: Option<PathBuf>,
    right: Option<PathBuf>,
    user_guide: Option<PathBuf>,
    proof_outline: Option<PathBuf>,
) -> Result<Files, Exit> {
    let mut classified = Files {
        sides: vec![],
        user_guide,
        proof_outline,
    };
    let mut positional = vec![];
    for file in files {
        let slot = match extension(file) {
            "lp" | "spec" => {
                positional.push(file.clone());
                continue;
            }
            "ug" => &mut classified.user_guide,
            "po" => &mut classified.proof_outline,
            other => {
                return Err(usage(format!(
                    "{}: cannot infer the role of a `.{other}` file; use --left/--right/--user-guide/--proof-outline",
                    file.display()
                )))
            }
        };
        if slot.replace(file.clone()).is_some() {
            return Err(usage(format!("{}: more than one file with this role", file.display())));
        }
    }
    let mut positional = positional.into_iter();
    let left = left.or_else(|| positional.next());
    let right = right.or_else(|| positional.next());
    if positional.next().is_some() {
        return Err(usage("too many programs or specifications"));
    }
    match (left, right) {
        (Some(l), Some(r)) => classified.sides = vec![l, r],
        _ => return Err(usage("two programs or specifications are required")),
    }
    Ok(classified)
}

#[allow(clippy::too_many_arguments)]
fn verify(command: Command) -> Result<i32, Exit> {
    let Command::Verify {
        equivalence,
        files,
        formula_representation,
        direction,
        bypass_tightness,
        time_limit,
        cores,
        save_problems,
        format,
        left,
        right,
        user_guide,
        proof_outline,
    } = command
    else {
        unreachable!()
    };
    let files = classify(&files, left, right, user_guide, proof_outline)?;
    let task_name = files
        .sides
        .iter()
        .map(|p| side_name(p).replace('.', "_"))
        .collect::<Vec<_>>()
        .join("_vs_");

    let mut claims = match equivalence {
        Equivalence::Strong => {
            if files.user_guide.is_some() || files.proof_outline.is_some() {
                return Err(usage("strong equivalence takes exactly two programs"));
            }
            let programs: Vec<Program> = files
                .sides
                .iter()
                .map(|p| {
                    if extension(p) == "lp" {
                        load_program(p)
                    } else {
                        Err(usage("strong equivalence takes exactly two programs"))
                    }
                })
                .collect::<Result<_, _>>()?;
            assemble_strong_equivalence(&programs[0], &programs[1], formula_representation, direction)
        }
        Equivalence::External => {
            if formula_representation != FormulaRepresentation::TauStar {
                return Err(usage(
                    "external equivalence supports only --formula-representation tau-star",
                ));
            }
            let left = load_side(&files.sides[0])?;
            let right = load_side(&files.sides[1])?;
            let user_guide = match &files.user_guide {
                Some(path) => parse_with(path, str::parse::<UserGuide>)?,
                None => match (&left, &right) {
                    (Side::Program { program: l, .. }, Side::Program { program: r, .. }) => {
                        weak_equivalence_guide(l, r)
                    }
                    _ => UserGuide::default(),
                },
            };
            let outline = match &files.proof_outline {
                Some(path) => parse_with(path, str::parse::<ProofOutline>)?,
                None => ProofOutline::default(),
            };
            let task = ExternalEquivalence {
                left,
                right,
                user_guide,
                outline,
                direction,
                bypass_tightness,
            };
            assemble_external_equivalence(&task).map_err(|e| Exit {
                code: if e.is_refusal() { EXIT_REFUSED } else { EXIT_USAGE },
                message: e.to_string(),
            })?
        }
    };

    let prover = ProverConfig::with_limits(time_limit, cores);
    let options = RunOptions {
        task: task_name,
        save_problems,
    };
    let report = run_verification(&mut claims, &prover, &options).map_err(|e| Exit {
        code: EXIT_INCONCLUSIVE,
        message: e.to_string(),
    })?;
    match format {
        OutputFormat::Text => print!("{report}"),
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize")),
    }
    Ok(match report.verdict {
        Verdict::Success => EXIT_SUCCESS,
        _ => EXIT_INCONCLUSIVE,
    })
}

fn dispatch(cli: Cli) -> Result<i32, Exit> {
    match cli.command {
        Command::Translate { input, with } => {
            let theory = translate(&input, with)?;
            print!("{theory}");
            std::io::stdout().flush().ok();
            Ok(EXIT_SUCCESS)
        }
        Command::Analyze { input, property } => {
            let program = load_program(&input)?;
            let report = match property {
                Property::Regularity => check_regularity(&program),
                _ => check_tightness(&program),
            };
            println!("{report}");
            Ok(if report.verdict {
                EXIT_SUCCESS
            } else {
                EXIT_INCONCLUSIVE
            })
        }
        command @ Command::Verify { .. } => verify(command),
    }
}

/// Run the command line with the given arguments (including the program name).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_SUCCESS };
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();
    match dispatch(cli) {
        Ok(code) => code,
        Err(exit) => {
            eprintln!("error: {}", exit.message);
            exit.code
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
