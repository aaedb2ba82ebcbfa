//! `polarcsm`: polar degrees, CSM class polynomials, Grothendieck-ring
//! arithmetic and arrangement characteristic polynomials from the shell.

mod commands;
mod error;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polarcsm::field_poly::DEFAULT_PRIME;
use polarcsm::groebner::{GbConfig, DEFAULT_MAX_REDUCTIONS};
use polarcsm::polar::DegreeMethod;
use polarcsm::{PrimeField, Seed, TrialConfig};
use serde_json::json;

use commands::{ArrangementMethod, GringOp, Report};
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "polarcsm", version, about, propagate_version = true)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Prime modulus of the coefficient field, in [2^20, 2^32).
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Independent randomized trials that must agree.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=64))]
    trials: u64,
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// How projective degrees are measured.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Localized)]
    degree_method: MethodArg,
    /// S-pair reductions allowed per Gröbner basis.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_REDUCTIONS)]
    max_reductions: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Localized,
    Saturation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ArrangementArg {
    Lattice,
    Algebraic,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polar degrees of the subscheme cut out by an ideal file.
    Polar {
        /// Ideal file, or `-` for standard input.
        file: PathBuf,
    },
    /// CSM class polynomials and sectional Euler characteristics.
    Csm {
        /// Ideal file, or `-` for standard input.
        file: PathBuf,
    },
    /// Apply the involution to a polynomial in t, e.g. "4 - 2*t + 2*t^2".
    Involute {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Grothendieck-ring operations on γ-polynomials. Classes are
    /// polynomials in t or the names P^n, A^n and T.
    Gring {
        #[command(subcommand)]
        op: GringCommand,
    },
    /// Characteristic polynomial of a hyperplane arrangement file.
    Arrangement {
        /// Arrangement file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ArrangementArg::Both)]
        method: ArrangementArg,
    },
}

#[derive(Subcommand, Debug)]
enum GringCommand {
    /// Segre product.
    Star {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Affine-concatenation product.
    Dot {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Join in disjoint linear subspaces.
    Join {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Projective cone with a point vertex.
    Cone {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The σ-transform t^i ↦ t^i / i!.
    Sigma {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// γ-polynomial of a named class.
    Class { name: String },
}

impl Opts {
    fn trial_config(&self) -> Result<TrialConfig, CliError> {
        let prime = PrimeField::new(self.prime)?;
        Ok(TrialConfig {
            seed: Seed(self.seed),
            prime,
            trials: self.trials as usize,
            method: match self.degree_method {
                MethodArg::Localized => DegreeMethod::Localized,
                MethodArg::Saturation => DegreeMethod::Saturation,
            },
            gb: GbConfig {
                max_reductions: self.max_reductions,
            },
        })
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Polar { .. } => "polar",
        Command::Csm { .. } => "csm",
        Command::Involute { .. } => "involute",
        Command::Gring { .. } => "gring",
        Command::Arrangement { .. } => "arrangement",
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let cfg = cli.opts.trial_config()?;
    match &cli.command {
        Command::Polar { file } => commands::polar(&read_input(file)?, &cfg),
        Command::Csm { file } => commands::csm(&read_input(file)?, &cfg),
        Command::Involute { poly } => commands::involution(poly),
        Command::Gring { op } => commands::gring(&match op {
            GringCommand::Star { a, b } => GringOp::Star(a.clone(), b.clone()),
            GringCommand::Dot { a, b } => GringOp::Dot(a.clone(), b.clone()),
            GringCommand::Join { a, b } => GringOp::Join(a.clone(), b.clone()),
            GringCommand::Cone { a } => GringOp::Cone(a.clone()),
            GringCommand::Sigma { a } => GringOp::Sigma(a.clone()),
            GringCommand::Class { name } => GringOp::Class(name.clone()),
        }),
        Command::Arrangement { file, method } => {
            let method = match method {
                ArrangementArg::Lattice => ArrangementMethod::Lattice,
                ArrangementArg::Algebraic => ArrangementMethod::Algebraic,
                ArrangementArg::Both => ArrangementMethod::Both,
            };
            commands::arrangement(&read_input(file)?, method, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let params = json!({ "seed": cli.opts.seed, "prime": cli.opts.prime, "trials": cli.opts.trials });
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("polarcsm: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if cli.opts.json {
        let doc = json!({ "command": command_name(&cli.command), "params": params, "result": report.result });
        println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    } else {
        println!("# seed = {}, prime = {}, trials = {}", cli.opts.seed, cli.opts.prime, cli.opts.trials);
        for line in &report.lines {
            println!("{line}");
        }
    }
    match report.failure {
        Some(e) => {
            eprintln!("polarcsm: {e}");
            ExitCode::from(e.exit_code())
        }
        None => ExitCode::SUCCESS,
    }
}
