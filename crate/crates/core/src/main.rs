use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bouquet::config::{Budget, Config};
use bouquet::corpus::run_corpus;
use bouquet::error::Error;
use bouquet::homology::{dkp_fibre, table_set, Parameters};
use bouquet::job::parse_job;
use bouquet::report::{run_homology, run_invariants, Format, Report, TablesReport};

#[derive(Parser)]
#[command(name = "bouquet", version, about = "Invariants and Milnor fibre homology of germs f = g*H*g^t")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for the generic recombinations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Reduction steps allowed per standard basis.
    #[arg(long, global = true)]
    budget_reductions: Option<u64>,
    /// Elements a standard basis may grow to.
    #[arg(long, global = true)]
    budget_basis: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute mu0, mu1, a, corank and #A1.
    Invariants { job: PathBuf },
    /// Compute the Milnor fibre homology, bouquet and every table check.
    Homology { job: PathBuf },
    /// Sphere dimension of the Milnor fibre of D(k, p).
    Dkp {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print every homology table for given invariants.
    Tables {
        #[arg(long)]
        mu0: u64,
        #[arg(long)]
        mu1: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        corank: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        a1: u64,
    },
    /// Run the built-in regression corpus.
    Corpus,
}

impl Common {
    fn format(&self) -> Format {
        match self.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }

    fn config(&self) -> Config {
        let d = Budget::default();
        Config {
            budget: Budget {
                max_reductions: self.budget_reductions.unwrap_or(d.max_reductions),
                max_basis: self.budget_basis.unwrap_or(d.max_basis),
            },
            ..Config::default()
        }
    }
}

fn fail(msg: impl std::fmt::Display, code: i32) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code as u8)
}

fn load(path: &PathBuf) -> Result<bouquet::hessian::SingularityInput, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display()), 2))?;
    parse_job(&text).map_err(|e| fail(format!("{}: {e}", path.display()), e.exit_code()))
}

fn emit(report: &Report, format: Format) -> ExitCode {
    print!("{}", report.render(format));
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = &cli.common;
    let (config, format) = (common.config(), common.format());
    match &cli.command {
        Command::Invariants { job } => {
            let input = match load(job) {
                Ok(i) => i,
                Err(code) => return code,
            };
            match run_invariants(&input, common.seed, &config) {
                Ok(r) => emit(&r, format),
                Err(f) => fail(&f, f.exit_code()),
            }
        }
        Command::Homology { job } => {
            let input = match load(job) {
                Ok(i) => i,
                Err(code) => return code,
            };
            match run_homology(&input, common.seed, &config) {
                Ok(r) => emit(&r, format),
                Err(f) => fail(&f, f.exit_code()),
            }
        }
        Command::Dkp { k, p, n } => match dkp_fibre(*k, *p, *n) {
            Ok(d) => {
                match format {
                    Format::Text => println!("S^{d}"),
                    Format::Json => println!("{}", serde_json::json!({ "k": k, "p": p, "n": n, "sphere_dim": d })),
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e, 2),
        },
        Command::Tables { mu0, mu1, a, corank, n, a1 } => {
            let p = Parameters { mu0: *mu0, mu1: *mu1, a: *a, corank: *corank, a1: *a1, n: *n };
            match table_set(p) {
                Ok(set) => {
                    let r = TablesReport::new(&set);
                    print!("{}", r.render(format));
                    if r.all_pass() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(3)
                    }
                }
                Err(e @ Error::InvalidInput(_)) => fail(&e, 2),
                Err(e) => fail(&e, e.exit_code()),
            }
        }
        Command::Corpus => {
            let summary = run_corpus(&config);
            match format {
                Format::Text => print!("{}", summary.render_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes")),
            }
            if summary.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
