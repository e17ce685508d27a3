use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rrca_cli::commands::{self, GordonArgs};
use rrca_cli::{CliError, GordonRecord, ParameterInput};

#[derive(Parser)]
#[command(name = "rrca", version, about = "Restricted rational Cherednik algebras at t = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Generic point of a hyperplane in GGOR coordinates, e.g. "k1_1-k1_2"
    #[arg(long, conflicts_with_all = ["params", "named"])]
    hyperplane: Option<String>,
    /// Explicit values, e.g. "c1=1,c2=-1/2" or "k1_1=k,k1_2=2*k"
    #[arg(long, conflicts_with = "named")]
    params: Option<String>,
    /// Parametrisation stored with the group data, e.g. BR
    #[arg(long)]
    named: Option<String>,
}

impl ParamArgs {
    fn input(&self) -> ParameterInput {
        match (&self.hyperplane, &self.params, &self.named) {
            (Some(h), _, _) => ParameterInput::Hyperplane(h.clone()),
            (_, Some(p), _) => ParameterInput::Values(p.clone()),
            (_, _, Some(n)) => ParameterInput::Named(n.clone()),
            _ => ParameterInput::Generic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Group data
    Group {
        #[command(subcommand)]
        what: GroupCommand,
    },
    /// Euler families at a parameter
    EulerFamilies {
        id: String,
        #[command(flatten)]
        param: ParamArgs,
    },
    /// Build a Verma module
    Verma {
        id: String,
        /// Irrep number (from 1) or label such as phi_1_4
        irrep: String,
        #[command(flatten)]
        param: ParamArgs,
        /// Write the module in text form
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Heads and Verma decompositions, written as a record
    Gordon {
        id: String,
        #[command(flatten)]
        param: ParamArgs,
        /// Irreps of one family, e.g. 2,3,4; repeat for several families
        #[arg(long)]
        family: Vec<String>,
        /// Generators tried first, e.g. y1,y2,g2
        #[arg(long)]
        gset: Option<String>,
        /// Primes never used for specialization
        #[arg(long, value_delimiter = ',')]
        p_exclude: Vec<u64>,
        /// Random seed, at most 2^63 - 1 so that records can store it
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u64).range(..=i64::MAX as u64))]
        seed: u64,
        /// Record file; printed to stdout when absent
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare a record with another record or with the shipped expected record
    Compare { record: PathBuf, other: Option<PathBuf> },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, reflections, invariants and irreps
    Info { id: String },
}

fn read_record(path: &PathBuf) -> Result<GordonRecord, CliError> {
    GordonRecord::from_toml(&std::fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Group { what: GroupCommand::Info { id } } => print!("{}", commands::group_info(&commands::group(&id)?)),
        Command::EulerFamilies { id, param } => print!("{}", commands::euler(&commands::group(&id)?, &param.input())?),
        Command::Verma { id, irrep, param, output } => {
            let m = commands::verma(&commands::group(&id)?, &irrep, &param.input())?;
            print!("{}", commands::verma_summary(&m));
            if let Some(path) = output {
                std::fs::write(path, m.to_text())?;
            }
        }
        Command::Gordon { id, param, family, gset, p_exclude, seed, output } => {
            let g = commands::group(&id)?;
            let args = GordonArgs { families: family, gset, p_exclude, seed };
            let record = commands::run_gordon(&g, &param.input(), &args)?;
            match output {
                Some(path) => std::fs::write(path, record.to_toml()?)?,
                None => print!("{}", record.to_toml()?),
            }
        }
        Command::Compare { record, other } => {
            let a = read_record(&record)?;
            let b = other.as_ref().map(read_record).transpose()?;
            let diffs = commands::run_compare(&a, b.as_ref())?;
            if !diffs.is_empty() {
                for d in &diffs {
                    println!("{d}");
                }
                return Err(CliError::Record(format!("{} fields differ", diffs.len())));
            }
            println!("records agree");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
