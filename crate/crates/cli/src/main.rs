use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hfalg_cli::{
    cmd_expset, cmd_goodprimes, cmd_hf, cmd_homcount, cmd_sb, cmd_term, cmd_vnn_build, cmd_vnn_classify,
    load_instance, load_signature, verify, verify_all, CliError, Params, VerifyReport,
};

#[derive(Parser)]
#[command(name = "hfalg", version, about = "Hereditarily finite sets, term algebras and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a set expression: braces, ord(n), kpair(a,b), succ(e), pow(e), union(e)
    Hf { expr: String },
    /// Parse a Polish-notation term and show its tree, height, size and set image
    Term {
        sigfile: PathBuf,
        term: String,
        /// Tokens are single characters without separating spaces
        #[arg(long)]
        compact: bool,
    },
    /// Graded von Neumann construction
    Vnn {
        #[command(subcommand)]
        command: VnnCommand,
    },
    /// Run one theorem checker
    Verify {
        /// One of the ids listed by `verify-all`
        theorem_id: String,
        #[command(flatten)]
        flags: VerifyFlags,
    },
    /// Run every theorem checker at its default bounds
    VerifyAll {
        #[arg(long)]
        json: bool,
    },
    /// Schroeder–Bernstein construction on an instance file
    Sb { instance: PathBuf },
    /// The n ≤ bound with a^(n+1) ≡ a (mod n) for every a
    Expset {
        #[arg(long, default_value_t = 5000)]
        bound: u64,
    },
    /// Iterate the good-prime construction to its fixed point
    Goodprimes,
    /// Count homomorphisms Z_n → Z_m
    Homcount { n: usize, m: usize },
}

#[derive(Subcommand)]
enum VnnCommand {
    /// Print the set image of a term
    Build {
        sigfile: PathBuf,
        term: String,
        #[arg(long)]
        compact: bool,
    },
    /// Report D_S, ON_S and VNN_S membership of a set
    Classify { sigfile: PathBuf, set: String },
}

#[derive(clap::Args)]
struct VerifyFlags {
    /// Size or count limit, replacing the checker's default
    #[arg(long)]
    bound: Option<u64>,
    /// Signature file for the term and graded-ordinal checkers
    #[arg(long)]
    sig: Option<PathBuf>,
    /// Maximum term height to enumerate
    #[arg(long)]
    height: Option<usize>,
    /// Schroeder–Bernstein window upper end
    #[arg(long)]
    window: Option<i64>,
    /// One JSON object per report
    #[arg(long)]
    json: bool,
}

fn print_report(r: &VerifyReport, json: bool) {
    if json {
        println!("{}", r.to_json());
    } else {
        println!("{r}");
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Hf { expr } => println!("{}", cmd_hf(&expr)?),
        Command::Term { sigfile, term, compact } => println!("{}", cmd_term(&load_signature(&sigfile)?, &term, compact)?),
        Command::Vnn { command } => match command {
            VnnCommand::Build { sigfile, term, compact } => {
                println!("{}", cmd_vnn_build(&load_signature(&sigfile)?, &term, compact)?)
            }
            VnnCommand::Classify { sigfile, set } => println!("{}", cmd_vnn_classify(&load_signature(&sigfile)?, &set)?),
        },
        Command::Verify { theorem_id, flags } => {
            let sig = match &flags.sig {
                Some(path) => Some((path.display().to_string(), load_signature(path)?)),
                None => None,
            };
            let params = Params { bound: flags.bound, sig, height: flags.height, window: flags.window };
            let report = verify(&theorem_id, &params)?;
            print_report(&report, flags.json);
            return Ok(report.passed());
        }
        Command::VerifyAll { json } => {
            let reports = verify_all();
            for r in &reports {
                print_report(r, json);
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            if !json {
                println!("{passed}/{} pass", reports.len());
            }
            return Ok(passed == reports.len());
        }
        Command::Sb { instance } => println!("{}", cmd_sb(&load_instance(&instance)?)?),
        Command::Expset { bound } => println!("{}", cmd_expset(bound)?),
        Command::Goodprimes => println!("{}", cmd_goodprimes()),
        Command::Homcount { n, m } => println!("{}", cmd_homcount(n, m)?),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
