use clap::{Parser, Subcommand};
use qt_characters::Budget;
use qtchar::{cmd_kl, cmd_product, cmd_tchar, cmd_verify, CliError, Format, RunConfig, TMode};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qtchar", version, about = "q,t-characters of quantum affine algebras")]
struct Cli {
    /// Cartan type (`A2`, `B3`, `A1xA1`) or JSON (`{"matrix": [[2,-1],[-1,2]]}`).
    #[arg(long, global = true, default_value = "A1")]
    cartan: String,
    #[arg(long, global = true, default_value_t = Budget::default().max_monomials)]
    budget_monomials: usize,
    #[arg(long, global = true, default_value_t = Budget::default().max_a_depth)]
    budget_depth: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Specialize t = 1 on output.
    #[arg(long, global = true)]
    t1: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q,t-character of a dominant monomial via the t-algorithm.
    Tchar { seed: String },
    /// Lower terms P(m', m) of the standard module over the canonical basis.
    Kl { seed: String },
    /// Deformed product of two monomials in X[i,l].
    Product { left: String, right: String },
    /// Run a verification suite.
    Verify { suite: String },
}

fn run(cli: &Cli) -> Result<String, (String, CliError)> {
    let budget = Budget {
        max_monomials: cli.budget_monomials,
        max_a_depth: cli.budget_depth,
    };
    let mode = if cli.t1 { TMode::Classical } else { TMode::Deformed };
    let cfg = RunConfig::new(&cli.cartan, budget, cli.format, mode).map_err(|e| (String::new(), e))?;
    let plain = |r: Result<String, CliError>| r.map_err(|e| (String::new(), e));
    match &cli.command {
        Command::Tchar { seed } => plain(cmd_tchar(&cfg, seed)),
        Command::Kl { seed } => plain(cmd_kl(&cfg, seed)),
        Command::Product { left, right } => plain(cmd_product(&cfg, left, right)),
        Command::Verify { suite } => cmd_verify(&cfg, suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, e)) => {
            print!("{out}");
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
