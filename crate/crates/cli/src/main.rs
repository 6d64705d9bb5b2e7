//! `gutt`: tables, star products and verification suites from the command
//! line. Exit codes: 0 success, 1 check failure or I/O error, 2 bad input.

mod commands;
mod error;
mod expr;
mod spec;
mod verify;

use clap::{Parser, Subcommand};
use error::CliError;
use gutt_core::exact_arith::{int, rat, Rational};
use gutt_core::LieAlgebra;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gutt", version, about = "Exact Gutt star products on Sym(g)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli numbers B_0..B_nmax (B_1 = -1/2).
    Bernoulli { nmax: usize },
    /// Goldberg coefficients c_xi(s_1,...,s_m) for all compositions of n <= nmax.
    Goldberg { nmax: usize },
    /// The BCH series to the given order: goldberg, dynkin or associative.
    Bch {
        order: usize,
        #[arg(default_value = "goldberg")]
        form: String,
    },
    /// Star product f * g. SPEC is a JSON file or heisenberg, so3, abelian<d>.
    Star {
        spec: String,
        f: String,
        g: String,
        /// `formal` or a rational value for z.
        #[arg(long, default_value = "formal")]
        z: String,
        /// Cross-check against the BCH and original constructions.
        #[arg(long)]
        verify: bool,
    },
    /// Run check suites: all, bch, star, hopf or seminorm.
    Verify {
        suite: String,
        /// Algebra spec; defaults to heisenberg and so3.
        spec: Option<String>,
        /// Degree bound for sample grids (suite-specific default).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seminorm order for the continuity estimate.
        #[arg(long = "R", default_value_t = 1.0)]
        r: f64,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counterexample growth table as CSV (k,value,bound).
    Growth {
        /// heisenberg or so3
        algebra: String,
        #[arg(long = "R", default_value_t = 0.5)]
        r: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 20)]
        kmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hopf axioms for x and y at z0 (default: 0, 1 and 2/3).
    HopfVerify {
        spec: String,
        x: String,
        y: String,
        #[arg(long)]
        z: Option<String>,
    },
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Bernoulli { nmax } => print!("{}", commands::bernoulli_table(nmax)?),
        Command::Goldberg { nmax } => print!("{}", commands::goldberg_table(nmax)?),
        Command::Bch { order, form } => print!("{}", commands::bch_table(order, &form)?),
        Command::Star { spec, f, g, z, verify } => {
            let (out, ok) = commands::star(&spec, &f, &g, commands::parse_z(&z)?, verify)?;
            print!("{out}");
            return Ok(ok);
        }
        Command::Verify { suite, spec, degree, seed, r, out } => {
            let algebras: Vec<(String, LieAlgebra)> = match spec {
                Some(name) => vec![(name.clone(), spec::load(&name)?)],
                None => vec![("heisenberg".into(), LieAlgebra::heisenberg(1)), ("so3".into(), LieAlgebra::so3())],
            };
            let log = verify::run(&suite, &algebras, &verify::Settings { degree, seed, r })?;
            print!("{}", log.text);
            if let Some(path) = out {
                write_file(&path, &log.text)?;
            }
            return Ok(log.failures == 0);
        }
        Command::Growth { algebra, r, eps, kmax, out } => {
            let table = commands::growth(&algebra, r, eps, kmax)?;
            let csv = table.to_csv();
            match out {
                Some(path) => {
                    write_file(&path, &csv)?;
                    println!("wrote {} rows to {}", table.rows.len(), path.display());
                }
                None => print!("{csv}"),
            }
        }
        Command::HopfVerify { spec, x, y, z } => {
            let values: Vec<Rational> = match z {
                Some(text) => vec![commands::parse_z(&text)?
                    .ok_or_else(|| CliError::Usage("hopf-verify needs a rational --z".into()))?],
                None => vec![int(0), int(1), rat(2, 3)],
            };
            let (out, ok) = commands::hopf_verify(&spec, &x, &y, &values)?;
            print!("{out}");
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
