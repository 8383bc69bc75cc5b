//! Command-line front end: products, composition of stored maps, batch checks.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use octomod::bimodule::ModuleShape;
use octomod::homalg::{regular_compose_left, regular_compose_right};
use octomod::json::{map_from_json, map_to_json};
use octomod::paralinear::{para_linear_dimension, Chirality};
use octomod::verify::{run_all, run_check, IdentityReport, RunParams};
use octomod::Octonion;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] octomod::Error),
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

#[derive(Parser)]
#[command(
    name = "octomod",
    version,
    about = "Exact computations with octonionic bimodules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 8x8 multiplication table of the basis units.
    Table,
    /// Multiply two octonion literals such as `1+2e3-1/2e7`.
    Mul { a: String, b: String },
    /// Regular composition `f ⊛ g` of two maps stored as JSON.
    Compose {
        side: Side,
        f: PathBuf,
        g: PathBuf,
        out: PathBuf,
    },
    /// Run one identity of the catalog, or `all`.
    Check {
        identity: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        max_rank: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
        coeff_bound: i64,
        /// Print a JSON array of reports instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Dimension of the para-linear maps `O^n → O^m`.
    HomDim {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
}

fn unit_label(i: usize) -> String {
    if i == 0 {
        "1".into()
    } else {
        format!("e{i}")
    }
}

fn table() -> String {
    let mut out = format!("{:>4}", "");
    for j in 0..8 {
        out.push_str(&format!("{:>4}", unit_label(j)));
    }
    out.push('\n');
    for i in 0..8 {
        out.push_str(&format!("{:>4}", unit_label(i)));
        for j in 0..8 {
            let p = Octonion::unit(i).mul(&Octonion::unit(j));
            out.push_str(&format!("{:>4}", p.to_string()));
        }
        out.push('\n');
    }
    out
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.clone(),
        message: e.to_string(),
    })
}

fn compose(side: Side, f: &PathBuf, g: &PathBuf, out: &PathBuf) -> Result<(), CliError> {
    let f = map_from_json(&read(f)?)?;
    let g = map_from_json(&read(g)?)?;
    let want = match side {
        Side::Left => Chirality::Left,
        Side::Right => Chirality::Right,
    };
    for map in [&f, &g] {
        if map.chirality() != want {
            return Err(octomod::Error::ChiralityMismatch {
                expected: want.to_string(),
                found: map.chirality().to_string(),
            }
            .into());
        }
    }
    let fg = match side {
        Side::Left => regular_compose_left(&f, &g)?,
        Side::Right => regular_compose_right(&f, &g)?,
    };
    let text = map_to_json(&fg)? + "\n";
    std::fs::write(out, text).map_err(|e| CliError::Io {
        path: out.clone(),
        message: e.to_string(),
    })
}

fn print_reports(reports: &[IdentityReport], json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        );
    } else {
        for r in reports {
            println!("{}", r.line());
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Table => print!("{}", table()),
        Command::Mul { a, b } => {
            let a = Octonion::parse(&a)?;
            let b = Octonion::parse(&b)?;
            println!("{}", a.mul(&b));
        }
        Command::Compose { side, f, g, out } => compose(side, &f, &g, &out)?,
        Command::Check {
            identity,
            trials,
            seed,
            max_rank,
            coeff_bound,
            json,
        } => {
            let params = RunParams {
                trials,
                seed,
                max_rank: max_rank as usize,
                coeff_bound,
            };
            let reports = if identity == "all" {
                run_all(&params)
            } else {
                vec![run_check(&identity, &params)?]
            };
            print_reports(&reports, json);
            let hard = reports
                .iter()
                .filter(|r| r.status == octomod::verify::Status::Fail)
                .count();
            if hard > 0 {
                eprintln!("{hard} check(s) failed");
                return Ok(ExitCode::from(1));
            }
        }
        Command::HomDim { n, m } => {
            let (n, m) = (n as usize, m as usize);
            println!("8nm = {}", 8 * n * m);
            for c in [Chirality::Left, Chirality::Right] {
                let d =
                    para_linear_dimension(c, ModuleShape::standard(n), ModuleShape::standard(m));
                println!("{c} constraint solution space: {d}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
