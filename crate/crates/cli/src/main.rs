use clap::{Parser, Subcommand};
use qkit::commands::{self, CliError, Output, PairSource};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qkit", version, about = "Green's relations, orders in semigroups and *-pairs for finite Cayley tables")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Green's relations, starred relations, S(S) and the union of subgroups.
    Relations {
        table: String,
        #[arg(long)]
        eggbox: bool,
    },
    /// Print the egg-box diagram.
    Eggbox { table: String },
    /// Decide order notions for a subsemigroup.
    CheckOrder {
        table: String,
        /// Comma separated element indices or labels (default: all of Q).
        #[arg(long)]
        sub: Option<String>,
        /// Repeatable; weak-left, left, straight-weak-left, straight-left,
        /// local-left, very-large, or the -right variants. Default: all.
        #[arg(long)]
        notion: Vec<String>,
        /// Add the three-way equivalence record for regular Q.
        #[arg(long)]
        prop31: bool,
    },
    /// Evaluate every *-pair condition.
    CheckStarpair {
        table: String,
        #[arg(long)]
        sub: Option<String>,
        #[arg(long, value_enum, default_value = "induced")]
        pair: PairSource,
    },
    /// Run theorem suites over all semigroups up to an order.
    Harness {
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        /// Include the curated fixtures.
        #[arg(long)]
        fixtures: bool,
        /// Comma separated suite ids (default: all).
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
    },
    /// Window-verify an infinite example: integer-brandt (3.4), cyclic-brandt
    /// (3.11) or integer-bicyclic (3.14).
    Example {
        which: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
        /// Modulus of the cyclic example.
        #[arg(long, default_value_t = 3)]
        modulus: i64,
        /// Also compare every relation oracle against window search.
        #[arg(long)]
        verify: bool,
    },
    /// Count labeled semigroups of a given order.
    Enumerate {
        order: usize,
        /// Also count isomorphism classes.
        #[arg(long)]
        classes: bool,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.cmd {
        Cmd::Relations { table, eggbox } => Ok(commands::relations(&commands::load(table)?, *eggbox)),
        Cmd::Eggbox { table } => Ok(commands::eggbox(&commands::load(table)?)),
        Cmd::CheckOrder { table, sub, notion, prop31 } => {
            commands::check_order(&commands::load(table)?, sub.as_deref(), notion, *prop31)
        }
        Cmd::CheckStarpair { table, sub, pair } => commands::check_starpair(&commands::load(table)?, sub.as_deref(), *pair),
        Cmd::Harness { max_order, fixtures, suites } => commands::harness(*max_order, *fixtures, suites),
        Cmd::Example { which, window, modulus, verify } => commands::example(which, *modulus, *window, *verify),
        Cmd::Enumerate { order, classes } => commands::enumerate(*order, *classes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("QKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = out.report.to_json();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(2);
            }
            if let Some(t) = &out.text {
                let _ = std::io::stdout().write_all(t.as_bytes());
            }
        }
        None => {
            if let Some(t) = &out.text {
                let _ = std::io::stderr().write_all(t.as_bytes());
            }
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{json}");
        }
    }
    if out.report.any_failure() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
