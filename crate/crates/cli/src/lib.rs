//! Command-line front end: field info, unit computation, candidate search,
//! x²+7y² representation, reference-table verification, and the invariant suites.

use clap::{Parser, Subcommand};

pub mod commands;
pub mod fixtures;
pub mod output;
pub mod verify;

/// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
/// 3 mathematical precondition failure.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Mismatch(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Mismatch(m) | CliError::Precondition(m) => {
                write!(f, "{m}")
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qmersenne",
    version,
    about = "Mersenne primes M_{p,α} = (α^p−1)/(α−1) in real quadratic fields Q(√d)"
)]
pub struct Cli {
    /// Emit one JSON object per line instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the reproducible probable-prime bases
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for candidate evaluation (results are re-sorted, so
    /// output is identical to a serial run)
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field report: ring shape, class-number flag, fundamental unit, and the
    /// irreducibility verdict for α = 1 + u
    Info {
        /// Square-free d > 1
        #[arg(long)]
        d: u64,
    },
    /// Fundamental unit, its norm, and the continued-fraction period
    Unit {
        #[arg(long)]
        d: u64,
    },
    /// Scan prime exponents p ≤ p-max and test each |N(M_{p,α})|
    Search {
        #[arg(long)]
        d: u64,
        /// Use u^k (negative k for inverse powers; k = −1 gives α = √2 when d = 2)
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha_power: i64,
        #[arg(long)]
        p_max: u64,
        /// Trial-division bound of the primality pipeline
        #[arg(long, default_value_t = 10_000)]
        trial_bound: u64,
        /// Total Miller–Rabin rounds of the primality pipeline
        #[arg(long, default_value_t = 24)]
        mr_rounds: u32,
    },
    /// Represent a probable prime N as x² + 7y² and report the mod-8 structure
    Represent {
        /// Decimal N (omit when piping with --from-search)
        n: Option<String>,
        /// Read `search --json` records from stdin and represent each
        /// probable-prime norm
        #[arg(long)]
        from_search: bool,
        #[arg(long, default_value_t = 10_000)]
        trial_bound: u64,
        #[arg(long, default_value_t = 24)]
        mr_rounds: u32,
    },
    /// Recompute every reference table from scratch and diff against fixtures
    #[command(name = "verify-tables")]
    VerifyTables {
        /// Verify a single table (1–7)
        #[arg(long)]
        table: Option<u8>,
    },
    /// Run the invariant suites (Pell, jump formulas, congruences, ...)
    Properties {
        #[arg(long, default_value_t = 201)]
        p_max: u64,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = commands::RunContext {
        json: cli.json,
        seed: cli.seed,
        threads: cli.threads,
    };
    match cli.command {
        Command::Info { d } => commands::cmd_info(&ctx, d),
        Command::Unit { d } => commands::cmd_unit(&ctx, d),
        Command::Search {
            d,
            alpha_power,
            p_max,
            trial_bound,
            mr_rounds,
        } => commands::cmd_search(&ctx, d, alpha_power, p_max, trial_bound, mr_rounds),
        Command::Represent {
            n,
            from_search,
            trial_bound,
            mr_rounds,
        } => commands::cmd_represent(&ctx, n, from_search, trial_bound, mr_rounds),
        Command::VerifyTables { table } => commands::cmd_verify_tables(&ctx, table),
        Command::Properties { p_max } => commands::cmd_properties(&ctx, p_max),
    }
}
