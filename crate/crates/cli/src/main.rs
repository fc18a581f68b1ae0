//! `circulant`: counts of circulant graphs by formula or brute force, the
//! reference tables, identity verification and prime-pair searches.
//!
//! Exit status: 0 success, 1 an identity or property was violated, 2 usage
//! error, 3 unsupported order or oracle resource limit.

mod commands;
mod failure;
mod output;

use std::process::ExitCode;

use circulant_core::number_theory::DEFAULT_MR_ROUNDS;
use circulant_core::CirculantClass;
use clap::{ArgGroup, Args, Parser, Subcommand};

use output::{Format, Sink};

#[derive(Parser, Debug)]
#[command(
    name = "circulant",
    version,
    about = "Exact enumeration of circulant graphs"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "CIRCULANT_FORMAT",
        default_value = "text"
    )]
    format: Format,

    /// Random Miller-Rabin rounds for primality tests above 2^64.
    #[arg(long, global = true, default_value_t = DEFAULT_MR_ROUNDS, value_parser = clap::value_parser!(u32).range(1..))]
    mr_rounds: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of non-isomorphic circulants of one order and class.
    Count(CountArgs),
    /// Emit table 1 (totals), 2 (coefficients by valency) or 3 (identities).
    Table(TableArgs),
    /// Check identities at every applicable order up to a bound.
    Verify(VerifyArgs),
    /// Nearly doubled primes and Cunningham chains of the second kind.
    Primes(PrimesArgs),
    /// Check log-concavity of the undirected valency sequence.
    Logconcave(LogConcaveArgs),
    /// List the isomorphism classes found by the oracle.
    Classes(ClassesArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    order: u64,
    /// d, u, o, sd, su or t.
    #[arg(long)]
    class: CirculantClass,
    /// Also print the generating polynomial by valency.
    #[arg(long)]
    poly: bool,
    /// Print only the number of circulants of this valency.
    #[arg(long)]
    valency: Option<usize>,
    /// Enumerate by brute force instead of using a formula.
    #[arg(long)]
    oracle: bool,
    /// Let the oracle run up to order 32.
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("range").args(["max", "orders"])))]
struct TableArgs {
    /// 1, 2 or 3.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
    which: u8,
    /// Rows 2..=MAX (table 1 only).
    #[arg(long)]
    max: Option<u64>,
    /// Comma-separated orders.
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<u64>>,
    /// Table 2 block: d, u or o. All three when omitted.
    #[arg(long)]
    class: Option<CirculantClass>,
    /// Fill cells that have no formula from the oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    allow_slow: bool,
    /// Exit with status 3 if any cell is n/a.
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("keys").args(["identity", "all"]).required(true)))]
struct VerifyArgs {
    /// Identity ids such as 4.6, 4.7' or L2.1; repeatable or comma-separated.
    #[arg(long, value_delimiter = ',')]
    identity: Vec<String>,
    /// Every identity in the registry.
    #[arg(long)]
    all: bool,
    /// Largest order (or m for the lemmas) to instantiate.
    #[arg(long, default_value_t = 100)]
    max: u64,
    /// Compare a single coefficient of a polynomial identity.
    #[arg(long)]
    valency: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["nearly_doubled", "chain"]).required(true)))]
struct PrimesArgs {
    /// Pairs of primes (q, p = 2q - 1) with p <= LIMIT.
    #[arg(long)]
    nearly_doubled: bool,
    #[arg(long, default_value_t = 1000, requires = "nearly_doubled")]
    limit: u64,
    /// Indices k <= KMAX with PTILDE*2^k + 1 and PTILDE*2^(k+1) + 1 both prime.
    #[arg(long, requires_all = ["ptilde", "kmax"])]
    chain: bool,
    #[arg(long, requires = "chain")]
    ptilde: Option<u64>,
    #[arg(long, requires = "chain")]
    kmax: Option<u32>,
}

#[derive(Args, Debug)]
struct LogConcaveArgs {
    #[arg(long)]
    order: u64,
    /// Take the valency sequence from the oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Args, Debug)]
struct ClassesArgs {
    #[arg(long)]
    order: u64,
    #[arg(long)]
    class: CirculantClass,
    /// For sd: count the classes that are undirected, tournaments or mixed.
    #[arg(long)]
    shapes: bool,
    #[arg(long)]
    allow_slow: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink = Sink::new(cli.format);
    let outcome = match cli.command {
        Command::Count(a) => commands::count(&mut sink, a),
        Command::Table(a) => commands::table(&mut sink, a),
        Command::Verify(a) => commands::verify(&mut sink, a),
        Command::Primes(a) => commands::primes(&mut sink, a, cli.mr_rounds),
        Command::Logconcave(a) => commands::logconcave(&mut sink, a),
        Command::Classes(a) => commands::classes(&mut sink, a),
    };
    let flushed = sink.finish();
    match outcome.and(flushed.map_err(Into::into)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("circulant: {failure}");
            failure.exit_code()
        }
    }
}
