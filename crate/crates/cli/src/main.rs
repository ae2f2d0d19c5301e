use std::path::PathBuf;

use clap::{Parser, Subcommand};
use nullcone_cli::{run, Command, RunConfig, EXIT_INVALID};

/// Hesselink strata of the null-cone from weights, roots and an inner product.
#[derive(Parser)]
#[command(name = "nullcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct Common {
    /// Problem JSON file or catalog spec, e.g. sl2-forms:2,3,3,4,5
    input: String,
    /// Write the machine-readable report here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a weight/root diagram here (rank 1 and 2 only)
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Skip trees for candidates orthogonal to no root
    #[arg(long)]
    fast: bool,
    /// Cross-check against the brute-force oracle and invariance laws
    #[arg(long)]
    verify: bool,
    /// Report every candidate, not one per Weyl orbit
    #[arg(long)]
    no_dedup: bool,
    /// Largest Weyl orbit to enumerate before giving up
    #[arg(long, value_name = "N")]
    orbit_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full stratification report
    Stratify(Common),
    /// Candidate set only
    Candidates(Common),
    /// Signed trees of every candidate
    Tree(Common),
    /// Run the engine and all oracle checks
    Verify(Common),
    /// List built-in problem families
    CatalogList,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let (command, common) = match cli.command {
        Cmd::Stratify(c) => (Command::Stratify, Some(c)),
        Cmd::Candidates(c) => (Command::Candidates, Some(c)),
        Cmd::Tree(c) => (Command::Tree, Some(c)),
        Cmd::Verify(c) => (Command::Verify, Some(c)),
        Cmd::CatalogList => (Command::CatalogList, None),
    };
    let config = match common {
        Some(c) => RunConfig {
            command,
            input: Some(c.input),
            json: c.json,
            svg: c.svg,
            fast: c.fast,
            verify: c.verify,
            no_dedup: c.no_dedup,
            orbit_cap: c.orbit_cap,
        },
        None => RunConfig {
            command,
            input: None,
            json: None,
            svg: None,
            fast: false,
            verify: false,
            no_dedup: false,
            orbit_cap: None,
        },
    };
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
