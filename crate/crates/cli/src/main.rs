mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Common, Failure, KcmArgs, NcpArgs};

/// Generalized cluster complexes of finite root systems: construction and
/// topological verification.
#[derive(Debug, Parser)]
#[command(name = "gencluster", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the complex and list its facets
    Build(Common),
    /// f- and h-vectors
    Fvector(Common),
    /// Reduced integral homology
    Homology(Common),
    /// Construct and verify a shelling
    Shelling(Common),
    /// Audit k-Cohen-Macaulayness by vertex removal
    Kcm(KcmArgs),
    /// Facets per codimension-one face
    Incidence(Common),
    /// Noncrossing-partition poset checks
    Ncp(NcpArgs),
    /// Run every check for one root system and m
    VerifyAll(Common),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Build(c)
            | Command::Fvector(c)
            | Command::Homology(c)
            | Command::Shelling(c)
            | Command::Incidence(c)
            | Command::VerifyAll(c) => c,
            Command::Kcm(a) => &a.common,
            Command::Ncp(a) => &a.common,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.command.common().clone();
    if let Some(w) = common.workers {
        if rayon::ThreadPoolBuilder::new().num_threads(w).build_global().is_err() {
            eprintln!("could not configure {w} workers");
            return ExitCode::from(2);
        }
    }
    let outcome = match &cli.command {
        Command::Build(c) => commands::build(c),
        Command::Fvector(c) => commands::fvector(c),
        Command::Homology(c) => commands::homology_cmd(c),
        Command::Shelling(c) => commands::shelling(c),
        Command::Kcm(a) => commands::kcm(a),
        Command::Incidence(c) => commands::incidence(c),
        Command::Ncp(a) => commands::ncp(a),
        Command::VerifyAll(c) => commands::verify_all(c),
    };
    match outcome {
        Ok(report) => {
            let text = report.render(common.format);
            match &common.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            println!("{}", serde_json::json!({ "status": "fail", "error": msg }));
            ExitCode::from(1)
        }
    }
}
