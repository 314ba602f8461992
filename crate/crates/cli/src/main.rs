//! Command-line driver for the verification suites.
//!
//! `contracta verify [SUITE]` runs a suite and prints one pass/fail line per
//! verified fact; `report` emits the same run as stable JSON; `catalog`
//! lists the encoded systems and Lie contraction families; `askey dot`
//! renders the polynomial-limit hierarchy as Graphviz DOT.

use std::fs;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use contracta_core::askey;
use contracta_core::liealg::{catalog_lie_contractions, family_json};
use contracta_core::quadalg::{catalog_structures, SystemKind};
use contracta_core::report::{render_text, run_suite, suite_names, SuiteConfig};

#[derive(Parser)]
#[command(name = "contracta", version, about = "Exact verification of quadratic symmetry algebras and their contractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SuiteArgs {
    /// Suite to run: lie, classical, quantum, model, wilson, contract,
    /// potentials, or all.
    #[arg(default_value = "all")]
    suite: String,
    /// Master seed for all random parameter and point draws.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Base points per system in the operator-realization suite.
    #[arg(long, default_value_t = 2)]
    points: usize,
    /// Degree parameter of the difference-operator model (dimension m+1).
    #[arg(long, default_value_t = 2)]
    m: u32,
}

impl SuiteArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            points: self.points,
            m: self.m,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print one line per checked fact.
    Verify {
        #[command(flatten)]
        args: SuiteArgs,
        /// Emit the full JSON report instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite and emit its JSON report.
    Report {
        #[command(flatten)]
        args: SuiteArgs,
    },
    /// List the encoded quadratic algebras and Lie contraction families.
    Catalog {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// The polynomial-limit hierarchy.
    Askey {
        #[command(subcommand)]
        command: AskeyCommand,
    },
}

#[derive(Subcommand)]
enum AskeyCommand {
    /// Render the hierarchy as a Graphviz DOT digraph.
    Dot {
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<String>,
    },
}

fn run_verify(args: &SuiteArgs, json: bool) -> Result<bool> {
    let config = args.config();
    if !suite_names().contains(&args.suite.as_str()) {
        anyhow::bail!(
            "unknown suite {:?}; expected one of {:?}",
            args.suite,
            suite_names()
        );
    }
    let report = run_suite(&args.suite, &config)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_text(&report));
    }
    Ok(report.ok)
}

fn run_catalog(json: bool) -> Result<()> {
    let systems = catalog_structures();
    let families = catalog_lie_contractions();
    if json {
        let systems_json: Vec<serde_json::Value> = systems
            .iter()
            .map(|s| {
                serde_json::json!({
                    "name": s.name,
                    "kind": match s.kind {
                        SystemKind::Nondegenerate => "nondegenerate",
                        SystemKind::Degenerate => "degenerate",
                    },
                    "generators": s.generators.iter().map(|g| g.name()).collect::<Vec<_>>(),
                    "parameters": s.parameters,
                    "equations": s.equations.iter().map(|e| e.name.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let families_json: Vec<_> = families.iter().map(family_json).collect();
        let doc = serde_json::json!({
            "systems": systems_json,
            "lie_contractions": families_json,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("quadratic algebras ({}):", systems.len());
        for s in &systems {
            let kind = match s.kind {
                SystemKind::Nondegenerate => "nondegenerate",
                SystemKind::Degenerate => "degenerate",
            };
            println!(
                "  {:4} {:13} generators [{}], {} structure equations",
                s.name,
                kind,
                s.generators
                    .iter()
                    .map(|g| g.name())
                    .collect::<Vec<_>>()
                    .join(", "),
                s.equations.len()
            );
        }
        println!("Lie contraction families ({}):", families.len());
        for f in &families {
            println!("  {} -> {}", f.label, f.expected_target_name);
        }
    }
    Ok(())
}

fn run_askey(command: &AskeyCommand) -> Result<()> {
    let scheme = askey::scheme();
    anyhow::ensure!(scheme.is_acyclic(), "limit hierarchy is not acyclic");
    match command {
        AskeyCommand::Dot { output } => {
            let dot = scheme.to_dot();
            match output {
                Some(path) => fs::write(path, dot)
                    .with_context(|| format!("writing DOT output to {path}"))?,
                None => print!("{dot}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { args, json } => run_verify(args, *json),
        Command::Report { args } => run_verify(args, true),
        Command::Catalog { json } => run_catalog(*json).map(|()| true),
        Command::Askey { command } => run_askey(command).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
