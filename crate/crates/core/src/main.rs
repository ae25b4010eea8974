use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use weak_iasi::graph::io::parse_auto;
use weak_iasi::report::{cmd_check, cmd_named, cmd_oracle, cmd_sparing, cmd_verify, sparing_dot};
use weak_iasi::{Graph, IasiLabeling, NamedGraph};

#[derive(Parser)]
#[command(version, about = "Weak IASI labelings and exact sparing numbers")]
struct Cli {
    /// Worker threads for parallel search (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Spaces of JSON indentation; 0 prints compact JSON.
    #[arg(long, global = true, default_value_t = 2)]
    json_indent: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sparing number, bipartization number and their agreement.
    Sparing {
        #[command(flatten)]
        source: Source,
        /// Include the full weak IASI labeling.
        #[arg(long)]
        labeling: bool,
        /// Write a DOT rendering with mono-indexed edges classed.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run every applicable theorem checker.
    CheckTheorems {
        #[command(flatten)]
        source: Source,
    },
    /// List the named graphs and families.
    Named {
        #[arg(long)]
        list: bool,
    },
    /// Cross-check the solver against brute-force enumeration (n <= 7).
    Oracle {
        #[command(flatten)]
        source: Source,
    },
    /// Check a labeling file against the IASI conditions.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        labeling: PathBuf,
    },
}

#[derive(Args)]
struct Source {
    /// Named graph, e.g. petersen or cycle.
    #[arg(long, conflicts_with = "graph")]
    named: Option<String>,
    /// Parameter for a graph family.
    #[arg(long, requires = "named")]
    param: Option<usize>,
    /// Graph file, JSON or edge list.
    #[arg(long)]
    graph: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<(Graph, String)> {
        match (&self.named, &self.graph) {
            (Some(name), _) => {
                let named = NamedGraph::parse(name, self.param)?;
                Ok((named.try_build()?, named.to_string()))
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path).with_context(|| path.display().to_string())?;
                let g = parse_auto(&text).with_context(|| path.display().to_string())?;
                Ok((g, path.display().to_string()))
            }
            (None, None) => Err(anyhow!("one of --named or --graph is required")),
        }
    }
}

fn print_json(value: &Value, indent: usize) -> Result<()> {
    let text = if indent == 0 {
        serde_json::to_string(value)?
    } else {
        let pad = vec![b' '; indent];
        let mut buf = Vec::new();
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser)?;
        String::from_utf8(buf)?
    };
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    let report = match &cli.command {
        Command::Sparing { source, labeling, dot } => {
            let (g, label) = source.load()?;
            let (report, cert) = cmd_sparing(&g, &label, *labeling)?;
            if let Some(path) = dot {
                fs::write(path, sparing_dot(&g, &cert))?;
            }
            let r = &report.results;
            eprintln!(
                "{label}: phi = {}, bipartization = {}{}",
                r["phi"],
                r["bipartization_number"],
                if r["mismatch"] == true { " (mismatch)" } else { "" }
            );
            report
        }
        Command::CheckTheorems { source } => {
            let (g, label) = source.load()?;
            let report = cmd_check(&g, &label)?;
            for r in report.results.as_array().into_iter().flatten() {
                eprintln!("{label}: {} -> {}", r["theorem"], r["verdict"]);
            }
            report
        }
        Command::Named { .. } => cmd_named(),
        Command::Oracle { source } => {
            let (g, label) = source.load()?;
            let report = cmd_oracle(&g, &label)?;
            eprintln!("{label}: oracle and solver agree = {}", report.results["agree"]);
            report
        }
        Command::Verify { source, labeling } => {
            let (g, label) = source.load()?;
            let text = fs::read_to_string(labeling).with_context(|| labeling.display().to_string())?;
            let parsed: IasiLabeling = serde_json::from_str(&text).with_context(|| labeling.display().to_string())?;
            let report = cmd_verify(&g, &label, &parsed)?;
            eprintln!("{label}: weak IASI = {}", report.results["weak_iasi"]);
            report
        }
    };
    print_json(&report.to_value(), cli.json_indent)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
