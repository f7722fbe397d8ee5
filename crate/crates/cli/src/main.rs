mod run;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;

use run::{run_one, FieldChoice, Report, Request};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Ei,
    Endotrivialize,
    Poset,
    Algebra,
    Radical,
    Idempotents,
    Quiver,
    Classify,
    OracleCount,
    Bundle,
}

/// Finite EI-categories: category algebras and representation type.
#[derive(Debug, Parser)]
#[command(name = "eirep", version)]
struct Cli {
    command: Command,
    /// Category files or directories of `*.json` files; the output directory for `bundle`.
    paths: Vec<PathBuf>,
    /// Characteristic; 0 picks a prime coprime to every automorphism group.
    #[arg(long = "char")]
    characteristic: Option<u32>,
    /// Degree of the field over its prime field.
    #[arg(long, default_value_t = 1)]
    ext: u32,
    /// Dimension vector for `oracle-count`, one entry per object.
    #[arg(long, value_delimiter = ',')]
    dim: Option<Vec<usize>>,
    /// Search-space budget for `oracle-count` and the classifier's counting rule.
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long)]
    json: bool,
}

fn seed() -> u64 {
    std::env::var("EIREP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

fn expand(paths: &[PathBuf]) -> std::io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(p)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn bundle(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, c) in eirep_core::corpus::bundle() {
        let path = dir.join(format!("{name}.json"));
        let text = serde_json::to_string_pretty(&c).expect("serializable") + "\n";
        std::fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.command == Command::Bundle {
        let dir = cli.paths.first().cloned().unwrap_or_else(|| PathBuf::from("corpus"));
        return match bundle(&dir) {
            Ok(files) => {
                for f in files {
                    println!("{}", f.display());
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("eirep: {}: {e}", dir.display());
                ExitCode::FAILURE
            }
        };
    }
    let inputs = match expand(&cli.paths) {
        Ok(v) if !v.is_empty() => v,
        Ok(_) => {
            eprintln!("eirep: no input files");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("eirep: {e}");
            return ExitCode::FAILURE;
        }
    };
    let field = match cli.characteristic {
        None => FieldChoice::Unset,
        Some(0) => FieldChoice::CoprimeAuto,
        Some(p) => FieldChoice::Fixed { p, k: cli.ext },
    };
    let req = Request { command: cli.command, field, dims: cli.dim.clone(), budget: cli.budget, seed: seed() };
    let reports: Vec<Report> = inputs.par_iter().map(|p| run_one(&req, p)).collect();
    let failed = reports.iter().any(|r| r.error.is_some());
    if cli.json {
        let text = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        };
        println!("{}", text.expect("serializable"));
    } else {
        for r in &reports {
            print!("{}", r.human());
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
