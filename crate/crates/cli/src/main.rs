//! `gwt`: check derivation files, enumerate trees and admissible pairs,
//! print strict normal forms.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gwt_core::coherator::{enumerate_admissible, Bounds, Policy, Registry};
use gwt_core::exec::Exec;
use gwt_core::globe::GlobeContext;
use gwt_core::pasting::enumerate_trees;
use gwt_core::strictify::strict_normalize;
use gwt_core::surface::{check_source, export_derivation, CheckReport, ExportFormat, SurfaceError};

#[derive(Parser)]
#[command(name = "gwt", version, about = "Coherence checker for weak higher transformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Admissibility {
    Pair,
    Both,
    All,
}

impl From<Admissibility> for Policy {
    fn from(a: Admissibility) -> Policy {
        match a {
            Admissibility::Pair => Policy::PairNotBare,
            Admissibility::Both => Policy::BothNotBare,
            Admissibility::All => Policy::AllParallel,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> ExportFormat {
        match f {
            Format::Text => ExportFormat::Text,
            Format::Json => ExportFormat::Json,
            Format::Dot => ExportFormat::Dot,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Elaborate a file and evaluate its assertions.
    Check {
        file: String,
        #[arg(long, value_enum, default_value = "pair")]
        admissibility: Admissibility,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the trees of a level within bounds.
    EnumTrees {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_cols: usize,
        #[arg(long)]
        max_dim: u32,
    },
    /// List admissible pairs of one stage.
    EnumAdmissible {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        stage: u32,
        #[arg(long)]
        max_term_size: usize,
        #[arg(long, default_value_t = 2)]
        max_cols: usize,
        #[arg(long, default_value_t = 1)]
        max_dim: u32,
        #[arg(long, value_enum, default_value = "pair")]
        admissibility: Admissibility,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Print the strict normal form of every operation declared in a file.
    Normalize {
        file: String,
        #[arg(long)]
        strict: bool,
    },
}

fn load(file: &str, policy: Policy) -> Result<CheckReport, String> {
    let text = fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    check_source(file, &text, policy).map_err(|e: SurfaceError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Check { file, admissibility, format } => match load(&file, admissibility.into()) {
            Ok(report) => {
                let _ = out.write_all(&export_derivation(&report, format.into()));
                if report.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::EnumTrees { n, max_cols, max_dim } => {
            let trees = enumerate_trees(GlobeContext::new(n), max_cols, max_dim);
            for t in &trees {
                let _ = writeln!(out, "{t}  ({} cells)", t.realization().len());
            }
            let _ = writeln!(out, "{} trees", trees.len());
            ExitCode::SUCCESS
        }
        Command::EnumAdmissible { n, stage, max_term_size, max_cols, max_dim, admissibility, sequential } => {
            let reg = Registry::new(admissibility.into());
            let bounds = Bounds { max_tree_cols: max_cols, max_dim, max_term_size, stage };
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let pairs = enumerate_admissible(GlobeContext::new(n), &reg, bounds, exec);
            for p in &pairs {
                let (f, g) = (p.f.top().expect("operation"), p.g.top().expect("operation"));
                let _ = writeln!(out, "{} : {f}  ==  {g}", p.f.cod());
            }
            let _ = writeln!(out, "{} pairs at stage {stage}", pairs.len());
            ExitCode::SUCCESS
        }
        Command::Normalize { file, strict } => {
            if !strict {
                eprintln!("error: only --strict normalization is available");
                return ExitCode::from(2);
            }
            let report = match load(&file, Policy::default()) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            for name in report.arrow_order() {
                let arrow = &report.arrows[name];
                let Some(top) = arrow.top() else { continue };
                match strict_normalize(top, arrow.cod()) {
                    Ok(nf) => {
                        let _ = writeln!(out, "{name}: {nf}");
                    }
                    Err(e) => {
                        let _ = writeln!(out, "{name}: {e}");
                    }
                }
            }
            ExitCode::SUCCESS
        }
    }
}
