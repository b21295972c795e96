//! Command-line front end for the scrollar-invariant toolkit.
//!
//! Results go to stdout as JSON (or CSV where noted); diagnostics go to
//! stderr.  Exit codes: 0 success (including a verification PASS), 1 usage
//! or domain errors, 2 verification FAIL, 3 verification INCONCLUSIVE,
//! 4 unrealizable tuple in `witness`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sextic::geography::{emit, enumerate_by_genus, EmitFormat};
use sextic::scrollar::{semistable_gap_bound, RegionLabel, ScrollarTuple, Sextic};
use sextic::splitting::{delta, enumerate_bad_types, target_dim, target_type, SplittingType, TrigonalBase};
use sextic::verifier::{export_cases, run_verification, Verdict};
use sextic::witness::{realization_witness, BadLocus, WitnessError};

#[derive(Parser)]
#[command(name = "sextic", version, about = "Scrollar invariants of low-degree covers: realizability, geography, witnesses, and exact LP verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide realizability of an invariant tuple and, in degree 6, its region.
    Classify {
        /// Cover degree (2, 3, or 6).
        degree: usize,
        /// The degree−1 scrollar invariants, nondecreasing.
        #[arg(required = true)]
        invariants: Vec<i64>,
    },
    /// List every degree-6 tuple of one genus with region and realizability.
    Enumerate {
        #[arg(long)]
        genus: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Re-verify the dimension-gap claim by the exact LP case sweep.
    VerifyLemma {
        /// Also write the hundred case LPs to this directory.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
    /// Show the target splitting type of a tuple and its competitors.
    BadTypes {
        /// Five nondecreasing invariants of a tuple in P3.
        #[arg(required = true, num_args = 5)]
        invariants: Vec<i64>,
    },
    /// Produce a numeric construction plan for a realizable degree-6 tuple.
    Witness {
        /// Five nondecreasing invariants.
        #[arg(required = true, num_args = 5)]
        invariants: Vec<i64>,
    },
    /// Solve an .lp or .mps file exactly and print the certified outcome.
    SolveLp { file: PathBuf },
    /// Write the hundred verification case LPs to a directory.
    ExportCases { dir: PathBuf },
    /// Upper bound on the splitting-type gap of a semistable cover.
    Bounds { degree: i64, genus: i64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

// Write to stdout, treating a closed pipe (e.g. `sextic ... | head`) as a
// normal early stop rather than a panic.
fn write_stdout(text: &str) {
    use std::io::Write;
    if let Err(err) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}

fn emit_json<T: Serialize>(value: &T) {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    write_stdout(&text);
}

#[derive(Serialize)]
struct Classification {
    degree: usize,
    invariants: Vec<i64>,
    genus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    region: Option<RegionLabel>,
    realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_codim: Option<i64>,
}

#[derive(Serialize)]
struct BadTypesOutput {
    invariants: [i64; 5],
    delta: i64,
    target: SplittingType,
    target_dim: i64,
    bad_loci: Vec<BadLocus>,
}

#[derive(Serialize)]
struct BoundOutput {
    degree: i64,
    genus: i64,
    bound: String,
}

fn sextic_from(invariants: &[i64]) -> Result<Sextic, String> {
    let array: [i64; 5] = invariants
        .try_into()
        .map_err(|_| "expected exactly five invariants".to_string())?;
    Sextic::new(array).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classify { degree, invariants } => {
            if degree != invariants.len() + 1 {
                return Err(format!(
                    "degree {degree} takes {} invariants, got {}",
                    degree.saturating_sub(1),
                    invariants.len()
                ));
            }
            let tuple = ScrollarTuple::new(&invariants).map_err(|e| e.to_string())?;
            let sextic = tuple.as_sextic();
            emit_json(&Classification {
                degree,
                genus: tuple.genus(),
                realizable: tuple.realizable(),
                region: sextic.map(|s| s.classify_region()),
                expected_codim: sextic.map(|s| s.expected_codim()),
                invariants,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { genus, format } => {
            let slice = enumerate_by_genus(genus).map_err(|e| e.to_string())?;
            let format = match format {
                Format::Csv => EmitFormat::Csv,
                Format::Json => EmitFormat::Json,
            };
            write_stdout(&emit(&slice, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemma { export } => {
            if let Some(dir) = &export {
                std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
                let names = export_cases(dir).map_err(|e| e.to_string())?;
                eprintln!("wrote {} case files to {}", names.len(), dir.display());
            }
            let report = run_verification().map_err(|e| e.to_string())?;
            emit_json(&report);
            Ok(match report.verdict {
                Verdict::Pass => ExitCode::SUCCESS,
                Verdict::Fail => ExitCode::from(2),
                Verdict::Inconclusive => ExitCode::from(3),
            })
        }
        Command::BadTypes { invariants } => {
            let s = sextic_from(&invariants)?;
            let dim = target_dim(&s).map_err(|e| e.to_string())?;
            let base = TrigonalBase::new(s.e(1), s.e(2)).map_err(|e| e.to_string())?;
            let bad_loci = enumerate_bad_types(&s)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|split| {
                    base.dim_splitting_locus(&split)
                        .map(|dim| BadLocus { split, dim })
                        .map_err(|e| e.to_string())
                })
                .collect::<Result<Vec<_>, _>>()?;
            emit_json(&BadTypesOutput {
                invariants: s.invariants(),
                delta: delta(&s),
                target: target_type(&s),
                target_dim: dim,
                bad_loci,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { invariants } => {
            let s = sextic_from(&invariants)?;
            match realization_witness(&s) {
                Ok(plan) => {
                    emit_json(&plan);
                    Ok(ExitCode::SUCCESS)
                }
                Err(WitnessError::Unrealizable(e)) => {
                    eprintln!("tuple {:?} is not realizable in degree 6", e);
                    Ok(ExitCode::from(4))
                }
                Err(other) => Err(other.to_string()),
            }
        }
        Command::SolveLp { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let instance = match extension(&file)?.as_str() {
                "lp" => exact_lp::parse_lp(&text).map_err(|e| e.to_string())?,
                "mps" => exact_lp::parse_mps(&text).map_err(|e| e.to_string())?,
                other => return Err(format!("unrecognized extension '.{other}', expected .lp or .mps")),
            };
            let outcome = exact_lp::solve(&instance);
            match exact_lp::check_certificate(&instance, &outcome) {
                Ok(true) => {}
                Ok(false) => return Err("solver certificate failed verification".to_string()),
                Err(e) => return Err(format!("solver certificate failed verification: {e}")),
            }
            emit_json(&outcome);
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportCases { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
            let names = export_cases(&dir).map_err(|e| e.to_string())?;
            emit_json(&names);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { degree, genus } => {
            let bound = semistable_gap_bound(degree, genus).map_err(|e| e.to_string())?;
            emit_json(&BoundOutput {
                degree,
                genus,
                bound: bound.to_string(),
            });
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn extension(path: &Path) -> Result<String, String> {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .ok_or_else(|| format!("{}: missing file extension", path.display()))
}
