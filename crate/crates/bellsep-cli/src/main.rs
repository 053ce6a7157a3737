//! Command-line front end for Bell diagonal state separability analysis.
//!
//! Exit codes are a stable contract:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | separable / command succeeded                       |
//! | 1    | entangled / decomposition refused / check failed    |
//! | 2    | inconclusive / decomposition unsupported at this p  |
//! | 64   | usage error (flags, ranges)                         |
//! | 65   | malformed or non-state input                        |

mod input;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use bellsep::ensemble::{self, RandomSeed};
use bellsep::separability::{
    self, build_decomposition, criterion_sum, local_eigenvalues_closed_form, verify_decomposition,
    CriterionVerdict,
};
use bellsep::{Error, MAX_QUBITS_PER_PARTY, TOL_BOUNDARY, TOL_CONSTRUCTION};

const EXIT_USAGE: i32 = 64;
const EXIT_DATA: i32 = 65;

#[derive(Parser)]
#[command(name = "bellsep", version, about = "Bell diagonal state separability analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a state file: criterion sum and verdict, partial-transpose
    /// spectrum and verdict, purity, and a certificate when separable.
    Analyze {
        /// State description file (JSON; see README for the format).
        file: PathBuf,
        /// Boundary classification tolerance.
        #[arg(long, default_value_t = TOL_BOUNDARY)]
        tol: f64,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build and verify the explicit four-term separable decomposition of a
    /// p = 1 state with criterion sum at most 1.
    Decompose {
        /// State description file (JSON; see README for the format).
        file: PathBuf,
        /// Emit the certificate as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the criterion against the partial transpose on random
    /// Bell diagonal states.
    Crosscheck {
        /// Qubits per party.
        #[arg(long)]
        p: usize,
        /// Number of random states.
        #[arg(long)]
        n: u64,
        /// Stream seed.
        #[arg(long)]
        seed: u64,
        /// Boundary classification tolerance.
        #[arg(long, default_value_t = TOL_BOUNDARY)]
        tol: f64,
    },
    /// Audit the inequalities behind the criterion on random separable
    /// ensembles.
    Audit {
        /// Qubits per party.
        #[arg(long)]
        p: usize,
        /// Number of random samples per audit.
        #[arg(long)]
        n: u64,
        /// Mixture terms per separable sample.
        #[arg(long)]
        terms: usize,
        /// Stream seed.
        #[arg(long)]
        seed: u64,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };

    match cli.command {
        Command::Analyze { file, tol, json } => cmd_analyze(&file, tol, json),
        Command::Decompose { file, json } => cmd_decompose(&file, json),
        Command::Crosscheck { p, n, seed, tol } => cmd_crosscheck(p, n, seed, tol),
        Command::Audit { p, n, terms, seed } => cmd_audit(p, n, terms, seed),
    }
}

fn data_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_DATA
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("usage error: {msg}");
    EXIT_USAGE
}

fn check_common_flags(p: usize, n: u64, tol: f64) -> Option<i32> {
    if p < 1 || p > MAX_QUBITS_PER_PARTY {
        return Some(usage_error(&format!(
            "--p must be in 1..={MAX_QUBITS_PER_PARTY}, got {p}"
        )));
    }
    if n < 1 {
        return Some(usage_error("--n must be at least 1"));
    }
    if !(tol >= 0.0) || !tol.is_finite() {
        return Some(usage_error(&format!("--tol must be a nonnegative number, got {tol}")));
    }
    None
}

fn load_omega(file: &std::path::Path) -> Result<bellsep::bell::OmegaDiagonal, i32> {
    let spec = input::load(file).map_err(|msg| data_error(&msg))?;
    spec.to_omega().map_err(|msg| data_error(&msg))
}

fn cmd_analyze(file: &std::path::Path, tol: f64, json: bool) -> i32 {
    if !(tol >= 0.0) || !tol.is_finite() {
        return usage_error(&format!("--tol must be a nonnegative number, got {tol}"));
    }
    let omega = match load_omega(file) {
        Ok(o) => o,
        Err(code) => return code,
    };
    let report = match separability::analyze_with_tol(&omega, tol) {
        Ok(r) => r,
        Err(e) => return data_error(&e.to_string()),
    };
    print!("{}", output::render_analyze(&report, &omega, json));
    match report.criterion_verdict {
        CriterionVerdict::Separable => 0,
        CriterionVerdict::Entangled => 1,
        CriterionVerdict::Inconclusive => 2,
    }
}

fn cmd_decompose(file: &std::path::Path, json: bool) -> i32 {
    let omega = match load_omega(file) {
        Ok(o) => o,
        Err(code) => return code,
    };
    let decomposition = match build_decomposition(&omega) {
        Ok(d) => d,
        Err(Error::CriterionViolated(msg)) => {
            eprintln!("refused: {msg}");
            return 1;
        }
        Err(Error::UnsupportedDimension(msg)) => {
            eprintln!("unsupported: {msg}");
            return 2;
        }
        Err(e) => return data_error(&e.to_string()),
    };

    let s = criterion_sum(&omega);
    let local_eigenvalues = local_eigenvalues_closed_form(s).expect("criterion sum is nonnegative");
    let factor_spectra: Vec<Vec<f64>> = decomposition
        .local_a()
        .iter()
        .zip(decomposition.local_b().iter())
        .flat_map(|(a, b)| [a, b])
        .map(|m| bellsep::matrix::hermitian_eigenvalues(m, 1e-13).expect("factors are Hermitian"))
        .collect();
    let reconstruction_residual = decomposition
        .reconstruct()
        .max_abs_diff(&omega.to_density_matrix());
    let verified = verify_decomposition(&decomposition, &omega, TOL_CONSTRUCTION).is_ok();

    let doc = output::DecompositionDocument {
        omega: &omega,
        decomposition: &decomposition,
        criterion_sum: s,
        local_eigenvalues,
        factor_spectra,
        reconstruction_residual,
        verified,
    };
    print!("{}", output::render_decompose(&doc, json));
    if verified {
        0
    } else {
        eprintln!("error: built decomposition failed verification");
        1
    }
}

fn cmd_crosscheck(p: usize, n: u64, seed: u64, tol: f64) -> i32 {
    if let Some(code) = check_common_flags(p, n, tol) {
        return code;
    }
    let summary = match ensemble::crosscheck(p, n, RandomSeed(seed), tol) {
        Ok(s) => s,
        Err(e) => return data_error(&e.to_string()),
    };
    print!("{}", output::render_crosscheck(&summary));
    if p == 1 && summary.off_boundary_disagreements > 0 {
        1
    } else {
        0
    }
}

fn cmd_audit(p: usize, n: u64, terms: usize, seed: u64) -> i32 {
    if let Some(code) = check_common_flags(p, n, 0.0) {
        return code;
    }
    if terms < 1 {
        return usage_error("--terms must be at least 1");
    }
    let necessity = match ensemble::necessary_condition_audit(p, n, terms, RandomSeed(seed)) {
        Ok(a) => a,
        Err(e) => return data_error(&e.to_string()),
    };
    let chain = match ensemble::chain_audit(p, n, RandomSeed(seed)) {
        Ok(a) => a,
        Err(e) => return data_error(&e.to_string()),
    };
    print!("{}", output::render_audit(&necessity, &chain));
    if necessity.violation_count == 0
        && chain.moment_violations == 0
        && chain.product_violations == 0
    {
        0
    } else {
        1
    }
}
