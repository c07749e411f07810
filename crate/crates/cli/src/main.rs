//! `gamma2`: curvature invariants, sweeps, cone experiments and the
//! verification suite from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error or invalid
//! range, 3 symmetry violation in the input, 4 residual breach under `--check`.

mod cone;
mod failure;
mod report;
mod structure_file;
mod sweep;
mod table;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gamma2_core::model_spaces::BaseKind;
use gamma2_core::verification::{calibration_check, criteria, SuiteConfig};
use gamma2_core::Tolerances;

use crate::cone::{ConeFile, ConeResult};
use crate::failure::{ExitCode, Failure};
use crate::report::{Provenance, ReportFile};
use crate::structure_file::StructureFile;
use crate::table::{parse_f64_list, parse_usize_range, Table};

#[derive(Parser)]
#[command(
    name = "gamma2",
    version,
    about = "Algebraic curvature calculus toolkit"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every random stream.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Absolute tolerance for structural identities.
    #[arg(long, global = true, default_value_t = gamma2_core::tolerance::STRUCTURAL)]
    tol_structural: f64,
    /// Relative tolerance for composed formulas.
    #[arg(long, global = true, default_value_t = gamma2_core::tolerance::RELATIVE)]
    tol_relative: f64,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format (default: json for reports, csv for sweeps).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "GAMMA2_THREADS")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report of a structure file.
    ///
    /// CSV output lists scalar fields as quantity,value rows.
    Invariants {
        /// JSON structure file.
        input: PathBuf,
        /// Run every identity cross-check; exit 4 on any breach.
        #[arg(long)]
        check: bool,
    },
    /// Tabulate closed forms against direct computation.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Randomized experiments on the Γ_k cones.
    Cone {
        #[command(subcommand)]
        action: ConeAction,
    },
    /// Run the full verification suite; exit 1 naming any failing criterion.
    Verify {
        /// Reduced sample counts.
        #[arg(long)]
        quick: bool,
        /// Multiplier on the traceless coefficient of the σ₂ split (mutation testing).
        #[arg(long, hide = true, default_value_t = 1.0)]
        calibration_weight: f64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Base {
    Sphere,
    Flat,
}

#[derive(Subcommand)]
enum SweepKind {
    /// Scal and σ₂ of S^p(r) × B^q.
    ///
    /// Columns: p, q, base, r, scal, sigma2, scal_sign, sigma2_sign,
    /// predicted_scal, predicted_sigma2, largest_consistent_r.
    ProductSigns {
        /// Fiber dimensions (a..b inclusive, or a comma list).
        #[arg(long, default_value = "2..5")]
        p: String,
        /// Base dimension.
        #[arg(long, default_value_t = 4)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Base::Sphere)]
        base: Base,
        /// Comma-separated fiber radii.
        #[arg(long, default_value = "0.1")]
        r: String,
    },
    /// σ₂ of S^{c−1}(1) × ℝ^{n−c+1}: closed form and direct value.
    ///
    /// Columns: n, c, closed_form, direct, residual, sign.
    SurgerySigma2 {
        #[arg(long)]
        n: String,
        #[arg(long)]
        c: String,
    },
    /// h_{2r} of S^{c−1}(1) × ℝ^{n−c+1}: closed form and direct value.
    ///
    /// Columns: n, c, r, closed_form, direct, residual.
    H2r {
        #[arg(long)]
        n: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        r: String,
    },
    /// Largest k preserved by codimension-3 surgery, and fundamental-group status.
    ///
    /// Columns: n, max_k, unrestricted, open, finite_required (space-separated k lists).
    KBound {
        #[arg(long)]
        n: String,
    },
}

#[derive(Subcommand)]
enum ConeAction {
    /// Count Γ_1..Γ_k membership among random structures.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Number of samples.
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
    /// Minimum concavity residual of σ_k^{1/k} over random in-cone pairs.
    Concavity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Number of pairs.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Exit 4 if the residual falls below the floor.
        #[arg(long)]
        check: bool,
    },
    /// Search for a pair with h₄ > 0 whose midpoint has h₄ < 0.
    H4Witness {
        #[arg(long)]
        n: usize,
        /// Maximum number of trials.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.code as i32);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if let Some(threads) = g.threads {
        if threads == 0 {
            return Err(Failure::input("thread count must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::input(e.to_string()))?;
    }
    let tolerances = Tolerances {
        structural: g.tol_structural,
        relative: g.tol_relative,
    };
    if !(tolerances.structural > 0.0 && tolerances.relative > 0.0) {
        return Err(Failure::input("tolerances must be positive"));
    }
    let provenance = Provenance::new(tolerances);
    match &cli.command {
        Command::Invariants { input, check } => {
            invariants(g, input, *check, tolerances, provenance)
        }
        Command::Sweep { kind } => {
            let (name, table) = sweep(kind)?;
            let text = match g.format.unwrap_or(Format::Csv) {
                Format::Csv => table.to_csv()?,
                Format::Json => table.to_json(name, &provenance) + "\n",
            };
            emit(g.out.as_deref(), &text)
        }
        Command::Cone { action } => {
            if g.format == Some(Format::Csv) {
                return Err(Failure::input("cone results are JSON only"));
            }
            let (result, check) = cone_action(action, g.seed)?;
            let file = ConeFile {
                provenance: &provenance.with_seed(g.seed),
                result: &result,
            };
            emit(
                g.out.as_deref(),
                &(serde_json::to_string_pretty(&file).expect("serializes") + "\n"),
            )?;
            if let ConeResult::Concavity {
                passed: false,
                min_residual,
                ..
            } = result
            {
                if check {
                    return Err(Failure::new(
                        ExitCode::Check,
                        format!("concavity residual {min_residual:e} below floor"),
                    ));
                }
            }
            Ok(())
        }
        Command::Verify {
            quick,
            calibration_weight,
        } => verify(g, *quick, *calibration_weight, tolerances),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn invariants(
    g: &Global,
    input: &Path,
    check: bool,
    tolerances: Tolerances,
    provenance: Provenance,
) -> Result<(), Failure> {
    let bytes = std::fs::read(input)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", input.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Failure::input(format!("{} is not UTF-8", input.display())))?;
    let r = StructureFile::parse(text)?.load()?;
    let file = ReportFile::build(&r, provenance.with_input(&bytes), tolerances, check)?;
    let rendered = match g.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&file).expect("serializes") + "\n",
        Format::Csv => {
            let mut t = Table::new(vec!["quantity", "value"]);
            t.rows = file
                .scalar_rows()
                .into_iter()
                .map(|(k, v)| vec![k.into(), v.into()])
                .collect();
            t.to_csv()?
        }
    };
    emit(g.out.as_deref(), &rendered)?;
    let failed = file.failed_checks();
    if !failed.is_empty() {
        let names: Vec<_> = failed
            .iter()
            .map(|c| format!("{} (residual {:e} > {:e})", c.name, c.residual, c.tolerance))
            .collect();
        return Err(Failure::new(
            ExitCode::Check,
            format!("identity check failed: {}", names.join(", ")),
        ));
    }
    Ok(())
}

fn sweep(kind: &SweepKind) -> Result<(&'static str, Table), Failure> {
    Ok(match kind {
        SweepKind::ProductSigns { p, q, base, r } => {
            let base = match base {
                Base::Sphere => BaseKind::UnitSphere,
                Base::Flat => BaseKind::Flat,
            };
            let table =
                sweep::product_signs(&parse_usize_range(p)?, *q, base, &parse_f64_list(r)?)?;
            ("product-signs", table)
        }
        SweepKind::SurgerySigma2 { n, c } => (
            "surgery-sigma2",
            sweep::surgery_sigma2(&parse_usize_range(n)?, &parse_usize_range(c)?)?,
        ),
        SweepKind::H2r { n, c, r } => (
            "h2r",
            sweep::h2r(
                &parse_usize_range(n)?,
                &parse_usize_range(c)?,
                &parse_usize_range(r)?,
            )?,
        ),
        SweepKind::KBound { n } => ("k-bound", sweep::k_bound(&parse_usize_range(n)?)?),
    })
}

fn cone_action(action: &ConeAction, seed: u64) -> Result<(ConeResult, bool), Failure> {
    Ok(match *action {
        ConeAction::Sample { n, k, budget } => (cone::sample(n, k, budget, seed)?, false),
        ConeAction::Concavity {
            n,
            k,
            budget,
            check,
        } => (cone::concavity(n, k, budget, seed)?, check),
        ConeAction::H4Witness { n, budget } => (cone::h4_witness(n, budget, seed)?, false),
    })
}

fn verify(
    g: &Global,
    quick: bool,
    calibration_weight: f64,
    tolerances: Tolerances,
) -> Result<(), Failure> {
    let cfg = SuiteConfig {
        quick,
        seed: g.seed,
        tolerances,
    };
    let start = Instant::now();
    let mut output = String::new();
    let mut failed = Vec::new();
    for (id, criterion) in criteria() {
        let report = if id == "C" {
            calibration_check(&cfg, calibration_weight)
        } else {
            criterion(&cfg)
        }
        .map_err(|e| Failure::new(ExitCode::Verify, format!("criterion {id} aborted: {e}")))?;
        eprintln!("[{id}] {:.2} s", report.elapsed.as_secs_f64());
        output.push_str(&report.to_string());
        output.push('\n');
        if !report.passed() {
            failed.push(format!("[{}] {}", report.id, report.title));
        }
    }
    eprintln!("total {:.2} s", start.elapsed().as_secs_f64());
    emit(g.out.as_deref(), &output)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(
            ExitCode::Verify,
            format!("verification failed: {}", failed.join("; ")),
        ))
    }
}
