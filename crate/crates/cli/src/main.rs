//! Experiment runner: every verification experiment as a subcommand, with a
//! built-in function catalog, flat key=value config files (flags win), and
//! JSON + CSV report emission.
//!
//! Exit codes: 0 success, 2 precondition violation, 3 saturation under
//! `--strict`.

mod config;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{resolve, resolve_required, FileSettings};
use torus_harmonics::catalog;
use torus_harmonics::grid::{GridMask, SampledField, TorusGrid};
use torus_harmonics::majorant::{self, MajorantField};
use torus_harmonics::oracles;
use torus_harmonics::orlicz::{self, OrliczIndex};
use torus_harmonics::report::VerificationReport;
use torus_harmonics::singular::{self, PvQuadratureScheme};
use torus_harmonics::spectral;
use torus_harmonics::verify::{self, PhiModulus};

#[derive(Parser)]
#[command(
    name = "torus-harmonics",
    version,
    about = "Fourier partial sums, conjugates, maximal functions, Orlicz norms, and exponential-inequality experiments on discretized tori"
)]
struct Cli {
    /// Flat key=value config file; command-line flags override file values
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory (default ./out/<experiment>-<timestamp>/)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads (fallback: TORUS_HARMONICS_THREADS, then all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Exit with code 3 when any emitted report is saturated
    #[arg(long, global = true)]
    strict: bool,

    /// Seed for catalog functions that draw random coefficients
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a catalog function and dump the field (optionally coefficients)
    Gen {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        /// Also dump the Fourier coefficients
        #[arg(long)]
        coeffs: bool,
    },
    /// Square/rectangular partial sums, plain, conjugate, or modified
    Sums {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        /// Square truncation degree
        #[arg(long)]
        n: Option<usize>,
        /// Rectangular per-axis bounds, comma separated
        #[arg(long, value_delimiter = ',')]
        nvec: Option<Vec<usize>>,
        #[arg(long)]
        conjugate: bool,
        /// Use the modified sums (edge weight 1/2)
        #[arg(long)]
        modified: bool,
        #[arg(long)]
        coeffs: bool,
    },
    /// Conjugate function via p.v. quadrature (or the spectral multiplier)
    Conj {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        /// Use the spectral-multiplier path instead of quadrature
        #[arg(long)]
        spectral: bool,
        /// Oversampling factor of the p.v. scheme
        #[arg(long)]
        refinement: Option<usize>,
    },
    /// Hardy-Littlewood maximal function (1-D)
    Maximal {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
    },
    /// Luxemburg norm with the brute-force oracle cross-check
    Norms {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Build the majorant and dump it with its part masses
    Majorant {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// 1-D exponential estimate: calibrate c1 against a budget, then sweep
    #[command(name = "verify-1d")]
    Verify1d {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Budget for the supremum of the exponential integral
        #[arg(long)]
        budget: Option<f64>,
    },
    /// 2-D exponential estimate against the constructed majorant
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        nmin: Option<usize>,
        #[arg(long)]
        c: Option<f64>,
    },
    /// Exceptional sets and the restricted exponential sweep
    #[command(name = "verify-cor1")]
    VerifyCor1 {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Exceptional-set budgets, comma separated
        #[arg(long, value_delimiter = ',')]
        eps: Option<Vec<f64>>,
    },
    /// Exponential-mean convergence on an exceptional set
    #[command(name = "verify-cor2")]
    VerifyCor2 {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        /// Sweep end for the partial-sum degree
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        a_value: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
        /// Truncation degree of the majorant behind the exceptional set
        #[arg(long)]
        majorant_nmax: Option<usize>,
    },
    /// Log-growth ratios along a subsequence of degrees
    #[command(name = "verify-cor3")]
    VerifyCor3 {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        /// Subsequence of degrees, comma separated (default 2^k, k = 2..7)
        #[arg(long, value_delimiter = ',')]
        subseq: Option<Vec<usize>>,
    },
    /// Modified-sum gap integrals, cumulative in the truncation degree
    Lemma2 {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Phi-modulus decay of the partial-sum error
    #[command(name = "phi-modulus")]
    PhiModulus {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Decay rate alpha of Phi(t) = exp(-alpha t)
        #[arg(long)]
        phi_alpha: Option<f64>,
    },
}

enum CliError {
    /// Bad arguments, bad config, violated operation precondition.
    Usage(String),
    Io(std::io::Error),
}

impl From<torus_harmonics::TorusError> for CliError {
    fn from(e: torus_harmonics::TorusError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<String> for CliError {
    fn from(e: String) -> Self {
        CliError::Usage(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

struct RunOutcome {
    saturated: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strict = cli.strict;
    match execute(cli) {
        Ok(outcome) => {
            if outcome.saturated {
                eprintln!("note: at least one report saturated");
                if strict {
                    return ExitCode::from(3);
                }
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: Cli) -> Result<RunOutcome, CliError> {
    let file = match &cli.config {
        Some(path) => FileSettings::load(path)?,
        None => FileSettings::default(),
    };
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var("TORUS_HARMONICS_THREADS") {
            Ok(v) => Some(
                v.parse::<usize>()
                    .map_err(|_| format!("bad TORUS_HARMONICS_THREADS value '{v}'"))?,
            ),
            Err(_) => file.get::<usize>("threads")?,
        },
    };
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = threads {
            builder = builder.num_threads(t);
        }
        builder
            .build()
            .map_err(|e| format!("cannot build thread pool: {e}"))?
    };
    pool.install(|| run_command(cli, &file))
}

fn run_command(cli: Cli, file: &FileSettings) -> Result<RunOutcome, CliError> {
    let seed = resolve(cli.seed, file, "seed", 0u64)?;
    let out_flag = cli.out.or_else(|| file.raw("out").map(PathBuf::from));

    match cli.command {
        Command::Gen {
            dim,
            grid,
            function,
            coeffs,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let dir = out_dir(out_flag, "gen")?;
            write_field(&dir, "field.csv", &f)?;
            if coeffs || file.raw("coeffs") == Some("true") {
                write_coeffs(&dir, "coeffs.csv", &f)?;
            }
            Ok(RunOutcome { saturated: false })
        }

        Command::Sums {
            dim,
            grid,
            function,
            n,
            nvec,
            conjugate,
            modified,
            coeffs,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let dir = out_dir(out_flag, "sums")?;
            let nvec = match nvec {
                Some(v) => Some(v),
                None => file
                    .raw("nvec")
                    .map(parse_usize_list)
                    .transpose()?,
            };
            let sum = if let Some(bounds) = nvec {
                if conjugate || modified {
                    return Err(CliError::Usage(
                        "conjugate/modified variants take a square degree --n".into(),
                    ));
                }
                spectral::rectangular_partial_sum(&f, &bounds)?
            } else {
                let n = resolve_required(n, file, "n")?;
                match (modified, conjugate) {
                    (true, c) => spectral::modified_square_partial_sum(&f, n, c)?,
                    (false, true) => spectral::conjugate_square_partial_sum(&f, n)?,
                    (false, false) => spectral::square_partial_sum(&f, n)?,
                }
            };
            write_field(&dir, "sum.csv", &sum)?;
            if coeffs {
                write_coeffs(&dir, "coeffs.csv", &f)?;
            }
            Ok(RunOutcome { saturated: false })
        }

        Command::Conj {
            dim,
            grid,
            function,
            spectral: use_spectral,
            refinement,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let dir = out_dir(out_flag, "conj")?;
            let out = if use_spectral {
                spectral::conjugate_field(&f)
            } else {
                let r = resolve(refinement, file, "refinement", 4usize)?;
                singular::conjugate_dd(&f, &PvQuadratureScheme::new(r, true)?)
            };
            write_field(&dir, "conjugate.csv", &out)?;
            Ok(RunOutcome { saturated: false })
        }

        Command::Maximal { dim, grid, function } => {
            require_dim(dim, file, 1)?;
            let f = load_field(function, file, 1, grid, seed)?;
            let dir = out_dir(out_flag, "maximal")?;
            write_field(&dir, "maximal.csv", &singular::hl_maximal_1d(&f)?)?;
            Ok(RunOutcome { saturated: false })
        }

        Command::Norms {
            dim,
            grid,
            function,
            k,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function.clone(), file, dim, grid, seed)?;
            let k = OrliczIndex::new(resolve(k, file, "k", 1u32)?)?;
            let result = orlicz::luxemburg_norm(&f, k);
            let oracle = oracles::brute_luxemburg(&f, k);
            let mut params = std::collections::BTreeMap::new();
            params.insert("fn".into(), function_id(function, file)?);
            params.insert("k".into(), k.k().to_string());
            params.insert("dim".into(), dim.to_string());
            params.insert("grid".into(), f.grid().points_per_axis().to_string());
            params.insert("residual".into(), format!("{}", result.residual));
            params.insert("oracle".into(), format!("{oracle}"));
            let mut report =
                VerificationReport::from_series("norms", params, vec![], Some((result.value, oracle)), false);
            report.sup_metric = result.value;
            let dir = out_dir(out_flag, "norms")?;
            write_report(&dir, "norms", &report)?;
            Ok(RunOutcome { saturated: false })
        }

        Command::Majorant {
            dim,
            grid,
            function,
            nmax,
        } => {
            let dim = resolve(dim, file, "dim", 2usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let m = build_majorant(&f, nmax, file)?;
            let dir = out_dir(out_flag, "majorant")?;
            write_field(&dir, "majorant.csv", m.field())?;
            let path = dir.join("majorant_parts.json");
            let mut out = fs::File::create(&path)?;
            m.write_sidecar_json(&mut out)?;
            println!("wrote {}", path.display());
            Ok(RunOutcome { saturated: false })
        }

        Command::Verify1d {
            dim,
            grid,
            function,
            nmax,
            budget,
        } => {
            require_dim(dim, file, 1)?;
            let f = load_field_with_default(function, file, 1, grid, 1024, seed)?;
            let nmax = resolve(nmax, file, "nmax", 128usize)?;
            let budget = resolve(budget, file, "budget", 10.0 * std::f64::consts::TAU)?;
            let m = majorant::majorant_1d(&f)?;
            let cal = verify::calibrate_c1(&f, &m, 1..=nmax, budget)?;
            let c = if cal.c1 > 0.0 { cal.c1 } else { verify::CALIBRATION_TOL };
            let mut report = verify::sweep_exp_bound(&f, &m, 1..=nmax, c)?;
            report.experiment = "verify-1d".into();
            report.calibration = Some((cal.c1, budget));
            report
                .params
                .insert("capped".into(), cal.capped.to_string());
            report
                .params
                .insert("feasible".into(), cal.feasible.to_string());
            let dir = out_dir(out_flag, "verify-1d")?;
            write_report(&dir, "verify-1d", &report)?;
            Ok(RunOutcome {
                saturated: report.saturated,
            })
        }

        Command::VerifyTheorem1 {
            dim,
            grid,
            function,
            nmax,
            nmin,
            c,
        } => {
            require_dim(dim, file, 2)?;
            let f = load_field(function, file, 2, grid, seed)?;
            let nmax = resolve(nmax, file, "nmax", 24usize)?;
            let nmin = resolve(nmin, file, "nmin", 4usize)?;
            let c = resolve(c, file, "c", 1.0f64)?;
            if nmin > nmax {
                return Err(CliError::Usage(format!("nmin {nmin} exceeds nmax {nmax}")));
            }
            let m = majorant::majorant_2d(&f, nmax)?;
            let mut sweep = verify::sweep_exp_bound(&f, &m, nmin..=nmax, c)?;
            sweep.experiment = "theorem1-sweep".into();
            let weak = VerificationReport::from_series(
                "theorem1-weaktype",
                sweep.params.clone(),
                verify::weak_type_table(m.field(), 12),
                None,
                false,
            );
            let dir = out_dir(out_flag, "verify-theorem1")?;
            write_report(&dir, "theorem1-sweep", &sweep)?;
            write_report(&dir, "theorem1-weaktype", &weak)?;
            Ok(RunOutcome {
                saturated: sweep.saturated,
            })
        }

        Command::VerifyCor1 {
            dim,
            grid,
            function,
            nmax,
            eps,
        } => {
            require_dim(dim, file, 2)?;
            let f = load_field(function, file, 2, grid, seed)?;
            let nmax = resolve(nmax, file, "nmax", 24usize)?;
            let eps_list = match eps {
                Some(v) => v,
                None => file
                    .raw("eps")
                    .map(parse_f64_list)
                    .transpose()?
                    .unwrap_or_else(|| vec![0.5, 0.1]),
            };
            let m = majorant::majorant_2d(&f, nmax)?;
            let norm = verify::dimension_norm(&f);
            let dir = out_dir(out_flag, "verify-cor1")?;
            let mut saturated = false;
            for eps in eps_list {
                let mask = majorant::exceptional_set(&m, eps)?;
                let tau = masked_max(m.field(), &mask);
                let mut report = verify::exp_sweep_on_set(
                    &f,
                    &mask,
                    1.0 / tau,
                    4.min(nmax)..=nmax,
                    &format!("cor1-eps{eps}"),
                )?;
                let gamma = norm / (eps * tau);
                report.calibration = Some((gamma, tau));
                report
                    .params
                    .insert("eps".into(), format!("{eps}"));
                report.params.insert(
                    "complement_measure".into(),
                    format!("{}", mask.complement_measure()),
                );
                report
                    .params
                    .insert("gamma_empirical".into(), format!("{gamma}"));
                saturated |= report.saturated;
                write_report(&dir, &format!("cor1-eps{eps}"), &report)?;
            }
            Ok(RunOutcome { saturated })
        }

        Command::VerifyCor2 {
            dim,
            grid,
            function,
            nmax,
            a_value,
            eps,
            majorant_nmax,
        } => {
            require_dim(dim, file, 2)?;
            let f = load_field(function, file, 2, grid, seed)?;
            let nmax = resolve(nmax, file, "nmax", 16usize)?;
            let a = resolve(a_value, file, "a", 1.0f64)?;
            let eps = resolve(eps, file, "eps", 0.1f64)?;
            let mnmax = resolve(majorant_nmax, file, "majorant_nmax", 24usize)?;
            let m = majorant::majorant_2d(&f, mnmax)?;
            let mask = majorant::exceptional_set(&m, eps)?;
            let reports = verify::exp_mean_convergence(&f, &mask, a, 1..=nmax)?;
            let dir = out_dir(out_flag, "verify-cor2")?;
            write_report(&dir, "cor2-sums", &reports.direct)?;
            write_report(&dir, "cor2-conj", &reports.conjugate)?;
            Ok(RunOutcome { saturated: false })
        }

        Command::VerifyCor3 {
            dim,
            grid,
            function,
            subseq,
        } => {
            require_dim(dim, file, 2)?;
            let f = load_field(function, file, 2, grid, seed)?;
            let subsequence = match subseq {
                Some(v) => v,
                None => file
                    .raw("subseq")
                    .map(parse_usize_list)
                    .transpose()?
                    .unwrap_or_else(|| (2..=7).map(|k| 1usize << k).collect()),
            };
            let full = GridMask::full(*f.grid());
            let report = verify::log_growth_check(&f, &full, &subsequence)?;
            let dir = out_dir(out_flag, "verify-cor3")?;
            write_report(&dir, "cor3-growth", &report)?;
            Ok(RunOutcome { saturated: false })
        }

        Command::Lemma2 {
            dim,
            grid,
            function,
            nmax,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let default_nmax = if dim == 1 { 64 } else { 12 };
            let nmax = resolve(nmax, file, "nmax", default_nmax)?;
            let (plain, conj) = verify::lemma2_gap_series(&f, nmax)?;
            let dir = out_dir(out_flag, "lemma2")?;
            write_report(&dir, "lemma2-plain", &plain)?;
            write_report(&dir, "lemma2-conj", &conj)?;
            println!(
                "gap integrals: plain {:.6e}, conjugate {:.6e}",
                plain.per_n.last().map(|&(_, v)| v).unwrap_or(0.0),
                conj.per_n.last().map(|&(_, v)| v).unwrap_or(0.0)
            );
            Ok(RunOutcome { saturated: false })
        }

        Command::PhiModulus {
            dim,
            grid,
            function,
            nmax,
            phi_alpha,
        } => {
            let dim = resolve(dim, file, "dim", 1usize)?;
            let f = load_field(function, file, dim, grid, seed)?;
            let nmax = resolve(nmax, file, "nmax", 32usize)?;
            let alpha = resolve(phi_alpha, file, "phi_alpha", 1.0f64)?;
            if alpha <= 0.0 {
                return Err(CliError::Usage("phi_alpha must be positive".into()));
            }
            let phi = PhiModulus::new(move |t| (-alpha * t).exp());
            let full = GridMask::full(*f.grid());
            let mut report = verify::phi_modulus_decay(&f, &full, &phi, 1..=nmax)?;
            report
                .params
                .insert("phi".into(), format!("exp(-{alpha} t)"));
            let dir = out_dir(out_flag, "phi-modulus")?;
            write_report(&dir, "phi-modulus", &report)?;
            Ok(RunOutcome { saturated: false })
        }
    }
}

/// Commands pinned to one dimension still accept --dim for uniformity.
fn require_dim(flag: Option<usize>, file: &FileSettings, required: usize) -> Result<(), CliError> {
    let dim = resolve(flag, file, "dim", required)?;
    if dim != required {
        return Err(CliError::Usage(format!(
            "this experiment runs in dimension {required} (got --dim {dim})"
        )));
    }
    Ok(())
}

fn function_id(flag: Option<String>, file: &FileSettings) -> Result<String, String> {
    resolve_required(flag, file, "fn")
}

fn load_field(
    function: Option<String>,
    file: &FileSettings,
    dim: usize,
    grid_flag: Option<usize>,
    seed: u64,
) -> Result<SampledField, CliError> {
    let default_grid = if dim == 1 { 256 } else { 64 };
    load_field_with_default(function, file, dim, grid_flag, default_grid, seed)
}

fn load_field_with_default(
    function: Option<String>,
    file: &FileSettings,
    dim: usize,
    grid_flag: Option<usize>,
    default_grid: usize,
    seed: u64,
) -> Result<SampledField, CliError> {
    let id = function_id(function, file)?;
    let n = resolve(grid_flag, file, "grid", default_grid)?;
    let grid = TorusGrid::new(dim, n)?;
    let entry = catalog::resolve(&id, dim, seed)?;
    Ok(entry.sample(grid)?)
}

fn build_majorant(
    f: &SampledField,
    nmax_flag: Option<usize>,
    file: &FileSettings,
) -> Result<MajorantField, CliError> {
    match f.grid().dim() {
        1 => Ok(majorant::majorant_1d(f)?),
        2 => {
            let nmax = resolve(nmax_flag, file, "nmax", 24usize)?;
            Ok(majorant::majorant_2d(f, nmax)?)
        }
        d => Err(CliError::Usage(format!(
            "majorant construction supports d <= 2 (got {d}); the recursion is documented for extension"
        ))),
    }
}

fn masked_max(field: &SampledField, mask: &GridMask) -> f64 {
    field
        .values()
        .iter()
        .enumerate()
        .filter(|(j, _)| mask.contains(*j))
        .map(|(_, &v)| v)
        .fold(0.0f64, f64::max)
}

fn out_dir(flag: Option<PathBuf>, experiment: &str) -> Result<PathBuf, CliError> {
    let dir = match flag {
        Some(d) => d,
        None => {
            let stamp = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            PathBuf::from("out").join(format!("{experiment}-{stamp}"))
        }
    };
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn write_field(dir: &Path, name: &str, field: &SampledField) -> Result<(), CliError> {
    let path = dir.join(name);
    let mut out = fs::File::create(&path)?;
    field.write_csv(&mut out)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn write_coeffs(dir: &Path, name: &str, field: &SampledField) -> Result<(), CliError> {
    let path = dir.join(name);
    let mut out = fs::File::create(&path)?;
    spectral::coefficients(field).write_csv(&mut out)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn write_report(dir: &Path, stem: &str, report: &VerificationReport) -> Result<(), CliError> {
    let json_path = dir.join(format!("{stem}.json"));
    fs::File::create(&json_path)?.write_all(report.to_json().as_bytes())?;
    let csv_path = dir.join(format!("{stem}.csv"));
    fs::File::create(&csv_path)?.write_all(report.plot_csv().as_bytes())?;
    println!("wrote {}", json_path.display());
    println!("wrote {}", csv_path.display());
    Ok(())
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad list entry '{s}'"))
        })
        .collect()
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("bad list entry '{s}'"))
        })
        .collect()
}
