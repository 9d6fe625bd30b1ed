//! `spectra` — command-line front end for nonnegative-matrix pair shifts
//! and convex-polygon ratio experiments.
//!
//! Exit codes: 0 verified success; 1 input or precondition error; 2
//! verification failure (a violated bound or a conditioning problem —
//! never expected on valid inputs). Error messages go to stderr and start
//! with the failing condition's name. Stdout summaries use a fixed
//! `key: value` field order so scripts can rely on them. The environment
//! variable `SPECTRA_SEED` overrides the default seed 0 wherever a `--seed`
//! flag is not given.

mod formats;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectra_core::matrix::DenseMatrix;
use spectra_core::nonneg;
use spectra_core::perturb;
use spectra_core::polygon::{extremal_hexagon, extremal_pentagon, gamma, ConvexPolygon, Point};
use spectra_core::sampling;
use spectra_core::search::search_max_ratio;
use spectra_core::spectrum::{Complex, Spectrum};
use spectra_core::{eigen, Error};

use formats::{CertificateFile, MatrixFile, PolygonFile};

#[derive(Parser)]
#[command(
    name = "spectra",
    version,
    about = "Shift complex eigenvalue pairs of nonnegative matrices, with certificates; \
             explore the inscribed-triangle area bounds behind the construction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shift an eigenvalue pair b+-ic of a nonnegative matrix by +t,
    /// compensating the Perron root, and write a verified certificate
    Perturb(PerturbArgs),
    /// Print structural diagnostics for a matrix file
    Check(CheckArgs),
    /// Report the polygon-to-triangle area ratio and compare it to gamma(n)
    GeometryRatio(GeometryRatioArgs),
    /// Hill-climb for the largest attainable area ratio at a given order
    GeometrySearch(GeometrySearchArgs),
    /// Re-derive the minimizer sum across random diagonal rescalings
    ThresholdScan(ThresholdScanArgs),
}

#[derive(Args)]
struct PerturbArgs {
    /// Matrix file, JSON {"n": ..., "data": [[...], ...]}
    #[arg(long)]
    matrix: PathBuf,
    /// Real part of the eigenvalue pair to shift
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// Imaginary part of the pair (nonzero)
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    /// Shift added to the pair's real part (t >= 0)
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Shift added to the Perron root; defaults to gamma(n) * t
    #[arg(long = "t-tilde", allow_hyphen_values = true)]
    t_tilde: Option<f64>,
    /// Nonnegativity acceptance tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Where to write the certificate JSON
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    /// Matrix file, JSON {"n": ..., "data": [[...], ...]}
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Fixture {
    /// The extremal pentagon (ratio sqrt 5)
    Pentagon,
    /// The extremal hexagon (ratio 9/4)
    Hexagon,
    /// The unit square (ratio 2)
    Square,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolygonSource {
    /// Polygon file, JSON {"vertices": [[x, y], ...]}, counterclockwise
    #[arg(long)]
    polygon: Option<PathBuf>,
    /// A built-in extremal polygon instead of a file
    #[arg(long, value_enum)]
    fixture: Option<Fixture>,
}

#[derive(Args)]
struct GeometryRatioArgs {
    #[command(flatten)]
    source: PolygonSource,
}

#[derive(Args)]
struct GeometrySearchArgs {
    /// Polygon order to search (3..=8)
    #[arg(long)]
    n: usize,
    /// Independent restarts
    #[arg(long, default_value_t = 50)]
    restarts: u32,
    /// Sweep iterations per restart
    #[arg(long, default_value_t = 2000)]
    iters: u32,
    /// Seed (default: SPECTRA_SEED or 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Write the progress trace as CSV (iteration,ratio)
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct ThresholdScanArgs {
    /// Matrix file, JSON {"n": ..., "data": [[...], ...]}
    #[arg(long)]
    matrix: PathBuf,
    /// Real part of the eigenvalue pair
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// Imaginary part of the pair (nonzero)
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    /// Number of random diagonal rescalings
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Where to write the CSV (sample,alpha_sum)
    #[arg(long)]
    out: PathBuf,
    /// Seed (default: SPECTRA_SEED or 0)
    #[arg(long)]
    seed: Option<u64>,
}

/// A command failure carrying its exit class.
enum Failure {
    /// Unreadable/invalid input or an unmet precondition.
    Input(String),
    /// A verification that should have held did not (or the numerics could
    /// not support it): the "investigate" exit.
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verify(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Verify(m) => m,
        }
    }
}

/// Library errors keep their class: postcondition/conditioning failures are
/// verification problems, everything else is the caller's input.
fn classify(e: Error) -> Failure {
    match e {
        Error::PostconditionFailed(_)
        | Error::NonConvergence(_)
        | Error::CollinearEigenvectors { .. }
        | Error::NotConstantRowSums { .. } => Failure::Verify(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn main() -> ExitCode {
    // Flag mistakes are input errors (exit 1); clap's default exit 2 is
    // reserved here for verification failures.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(help_or_version) => {
            let _ = help_or_version.print();
            return ExitCode::SUCCESS;
        }
    };
    let result = match cli.command {
        Command::Perturb(args) => cmd_perturb(&args),
        Command::Check(args) => cmd_check(&args),
        Command::GeometryRatio(args) => cmd_geometry_ratio(&args),
        Command::GeometrySearch(args) => cmd_geometry_search(&args),
        Command::ThresholdScan(args) => cmd_threshold_scan(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn read_matrix(path: &Path) -> Result<(MatrixFile, DenseMatrix), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("cannot parse {}: {e}", path.display())))?;
    let matrix = file.to_matrix().map_err(Failure::Input)?;
    Ok((file, matrix))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("SPECTRA_SEED") {
        Ok(text) => text.parse().map_err(|_| {
            Failure::Input(format!("SPECTRA_SEED must be an unsigned integer, got {text:?}"))
        }),
        Err(_) => Ok(0),
    }
}

fn format_complex(v: Complex) -> String {
    if v.im >= 0.0 {
        format!("{}+{}i", v.re, v.im)
    } else {
        format!("{}-{}i", v.re, -v.im)
    }
}

fn format_spectrum(s: &Spectrum) -> String {
    s.sorted_values()
        .iter()
        .map(|&v| format_complex(v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_perturb(args: &PerturbArgs) -> Result<(), Failure> {
    let (file, matrix) = read_matrix(&args.matrix)?;
    let n = matrix.order().map_err(classify)?;
    let g = gamma(n).map_err(classify)?;
    let t_tilde = args.t_tilde.unwrap_or(g * args.t);

    let cert = perturb::shift_complex_pair(&matrix, args.b, args.c, args.t, t_tilde, args.tol)
        .map_err(classify)?;

    let cert_file = CertificateFile::from_certificate(&file, g, &cert);
    let json = serde_json::to_string_pretty(&cert_file)
        .map_err(|e| Failure::Verify(format!("cannot serialize the certificate: {e}")))?;
    write_text(&args.out, &format!("{json}\n"))?;

    println!("order: {n}");
    println!("gamma: {g}");
    println!("perron root: {} -> {}", cert.plan.rho, cert.plan.rho + cert.t_tilde);
    println!(
        "pair: {} -> {}",
        format_complex(Complex::new(cert.plan.b, cert.plan.c)),
        format_complex(Complex::new(cert.plan.b + cert.t, cert.plan.c))
    );
    println!("t: {}", cert.t);
    println!("t_tilde: {}", cert.t_tilde);
    println!("threshold: {}", cert.threshold);
    println!("nonneg margin: {:e}", cert.nonneg_margin);
    println!("spectrum after: {}", format_spectrum(&cert.spectrum_after));
    println!("certificate: {}", args.out.display());
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let (_, matrix) = read_matrix(&args.matrix)?;
    let n = matrix.order().map_err(classify)?;
    println!("order: {n}");

    let (nonneg_ok, margin) = nonneg::is_nonnegative(&matrix, 0.0);
    println!("nonnegative: {nonneg_ok} (margin {margin:e})");

    let spectrum = eigen::eigenvalues(&matrix).map_err(classify)?;
    println!("spectrum: {}", format_spectrum(&spectrum));

    if !nonneg_ok {
        println!("irreducible: not applicable");
        return Ok(());
    }
    let irreducible = nonneg::is_irreducible(&matrix, 0.0).map_err(classify)?;
    println!("irreducible: {irreducible}");
    if !irreducible {
        return Ok(());
    }

    let perron = nonneg::perron(&matrix).map_err(classify)?;
    println!("perron root: {}", perron.rho);
    println!(
        "perron vector: {}",
        perron
            .x
            .iter()
            .map(f64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("perron residual: {:e}", perron.residual);

    let balanced = nonneg::to_constant_row_sums(&matrix).map_err(classify)?;
    let spread = balanced
        .row_sums()
        .iter()
        .map(|rs| (rs - perron.rho).abs())
        .fold(0.0, f64::max);
    println!("row-sum residual after normalization: {spread:e}");
    Ok(())
}

fn cmd_geometry_ratio(args: &GeometryRatioArgs) -> Result<(), Failure> {
    let (poly, label): (ConvexPolygon, String) = match (&args.source.polygon, args.source.fixture)
    {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            let file: PolygonFile = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("cannot parse {}: {e}", path.display())))?;
            (file.to_polygon().map_err(Failure::Input)?, path.display().to_string())
        }
        (None, Some(Fixture::Pentagon)) => (extremal_pentagon(), "pentagon".into()),
        (None, Some(Fixture::Hexagon)) => (extremal_hexagon(), "hexagon".into()),
        (None, Some(Fixture::Square)) => {
            let square = ConvexPolygon::new(vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0),
            ])
            .expect("the unit square is strictly convex");
            (square, "square".into())
        }
        _ => unreachable!("clap enforces exactly one source"),
    };

    let n = poly.len();
    let report = poly.triangle_ratio().map_err(classify)?;
    println!("polygon: {label}");
    println!("n: {n}");
    println!("polygon double area: {}", report.polygon_double_area);
    println!(
        "max triangle double area: {} (triple {},{},{})",
        report.triangle_double_area,
        report.best_triple[0],
        report.best_triple[1],
        report.best_triple[2]
    );
    println!("ratio: {}", report.ratio);

    let g = gamma(n).map_err(classify)?;
    if n <= 6 {
        let verdict = if (report.ratio - g).abs() <= 1e-9 {
            "tight"
        } else {
            "within bound"
        };
        println!("gamma({n}): {g} ({verdict})");
        if report.ratio > g + 1e-9 {
            return Err(Failure::Verify(format!(
                "ratio {} exceeds the proven bound gamma({n}) = {g}",
                report.ratio
            )));
        }
    } else {
        println!("gamma({n}): {g} (geometric bound not applicable above order 6)");
    }
    Ok(())
}

fn cmd_geometry_search(args: &GeometrySearchArgs) -> Result<(), Failure> {
    let seed = resolve_seed(args.seed)?;
    let outcome = search_max_ratio(args.n, args.restarts, args.iters, seed).map_err(classify)?;

    println!("n: {}", args.n);
    println!("restarts: {}", args.restarts);
    println!("iters: {}", args.iters);
    println!("seed: {seed}");
    println!("best ratio: {}", outcome.best_ratio);
    let g = gamma(args.n).map_err(classify)?;
    println!("gamma({}): {g}", args.n);

    if let Some(path) = &args.trace {
        let mut csv = String::from("iteration,ratio\n");
        for point in &outcome.trace {
            csv.push_str(&format!("{},{}\n", point.iteration, point.ratio));
        }
        write_text(path, &csv)?;
        println!("trace: {} ({} points)", path.display(), outcome.trace.len());
    }
    Ok(())
}

fn cmd_threshold_scan(args: &ThresholdScanArgs) -> Result<(), Failure> {
    let (_, matrix) = read_matrix(&args.matrix)?;
    let n = matrix.order().map_err(classify)?;
    let g = gamma(n).map_err(classify)?;
    let seed = resolve_seed(args.seed)?;
    let mut rng = sampling::rng_from(seed);

    let mut csv = String::from("sample,alpha_sum\n");
    let mut min_sum = f64::INFINITY;
    let mut max_sum = f64::NEG_INFINITY;
    let mut violation = None;
    for sample in 0..args.samples {
        let rescaled =
            sampling::random_diagonal_similarity(&matrix, 1.0, &mut rng).map_err(classify)?;
        let balanced = nonneg::to_constant_row_sums(&rescaled).map_err(classify)?;
        let plan = perturb::build_plan(&balanced, args.b, args.c, 1.0, g).map_err(classify)?;
        csv.push_str(&format!("{sample},{}\n", plan.alpha_sum));
        min_sum = min_sum.min(plan.alpha_sum);
        max_sum = max_sum.max(plan.alpha_sum);
        if (plan.alpha_sum < -g - 1e-9 || plan.alpha_sum > -1.0 + 1e-9) && violation.is_none() {
            violation = Some((sample, plan.alpha_sum));
        }
    }
    write_text(&args.out, &csv)?;

    println!("order: {n}");
    println!("samples: {}", args.samples);
    println!("seed: {seed}");
    if args.samples > 0 {
        println!("alpha_sum min: {min_sum}");
        println!("alpha_sum max: {max_sum}");
    }
    println!("window: [{}, -1] (pad 1e-9)", -g);
    println!("csv: {}", args.out.display());

    if let Some((sample, value)) = violation {
        return Err(Failure::Verify(format!(
            "sample {sample}: minimizer sum {value} escapes [{}, -1]",
            -g
        )));
    }
    Ok(())
}
