//! Command-line surface for the state-quantifying measures: finite-set
//! measure computation, the two-state overlap sweep, spherical-cap
//! mixtures, named experiments, and the randomized property suite.
//!
//! Exit codes: 0 success / all checks passed, 1 check failure, 2 usage
//! error, 3 input validation error.

mod document;
mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use statequant::entropy::von_neumann_entropy;
use statequant::experiments::{
    run_context_additivity, run_nonmonotonicity_demo, run_overlap_sweep, run_property_suite,
    run_three_measures_table, ExperimentResult, DEFAULT_SEED,
};
use statequant::hilbert::{span_dimension, DEFAULT_SPAN_TOL};
use statequant::measures::{
    cap_mixture_analytic, cap_mixture_montecarlo, cap_mixture_quadrature, counting_measure,
    normalized_solid_angle_measure, quantized_measure, solid_angle_measure, uniform_mixture,
    SphericalCap,
};

#[derive(Parser)]
#[command(
    name = "statequant",
    version,
    about = "State counting on quantum state spaces: counting, solid-angle, and entropy-based measures",
    after_help = "Exit codes: 0 success/all-pass, 1 check failure, 2 usage error, 3 input validation error.\n\
                  Angles are radians. Default seed: 42."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Counting measure only
    Qd,
    /// Solid-angle measure only
    Qc,
    /// Quantized measure only
    Qq,
    /// All three
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Analytic,
    Quadrature,
    Montecarlo,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentName {
    /// Counting vs solid-angle vs quantized on points, caps, and unions
    ThreeMeasures,
    /// (p, S, mu) along a uniform overlap grid (101 steps)
    OverlapSweep,
    /// A bigger set with a smaller measure
    Nonmonotonicity,
    /// Orthonormal contexts count exactly; perturbed ones count less
    /// (dim 4, 25 trials)
    ContextAdditivity,
    /// Every randomized bound, additivity, invariance, and convergence
    /// property (1000 trials)
    PropertySuite,
}

#[derive(Subcommand)]
enum Command {
    /// Compute measures and entropy of a finite state set from a JSON file
    Measure {
        /// Path to a state-set document: {"dim": d, "states": [[[re, im], ...], ...]}
        #[arg(long)]
        states: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Tabulate entropy and measure of a two-state set along the overlap grid
    SweepOverlap {
        /// Number of grid points on [0, 1]
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Uniform mixture over a spherical cap: eigenvalues, entropy, measures
    Cap {
        /// Polar opening angle in radians, in (0, pi]
        #[arg(long)]
        theta0: f64,
        #[arg(long, value_enum)]
        method: Method,
        /// Quadrature points along theta
        #[arg(long, default_value_t = 512)]
        ntheta: usize,
        /// Quadrature points along phi
        #[arg(long, default_value_t = 512)]
        nphi: usize,
        /// Monte Carlo sample count
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        /// Monte Carlo seed
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also print mu_c rescaled to this total over the full sphere
        /// (instead of bare steradians)
        #[arg(long)]
        mu_c_total: Option<f64>,
    },
    /// Run a named experiment and emit its table
    Experiment {
        #[arg(value_enum)]
        name: ExperimentName,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the randomized property suite; exit 0 iff all checks pass
    Props {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(3);
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Measure { states, which } => cmd_measure(&states, which),
        Command::SweepOverlap { steps, format } => {
            let result = run_overlap_sweep(steps).map_err(|e| e.to_string())?;
            emit_experiment(&result, format)
        }
        Command::Cap {
            theta0,
            method,
            ntheta,
            nphi,
            samples,
            seed,
            mu_c_total,
        } => cmd_cap(theta0, method, ntheta, nphi, samples, seed, mu_c_total),
        Command::Experiment { name, seed, format } => {
            let result = match name {
                ExperimentName::ThreeMeasures => run_three_measures_table(),
                ExperimentName::OverlapSweep => {
                    run_overlap_sweep(101).map_err(|e| e.to_string())?
                }
                ExperimentName::Nonmonotonicity => run_nonmonotonicity_demo(),
                ExperimentName::ContextAdditivity => {
                    run_context_additivity(4, 25, seed).map_err(|e| e.to_string())?
                }
                ExperimentName::PropertySuite => {
                    run_property_suite(1000, seed).map_err(|e| e.to_string())?
                }
            };
            emit_experiment(&result, format)
        }
        Command::Props { trials, seed } => {
            let result = run_property_suite(trials, seed).map_err(|e| e.to_string())?;
            let stdout = std::io::stdout();
            output::write_checks(&result, &mut stdout.lock()).map_err(|e| e.to_string())?;
            eprintln!("runtime: {} ms", result.runtime_ms);
            Ok(if result.all_passed() { 0 } else { 1 })
        }
    }
}

fn cmd_measure(path: &PathBuf, which: Which) -> Result<i32, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let (set, diagnostics) = document::parse_state_set(&text)?;
    for d in &diagnostics {
        eprintln!("note: {d}");
    }
    let rho = uniform_mixture(&set);
    let entropy = von_neumann_entropy(&rho).map_err(|e| e.to_string())?;
    let span = span_dimension(set.states(), DEFAULT_SPAN_TOL).map_err(|e| e.to_string())?;

    println!("n_states = {}", set.len());
    println!("span_dim = {span}");
    println!("S_bits = {}", entropy.bits());
    if matches!(which, Which::Qd | Which::All) {
        println!("mu_d = {}", counting_measure(&set).value());
    }
    if matches!(which, Which::Qc | Which::All) {
        // Finite sets of rays occupy zero area on the sphere.
        println!("mu_c = 0");
    }
    if matches!(which, Which::Qq | Which::All) {
        let mu = quantized_measure(&set).map_err(|e| e.to_string())?;
        println!("mu_q = {}", mu.value());
    }
    Ok(0)
}

fn cmd_cap(
    theta0: f64,
    method: Method,
    ntheta: usize,
    nphi: usize,
    samples: usize,
    seed: u64,
    mu_c_total: Option<f64>,
) -> Result<i32, String> {
    let rho = match method {
        Method::Analytic => cap_mixture_analytic(theta0),
        Method::Quadrature => cap_mixture_quadrature(theta0, ntheta, nphi),
        Method::Montecarlo => cap_mixture_montecarlo(theta0, samples, seed),
    }
    .map_err(|e| e.to_string())?;
    let spectrum = rho.eigendecompose().map_err(|e| e.to_string())?;
    let entropy = von_neumann_entropy(&rho).map_err(|e| e.to_string())?;
    let cap = SphericalCap::about_z(theta0).map_err(|e| e.to_string())?;

    println!("theta0 = {theta0}");
    println!(
        "method = {}",
        match method {
            Method::Analytic => "analytic",
            Method::Quadrature => "quadrature",
            Method::Montecarlo => "montecarlo",
        }
    );
    println!("lambda_max = {}", spectrum.eigenvalues()[0]);
    println!("lambda_min = {}", spectrum.eigenvalues()[1]);
    println!("S_bits = {}", entropy.bits());
    println!("mu_q = {}", entropy.bits().exp2());
    println!("mu_c = {}", solid_angle_measure(&cap).value());
    if let Some(total) = mu_c_total {
        println!(
            "mu_c_normalized = {}",
            normalized_solid_angle_measure(&cap, total).value()
        );
    }
    Ok(0)
}

fn emit_experiment(result: &ExperimentResult, format: Format) -> Result<i32, String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Csv => output::write_csv(result, &mut out),
        Format::Json => output::write_json(result, &mut out),
    }
    .map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())?;

    let stderr = std::io::stderr();
    output::write_checks(result, &mut stderr.lock()).map_err(|e| e.to_string())?;
    eprintln!("runtime: {} ms", result.runtime_ms);
    Ok(if result.all_passed() { 0 } else { 1 })
}
