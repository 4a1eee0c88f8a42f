//! Command-line front end: subspace angles, iteration of projection
//! products, Oppenheim angles and the example gallery, all with JSON
//! input and output.
//!
//! Exit codes: 0 success, 1 failed gallery claim, 2 parse/validation
//! failure, 3 zero subspace or non-complementary pair, 4 inconsistent
//! pair, 5 inadmissible consistency projection.

mod io;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use projang::gallery::{self, ExampleReport};
use projang::oppenheim::{
    check_consistency_projection, consistency_family, oppenheim_cos_given, oppenheim_cos_inf,
    NormSpec,
};
use projang::projections::{
    iterate_product, predicted_spectral_radius, spectral_radius_numeric, ObliqueProjection,
    Verdict,
};

use io::{matrix_artifact, read_matrix, read_projection, read_subspace, CliError};

#[derive(Parser)]
#[command(name = "projang", version, about = "Angle analysis of linear projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Principal angles, Friedrichs data and directed distances between
    /// two subspaces given by spanning columns.
    Angles {
        /// Matrix file whose columns span the first subspace.
        s1: String,
        /// Matrix file whose columns span the second subspace.
        s2: String,
    },
    /// Iterates (P1 P2)^n for projections given by range and kernel files.
    Iterate {
        range1: String,
        kernel1: String,
        range2: String,
        kernel2: String,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Oppenheim cosine data for two projection matrices.
    Oppenheim {
        p1: String,
        p2: String,
        #[arg(long, value_enum)]
        norm: NormChoice,
        /// Candidate consistency projection; without it the family is
        /// searched for the infimum.
        #[arg(long)]
        p12: Option<String>,
    },
    /// Runs the example gallery and prints its reports.
    Gallery {
        /// Run a single example by identifier.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NormChoice {
    Euclidean,
    L1,
    Mixed,
}

impl From<NormChoice> for NormSpec {
    fn from(choice: NormChoice) -> Self {
        match choice {
            NormChoice::Euclidean => NormSpec::Euclidean,
            NormChoice::L1 => NormSpec::AbsSum,
            NormChoice::Mixed => NormSpec::EuclidPlusAbsSum,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("projang: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Angles { s1, s2 } => cmd_angles(&s1, &s2),
        Command::Iterate {
            range1,
            kernel1,
            range2,
            kernel2,
            max_steps,
            tol,
        } => cmd_iterate(&range1, &kernel1, &range2, &kernel2, max_steps, tol),
        Command::Oppenheim { p1, p2, norm, p12 } => {
            cmd_oppenheim(&p1, &p2, norm.into(), p12.as_deref())
        }
        Command::Gallery { only } => cmd_gallery(only.as_deref()),
    }
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

#[derive(Serialize)]
struct AnglesOutput {
    principal_angles: Vec<f64>,
    sines: Vec<f64>,
    friedrichs_cosine: f64,
    friedrichs_sine: f64,
    directed_distance_forward: f64,
    directed_distance_reverse: f64,
}

fn cmd_angles(s1_path: &str, s2_path: &str) -> Result<ExitCode, CliError> {
    let s1 = read_subspace(s1_path)?;
    let s2 = read_subspace(s2_path)?;
    let spectrum = s1.principal_angles(&s2).map_err(CliError::geometry)?;
    let output = AnglesOutput {
        principal_angles: spectrum.angles().to_vec(),
        sines: spectrum.angles().iter().map(|a| a.sin()).collect(),
        friedrichs_cosine: s1.friedrichs_cosine(&s2).map_err(CliError::geometry)?,
        friedrichs_sine: s1.sine_between(&s2).map_err(CliError::geometry)?,
        directed_distance_forward: s1.directed_distance(&s2).map_err(CliError::geometry)?,
        directed_distance_reverse: s2.directed_distance(&s1).map_err(CliError::geometry)?,
    };
    emit(&output);
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IterateOutput {
    predicted_rho: Option<f64>,
    numeric_rho: f64,
    verdict: &'static str,
    steps: usize,
    final_step_norm: Option<f64>,
    radius_estimate: f64,
    limit: Option<io::MatrixFile>,
}

fn cmd_iterate(
    range1: &str,
    kernel1: &str,
    range2: &str,
    kernel2: &str,
    max_steps: usize,
    tol: f64,
) -> Result<ExitCode, CliError> {
    let build = |range_path: &str, kernel_path: &str| -> Result<ObliqueProjection<f64>, CliError> {
        let range = read_subspace(range_path)?;
        let kernel = read_subspace(kernel_path)?;
        ObliqueProjection::from_range_and_kernel(range, kernel).map_err(CliError::geometry)
    };
    let p1 = build(range1, kernel1)?;
    let p2 = build(range2, kernel2)?;

    let predicted = predicted_spectral_radius(&p1, &p2).map_err(CliError::geometry)?;
    let numeric = spectral_radius_numeric(&(p1.matrix() * p2.matrix()));
    let report = iterate_product(&p1, &p2, max_steps, tol).map_err(CliError::geometry)?;
    let output = IterateOutput {
        predicted_rho: predicted,
        numeric_rho: numeric,
        verdict: verdict_name(report.verdict),
        steps: report.steps,
        final_step_norm: report.step_norms.last().copied(),
        radius_estimate: report.radius_estimate,
        limit: report.limit.as_ref().map(matrix_artifact),
    };
    emit(&output);
    Ok(ExitCode::SUCCESS)
}

fn verdict_name(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Converges => "converges",
        Verdict::Diverges => "diverges",
        Verdict::Inconclusive => "inconclusive",
    }
}

#[derive(Serialize)]
struct OppenheimGivenOutput {
    norm: NormSpec,
    admissible: bool,
    cos: f64,
}

#[derive(Serialize)]
struct OppenheimInfOutput {
    norm: NormSpec,
    intersection_dim: usize,
    forced_kernel_dim: usize,
    free_dim: usize,
    inf_cos: f64,
    evaluations: usize,
    minimizer: io::MatrixFile,
}

fn cmd_oppenheim(
    p1_path: &str,
    p2_path: &str,
    norm: NormSpec,
    p12_path: Option<&str>,
) -> Result<ExitCode, CliError> {
    let p1 = read_projection(p1_path)?;
    let p2 = read_projection(p2_path)?;

    match p12_path {
        Some(path) => {
            let p12 = read_matrix(path)?;
            let check = check_consistency_projection(&p12, &p1, &p2, 1e-8)
                .map_err(CliError::geometry)?;
            if let Some(failure) = check.failure() {
                return Err(CliError::inadmissible(failure.to_string()));
            }
            let cos =
                oppenheim_cos_given(&p1, &p2, &p12, norm).map_err(CliError::geometry)?;
            emit(&OppenheimGivenOutput {
                norm,
                admissible: true,
                cos,
            });
        }
        None => {
            let family = consistency_family(&p1, &p2).map_err(CliError::geometry)?;
            let inf = oppenheim_cos_inf(&p1, &p2, norm).map_err(CliError::geometry)?;
            emit(&OppenheimInfOutput {
                norm,
                intersection_dim: family.intersection().dim(),
                forced_kernel_dim: family.forced_kernel().dim(),
                free_dim: family.free_dim(),
                inf_cos: inf.value,
                evaluations: inf.evaluations,
                minimizer: matrix_artifact(&inf.minimizer),
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gallery(only: Option<&str>) -> Result<ExitCode, CliError> {
    let reports: Vec<ExampleReport> = match only {
        Some(id) => match gallery::run_example::<f64>(id) {
            Some(report) => vec![report],
            None => {
                return Err(CliError::usage(format!(
                    "unknown example identifier {id:?}; known: {:?}",
                    gallery::EXAMPLE_IDS
                )))
            }
        },
        None => gallery::run_all::<f64>(),
    };
    emit(&reports);

    let mut failed = false;
    for report in &reports {
        for claim in report.failures() {
            failed = true;
            eprintln!(
                "projang: gallery claim failed: {}/{} (expected {}, computed {})",
                report.example_id, claim.id, claim.expected, claim.computed
            );
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
