//! The `zetalab` command line.
//!
//! Exit codes: 0 success, 2 bad input (including parse errors and poles),
//! 3 numerical failure, 4 a check ran to completion and failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::contour::{
    count_zeros_rectangle_with, density_window, locate_zeros, LocatedZero, WindingReport, DEFAULT_PIECES,
};
use crate::error::{Error, Result};
use crate::eval::{zeta, zeta_with, Method};
use crate::func::{Xi, Zeta};
use crate::gamma_xi::{gamma_stirling, xi, GammaResult};
use crate::geometry::{Disk, Rectangle};
use crate::growth::{bound_check_zetaupd, mu_estimate, scan_line, to_csv, to_svg, GrowthSample, MuEstimate};
use crate::lemma::{backlund_pipeline_for, BacklundParams, PipelineOptions, DEFAULT_SAMPLES};
use crate::pseudo::{
    case2_growth_check, params_from_height, ratio_probe_gamma, ratio_probe_zeta, ProbeReport, PseudoParams,
};
use crate::sweep::{run_sweep, Suite, SweepReport};
use crate::types::{ComplexPoint, PrecisionPolicy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Case-1 lower bound on |A| checked by `pseudo`.
pub const CASE1_FLOOR: f64 = 1.0 / 3.0;

#[derive(Debug, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Zeta evaluation, zero counting and inequality checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Absolute tolerance for every evaluator.
    #[arg(long, global = true)]
    pub policy_abs_tol: Option<f64>,
    /// Term budget for the series evaluators.
    #[arg(long, global = true)]
    pub policy_max_terms: Option<usize>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 lets the runtime decide.
    #[arg(long, global = true, env = "ZETALAB_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Dirichlet,
    Global,
    EulerMaclaurin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionArg {
    Zeta,
    Xi,
    Gamma,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ζ, ξ or Γ at one point.
    Eval {
        /// Complex literal such as 2+0i, 0.5-14.1i or -3.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "zeta")]
        function: FunctionArg,
    },
    /// Count zeros inside a rectangle by the argument principle.
    Zeros {
        /// sigma_min,sigma_max,t_min,t_max
        #[arg(long, allow_hyphen_values = true)]
        rect: String,
        #[arg(long, value_enum, default_value = "xi")]
        function: FunctionArg,
        #[arg(long, default_value_t = DEFAULT_PIECES)]
        pieces: usize,
        /// Also locate the zeros, to within this box size.
        #[arg(long)]
        locate: Option<f64>,
    },
    /// Zeros with real part in (lambda, 1) and |t − T| < E.
    Density {
        #[arg(long)]
        lambda: f64,
        #[arg(long = "t")]
        t: f64,
        #[arg(long = "e")]
        e: f64,
    },
    /// Scan |ζ(σ + it)| along a vertical line.
    Growth {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, default_value_t = 3.0)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Instead of scanning, measure the growth constants for this delta over [3, t_max].
        #[arg(long)]
        bound_delta: Option<f64>,
    },
    /// Randomized sweeps of the inequality checkers.
    Verify {
        /// bc, bc-real, three-circle, jensen, lemma21 or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Ratio probes against the pseudo functions A and ∇.
    Pseudo {
        #[arg(long, default_value_t = 50.0)]
        y: f64,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        /// sigma_min,sigma_max,t_min,t_max for the ζ/A probe.
        #[arg(long, default_value = "0.5,2,0,20")]
        region: String,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Circle for the Γ(s/2)/∇ probe, as center_re,center_im,radius.
        #[arg(long, allow_hyphen_values = true)]
        gamma_circle: Option<String>,
    },
    /// The zero-regularized growth pipeline around σ0 + iT.
    Backlund {
        #[arg(long, default_value_t = 1.25)]
        sigma0: f64,
        #[arg(long = "t", default_value_t = 30.0)]
        t: f64,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

/// What every subcommand needs besides its own arguments.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub policy: PrecisionPolicy,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
}

struct Outcome {
    body: String,
    passed: bool,
}

impl Outcome {
    fn json<T: Serialize>(value: &T, passed: bool) -> Result<Self> {
        let mut body = crate::json::to_string(value)?;
        body.push('\n');
        Ok(Self { body, passed })
    }
}

fn parse_list(text: &str, len: usize, what: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != len {
        return Err(Error::Domain(format!(
            "{what} needs {len} comma-separated numbers, got '{text}'"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| Error::Domain(format!("cannot parse '{p}' in {what} '{text}'")))
        })
        .collect()
}

fn parse_rect(text: &str) -> Result<Rectangle> {
    let v = parse_list(text, 4, "rectangle")?;
    Rectangle::new(v[0], v[1], v[2], v[3])
}

fn policy_from(common: &CommonArgs) -> Result<PrecisionPolicy> {
    let mut p = PrecisionPolicy::default();
    if let Some(tol) = common.policy_abs_tol {
        p = p.with_abs_tol(tol)?;
    }
    if let Some(n) = common.policy_max_terms {
        p = p.with_max_terms(n)?;
    }
    Ok(p)
}

fn require_json(cfg: &RunConfig, cmd: &str) -> Result<()> {
    if cfg.format != Format::Json {
        return Err(Error::Domain(format!("{cmd} only writes json")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ValueOut {
    function: FunctionArg,
    s: ComplexPoint,
    #[serde(with = "crate::json::complex")]
    value: num_complex::Complex64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<GammaResult>,
}

fn cmd_eval(cfg: &RunConfig, s: &str, method: MethodArg, function: FunctionArg) -> Result<Outcome> {
    require_json(cfg, "eval")?;
    let s: ComplexPoint = s.parse()?;
    let policy = &cfg.policy;
    match function {
        FunctionArg::Zeta => {
            let r = match method {
                MethodArg::Auto => zeta(s, policy)?,
                MethodArg::Dirichlet => zeta_with(Method::Dirichlet, s, policy)?,
                MethodArg::Global => zeta_with(Method::GlobalSum, s, policy)?,
                MethodArg::EulerMaclaurin => zeta_with(Method::EulerMaclaurin, s, policy)?,
            };
            Outcome::json(&r, true)
        }
        FunctionArg::Xi => {
            if method != MethodArg::Auto {
                return Err(Error::Domain("--method applies to zeta only".into()));
            }
            Outcome::json(
                &ValueOut {
                    function,
                    s,
                    value: xi(s, policy)?,
                    gamma: None,
                },
                true,
            )
        }
        FunctionArg::Gamma => {
            let g = match method {
                MethodArg::Auto => gamma_stirling(s)?,
                _ => return Err(Error::Domain("--method applies to zeta only".into())),
            };
            Outcome::json(
                &ValueOut {
                    function,
                    s,
                    value: g.value(),
                    gamma: Some(g),
                },
                true,
            )
        }
    }
}

#[derive(Serialize)]
struct ZerosOut {
    function: FunctionArg,
    rect: Rectangle,
    #[serde(flatten)]
    report: WindingReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    located: Option<Vec<LocatedZero>>,
}

fn cmd_zeros(
    cfg: &RunConfig,
    rect: &str,
    function: FunctionArg,
    pieces: usize,
    locate: Option<f64>,
) -> Result<Outcome> {
    require_json(cfg, "zeros")?;
    let rect = parse_rect(rect)?;
    let policy = &cfg.policy;
    let (report, located) = match function {
        FunctionArg::Xi => {
            let f = Xi(*policy);
            let rep = count_zeros_rectangle_with(&f, &rect, pieces, policy)?;
            (rep, locate.map(|tol| locate_zeros(&f, &rect, tol, policy)).transpose()?)
        }
        FunctionArg::Zeta => {
            let f = Zeta(*policy);
            let rep = count_zeros_rectangle_with(&f, &rect, pieces, policy)?;
            (rep, locate.map(|tol| locate_zeros(&f, &rect, tol, policy)).transpose()?)
        }
        FunctionArg::Gamma => return Err(Error::Domain("gamma has no zeros to count".into())),
    };
    Outcome::json(
        &ZerosOut {
            function,
            rect,
            report,
            located,
        },
        true,
    )
}

#[derive(Serialize)]
struct DensityOut {
    lambda: f64,
    t: f64,
    e: f64,
    #[serde(flatten)]
    report: WindingReport,
}

fn cmd_density(cfg: &RunConfig, lambda: f64, t: f64, e: f64) -> Result<Outcome> {
    require_json(cfg, "density")?;
    let report = density_window(lambda, t, e, &cfg.policy)?;
    Outcome::json(&DensityOut { lambda, t, e, report }, true)
}

#[derive(Serialize)]
struct GrowthOut {
    estimate: MuEstimate,
    samples: Vec<GrowthSample>,
}

fn cmd_growth(
    cfg: &RunConfig,
    sigma: f64,
    t_min: f64,
    t_max: f64,
    step: f64,
    bound_delta: Option<f64>,
) -> Result<Outcome> {
    let policy = &cfg.policy;
    if let Some(delta) = bound_delta {
        require_json(cfg, "growth --bound-delta")?;
        let rep = bound_check_zetaupd(delta, t_max, policy)?;
        let ok = rep.holds;
        return Outcome::json(&rep, ok);
    }
    let samples = scan_line(sigma, t_min, t_max, step, policy)?;
    match cfg.format {
        Format::Csv => Ok(Outcome {
            body: to_csv(&samples),
            passed: true,
        }),
        Format::Svg => Ok(Outcome {
            body: to_svg(&samples),
            passed: true,
        }),
        Format::Json => {
            let estimate = mu_estimate(sigma, t_min, t_max, step, policy)?;
            Outcome::json(&GrowthOut { estimate, samples }, true)
        }
    }
}

fn cmd_verify(cfg: &RunConfig, suite: &str, n: usize) -> Result<Outcome> {
    require_json(cfg, "verify")?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?
    };
    let reports: Vec<SweepReport> = suites.iter().map(|&s| run_sweep(s, cfg.seed, n, &cfg.policy)).collect();
    let ok = reports.iter().all(SweepReport::passed);
    Outcome::json(&reports, ok)
}

#[derive(Serialize)]
struct PseudoOut {
    params: PseudoParams,
    zeta_probe: ProbeReport,
    case1_floor: f64,
    case1_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    case2: Option<crate::lemma::CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_probe: Option<ProbeReport>,
}

fn cmd_pseudo(
    cfg: &RunConfig,
    y: f64,
    delta: f64,
    region: &str,
    step: f64,
    gamma_circle: Option<&str>,
) -> Result<Outcome> {
    require_json(cfg, "pseudo")?;
    let p = params_from_height(y, delta)?;
    let region = parse_rect(region)?;
    let zeta_probe = ratio_probe_zeta(&region, &p, step, &cfg.policy)?;
    let case1_holds = zeta_probe.min_abs_pseudo_case1.is_none_or(|m| m >= CASE1_FLOOR);
    let boundary = p.case_boundary_t();
    let case2 = if region.t_max > boundary {
        let upper = Rectangle::new(
            region.sigma_min,
            region.sigma_max,
            region.t_min.max(boundary),
            region.t_max,
        )?;
        Some(case2_growth_check(&upper, &p, step)?)
    } else {
        None
    };
    let gamma_probe = match gamma_circle {
        Some(text) => {
            let v = parse_list(text, 3, "gamma circle")?;
            let disk = Disk::closed(ComplexPoint::new(v[0], v[1])?, v[2])?;
            Some(ratio_probe_gamma(&disk, &p, DEFAULT_SAMPLES, &cfg.policy)?)
        }
        None => None,
    };
    let ok = case1_holds && case2.as_ref().is_none_or(|c| c.holds);
    Outcome::json(
        &PseudoOut {
            params: p,
            zeta_probe,
            case1_floor: CASE1_FLOOR,
            case1_holds,
            case2,
            gamma_probe,
        },
        ok,
    )
}

fn cmd_backlund(cfg: &RunConfig, sigma0: f64, t: f64, delta: f64, lambda: f64, samples: usize) -> Result<Outcome> {
    require_json(cfg, "backlund")?;
    let params = BacklundParams::new(sigma0, t, delta, lambda)?;
    let opts = PipelineOptions {
        n_samples: samples,
        ..PipelineOptions::default()
    };
    let rep = backlund_pipeline_for(&Zeta(cfg.policy), &params, &opts, &cfg.policy)?;
    let ok = rep.all_hold && rep.k_consistent;
    Outcome::json(&rep, ok)
}

fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Eval { s, method, function } => cmd_eval(cfg, s, *method, *function),
        Command::Zeros {
            rect,
            function,
            pieces,
            locate,
        } => cmd_zeros(cfg, rect, *function, *pieces, *locate),
        Command::Density { lambda, t, e } => cmd_density(cfg, *lambda, *t, *e),
        Command::Growth {
            sigma,
            t_min,
            t_max,
            step,
            bound_delta,
        } => cmd_growth(cfg, *sigma, *t_min, *t_max, *step, *bound_delta),
        Command::Verify { suite, n } => cmd_verify(cfg, suite, *n),
        Command::Pseudo {
            y,
            delta,
            region,
            step,
            gamma_circle,
        } => cmd_pseudo(cfg, *y, *delta, region, *step, gamma_circle.as_deref()),
        Command::Backlund {
            sigma0,
            t,
            delta,
            lambda,
            samples,
        } => cmd_backlund(cfg, *sigma0, *t, *delta, *lambda, *samples),
    }
}

/// Run with explicit arguments and sinks; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_DOMAIN
                }
            };
        }
    };
    let fail = |err: &mut dyn Write, e: &Error| {
        let _ = writeln!(err, "error: {e}");
        e.exit_code()
    };
    let cfg = match policy_from(&cli.common) {
        Ok(policy) => RunConfig {
            policy,
            output_path: cli.common.output.clone(),
            format: cli.common.format.unwrap_or(Format::Json),
            seed: cli.common.seed,
        },
        Err(e) => return fail(err, &e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.common.threads).build() {
        Ok(p) => p,
        Err(e) => return fail(err, &Error::Numerical(format!("thread pool: {e}"))),
    };
    let outcome = match pool.install(|| dispatch(&cfg, &cli.command)) {
        Ok(o) => o,
        Err(e) => return fail(err, &e),
    };
    let written = match &cfg.output_path {
        Some(path) => std::fs::write(path, &outcome.body),
        None => out.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_DOMAIN;
    }
    if outcome.passed {
        EXIT_OK
    } else {
        let _ = writeln!(err, "check failed");
        EXIT_CHECK_FAILED
    }
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
