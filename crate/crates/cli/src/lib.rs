//! Command-line front end for `sgcoherence`.
//!
//! Exit codes: 0 success, 1 validation failure, 2 invalid input, 3 I/O failure.

pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use sgcoherence::experiment::{DEFAULT_PROFILE_SAMPLES, DEFAULT_SERIES_SAMPLES, DEFAULT_SERIES_SPAN_TAUS};
use sgcoherence::oracle::QuadratureSpec;
use sgcoherence::validation::run_validation;
use sgcoherence::{
    coherence_series, decoherence_time, default_profile_window, density_profile, linear_entropy, regime_report,
    typical_params, AmplitudePolicy, EntropyConvention, ExperimentParams, Spacing, BOHR_MAGNETON,
};

use config::{parse_complex, parse_count, parse_float, parse_from_str, parse_string, ConfigFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Log-spaced series start at this fraction of τ unless `--t-min` is given.
const LOG_SERIES_START_TAUS: f64 = 1e-3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<sgcoherence::Error> for CliError {
    fn from(e: sgcoherence::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sgcoherence",
    version,
    about = "Spin coherence and entanglement in the Stern-Gerlach experiment"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decoherence time, regime and separation measures.
    Report {
        #[command(flatten)]
        common: CommonArgs,
        /// Linear-entropy convention for the value at τ: paper | purity.
        #[arg(long, value_parser = parse_from_str::<EntropyConvention>)]
        entropy: Option<EntropyConvention>,
    },
    /// Coherence, entropy and separation over time as CSV.
    Series {
        #[command(flatten)]
        common: CommonArgs,
        /// First time, s [default: 0, or 1e-3 τ with log spacing].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        t_min: Option<f64>,
        /// Last time, s [default: 5 τ].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        t_max: Option<f64>,
        /// Number of rows [default: 201].
        #[arg(long, value_parser = parse_count)]
        samples: Option<usize>,
        /// linear | log [default: linear].
        #[arg(long, value_parser = parse_from_str::<Spacing>)]
        spacing: Option<Spacing>,
    },
    /// Position densities of both branches at one time as CSV.
    Profile {
        #[command(flatten)]
        common: CommonArgs,
        /// Evaluation time, s [default: τ].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        at_time: Option<f64>,
        /// Window start, m [default: −(Δz̄ + 6σ(t))].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        z_min: Option<f64>,
        /// Window end, m [default: Δz̄ + 6σ(t)].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        z_max: Option<f64>,
        /// Number of rows [default: 1001].
        #[arg(long, value_parser = parse_count)]
        samples: Option<usize>,
    },
    /// Cross-check the closed forms against the numerical oracles.
    Validate {
        #[command(flatten)]
        common: CommonArgs,
        /// Absolute quadrature tolerance [default: 1e-9].
        #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
        abs_tol: Option<f64>,
        /// Subdivision budget per integral [default: 1048576].
        #[arg(long, value_parser = parse_count)]
        max_subdivisions: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Particle mass, kg [default: 1.8e-25].
    #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Magnetic moment, J/T [default: Bohr magneton].
    #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
    pub moment: Option<f64>,
    /// Field gradient ∂B/∂z, T/m [default: 1e3].
    #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
    pub gradient: Option<f64>,
    /// Initial packet width σ, m [default: 1e-5].
    #[arg(long, value_parser = parse_float, allow_hyphen_values = true)]
    pub sigma: Option<f64>,
    /// Spin-up amplitude as re,im; normalized together with β.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    /// Spin-down amplitude as re,im; normalized together with α.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Option<Complex64>,
    /// key = value file; flags take precedence over its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

struct Context {
    params: ExperimentParams,
    file: ConfigFile,
    output: Option<PathBuf>,
}

impl CommonArgs {
    fn resolve(&self) -> Result<Context, CliError> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let typical = typical_params();
        let bell = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let params = ExperimentParams::new(
            file.resolve(self.mass, "mass", parse_float)?.unwrap_or(typical.mass()),
            file.resolve(self.moment, "moment", parse_float)?
                .unwrap_or(BOHR_MAGNETON),
            file.resolve(self.gradient, "gradient", parse_float)?
                .unwrap_or(typical.field_gradient()),
            file.resolve(self.sigma, "sigma", parse_float)?
                .unwrap_or(typical.sigma0()),
            file.resolve(self.alpha, "alpha", parse_complex)?.unwrap_or(bell),
            file.resolve(self.beta, "beta", parse_complex)?.unwrap_or(bell),
            AmplitudePolicy::Normalize,
        )?;
        let output = match &self.output {
            Some(path) => Some(path.clone()),
            None => file.resolve(None, "output", parse_string)?.map(PathBuf::from),
        };
        Ok(Context { params, file, output })
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match execute(&cli.command) {
        Ok((text, ctx_output, passed)) => match emit(&text, ctx_output.as_deref(), stdout) {
            Ok(()) => {
                if passed {
                    EXIT_OK
                } else {
                    let _ = writeln!(stderr, "validation failed");
                    EXIT_VALIDATION
                }
            }
            Err(e) => {
                let _ = writeln!(stderr, "sgcoherence: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "sgcoherence: {e}");
            e.exit_code()
        }
    }
}

fn emit(text: &str, path: Option<&std::path::Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::Io(format!("cannot write to standard output: {e}"))),
    }
}

/// Output text, destination and whether every check passed.
fn execute(command: &Command) -> Result<(String, Option<PathBuf>, bool), CliError> {
    match command {
        Command::Report { common, entropy } => {
            let ctx = common.resolve()?;
            let entropy = ctx
                .file
                .resolve(*entropy, "entropy", parse_from_str::<EntropyConvention>)?
                .unwrap_or_default();
            let report = regime_report(&ctx.params)?;
            let e = linear_entropy(&ctx.params, report.tau, entropy)?;
            Ok((output::report_text(&ctx.params, &report, entropy, e), ctx.output, true))
        }
        Command::Series {
            common,
            t_min,
            t_max,
            samples,
            spacing,
        } => {
            let ctx = common.resolve()?;
            let f = &ctx.file;
            let spacing = f
                .resolve(*spacing, "spacing", parse_from_str::<Spacing>)?
                .unwrap_or_default();
            let tau = decoherence_time(&ctx.params);
            let default_start = match spacing {
                Spacing::Linear => 0.0,
                Spacing::Log => LOG_SERIES_START_TAUS * tau,
            };
            let series = coherence_series(
                &ctx.params,
                f.resolve(*t_min, "t-min", parse_float)?.unwrap_or(default_start),
                f.resolve(*t_max, "t-max", parse_float)?
                    .unwrap_or(DEFAULT_SERIES_SPAN_TAUS * tau),
                f.resolve(*samples, "samples", parse_count)?
                    .unwrap_or(DEFAULT_SERIES_SAMPLES),
                spacing,
            )?;
            Ok((output::series_csv(&series), ctx.output, true))
        }
        Command::Profile {
            common,
            at_time,
            z_min,
            z_max,
            samples,
        } => {
            let ctx = common.resolve()?;
            let f = &ctx.file;
            let t = f
                .resolve(*at_time, "at-time", parse_float)?
                .unwrap_or_else(|| decoherence_time(&ctx.params));
            let (lo, hi) = default_profile_window(&ctx.params, t)?;
            let profile = density_profile(
                &ctx.params,
                t,
                f.resolve(*z_min, "z-min", parse_float)?.unwrap_or(lo),
                f.resolve(*z_max, "z-max", parse_float)?.unwrap_or(hi),
                f.resolve(*samples, "samples", parse_count)?
                    .unwrap_or(DEFAULT_PROFILE_SAMPLES),
            )?;
            Ok((output::profile_csv(&profile), ctx.output, true))
        }
        Command::Validate {
            common,
            abs_tol,
            max_subdivisions,
        } => {
            let ctx = common.resolve()?;
            let f = &ctx.file;
            let defaults = QuadratureSpec::default();
            let spec = QuadratureSpec {
                abs_tol: f.resolve(*abs_tol, "abs-tol", parse_float)?.unwrap_or(defaults.abs_tol),
                max_subdivisions: f
                    .resolve(*max_subdivisions, "max-subdivisions", parse_count)?
                    .unwrap_or(defaults.max_subdivisions),
                ..defaults
            };
            spec.validate()?;
            let report = run_validation(&ctx.params, &spec);
            Ok((output::validation_text(&report), ctx.output, report.all_passed()))
        }
    }
}
