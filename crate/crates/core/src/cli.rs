//! The `ncgabor` command line.
//!
//! Exit codes: 0 success, 1 identity check failed, 2 usage or input error,
//! 3 the window does not generate a frame. Reports are `key: value` lines in
//! a fixed order; identical arguments give byte-identical output.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::gabor_frames::{
    canonical_dual, frame_bounds, frame_operator, tight_window, wexler_raz_check, FrameReport,
};
use crate::hilbert_module::{associativity_residual, figa_check, janssen_coefficients, rank_one, ModulePair};
use crate::io::{encode_magnitude_pgm, format_magnitude_csv, read_signal, write_signal};
use crate::lattice::{adjoint_lattice, is_isotropic, parse_lattice, redundancy, Lattice};
use crate::operator::OperatorMatrix;
use crate::phase_space::{Signal, TorusSize, C64};
use crate::random::{random_phase_function, random_signal, trial_rng};
use crate::tf_transforms::{box_window, periodized_gaussian, poisson_sum, stft};
use crate::twisted_algebra::represent;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_A_FRAME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ncgabor", version, about = "Finite Gabor frames, adjoint lattices and duality checks on Z_N")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List a lattice, its adjoint and the isotropy flag.
    Adjoint(LatticeArgs),
    /// Frame bounds of a Gabor system.
    Framebounds(FrameArgs),
    /// Canonical dual window.
    Dual(FrameArgs),
    /// Canonical tight window.
    Tight(FrameArgs),
    /// Run an identity checker on seeded random inputs.
    Check(CheckArgs),
    /// Magnitude of the STFT as CSV and PGM.
    Spectrogram(SpectrogramArgs),
}

#[derive(Debug, Args)]
struct LatticeArgs {
    /// Modulus N.
    #[arg(long)]
    n: usize,
    /// `sep:a,b` or `gen:(x1,w1);(x2,w2);...`
    #[arg(long)]
    lattice: String,
}

#[derive(Debug, Args)]
struct FrameArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    /// `gauss`, `box`, `delta` or `file:<path>`.
    #[arg(long, default_value = "gauss")]
    window: String,
    /// Where to write the computed window (dual and tight only).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Figa,
    Janssen,
    Poisson,
    WexlerRaz,
    Associativity,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Figa => "figa",
            Identity::Janssen => "janssen",
            Identity::Poisson => "poisson",
            Identity::WexlerRaz => "wexler-raz",
            Identity::Associativity => "associativity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualChoice {
    /// The canonical dual of each random window.
    Canonical,
    /// The zero window; always fails.
    Zero,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pass threshold on every relative residual.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Dual window used by the wexler-raz check.
    #[arg(long, value_enum, default_value_t = DualChoice::Canonical)]
    dual: DualChoice,
}

#[derive(Debug, Args)]
struct SpectrogramArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "gauss")]
    window: String,
    /// Signal file to analyze.
    #[arg(long)]
    signal: PathBuf,
    /// Output prefix; writes `<out>.csv` and `<out>.pgm`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    NotAFrame,
    CheckFailed,
    Other(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidSpec(_)
            | Error::InvalidTorusSize(_)
            | Error::Parse(_)
            | Error::Io(_)
            | Error::DimensionMismatch { .. } => Failure::Usage(err.to_string()),
            Error::NotAFrame { .. } => Failure::NotAFrame,
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI with explicit arguments (including the program name) and
/// output streams, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Adjoint(args) => cmd_adjoint(&args, out),
        Command::Framebounds(args) => cmd_frame(FrameVerb::Bounds, &args, out),
        Command::Dual(args) => cmd_frame(FrameVerb::Dual, &args, out),
        Command::Tight(args) => cmd_frame(FrameVerb::Tight, &args, out),
        Command::Check(args) => cmd_check(&args, out),
        Command::Spectrogram(args) => cmd_spectrogram(&args, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::CheckFailed) => EXIT_CHECK_FAILED,
        Err(Failure::NotAFrame) => EXIT_NOT_A_FRAME,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn load_lattice(args: &LatticeArgs) -> std::result::Result<(TorusSize, Lattice), Failure> {
    let n = TorusSize::new(args.n)?;
    Ok((n, parse_lattice(&args.lattice, n)?))
}

/// Resolves a window spec: `gauss`, `box`, `delta` or `file:<path>`.
pub fn load_window(spec: &str, n: TorusSize) -> crate::error::Result<Signal> {
    match spec {
        "gauss" => Ok(periodized_gaussian(n)),
        "box" => Ok(box_window(n)),
        "delta" => Ok(Signal::delta(n, 0)),
        other => {
            let path = other
                .strip_prefix("file:")
                .ok_or_else(|| Error::Parse(format!("unknown window {other:?}")))?;
            let s = read_signal(Path::new(path))?;
            s.check_len(n.get())?;
            Ok(s)
        }
    }
}

fn fmt_f(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "inf".to_string()
    }
}

fn cmd_adjoint(args: &LatticeArgs, out: &mut dyn Write) -> Outcome {
    let (n, lattice) = load_lattice(args)?;
    let adjoint = adjoint_lattice(&lattice);
    writeln!(out, "n: {}", n.get())?;
    writeln!(out, "lattice: {}", args.lattice)?;
    writeln!(out, "lattice_size: {}", lattice.len())?;
    writeln!(out, "lattice_points: {lattice}")?;
    writeln!(out, "adjoint_size: {}", adjoint.len())?;
    writeln!(out, "adjoint_points: {adjoint}")?;
    writeln!(out, "size_product: {}", lattice.len() * adjoint.len())?;
    writeln!(out, "redundancy: {}", redundancy(&lattice))?;
    writeln!(out, "isotropic: {}", is_isotropic(&lattice))?;
    writeln!(out, "self_adjoint: {}", lattice == adjoint)?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FrameVerb {
    Bounds,
    Dual,
    Tight,
}

fn write_frame_report(out: &mut dyn Write, args: &FrameArgs, m: &ModulePair, report: &FrameReport) -> Outcome {
    writeln!(out, "n: {}", m.size().get())?;
    writeln!(out, "lattice: {}", args.lattice.lattice)?;
    writeln!(out, "window: {}", args.window)?;
    writeln!(out, "lattice_size: {}", m.lattice().len())?;
    writeln!(out, "adjoint_size: {}", m.adjoint().len())?;
    writeln!(out, "{report}")?;
    Ok(())
}

fn cmd_frame(verb: FrameVerb, args: &FrameArgs, out: &mut dyn Write) -> Outcome {
    let (n, lattice) = load_lattice(&args.lattice)?;
    let g = load_window(&args.window, n)?;
    let m = ModulePair::new(lattice);
    let report = frame_bounds(&g, &m)?;
    write_frame_report(out, args, &m, &report)?;
    if !report.is_frame {
        return Err(Failure::NotAFrame);
    }
    let window = match verb {
        FrameVerb::Bounds => return Ok(()),
        FrameVerb::Dual => {
            let dual = canonical_dual(&g, &m)?;
            let wr = wexler_raz_check(&g, &dual, &m)?;
            writeln!(out, "dual_norm: {}", fmt_f(dual.norm()))?;
            writeln!(out, "wexler_raz_max_residual: {}", fmt_f(wr.max_residual))?;
            writeln!(out, "wexler_raz: {}", if wr.passes { "pass" } else { "fail" })?;
            dual
        }
        FrameVerb::Tight => {
            let h = tight_window(&g, &m)?;
            let s = frame_operator(&h, &m)?;
            let c = s.trace().re / n.get() as f64;
            let deviation = s
                .sub(&OperatorMatrix::identity(n.get()).scale(C64::new(c, 0.0)))?
                .operator_norm();
            writeln!(out, "tight_norm: {}", fmt_f(h.norm()))?;
            writeln!(out, "tight_constant: {}", fmt_f(c))?;
            writeln!(out, "tight_deviation: {}", fmt_f(deviation))?;
            h
        }
    };
    if let Some(path) = &args.out {
        write_signal(path, &window)?;
        writeln!(out, "output: {}", path.display())?;
    }
    Ok(())
}

fn relative(lhs: C64, rhs: C64) -> f64 {
    (lhs - rhs).norm() / 1.0f64.max(lhs.norm()).max(rhs.norm())
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let (n, lattice) = load_lattice(&args.lattice)?;
    let m = ModulePair::new(lattice);
    let mut max_residual = 0.0f64;
    let mut failures = 0usize;
    for trial in 0..args.trials {
        let mut rng = trial_rng(args.seed.wrapping_add(trial as u64));
        let residual = match args.identity {
            Identity::Figa => {
                let [f1, g1, f2, g2] = std::array::from_fn(|_| random_signal(n, &mut rng));
                let (lhs, rhs) = figa_check(&f1, &g1, &f2, &g2, &m)?;
                relative(lhs, rhs)
            }
            Identity::Janssen => {
                let g = random_signal(n, &mut rng);
                let gamma = random_signal(n, &mut rng);
                let via_janssen = represent(&janssen_coefficients(&g, &gamma, &m)?);
                let direct = rank_one(&gamma, &g, &m)?;
                via_janssen.distance(&direct)? / 1.0f64.max(direct.operator_norm())
            }
            Identity::Poisson => {
                let func = random_phase_function(n, &mut rng);
                let (lhs, rhs) = poisson_sum(&func, m.lattice());
                relative(lhs, rhs)
            }
            Identity::WexlerRaz => {
                let g = random_signal(n, &mut rng);
                let gamma = match args.dual {
                    DualChoice::Canonical => canonical_dual(&g, &m)?,
                    DualChoice::Zero => Signal::zeros(n),
                };
                wexler_raz_check(&g, &gamma, &m)?.max_residual
            }
            Identity::Associativity => {
                let [f, g, h] = std::array::from_fn(|_| random_signal(n, &mut rng));
                let scale = 1.0f64.max(f.norm() * g.norm() * h.norm());
                associativity_residual(&f, &g, &h, &m)? / scale
            }
        };
        if residual.is_nan() || residual >= args.tol {
            failures += 1;
        }
        max_residual = max_residual.max(residual);
    }
    let passed = failures == 0;
    writeln!(out, "identity: {}", args.identity.name())?;
    writeln!(out, "n: {}", n.get())?;
    writeln!(out, "lattice: {}", args.lattice.lattice)?;
    writeln!(out, "trials: {}", args.trials)?;
    writeln!(out, "seed: {}", args.seed)?;
    writeln!(out, "tolerance: {:e}", args.tol)?;
    writeln!(out, "max_residual: {}", fmt_f(max_residual))?;
    writeln!(out, "failures: {failures}")?;
    writeln!(out, "result: {}", if passed { "pass" } else { "fail" })?;
    if passed {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn cmd_spectrogram(args: &SpectrogramArgs, out: &mut dyn Write) -> Outcome {
    let n = TorusSize::new(args.n)?;
    let f = read_signal(&args.signal)?;
    f.check_len(n.get())?;
    let g = load_window(&args.window, n)?;
    let v = stft(&f, &g)?;
    let csv_path = args.out.with_extension("csv");
    let pgm_path = args.out.with_extension("pgm");
    std::fs::write(&csv_path, format_magnitude_csv(&v))?;
    std::fs::write(&pgm_path, encode_magnitude_pgm(&v))?;
    writeln!(out, "n: {}", n.get())?;
    writeln!(out, "window: {}", args.window)?;
    writeln!(out, "max_magnitude: {}", fmt_f(v.max_abs()))?;
    writeln!(out, "csv: {}", csv_path.display())?;
    writeln!(out, "pgm: {}", pgm_path.display())?;
    Ok(())
}
