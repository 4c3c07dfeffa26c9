//! Command-line front end.

use crate::coefficients::{compute_coefficients, CoefficientSet, Direction};
use crate::error::{Error, Result};
use crate::io::{fmt17, read_coefficients, write_coefficients, write_curve, write_voigt_curve};
use crate::oracle::{damped_expansion_quadrature, fourier_forward_quadrature, QuadratureSpec, UpperLimit};
use crate::rational_eval::{error_scan, eval_forward, linspace};
use crate::targets::{sample_grid, ApproxParams, TargetKind};
use crate::trig_identity::{cosine_sum, viete_product, IdentityOrder};
use crate::voigt::voigt_curve;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ffi::OsString;
use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

/// Identity deviations above this are a breach.
pub const IDENTITY_TOLERANCE: f64 = 1e-11;
/// Largest order the identity check accepts.
pub const IDENTITY_MAX_ORDER: u32 = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_BREACH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCOMPATIBLE: i32 = 3;

/// Named parameter sets reproducing the reference experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Rect surrogate, a=0.6 k=35 sigma=2.7 M=6 h=0.04 N=28; transform is sinc(pi nu)
    Sinc,
    /// pi^(3/2) i t e^(-pi^2 t^2), a=2 sigma=5 M=6 h=0.078 N=55; transform is nu e^(-nu^2)
    GaussDerivative,
    /// sqrt(pi) e^(-pi^2 t^2) with the gauss-derivative grid; feeds the Voigt evaluator
    Gauss,
}

impl Preset {
    pub fn params(self) -> ApproxParams {
        match self {
            Preset::Sinc => ApproxParams::default(),
            Preset::GaussDerivative | Preset::Gauss => ApproxParams {
                shift: 2.0,
                order: 6,
                max_index: 55,
                step: 0.078,
                sigma: 5.0,
                ..ApproxParams::default()
            },
        }
    }

    pub fn target(self) -> TargetKind {
        match self {
            Preset::Sinc => TargetKind::RectSurrogate,
            Preset::GaussDerivative => TargetKind::GaussDerivative,
            Preset::Gauss => TargetKind::Gauss,
        }
    }

    /// Forward coefficients for this preset.
    pub fn coefficients(self, direction: Direction) -> Result<CoefficientSet> {
        compute_coefficients(&sample_grid(self.target(), &self.params())?, direction)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sinc-rational",
    version,
    about = "Rational approximations of Fourier transforms from damped cosine sampling"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute expansion coefficients and optionally write them to a file
    Coeffs(CoeffsArgs),
    /// Evaluate an approximant on a grid and compare with a reference
    Scan(ScanArgs),
    /// Check the cosine product-to-sum identity on random arguments
    IdentityCheck(IdentityArgs),
    /// Voigt function by residues, compared with direct quadrature
    Voigt(VoigtArgs),
    /// Quadrature spot check of a transform against the approximant
    Oracle(OracleArgs),
}

#[derive(Debug, Default, Args)]
struct ParamArgs {
    /// Named parameter set; explicit flags override its values
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "M")]
    order: Option<u32>,
    #[arg(long = "N")]
    max_index: Option<usize>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// forward or inverse
    #[arg(long)]
    direction: Option<String>,
    /// rect-surrogate, rect-surrogate-gauss, gauss-derivative or gauss
    #[arg(long)]
    target: Option<String>,
}

impl ParamArgs {
    fn is_empty(&self) -> bool {
        self.preset.is_none()
            && self.a.is_none()
            && self.order.is_none()
            && self.max_index.is_none()
            && self.h.is_none()
            && self.sigma.is_none()
            && self.k.is_none()
            && self.delta.is_none()
            && self.direction.is_none()
            && self.target.is_none()
    }

    fn direction(&self) -> Result<Option<Direction>> {
        self.direction.as_deref().map(str::parse).transpose()
    }

    /// Parameters, target and direction, starting from `fallback` when no
    /// preset is named.
    fn resolve(&self, fallback: Preset) -> Result<(ApproxParams, TargetKind, Direction)> {
        let preset = self.preset.unwrap_or(fallback);
        let mut p = preset.params();
        if let Some(v) = self.a {
            p.shift = v;
        }
        if let Some(v) = self.order {
            p.order = v;
        }
        if let Some(v) = self.max_index {
            p.max_index = v;
        }
        if let Some(v) = self.h {
            p.step = v;
        }
        if let Some(v) = self.sigma {
            p.sigma = v;
        }
        if let Some(v) = self.k {
            p.surrogate_power = v;
        }
        if let Some(v) = self.delta {
            p.margin = v;
        }
        let target = match &self.target {
            Some(name) => name.parse()?,
            None => preset.target(),
        };
        let direction = self.direction()?.unwrap_or(Direction::Forward);
        Ok((p, target, direction))
    }
}

#[derive(Debug, Args)]
struct CoeffsArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Default, Args)]
struct ScanArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Read coefficients from a file instead of computing them
    #[arg(long, conflicts_with = "preset")]
    coeffs: Option<PathBuf>,
    /// sinc, nu-gauss, gauss or rect; defaults to the target's transform
    #[arg(long = "ref")]
    reference: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<f64>,
    #[arg(long = "n")]
    count: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[arg(long, default_value_t = IDENTITY_MAX_ORDER)]
    m_max: u32,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Args)]
struct VoigtArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, conflicts_with = "preset")]
    coeffs: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    y: f64,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<f64>,
    #[arg(long = "n")]
    count: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    /// Integrate the damped expansion up to this limit ("inf" or a number)
    /// instead of the target itself
    #[arg(long)]
    damped: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    hi: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Direction { .. } => EXIT_INCOMPATIBLE,
        Error::Convergence { .. } | Error::Pole { .. } | Error::Denominator { .. } => EXIT_BREACH,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        None => {
            let _ = writeln!(err, "warning: missing input parameters; the sinc preset is assigned");
            cmd_scan(ScanArgs::default(), out, err)
        }
        Some(Command::Coeffs(a)) => cmd_coeffs(a, out, err),
        Some(Command::Scan(a)) => cmd_scan(a, out, err),
        Some(Command::IdentityCheck(a)) => cmd_identity_check(a, out),
        Some(Command::Voigt(a)) => cmd_voigt(a, out, err),
        Some(Command::Oracle(a)) => cmd_oracle(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn warn_all(err: &mut dyn Write, warnings: &[String]) {
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
}

fn echo_params(out: &mut dyn Write, c: &CoefficientSet) -> Result<()> {
    let p = c.params();
    writeln!(
        out,
        "a={} M={} N={} h={} sigma={} k={} delta={} direction={} target={}",
        p.shift,
        p.order,
        p.max_index,
        p.step,
        p.sigma,
        p.surrogate_power,
        p.margin,
        c.direction(),
        c.target()
    )?;
    Ok(())
}

fn build(params: &ParamArgs, fallback: Preset, err: &mut dyn Write) -> Result<CoefficientSet> {
    let (p, target, direction) = params.resolve(fallback)?;
    warn_all(err, &p.validate()?);
    compute_coefficients(&sample_grid(target, &p)?, direction)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn cmd_coeffs(args: CoeffsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.params.is_empty() {
        let _ = writeln!(err, "warning: no parameters given; the sinc preset is assigned");
    }
    let coeffs = build(&args.params, Preset::Sinc, err)?;
    if let Some(path) = &args.out {
        write_coefficients(path, &coeffs)?;
    }
    echo_params(out, &coeffs)?;
    writeln!(out, "terms={}", coeffs.len())?;
    Ok(EXIT_OK)
}

fn load_or_build(
    file: Option<&Path>,
    params: &ParamArgs,
    fallback: Preset,
    err: &mut dyn Write,
) -> Result<CoefficientSet> {
    match file {
        Some(path) => {
            let coeffs = read_coefficients(path)?;
            if let Some(wanted) = params.direction()? {
                if wanted != coeffs.direction() {
                    return Err(Error::Direction {
                        operation: "requested",
                        expected: wanted.name(),
                        found: coeffs.direction().name(),
                    });
                }
            }
            Ok(coeffs)
        }
        None => build(params, fallback, err),
    }
}

fn cmd_scan(args: ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.coeffs.is_none() && args.params.is_empty() {
        let _ = writeln!(err, "warning: no parameters given; the sinc preset is assigned");
    }
    let coeffs = load_or_build(args.coeffs.as_deref(), &args.params, Preset::Sinc, err)?;
    let reference = match &args.reference {
        Some(name) => name.parse()?,
        None => coeffs.target().default_reference(),
    };
    let lo = args.lo.unwrap_or(-2.0 * PI);
    let hi = args.hi.unwrap_or(2.0 * PI);
    let count = args.count.unwrap_or(1000);
    let curve = error_scan(&coeffs, reference, lo, hi, count)?;
    if let Some(path) = &args.out {
        let mut w = create(path)?;
        write_curve(&mut w, &curve)?;
        w.flush()?;
    }
    echo_params(out, &coeffs)?;
    writeln!(out, "reference={} points={}", reference.name(), curve.len())?;
    writeln!(out, "max_abs_diff={}", fmt17(curve.max_abs_diff()))?;
    Ok(EXIT_OK)
}

fn cmd_identity_check(args: IdentityArgs, out: &mut dyn Write) -> Result<i32> {
    if !(1..=IDENTITY_MAX_ORDER).contains(&args.m_max) {
        return Err(Error::Validation(format!(
            "--m-max must satisfy 1 <= M <= {IDENTITY_MAX_ORDER}, got {}",
            args.m_max
        )));
    }
    if args.samples == 0 {
        return Err(Error::Validation("--samples must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut worst_overall: f64 = 0.0;
    for m in 1..=args.m_max {
        let order = IdentityOrder::new(m)?;
        let worst = (0..args.samples)
            .map(|_| {
                let t: f64 = rng.gen_range(-100.0..=100.0);
                (viete_product(t, order) - cosine_sum(t, order)).abs()
            })
            .fold(0.0, f64::max);
        writeln!(out, "M={m} max_dev={}", fmt17(worst))?;
        worst_overall = worst_overall.max(worst);
    }
    writeln!(out, "max_dev={}", fmt17(worst_overall))?;
    Ok(if worst_overall <= IDENTITY_TOLERANCE {
        EXIT_OK
    } else {
        EXIT_BREACH
    })
}

fn cmd_voigt(args: VoigtArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if !(args.y > 0.0 && args.y.is_finite()) {
        return Err(Error::Validation(format!("y must be finite and > 0, got {}", args.y)));
    }
    let coeffs = load_or_build(args.coeffs.as_deref(), &args.params, Preset::Gauss, err)?;
    if coeffs.direction() != Direction::Forward {
        return Err(Error::Direction {
            operation: "voigt residue",
            expected: Direction::Forward.name(),
            found: coeffs.direction().name(),
        });
    }
    let lo = args.lo.unwrap_or(-2.0 * PI);
    let hi = args.hi.unwrap_or(2.0 * PI);
    let count = args.count.unwrap_or(1000);
    let xs = match count {
        0 => return Err(Error::Validation("--n must be >= 1".into())),
        1 => vec![lo],
        _ if !(lo < hi) => {
            return Err(Error::Validation(format!("range needs lo < hi, got [{lo}, {hi}]")))
        }
        _ => linspace(lo, hi, count),
    };
    let rows = voigt_curve(&coeffs, args.y, &xs)?;
    if let Some(path) = &args.out {
        let mut w = create(path)?;
        write_voigt_curve(&mut w, &rows)?;
        w.flush()?;
    }
    echo_params(out, &coeffs)?;
    if let [row] = rows.as_slice() {
        writeln!(
            out,
            "x={} voigt_approx={} voigt_ref={}",
            fmt17(row.x),
            fmt17(row.approx),
            fmt17(row.reference)
        )?;
    }
    writeln!(out, "y={} points={}", args.y, rows.len())?;
    let worst = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    writeln!(out, "max_abs_diff={}", fmt17(worst))?;
    Ok(EXIT_OK)
}

fn parse_upper(text: &str) -> Result<UpperLimit> {
    match text {
        "inf" | "infinity" => Ok(UpperLimit::Infinite),
        _ => text
            .parse::<f64>()
            .map(UpperLimit::Finite)
            .map_err(|_| Error::Validation(format!("--damped expects 'inf' or a number, got '{text}'"))),
    }
}

fn cmd_oracle(args: OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let (p, target, _) = args.params.resolve(Preset::Sinc)?;
    p.validate()?;
    let coeffs = compute_coefficients(&sample_grid(target, &p)?, Direction::Forward)?;
    let approx = eval_forward(&coeffs, args.nu)?;
    let (quad, approx) = match &args.damped {
        Some(text) => {
            let upper = parse_upper(text)?;
            let q = damped_expansion_quadrature(&coeffs, args.nu, upper, args.tol, 1_000_000)?;
            // The damped integral is the unshifted transform.
            let unshift = Complex64::new(0.0, -2.0 * PI * args.nu * p.shift).exp();
            (q, approx * unshift)
        }
        None => {
            let spec = QuadratureSpec::new(
                args.lo.unwrap_or(-p.shift),
                args.hi.unwrap_or(p.shift),
                args.tol,
            );
            let q = fourier_forward_quadrature(target, p.surrogate_power, 0.0, args.nu, &spec)?;
            (q, approx)
        }
    };
    writeln!(out, "nu={} target={}", args.nu, target)?;
    writeln!(out, "quadrature_re={} quadrature_im={}", fmt17(quad.re), fmt17(quad.im))?;
    writeln!(out, "approx_re={} approx_im={}", fmt17(approx.re), fmt17(approx.im))?;
    writeln!(out, "abs_diff={}", fmt17((quad - approx).norm()))?;
    Ok(EXIT_OK)
}
