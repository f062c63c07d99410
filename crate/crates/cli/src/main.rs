use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rlalg_core::dual::{assemble_adrl, dualize_root_locus, Adrl};
use rlalg_core::numeric::BBox;
use rlalg_core::rootlocus::RootLocus;
use rlalg_core::{decompose_root_locus, AlgebraError, TransferFunction, Var};

use rlalg_cli::plot::{self, as_xy, trace_all, Curve};
use rlalg_cli::report;
use rlalg_cli::verify::{self, Outcome};

/// Algebraic root locus and its dual for a rational transfer function.
///
/// Coefficient lists are comma-separated, highest degree first:
/// `--num 1,1 --den 1,0,0` is G(s) = (s + 1) / s^2.
#[derive(Parser, Debug)]
#[command(name = "rl-alg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible components of the projective root locus, as JSON.
    Decompose(Common),
    /// Components together with their duals, as JSON.
    Dual(Common),
    /// Trace the component curves to SVG or CSV.
    Plot(PlotArgs),
    /// Check sampled roots, biduals and the degree law; exit 3 on failure.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Numerator coefficients, highest degree first.
    #[arg(long, allow_hyphen_values = true)]
    num: String,
    /// Denominator coefficients, highest degree first.
    #[arg(long, allow_hyphen_values = true)]
    den: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum Format {
    Svg,
    Csv,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    /// Plot window `x0,x1,y0,y1`.
    #[arg(long, default_value = "-5,5,-5,5", allow_hyphen_values = true)]
    bbox: String,
    /// Grid cells per side.
    #[arg(long, default_value_t = 256)]
    resolution: usize,
    /// Plot the dual curves in the (u, v) plane.
    #[arg(long)]
    dual: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Number of gain samples.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Largest accepted normalized residual.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

enum Failure {
    Input(String),
    Internal(String),
    Verify,
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::InvalidTransferFunction(_) | AlgebraError::Poly(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Timer(BTreeMap<String, f64>, Instant);

impl Timer {
    fn new() -> Timer {
        Timer(BTreeMap::new(), Instant::now())
    }

    fn lap(&mut self, name: &str) {
        self.0.insert(name.into(), self.1.elapsed().as_secs_f64() * 1e3);
        self.1 = Instant::now();
    }
}

fn load(c: &Common, timer: &mut Timer) -> Result<RootLocus, Failure> {
    let tf = TransferFunction::parse(&c.num, &c.den)?;
    let rl = decompose_root_locus(&tf)?;
    timer.lap("decompose");
    Ok(rl)
}

fn dual_of(rl: &RootLocus, timer: &mut Timer) -> Result<Adrl, Failure> {
    let adrl = assemble_adrl(dualize_root_locus(rl)?)?;
    timer.lap("dual");
    Ok(adrl)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(rl: &RootLocus, adrl: Option<&Adrl>, timer: Timer) -> Result<String, Failure> {
    let r = report::report(rl, adrl, timer.0);
    serde_json::to_string_pretty(&r).map(|s| s + "\n").map_err(|e| Failure::Internal(e.to_string()))
}

fn parse_bbox(s: &str) -> Result<BBox, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Input(format!("bad --bbox `{s}`: {e}")))?;
    if v.len() != 4 {
        return Err(Failure::Input(format!("--bbox needs four numbers, got `{s}`")));
    }
    BBox::new(v[0], v[1], v[2], v[3]).map_err(|e| Failure::Input(e.to_string()))
}

fn plot(a: &PlotArgs) -> Result<(), Failure> {
    let bbox = parse_bbox(&a.bbox)?;
    if a.resolution < 8 {
        return Err(Failure::Input(format!("--resolution {} below the minimum of 8", a.resolution)));
    }
    let mut timer = Timer::new();
    let rl = load(&a.common, &mut timer)?;
    let mut curves = Vec::new();
    let axes;
    let title;
    if a.dual {
        let adrl = dual_of(&rl, &mut timer)?;
        for (id, d) in adrl.components.iter().enumerate() {
            if let Some(eq) = &d.affine_equation {
                curves.push(Curve { id, label: eq.to_string(), equation: as_xy(eq, Var::U, Var::V)? });
            }
        }
        axes = ("u", "v");
        title = format!("Algebraic dual root locus of {}", rl.tf);
    } else {
        for (id, c) in rl.components.iter().enumerate() {
            if let Some(eq) = &c.affine_equation {
                curves.push(Curve { id, label: eq.to_string(), equation: as_xy(eq, Var::X, Var::Y)? });
            }
        }
        axes = ("x", "y");
        title = format!("Root locus of {}", rl.tf);
    }
    let traced = trace_all(curves, bbox, a.resolution)?;
    let text = match a.format {
        Format::Svg => plot::svg(&traced, bbox, axes, &title),
        Format::Csv => plot::csv(&traced),
    };
    emit(&a.common.out, &text)
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    if a.samples == 0 || a.tol.is_nan() || a.tol < 0.0 {
        return Err(Failure::Input("--samples must be positive and --tol non-negative".into()));
    }
    let mut timer = Timer::new();
    let rl = load(&a.common, &mut timer)?;
    let duals = dualize_root_locus(&rl)?;
    let mut checks = vec![verify::oracle(&rl, a.samples, a.tol)?];
    checks.extend(verify::bidual_checks(&rl, &duals)?);
    checks.extend(verify::degree_law_checks(&duals));
    let text: String = checks.iter().map(|c| c.line() + "\n").collect();
    emit(&a.common.out, &text)?;
    if checks.iter().any(|c| c.outcome == Outcome::Fail) {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose(c) => {
            let mut timer = Timer::new();
            let rl = load(&c, &mut timer)?;
            emit(&c.out, &json(&rl, None, timer)?)
        }
        Command::Dual(c) => {
            let mut timer = Timer::new();
            let rl = load(&c, &mut timer)?;
            let adrl = dual_of(&rl, &mut timer)?;
            emit(&c.out, &json(&rl, Some(&adrl), timer)?)
        }
        Command::Plot(a) => plot(&a),
        Command::Verify(a) => verify(&a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("rl-alg: invalid input: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("rl-alg: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    }
}
