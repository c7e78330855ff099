//! Command-line front end for the disc/strip toolkit: evaluate maps and
//! distances, compute hyperbolic-disc extents, evaluate the sharp bounds,
//! export figure polylines, and run the verification suite.
//!
//! Exit codes: `0` success (and, for `verify`, all claims passing), `1` a
//! failed verification claim, `2` usage or parameter errors.

mod cnum;

use std::f64::consts::TAU;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use discstrip::bounds::{self, BoundKind, BoundValue};
use discstrip::discgeom::{
    self, boundary_curve, extents_numeric, lambda_of_r, r_of_lambda, HypDisc,
};
use discstrip::hypgeom::{dist_disc, dist_strip};
use discstrip::planarmaps::{
    disc_automorphism, phi, phi_b, psi_k, rotation, tan_map, vertical_stretch,
};
use discstrip::verify::{
    reports_from_json, reports_to_json, run_all, summary, VerificationReport, VerifyConfig,
};
use discstrip::Cpx;

use cnum::{fmt_complex, fmt_real, parse_complex};

#[derive(Parser)]
#[command(
    name = "discstrip",
    version,
    about = "Hyperbolic geometry of the unit disc and the strip: maps, distances, extents, sharp bounds, and numerical certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainChoice {
    Disc,
    Strip,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapChoice {
    /// Conformal disc -> strip map fixing 0
    Phi,
    /// Conformal disc -> strip map sending 0 to b (requires --b)
    PhiB,
    /// tan((pi/4) z): strip -> disc
    Tan,
    /// Disc automorphism swapping 0 and a (requires --a)
    Automorphism,
    /// Vertical stretch (x, y) -> (x, K y) (requires --K)
    Stretch,
    /// Model harmonic K-quasiregular disc -> strip map (requires --K)
    PsiK,
    /// z -> e^{i alpha} z (requires --alpha)
    Rotation,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindChoice {
    /// |f(z)| <= |z|, holomorphic disc -> disc
    Classical,
    /// (4/pi) arctan r, harmonic into the disc
    HarmonicDisc,
    /// [m_b(r), M_b(r)], harmonic into (-1,1) with u(0) = b (requires --b)
    HarmonicInterval,
    /// (4/pi) artanh r, holomorphic into the strip
    HolStrip,
    /// (4/pi) K artanh r, harmonic K-quasiregular into the strip (requires --K)
    HqrStrip,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a built-in map at a point, with its Wirtinger pair.
    MapEval(MapEvalArgs),
    /// Hyperbolic distance between two points of the disc or the strip.
    Dist(DistArgs),
    /// Euclidean extents of a hyperbolic disc in the strip.
    Extents(ExtentsArgs),
    /// Evaluate one of the sharp bounds at a modulus r.
    Bounds(BoundsArgs),
    /// Export the disc/strip boundary polylines as CSV.
    Figure(FigureArgs),
    /// Run the verification suite and report every claim.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MapEvalArgs {
    #[arg(long, value_enum)]
    map: MapChoice,
    /// Evaluation point, e.g. `0.5`, `0.5i`, `0.3+0.4i`, or `0.3,0.4`.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Automorphism parameter (|a| < 1).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Strip center in (-1, 1).
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Quasiregularity constant K >= 1.
    #[arg(long = "K")]
    k: Option<f64>,
    /// Rotation angle in radians.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long, value_enum)]
    domain: DomainChoice,
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
}

#[derive(Args)]
struct ExtentsArgs {
    /// Euclidean radius r in (0, 1) of the disc-side circle.
    #[arg(long)]
    r: Option<f64>,
    /// Hyperbolic radius lambda > 0 (alternative to --r).
    #[arg(long)]
    lambda: Option<f64>,
    /// Real strip center in (-1, 1); defaults to 0.
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Boundary samples for the numeric extents.
    #[arg(long, default_value_t = discgeom::DEFAULT_TEST_SAMPLES)]
    n: usize,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    kind: KindChoice,
    /// Modulus r in [0, 1).
    #[arg(long)]
    r: f64,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
}

#[derive(Args)]
struct FigureArgs {
    /// Euclidean radius r in (0, 1).
    #[arg(long)]
    r: f64,
    /// Samples per curve.
    #[arg(long, default_value_t = discgeom::DEFAULT_FIGURE_SAMPLES)]
    n: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Trial count for the randomized checks (claim defaults when omitted).
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance override applied to every claim.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputFormat,
    /// Write the rendered output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Re-read a JSON report and reproduce its summary instead of running.
    #[arg(long)]
    replay: Option<PathBuf>,
}

type CliError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::MapEval(args) => map_eval(args),
        Command::Dist(args) => dist(args),
        Command::Extents(args) => extents(args),
        Command::Bounds(args) => bounds_cmd(args),
        Command::Figure(args) => figure(args),
        Command::Verify(args) => verify(args),
    }
}

fn require<T>(value: Option<T>, flag: &str, context: &str) -> Result<T, CliError> {
    value.ok_or_else(|| format!("--{flag} is required for {context}").into())
}

fn map_eval(args: MapEvalArgs) -> Result<ExitCode, CliError> {
    let z = parse_complex(&args.z)?;
    let map = match args.map {
        MapChoice::Phi => phi(),
        MapChoice::PhiB => phi_b(require(args.b, "b", "phi-b")?)?,
        MapChoice::Tan => tan_map(),
        MapChoice::Automorphism => {
            disc_automorphism(parse_complex(&require(args.a, "a", "automorphism")?)?)?
        }
        MapChoice::Stretch => vertical_stretch(require(args.k, "K", "stretch")?)?,
        MapChoice::PsiK => psi_k(require(args.k, "K", "psi-k")?)?,
        MapChoice::Rotation => rotation(require(args.alpha, "alpha", "rotation")?),
    };
    let value = map.eval(z)?;
    let (fz, fzbar) = map.wirtinger(z)?;
    match args.output {
        OutputFormat::Human => println!("{}", fmt_complex(value)),
        OutputFormat::Json => println!(
            "{}",
            serde_json::json!({
                "value": { "re": value.re, "im": value.im },
                "fz": { "re": fz.re, "im": fz.im },
                "fzbar": { "re": fzbar.re, "im": fzbar.im },
                "analytic": map.is_analytic(),
            })
        ),
        OutputFormat::Csv => {
            println!("field,re,im");
            println!("value,{},{}", value.re, value.im);
            println!("fz,{},{}", fz.re, fz.im);
            println!("fzbar,{},{}", fzbar.re, fzbar.im);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dist(args: DistArgs) -> Result<ExitCode, CliError> {
    let from = parse_complex(&args.from)?;
    let to = parse_complex(&args.to)?;
    let d = match args.domain {
        DomainChoice::Disc => dist_disc(from, to)?,
        DomainChoice::Strip => dist_strip(from, to)?,
    };
    match args.output {
        OutputFormat::Human => println!("{}", fmt_real(d)),
        OutputFormat::Json => println!("{}", serde_json::json!({ "distance": d })),
        OutputFormat::Csv => {
            println!("distance");
            println!("{d}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn extents(args: ExtentsArgs) -> Result<ExitCode, CliError> {
    let (r, lambda) = match (args.r, args.lambda) {
        (Some(r), None) => (r, lambda_of_r(r)?),
        (None, Some(lambda)) => (r_of_lambda(lambda)?, lambda),
        _ => return Err("pass exactly one of --r or --lambda".into()),
    };
    let b = args.b.unwrap_or(0.0);
    let disc = HypDisc::in_strip(Cpx::new(b, 0.0), lambda)?;
    let num = extents_numeric(&disc, args.n)?;
    // closed forms where available, sampled extents elsewhere
    let (re_min, re_max) = discgeom::offcenter_re_extent(b, r)?;
    let (im_max, mod_max) = if b == 0.0 {
        (
            discgeom::strip_disc_extents_closed(r)?.im_max,
            discgeom::strip_disc_maxmod_closed(lambda)?,
        )
    } else {
        (num.im_max, num.mod_max)
    };
    match args.output {
        OutputFormat::Human => {
            println!("re_min {}", fmt_real(re_min));
            println!("re_max {}", fmt_real(re_max));
            println!("im_min {}", fmt_real(-im_max));
            println!("im_max {}", fmt_real(im_max));
            println!("mod_max {}", fmt_real(mod_max));
        }
        OutputFormat::Json => println!(
            "{}",
            serde_json::json!({
                "r": r,
                "lambda": lambda,
                "b": b,
                "re_min": re_min,
                "re_max": re_max,
                "im_min": -im_max,
                "im_max": im_max,
                "mod_max": mod_max,
            })
        ),
        OutputFormat::Csv => {
            println!("field,value");
            println!("re_min,{re_min}");
            println!("re_max,{re_max}");
            println!("im_min,{}", -im_max);
            println!("im_max,{im_max}");
            println!("mod_max,{mod_max}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bounds_cmd(args: BoundsArgs) -> Result<ExitCode, CliError> {
    let kind = match args.kind {
        KindChoice::Classical => BoundKind::ClassicalHol,
        KindChoice::HarmonicDisc => BoundKind::HarmonicDisc,
        KindChoice::HarmonicInterval => {
            BoundKind::HarmonicInterval(require(args.b, "b", "harmonic-interval")?)
        }
        KindChoice::HolStrip => BoundKind::HolStrip,
        KindChoice::HqrStrip => BoundKind::HqrStrip(require(args.k, "K", "hqr-strip")?),
    };
    match bounds::bound_value(kind, args.r)? {
        BoundValue::Modulus(v) => match args.output {
            OutputFormat::Human => println!("{}", fmt_real(v)),
            OutputFormat::Json => println!("{}", serde_json::json!({ "bound": v })),
            OutputFormat::Csv => {
                println!("bound");
                println!("{v}");
            }
        },
        BoundValue::Interval { lower, upper } => match args.output {
            OutputFormat::Human => {
                println!("lower {}", fmt_real(lower));
                println!("upper {}", fmt_real(upper));
            }
            OutputFormat::Json => {
                println!("{}", serde_json::json!({ "lower": lower, "upper": upper }))
            }
            OutputFormat::Csv => {
                println!("field,value");
                println!("lower,{lower}");
                println!("upper,{upper}");
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn figure(args: FigureArgs) -> Result<ExitCode, CliError> {
    let lambda = lambda_of_r(args.r)?;
    let disc = HypDisc::in_strip(Cpx::new(0.0, 0.0), lambda)?;
    let curve = boundary_curve(&disc, args.n)?;
    let mut out = String::from("curve_id,theta,x,y\n");
    for k in 0..=args.n {
        let theta = TAU * k as f64 / args.n as f64;
        let z = Cpx::from_polar(args.r, theta);
        out.push_str(&format!("disc,{theta:.9},{:.9},{:.9}\n", z.re, z.im));
    }
    for (k, &v) in curve.vertices().iter().enumerate() {
        let theta = TAU * k as f64 / args.n as f64;
        out.push_str(&format!("strip,{theta:.9},{:.9},{:.9}\n", v.re, v.im));
    }
    fs::write(&args.out, out)?;
    println!("wrote {} rows to {}", 2 * (args.n + 1), args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn render_verify_human(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{} {:44} trials={:<6} max_violation={:>12.3e} tol={:.0e}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.claim_id,
            r.trials,
            r.max_violation,
            r.tolerance,
        ));
        if !r.pass {
            for w in &r.witnesses {
                out.push_str(&format!(
                    "     witness: {} (lhs={:.12e}, rhs={:.12e})\n",
                    w.input, w.lhs, w.rhs
                ));
            }
        }
    }
    let (passed, total) = summary(reports);
    out.push_str(&format!(
        "{passed}/{total} claims passed (seed {})\n",
        reports.first().map(|r| r.seed).unwrap_or(0)
    ));
    out
}

fn render_verify_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("claim_id,pass,max_violation,tolerance,trials,seed\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.claim_id, r.pass, r.max_violation, r.tolerance, r.trials, r.seed
        ));
    }
    out
}

fn verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let reports = match &args.replay {
        Some(path) => reports_from_json(&fs::read_to_string(path)?)?,
        None => {
            let config = VerifyConfig {
                seed: args.seed,
                trials: args.trials,
                tolerance: args.tol,
            };
            run_all(&config)?
        }
    };
    let rendered = match args.output {
        OutputFormat::Human => render_verify_human(&reports),
        OutputFormat::Json => reports_to_json(&reports),
        OutputFormat::Csv => render_verify_csv(&reports),
    };
    match &args.out {
        Some(path) => {
            let mut f = fs::File::create(path)?;
            f.write_all(rendered.as_bytes())?;
        }
        None => print!("{rendered}"),
    }
    let (passed, total) = summary(&reports);
    Ok(if passed == total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
