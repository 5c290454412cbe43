use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use mcl_core::closure_lab::{gamma_ideal, is_ratliff_rush_up_to, GammaSpec, RRVerdict};
use mcl_core::curve::{analyze, analyze_grid, CurveGrid, CurveReport, CurveSpec};
use mcl_core::integral::{integral_closure, is_normal_up_to, NormalityVerdict};
use mcl_core::monomial::{format_ideal, format_monomial, ideal_from_json, parse_ideal, ExponentVector, MonomialIdeal, VarBase};
use mcl_core::Error;
use serde_json::json;

/// Exact monomial-ideal computations for arithmetic-sequence monomial curves.
#[derive(Parser)]
#[command(name = "mcl", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Horizon N of the bounded Ratliff-Rush check.
    #[arg(long, env = "MCL_RR_HORIZON", default_value_t = 4, global = true)]
    rr_horizon: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial curves with arithmetic-sequence weights.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Operations on a single monomial ideal.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// The Γ-spread of a two-variable staircase ideal.
    #[command(subcommand)]
    Gamma(GammaCommand),
}

#[derive(Args)]
struct CurveArgs {
    #[arg(short = 'n')]
    n: usize,
    /// Written `-m0` or `--m0`.
    #[arg(long = "m0")]
    m0: u64,
    #[arg(short = 'd')]
    d: u64,
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Every verdict for one curve at power l.
    Analyze {
        #[command(flatten)]
        spec: CurveArgs,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// `analyze` over a grid such as `n=2..5,m0=3..25,d=1..5,l=1..3`.
    Grid {
        #[arg(long)]
        grid: String,
    },
}

/// An ideal as comma-separated monomials in `x1, x2, …`, or `@file.json`.
#[derive(Args)]
struct IdealArg {
    ideal: String,
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Generators of the integral closure.
    Closure(IdealArg),
    /// Whether every power up to --max-power is integrally closed.
    NormalCheck {
        #[arg(long, default_value_t = 3)]
        max_power: u32,
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Bounded Ratliff-Rush verdict.
    RrCheck(IdealArg),
    /// Generators of I : J.
    Colon { ideal: String, divisor: String },
    /// Generators of I^l.
    Power {
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[command(flatten)]
        ideal: IdealArg,
    },
}

#[derive(Subcommand)]
enum GammaCommand {
    /// Generators of Γ_{I,K} from a spec file.
    Build { spec: String },
    /// Generators and bounded Ratliff-Rush verdicts of Γ_{I,K} and its base.
    Check { spec: String },
}

enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::CrossValidation(_)) => 3,
            _ => 2,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Failure::Core(e) => json!({"error": e.kind(), "message": e.to_string()}),
            Failure::Io(m) => json!({"error": "io", "message": m}),
            Failure::Usage(m) => json!({"error": "usage", "message": m}),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
}

fn read_ideal(arg: &str) -> Result<MonomialIdeal, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(ideal_from_json(&read_file(path)?)?),
        None => Ok(parse_ideal(arg, VarBase::One, None)?),
    }
}

fn read_gamma(path: &str) -> Result<GammaSpec, Failure> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Core(Error::Parse(e.to_string())))
}

/// Brings both ideals into the larger ambient dimension; inline text infers
/// the dimension from the variables that occur.
fn align(i: MonomialIdeal, j: MonomialIdeal) -> (MonomialIdeal, MonomialIdeal) {
    let widen = |mut x: MonomialIdeal, n: usize| {
        while x.num_vars() < n {
            x = x.insert_variable(x.num_vars());
        }
        x
    };
    let n = i.num_vars().max(j.num_vars());
    (widen(i, n), widen(j, n))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn ideal_output(ideal: &MonomialIdeal, format: Format, base: VarBase) -> String {
    match format {
        Format::Json => to_json(ideal),
        Format::Text => format_ideal(ideal, base),
    }
}

fn monomials(v: &[ExponentVector], base: VarBase) -> String {
    v.iter().map(|m| format_monomial(m, base)).collect::<Vec<_>>().join(", ")
}

fn rr_text(v: &RRVerdict, base: VarBase) -> String {
    match v {
        RRVerdict::ConfirmedUpTo { horizon } => format!("confirmed_up_to {horizon}"),
        RRVerdict::Falsified { witness, level } => {
            format!("falsified at level {level}: {}", format_monomial(witness, base))
        }
    }
}

fn report_text(r: &CurveReport) -> String {
    let z = VarBase::Zero;
    let p = &r.params;
    let mut out = String::new();
    let s = &r.spec;
    let _ = writeln!(out, "curve n={} m0={} d={} power={}", s.n(), s.m0(), s.d(), r.power);
    let eps = p.epsilon.map_or("-".to_string(), |e| e.to_string());
    let j = p.j_range.map_or("-".to_string(), |(a, b)| format!("{a}..{b}"));
    let _ = writeln!(
        out,
        "params p={} q={} r={} u={} upsilon={} w={} lambda={} mu={} z={} epsilon={eps} j={j}",
        p.p, p.q, p.r, p.u, p.upsilon, p.w, p.lambda, p.mu, p.z
    );
    let verdict = if r.buchberger { "pass" } else { "fail" };
    let _ = writeln!(out, "groebner {} binomials, buchberger {verdict}", r.groebner.len());
    for (lead, other) in &r.groebner {
        let _ = writeln!(out, "  {} - {}", format_monomial(lead, z), format_monomial(other, z));
    }
    let _ = writeln!(out, "inP {}", monomials(r.inp.generators(), z));
    let _ = writeln!(out, "omega {} generators", r.omega.len());
    let _ = writeln!(out, "H {} generators", r.h.len());
    let _ = writeln!(out, "missing {}", if r.missing.is_empty() { "none".into() } else { monomials(&r.missing, z) });
    let n = &r.normal;
    let _ = writeln!(out, "normal {} (q={}, r={}, alt_form={})", n.normal, n.reason.q, n.reason.r, n.alt_form);
    let _ = writeln!(out, "rr {}", rr_text(&r.rr_status, z));
    out
}

fn grid_line(r: &CurveReport) -> String {
    let s = &r.spec;
    format!(
        "n={} m0={} d={} l={} q={} r={} normal={} omega={} H={} missing={} rr={}\n",
        s.n(),
        s.m0(),
        s.d(),
        r.power,
        r.params.q,
        r.params.r,
        r.normal.normal,
        r.omega.len(),
        r.h.len(),
        r.missing.len(),
        rr_text(&r.rr_status, VarBase::Zero).replace(' ', "_")
    )
}

fn curve(cmd: CurveCommand, format: Format, horizon: u32) -> Outcome {
    match cmd {
        CurveCommand::Analyze { spec, power } => {
            let s = CurveSpec::new(spec.n, spec.m0, spec.d)?;
            let report = analyze(&s, power, horizon)?;
            Ok(match format {
                Format::Json => to_json(&report),
                Format::Text => report_text(&report),
            })
        }
        CurveCommand::Grid { grid } => {
            let grid: CurveGrid = grid.parse()?;
            let reports = analyze_grid(&grid, horizon)?;
            Ok(match format {
                Format::Json => to_json(&reports),
                Format::Text => reports.iter().map(grid_line).collect(),
            })
        }
    }
}

fn ideal(cmd: IdealCommand, format: Format, horizon: u32) -> Outcome {
    let one = VarBase::One;
    match cmd {
        IdealCommand::Closure(arg) => Ok(ideal_output(&integral_closure(&read_ideal(&arg.ideal)?)?, format, one)),
        IdealCommand::NormalCheck { max_power, ideal } => {
            let v = is_normal_up_to(&read_ideal(&ideal.ideal)?, max_power)?;
            Ok(match (format, &v) {
                (Format::Json, _) => to_json(&v),
                (Format::Text, NormalityVerdict::NormalUpTo { horizon }) => format!("normal_up_to {horizon}\n"),
                (Format::Text, NormalityVerdict::FailsAt { power, witnesses }) => {
                    format!("fails_at {power}\nmissing {}\n", monomials(witnesses, one))
                }
            })
        }
        IdealCommand::RrCheck(arg) => {
            let v = is_ratliff_rush_up_to(&read_ideal(&arg.ideal)?, horizon)?;
            Ok(match format {
                Format::Json => to_json(&v),
                Format::Text => format!("{}\n", rr_text(&v, one)),
            })
        }
        IdealCommand::Colon { ideal, divisor } => {
            let (i, j) = align(read_ideal(&ideal)?, read_ideal(&divisor)?);
            Ok(ideal_output(&i.colon(&j)?, format, one))
        }
        IdealCommand::Power { power, ideal } => Ok(ideal_output(&read_ideal(&ideal.ideal)?.power(power), format, one)),
    }
}

fn gamma(cmd: GammaCommand, format: Format, horizon: u32) -> Outcome {
    let one = VarBase::One;
    match cmd {
        GammaCommand::Build { spec } => Ok(ideal_output(&gamma_ideal(&read_gamma(&spec)?)?, format, one)),
        GammaCommand::Check { spec } => {
            let spec = read_gamma(&spec)?;
            let j = gamma_ideal(&spec)?;
            let rr = is_ratliff_rush_up_to(&j, horizon)?;
            let base_rr = is_ratliff_rush_up_to(&spec.base().to_ideal(), horizon)?;
            // The transfer only runs from the base to the spread.
            let note = (!base_rr.is_confirmed() && rr.is_confirmed())
                .then_some("base is not Ratliff-Rush while the spread is; the transfer runs in one direction only");
            Ok(match format {
                Format::Json => to_json(&json!({
                    "spec": spec,
                    "generators": j,
                    "rr_status": rr,
                    "base_rr_status": base_rr,
                    "note": note,
                })),
                Format::Text => {
                    let mut out = format_ideal(&j, one);
                    let _ = writeln!(out, "rr {}", rr_text(&rr, one));
                    let _ = writeln!(out, "base rr {}", rr_text(&base_rr, one));
                    if let Some(n) = note {
                        let _ = writeln!(out, "note {n}");
                    }
                    out
                }
            })
        }
    }
}

/// `-m0` is not a valid short flag; rewrite it to `--m0`.
fn normalize_args(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| match a.strip_prefix("-m0") {
        Some(rest) if rest.is_empty() || rest.starts_with('=') => format!("--m0{rest}"),
        _ => a,
    })
    .collect()
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("{}", f.to_json());
    ExitCode::from(f.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args())) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            emit(&e.to_string());
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let msg: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            return fail(Failure::Usage(msg.join(" ").trim_start_matches("error: ").to_string()));
        }
    };
    if cli.rr_horizon == 0 {
        return fail(Failure::Usage("--rr-horizon must be at least 1".into()));
    }
    let outcome = match cli.command {
        Command::Curve(c) => curve(c, cli.format, cli.rr_horizon),
        Command::Ideal(c) => ideal(c, cli.format, cli.rr_horizon),
        Command::Gamma(c) => gamma(c, cli.format, cli.rr_horizon),
    };
    match outcome {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(f) => fail(f),
    }
}
