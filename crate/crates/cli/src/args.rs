use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fermat_descent::{BigInt, BigRational, CurvePoint, FermatEquation, SearchBounds, Triplet, ValidationError};

pub const BOUNDS_ENV: &str = "FERMAT_DESCENT_BOUNDS";

#[derive(Debug, Parser)]
#[command(name = "fermat-descent", version, about = "Rational solutions of Ax^p + By^p + Cz^p = 0 via the attached hyperelliptic curve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search the curve and recover every solution inside the search box.
    Solve(SolveArgs),
    /// Print both curve models and the genus.
    Curve(CurveArgs),
    /// Map a solution triplet to its curve point.
    MapPoint(TripletArgs),
    /// List the eight signed variants of an equation and a solution.
    Orbit(TripletArgs),
    /// Check that a triplet solves the equation and maps to a given point.
    Verify(VerifyArgs),
    /// Solve every `A,B,C,p[,d_max,a_max]` line of a file into JSON lines.
    Batch(BatchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Args)]
pub struct EquationArgs {
    #[arg(short = 'A', allow_negative_numbers = true)]
    pub a: BigInt,
    #[arg(short = 'B', allow_negative_numbers = true)]
    pub b: BigInt,
    #[arg(short = 'C', allow_negative_numbers = true)]
    pub c: BigInt,
    #[arg(short = 'p')]
    pub p: u32,
    /// Skip the coprimality and p-th-power-free checks.
    #[arg(long)]
    pub relaxed: bool,
}

impl EquationArgs {
    pub fn equation(&self) -> Result<FermatEquation, ValidationError> {
        build_equation(self.a.clone(), self.b.clone(), self.c.clone(), self.p, self.relaxed)
    }
}

pub fn build_equation(a: BigInt, b: BigInt, c: BigInt, p: u32, relaxed: bool) -> Result<FermatEquation, ValidationError> {
    if relaxed {
        FermatEquation::validate_relaxed(a, b, c, p)
    } else {
        FermatEquation::validate(a, b, c, p)
    }
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Largest denominator d, with M = a/d^2 on the integral model.
    #[arg(long)]
    pub d_max: Option<u64>,
    /// Largest |a|, with M = a/d^2 on the integral model.
    #[arg(long)]
    pub a_max: Option<u64>,
    /// Stop the search after this many seconds.
    #[arg(long, value_name = "SECONDS")]
    pub time_budget: Option<f64>,
}

impl BoundsArgs {
    /// Flags override `FERMAT_DESCENT_BOUNDS`, which overrides the defaults.
    pub fn resolve(&self) -> Result<SearchBounds, String> {
        let mut bounds = match std::env::var(BOUNDS_ENV) {
            Ok(v) if !v.trim().is_empty() => parse_bounds_env(&v)?,
            _ => SearchBounds::default(),
        };
        if let Some(d) = self.d_max {
            bounds.d_max = d;
        }
        if let Some(a) = self.a_max {
            bounds.a_max = a;
        }
        if let Some(secs) = self.time_budget {
            bounds.time_budget = Some(Duration::try_from_secs_f64(secs).map_err(|e| format!("bad --time-budget: {e}"))?);
        }
        bounds.validate().map_err(|e| e.to_string())?;
        Ok(bounds)
    }
}

/// `D_MAX,A_MAX[,SECONDS]`
pub fn parse_bounds_env(v: &str) -> Result<SearchBounds, String> {
    let bad = || format!("{BOUNDS_ENV} must look like D_MAX,A_MAX[,SECONDS], got {v:?}");
    let parts: Vec<&str> = v.split(',').map(str::trim).collect();
    let (d, a, t) = match parts.as_slice() {
        [d, a] => (d, a, None),
        [d, a, t] => (d, a, Some(t)),
        _ => return Err(bad()),
    };
    let mut bounds = SearchBounds::new(d.parse().map_err(|_| bad())?, a.parse().map_err(|_| bad())?);
    if let Some(t) = t {
        let secs: f64 = t.parse().map_err(|_| bad())?;
        bounds.time_budget = Some(Duration::try_from_secs_f64(secs).map_err(|_| bad())?);
    }
    Ok(bounds)
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    /// Omit the timestamp so identical runs give identical JSON.
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub equation: EquationArgs,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Jacobian rank from an external computation; recorded, never checked.
    #[arg(long)]
    pub jacobian_rank: Option<u32>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub equation: EquationArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TripletArgs {
    #[command(flatten)]
    pub equation: EquationArgs,
    /// Triplet as `x,y,z`.
    #[arg(short = 't', long = "triplet", allow_hyphen_values = true)]
    pub triplet: Triplet,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub equation: EquationArgs,
    #[arg(short = 't', long = "triplet", allow_hyphen_values = true)]
    pub triplet: Triplet,
    /// Point as `X,Y` with rational coordinates such as `-63,3969` or `1/4,3/32`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    pub point: CurvePoint,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// One `A,B,C,p[,d_max,a_max]` per line; blank lines and `#` comments are skipped.
    #[arg(long, short = 'i')]
    pub input: PathBuf,
    /// JSON-lines file to append to; stdout when absent.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    #[arg(long)]
    pub canonical: bool,
    #[arg(long)]
    pub relaxed: bool,
}

pub fn parse_point(s: &str) -> Result<CurvePoint, String> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("infinity") || t == "(1:0:0)" {
        return Ok(CurvePoint::Infinity);
    }
    let inner = t.trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<&str> = inner.split(',').map(str::trim).collect();
    let [x, y] = coords.as_slice() else {
        return Err(format!("expected X,Y, got {s:?}"));
    };
    let parse = |v: &str| BigRational::from_str(v).map_err(|e| format!("bad rational {v:?}: {e}"));
    Ok(CurvePoint::affine(parse(x)?, parse(y)?))
}
