mod args;
mod batch;
mod render;

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::Parser;
use fermat_descent::{
    forward_map, solve, verify_consistency, CurveModel, FermatEquation, ReportRecord, SearchError,
};

use args::{Cli, Command, CurveArgs, Format, SolveArgs, TripletArgs, VerifyArgs};

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    /// `verify` found the pair inconsistent.
    pub const CHECK_FAILED: u8 = 1;
    pub const VALIDATION: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Io(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Curve(a) => cmd_curve(a),
        Command::MapPoint(a) => cmd_map_point(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Batch(a) => batch::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(exit::VALIDATION)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::IO)
        }
    }
}

fn now() -> Option<u64> {
    SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
}

fn equation_of(a: &args::EquationArgs) -> Result<FermatEquation, Failure> {
    a.equation().map_err(|e| Failure::Validation(e.to_string()))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            let mut f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            f.write_all(text.as_bytes())
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).context("cannot write to stdout")?;
        }
    }
    Ok(())
}

fn cmd_solve(a: SolveArgs) -> Outcome {
    let eq = equation_of(&a.equation)?;
    let bounds = a.bounds.resolve().map_err(Failure::Validation)?;
    let mut report = solve(&eq, &bounds).map_err(|e| match e {
        SearchError::InvalidBounds(msg) => Failure::Validation(msg.to_owned()),
        other => Failure::Validation(other.to_string()),
    })?;
    report.jacobian_rank_unverified = a.jacobian_rank;
    let exhausted = report.budget_exhausted;

    let text = match a.output.format {
        Format::Human => render::report(&report),
        Format::Json => {
            let ts = if a.output.canonical { None } else { now() };
            let mut s = ReportRecord::from_report(report, None, ts).to_json();
            s.push('\n');
            s
        }
    };
    emit(&text, a.output.output.as_deref())?;
    Ok(if exhausted { exit::BUDGET } else { exit::OK })
}

fn cmd_curve(a: CurveArgs) -> Outcome {
    let eq = equation_of(&a.equation)?;
    let m = CurveModel::from_equation(&eq);
    let text = match a.format {
        Format::Human => render::curve(&m),
        Format::Json => {
            let v = serde_json::json!({
                "equation": eq,
                "rational_constant": m.rational_constant().to_string(),
                "integral_constant": m.integral_constant().to_string(),
                "genus": m.genus(),
            });
            format!("{v}\n")
        }
    };
    emit(&text, None)?;
    Ok(exit::OK)
}

fn cmd_map_point(a: TripletArgs) -> Outcome {
    let eq = equation_of(&a.equation)?;
    let pt = forward_map(&eq, &a.triplet).map_err(|e| Failure::Validation(e.to_string()))?;
    let integral = CurveModel::from_equation(&eq)
        .to_integral(&pt)
        .map_err(|e| Failure::Validation(e.to_string()))?;
    let text = match a.format {
        Format::Human => format!("{pt}\nintegral model: {integral}\n"),
        Format::Json => format!("{}\n", serde_json::json!({ "point": pt, "integral_point": integral })),
    };
    emit(&text, None)?;
    Ok(exit::OK)
}

fn cmd_orbit(a: TripletArgs) -> Outcome {
    let eq = equation_of(&a.equation)?;
    let orbit = eq.sign_orbit(&a.triplet).map_err(|e| Failure::Validation(e.to_string()))?;
    let mut text = String::new();
    for (variant, t) in &orbit {
        let [sa, sb, sc] = variant.signs;
        let line = match a.format {
            Format::Human => format!("({sa},{sb},{sc})  {}  {t}", variant.equation),
            Format::Json => serde_json::json!({ "variant": variant, "triplet": t }).to_string(),
        };
        text.push_str(&line);
        text.push('\n');
    }
    emit(&text, None)?;
    Ok(exit::OK)
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let eq = equation_of(&a.equation)?;
    let ok = verify_consistency(&a.triplet, &a.point, &eq);
    let verdict = if ok { "consistent" } else { "inconsistent" };
    emit(&format!("{verdict}: {} and {} on {eq}\n", a.triplet, a.point), None)?;
    Ok(if ok { exit::OK } else { exit::CHECK_FAILED })
}
