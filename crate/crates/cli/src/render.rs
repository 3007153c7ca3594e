//! Plain-text rendering of reports.

use std::fmt::Write;

use fermat_descent::{CurveModel, PointOutcome, RatioKind, RecoveryBranch, RecoveryOutcome, SolutionReport};

pub fn curve(m: &CurveModel) -> String {
    let p = m.p();
    let mut out = String::new();
    if let Some(eq) = m.equation() {
        writeln!(out, "equation:       {eq}").unwrap();
    }
    writeln!(out, "rational model: Y^2 = X^{p} + {}", m.rational_constant()).unwrap();
    writeln!(out, "integral model: N^2 = M^{p} + {}", m.integral_constant()).unwrap();
    writeln!(out, "c = {}", m.rational_constant()).unwrap();
    writeln!(out, "k = {}", m.integral_constant()).unwrap();
    writeln!(out, "g = {}", m.genus()).unwrap();
    out
}

fn branch_line(b: &RecoveryBranch, p: u32) -> String {
    let ratios = match (&b.x_over_z_pth, &b.y_over_z_pth) {
        (Some(x), Some(y)) => format!("x^{p}/z^{p} = {x}, y^{p}/z^{p} = {y}"),
        _ => "singular system".to_owned(),
    };
    let verdict = match &b.outcome {
        RecoveryOutcome::Solution { triplet } => format!("solution {triplet}"),
        RecoveryOutcome::DegenerateDenominator => "skipped, A ± A' = 0".to_owned(),
        RecoveryOutcome::NoRationalRoot { failed } => {
            let names: Vec<&str> = failed
                .iter()
                .map(|r| match r {
                    RatioKind::XOverZ => "x/z",
                    RatioKind::YOverZ => "y/z",
                })
                .collect();
            format!("no rational {p}th root for {}", names.join(", "))
        }
    };
    format!("branch {}: A' = {}, {ratios} -> {verdict}", b.sign, b.a_prime)
}

pub fn report(r: &SolutionReport) -> String {
    let p = r.equation.p();
    let mut out = String::new();
    writeln!(out, "equation:       {}", r.equation).unwrap();
    writeln!(out, "curve:          Y^2 = X^{p} + {}  (genus {})", r.rational_constant, r.genus).unwrap();
    writeln!(out, "integral model: N^2 = M^{p} + {}", r.integral_constant).unwrap();
    let b = &r.search.bounds;
    let state = if r.complete_within_bounds() { "complete" } else { "INCOMPLETE" };
    writeln!(out, "search box:     d <= {}, |a| <= {} ({state})", b.d_max, b.a_max).unwrap();
    if let Some(rank) = r.jacobian_rank_unverified {
        writeln!(out, "jacobian rank:  {rank} (user-supplied, unverified)").unwrap();
    }

    writeln!(out, "points ({}):", r.search.points.len()).unwrap();
    for rec in &r.recoveries {
        let note = match &rec.outcome {
            PointOutcome::Infinity => "point at infinity".to_owned(),
            PointOutcome::ZeroCoordinate => "XY = 0, no triplet with xyz != 0".to_owned(),
            PointOutcome::Branches { .. } => String::new(),
        };
        writeln!(out, "  {}  [integral {}]  {note}", rec.point, rec.integral_point).unwrap();
        if let PointOutcome::Branches { branches } = &rec.outcome {
            for b in branches {
                writeln!(out, "      {}", branch_line(b, p)).unwrap();
            }
        }
    }

    if let Some(t) = &r.trivial_solution {
        writeln!(out, "A + B + C = 0, trivial solution {t}").unwrap();
    }
    for t in &r.degenerate_solutions {
        writeln!(out, "zero-coordinate solution {t}").unwrap();
    }
    if r.solutions.is_empty() {
        writeln!(out, "solutions: none; no rational triplets found within the search box").unwrap();
    } else {
        writeln!(out, "solutions ({}, up to sign and scaling):", r.solutions.len()).unwrap();
        for t in &r.solutions {
            writeln!(out, "  {t}").unwrap();
        }
    }
    for d in &r.diagnostics {
        writeln!(out, "diagnostic: {d}").unwrap();
    }
    writeln!(out, "note: {}", r.completeness_caveat).unwrap();
    out
}
