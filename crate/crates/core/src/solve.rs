//! The end-to-end pipeline for one equation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{CurveModel, CurvePoint};
use crate::descent::{recover, verify_consistency, RecoveryBranch};
use crate::equation::{FermatEquation, Triplet};
use crate::error::{DescentError, SearchError};
use crate::search::{search, SearchBounds, SearchResult};
use crate::serde_str;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointOutcome {
    Infinity,
    /// `X = 0` or `Y = 0`; such points carry no solution with `xyz != 0`.
    ZeroCoordinate,
    Branches { branches: Vec<RecoveryBranch> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecovery {
    pub point: CurvePoint,
    pub integral_point: CurvePoint,
    pub outcome: PointOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub equation: FermatEquation,
    pub genus: u32,
    #[serde(with = "serde_str::rational")]
    pub rational_constant: BigRational,
    #[serde(with = "serde_str::int")]
    pub integral_constant: BigInt,
    pub search: SearchResult,
    pub integral_points: Vec<CurvePoint>,
    pub recoveries: Vec<PointRecovery>,
    pub trivial_solution: Option<Triplet>,
    pub degenerate_solutions: Vec<Triplet>,
    /// Primitive, sign-canonical, sorted, each re-checked against the equation.
    pub solutions: Vec<Triplet>,
    pub budget_exhausted: bool,
    pub completeness_caveat: String,
    pub diagnostics: Vec<String>,
    /// User-supplied annotation, never computed here.
    pub jacobian_rank_unverified: Option<u32>,
}

impl SolutionReport {
    pub fn complete_within_bounds(&self) -> bool {
        self.search.complete_within_bounds
    }

    /// Branches that produced no solution, with the point they came from.
    pub fn excluded_branches(&self) -> impl Iterator<Item = (&CurvePoint, &RecoveryBranch)> {
        self.recoveries.iter().flat_map(|r| match &r.outcome {
            PointOutcome::Branches { branches } => branches
                .iter()
                .filter(|b| b.solution().is_none())
                .map(|b| (&r.point, b))
                .collect::<Vec<_>>(),
            _ => Vec::new(),
        })
    }
}

fn caveat(bounds: &SearchBounds, complete: bool) -> String {
    let scope = format!(
        "rational points were searched only for M = a/d^2 with d <= {} and |a| <= {} on the integral model; \
         no completeness is claimed outside that box and no Chabauty certificate was computed",
        bounds.d_max, bounds.a_max
    );
    if complete {
        scope
    } else {
        format!("search stopped at the time budget before covering the box; {scope}")
    }
}

/// Runs trivial-solution and zero-coordinate checks, builds the curve,
/// searches it within `bounds` and pulls every `XY != 0` point back.
///
/// Only invalid bounds are an error. Budget exhaustion and per-point
/// failures are recorded in the report.
pub fn solve(eq: &FermatEquation, bounds: &SearchBounds) -> Result<SolutionReport, SearchError> {
    bounds.validate()?;
    let mut diagnostics = Vec::new();
    let trivial_solution = eq.trivial_solution_by_sum();
    let degenerate_solutions = eq.degenerate_zero_coordinate_solutions();

    let model = CurveModel::from_equation(eq);
    let (search_result, budget_exhausted) = match search(&model, bounds) {
        Ok(r) => (r, false),
        Err(SearchError::BudgetExceeded(partial)) => {
            diagnostics.push("search: time budget exhausted, point list is partial".to_owned());
            (*partial, true)
        }
        Err(e) => return Err(e),
    };

    let recoveries: Vec<PointRecovery> = search_result
        .points
        .par_iter()
        .map(|pt| {
            let integral_point = model.to_integral(pt).expect("search returns points on the curve");
            let outcome = match recover(pt, eq) {
                Ok(branches) => PointOutcome::Branches { branches },
                Err(DescentError::PointAtInfinity) => PointOutcome::Infinity,
                Err(DescentError::ZeroCoordinate) => PointOutcome::ZeroCoordinate,
                Err(DescentError::NotOnCurve) => unreachable!("search returned an off-curve point"),
            };
            PointRecovery {
                point: pt.clone(),
                integral_point,
                outcome,
            }
        })
        .collect();

    let mut candidates: Vec<(String, Triplet)> = Vec::new();
    if let Some(t) = &trivial_solution {
        candidates.push(("trivial".to_owned(), t.clone()));
    }
    for t in &degenerate_solutions {
        candidates.push(("zero-coordinate".to_owned(), t.clone()));
    }
    for r in &recoveries {
        if let PointOutcome::Branches { branches } = &r.outcome {
            for b in branches {
                if let Some(t) = b.solution() {
                    if !verify_consistency(t, &r.point, eq) {
                        diagnostics.push(format!("recovery: {t} does not map back to {}", r.point));
                    }
                    candidates.push((format!("point {}", r.point), t.clone()));
                }
            }
        }
    }

    let mut solutions = BTreeSet::new();
    for (origin, t) in candidates {
        match t.primitive() {
            Ok(t) if eq.is_solution(&t) => {
                solutions.insert(t);
            }
            _ => diagnostics.push(format!("{origin}: candidate {t} failed the final check and was dropped")),
        }
    }

    let completeness_caveat = caveat(bounds, search_result.complete_within_bounds);
    Ok(SolutionReport {
        equation: eq.clone(),
        genus: model.genus(),
        rational_constant: model.rational_constant().clone(),
        integral_constant: model.integral_constant().clone(),
        integral_points: recoveries.iter().map(|r| r.integral_point.clone()).collect(),
        search: search_result,
        recoveries,
        trivial_solution,
        degenerate_solutions,
        solutions: solutions.into_iter().collect(),
        budget_exhausted,
        completeness_caveat,
        diagnostics,
        jacobian_rank_unverified: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn small() -> SearchBounds {
        SearchBounds::new(2, 5000)
    }

    #[test]
    fn example_two_pipeline() {
        let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
        let r = solve(&eq, &small()).unwrap();
        assert_eq!(r.solutions, vec![Triplet::from_i64(1, 1, -1)]);
        assert_eq!(r.search.points.len(), 5);
        assert_eq!(r.excluded_branches().count(), 2);
        assert!(r.diagnostics.is_empty());
        assert!(r.completeness_caveat.contains("no completeness is claimed"));
    }

    #[test]
    fn trivial_and_degenerate_solutions_are_merged() {
        let eq = FermatEquation::from_i64(1, 1, -2, 5).unwrap();
        let r = solve(&eq, &small()).unwrap();
        assert_eq!(r.trivial_solution, Some(Triplet::from_i64(1, 1, 1)));
        assert!(r.solutions.contains(&Triplet::from_i64(1, 1, 1)));
        // x = 0 case: y^5 = 2 z^5 has no rational root; z = 0 case: x = -y.
        assert!(r.solutions.contains(&Triplet::from_i64(1, -1, 0)));
        for t in &r.solutions {
            assert!(eq.is_solution(t));
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
        let r = solve(&eq, &SearchBounds::default().with_time_budget(Duration::ZERO)).unwrap();
        assert!(r.budget_exhausted);
        assert!(!r.complete_within_bounds());
        assert!(r.completeness_caveat.starts_with("search stopped"));
    }

    #[test]
    fn invalid_bounds_error() {
        let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
        assert!(solve(&eq, &SearchBounds::new(0, 1)).is_err());
    }
}
