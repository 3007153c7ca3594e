//! Pulling curve points back to solutions.
//!
//! For a point with `XY != 0`, set `A' = 2Y / (-BC)^((p-1)/2)`. A solution
//! mapping to `(X, ±Y)` satisfies both `Ax^p + By^p + Cz^p = 0` and
//! `±A'x^p - By^p + Cz^p = 0`, which fixes
//!
//! ```text
//! x^p / z^p = -2C / (A ± A')
//! y^p / z^p = (-A ± A') C / ((-A ∓ A') B)
//! ```
//!
//! Each sign is a branch. A branch yields a solution exactly when both
//! ratios are rational p-th powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{ratio, rational_pth_root, two};
use crate::curve::{forward_map, same_up_to_y_sign, CurveModel, CurvePoint};
use crate::equation::{FermatEquation, Sign, Triplet};
use crate::error::DescentError;
use crate::serde_str;

/// Which of the two p-th-power ratios failed to have a rational root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioKind {
    XOverZ,
    YOverZ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecoveryOutcome {
    Solution { triplet: Triplet },
    NoRationalRoot { failed: Vec<RatioKind> },
    /// `A ± A' = 0`: the linear system is singular on this branch.
    DegenerateDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveryBranch {
    pub sign: Sign,
    #[serde(with = "serde_str::rational")]
    pub a_prime: BigRational,
    /// `x^p / z^p`; absent on a degenerate branch.
    #[serde(with = "serde_str::opt_rational")]
    pub x_over_z_pth: Option<BigRational>,
    /// `y^p / z^p`; absent on a degenerate branch.
    #[serde(with = "serde_str::opt_rational")]
    pub y_over_z_pth: Option<BigRational>,
    pub outcome: RecoveryOutcome,
}

impl RecoveryBranch {
    pub fn solution(&self) -> Option<&Triplet> {
        match &self.outcome {
            RecoveryOutcome::Solution { triplet } => Some(triplet),
            _ => None,
        }
    }
}

fn affine_nonzero(pt: &CurvePoint) -> Result<(&BigRational, &BigRational), DescentError> {
    let (x, y) = pt.coords().ok_or(DescentError::PointAtInfinity)?;
    if x.is_zero() || y.is_zero() {
        return Err(DescentError::ZeroCoordinate);
    }
    Ok((x, y))
}

/// `A' = 2Y / (-BC)^((p-1)/2)`.
pub fn compute_a_prime(pt: &CurvePoint, eq: &FermatEquation) -> Result<BigRational, DescentError> {
    let (_, y) = affine_nonzero(pt)?;
    Ok(a_prime_of(y, eq))
}

fn a_prime_of(y: &BigRational, eq: &FermatEquation) -> BigRational {
    let neg_bc: BigInt = -(eq.b() * eq.c());
    let scale = Pow::pow(&neg_bc, (eq.p() - 1) / 2);
    y * ratio(two()) / ratio(scale)
}

/// Both branches for an affine point with `XY != 0` on the curve of `eq`.
pub fn recover(pt: &CurvePoint, eq: &FermatEquation) -> Result<Vec<RecoveryBranch>, DescentError> {
    affine_nonzero(pt)?;
    if !CurveModel::from_equation(eq).is_on_curve(pt) {
        return Err(DescentError::NotOnCurve);
    }
    let a_prime = compute_a_prime(pt, eq)?;
    Ok([Sign::Plus, Sign::Minus]
        .into_iter()
        .map(|sign| branch(eq, &a_prime, sign))
        .collect())
}

fn branch(eq: &FermatEquation, a_prime: &BigRational, sign: Sign) -> RecoveryBranch {
    let a = ratio(eq.a().clone());
    let b = ratio(eq.b().clone());
    let c = ratio(eq.c().clone());
    let signed = match sign {
        Sign::Plus => a_prime.clone(),
        Sign::Minus => -a_prime.clone(),
    };
    let denom = &a + &signed;
    if denom.is_zero() {
        return RecoveryBranch {
            sign,
            a_prime: a_prime.clone(),
            x_over_z_pth: None,
            y_over_z_pth: None,
            outcome: RecoveryOutcome::DegenerateDenominator,
        };
    }
    let x_ratio = -(ratio(two()) * &c) / &denom;
    let y_ratio = (-&a + &signed) * &c / ((-&a - &signed) * &b);

    let p = eq.p();
    let u = rational_pth_root(&x_ratio, p);
    let v = rational_pth_root(&y_ratio, p);
    let outcome = match (u, v) {
        (Some(u), Some(v)) => {
            let lifted = Triplet::new(
                u.numer() * v.denom(),
                v.numer() * u.denom(),
                u.denom() * v.denom(),
            );
            let triplet = lifted.primitive().expect("z = den(u) den(v) is nonzero");
            debug_assert!(eq.is_solution(&triplet));
            RecoveryOutcome::Solution { triplet }
        }
        (u, v) => {
            let mut failed = Vec::new();
            if u.is_none() {
                failed.push(RatioKind::XOverZ);
            }
            if v.is_none() {
                failed.push(RatioKind::YOverZ);
            }
            RecoveryOutcome::NoRationalRoot { failed }
        }
    };
    RecoveryBranch {
        sign,
        a_prime: a_prime.clone(),
        x_over_z_pth: Some(x_ratio),
        y_over_z_pth: Some(y_ratio),
        outcome,
    }
}

/// `t` solves `eq` and maps to `pt` or its mirror `(X, -Y)`.
pub fn verify_consistency(t: &Triplet, pt: &CurvePoint, eq: &FermatEquation) -> bool {
    match forward_map(eq, t) {
        Ok(image) => same_up_to_y_sign(&image, pt),
        Err(_) => false,
    }
}
