//! The hyperelliptic curve attached to an equation.
//!
//! Rational model `Y^2 = X^p + c` with `c = A^2 (BC)^(p-1) / 4`, and integral
//! model `N^2 = M^p + k` with `k = A^2 (4BC)^(p-1)`, related by
//! `(M, N) = (4X, 2^p Y)`. Both have a single point at infinity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, ratio, rational_pow, two};
use crate::equation::{FermatEquation, Triplet};
use crate::error::CurveError;
use crate::serde_str;

/// `A^2 (BC)^(p-1) / 4` for lead coefficient `A`.
pub fn rational_constant(a: &BigInt, b: &BigInt, c: &BigInt, p: u32) -> BigRational {
    let bc: BigInt = b * c;
    BigRational::new(a * a * Pow::pow(&bc, p - 1), BigInt::from(4u32))
}

/// `A^2 (4BC)^(p-1)`.
pub fn integral_constant(a: &BigInt, b: &BigInt, c: &BigInt, p: u32) -> BigInt {
    let four_bc: BigInt = b * c * 4u32;
    a * a * Pow::pow(&four_bc, p - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveModel {
    equation: Option<FermatEquation>,
    p: u32,
    #[serde(with = "serde_str::rational")]
    rational_constant: BigRational,
    #[serde(with = "serde_str::int")]
    integral_constant: BigInt,
}

impl CurveModel {
    pub fn from_equation(eq: &FermatEquation) -> CurveModel {
        let p = eq.p();
        let c = rational_constant(eq.a(), eq.b(), eq.c(), p);
        let k = integral_constant(eq.a(), eq.b(), eq.c(), p);
        debug_assert_eq!(ratio(k.clone()), &c * ratio(Pow::pow(BigInt::from(4u32), p)));
        CurveModel {
            equation: Some(eq.clone()),
            p,
            rational_constant: c,
            integral_constant: k,
        }
    }

    /// A bare curve `Y^2 = X^p + c`, not tied to an equation.
    ///
    /// `4^p c` must be an integer so the integral model exists.
    pub fn from_constant(c: BigRational, p: u32) -> Result<CurveModel, CurveError> {
        if p < 5 || !is_prime(p) {
            return Err(CurveError::InvalidExponent(p));
        }
        if c.is_zero() {
            return Err(CurveError::ZeroConstant);
        }
        let scaled = &c * ratio(Pow::pow(BigInt::from(4u32), p));
        if !scaled.is_integer() {
            return Err(CurveError::NonIntegralModel);
        }
        Ok(CurveModel {
            equation: None,
            p,
            rational_constant: c,
            integral_constant: scaled.to_integer(),
        })
    }

    pub fn from_integer_constant(c: i64, p: u32) -> Result<CurveModel, CurveError> {
        Self::from_constant(ratio(BigInt::from(c)), p)
    }

    pub fn equation(&self) -> Option<&FermatEquation> {
        self.equation.as_ref()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn genus(&self) -> u32 {
        (self.p - 1) / 2
    }

    /// `c` in `Y^2 = X^p + c`.
    pub fn rational_constant(&self) -> &BigRational {
        &self.rational_constant
    }

    /// `k` in `N^2 = M^p + k`.
    pub fn integral_constant(&self) -> &BigInt {
        &self.integral_constant
    }

    pub fn is_on_curve(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == rational_pow(x, self.p) + &self.rational_constant,
        }
    }

    /// Membership on `N^2 = M^p + k`; `pt` carries `(M, N)`.
    pub fn is_on_integral_model(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x: m, y: n } => n * n == rational_pow(m, self.p) + ratio(self.integral_constant.clone()),
        }
    }

    /// `(X, Y) -> (4X, 2^p Y)`.
    pub fn to_integral(&self, pt: &CurvePoint) -> Result<CurvePoint, CurveError> {
        if !self.is_on_curve(pt) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x * ratio(BigInt::from(4u32)),
                y: y * ratio(Pow::pow(two(), self.p)),
            },
        })
    }

    /// `(M, N) -> (M / 4, N / 2^p)`.
    pub fn from_integral(&self, pt: &CurvePoint) -> Result<CurvePoint, CurveError> {
        if !self.is_on_integral_model(pt) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x: m, y: n } => CurvePoint::Affine {
                x: m / ratio(BigInt::from(4u32)),
                y: n / ratio(Pow::pow(two(), self.p)),
            },
        })
    }
}

/// Sends a solution with `x != 0` to the curve of `eq`:
/// `X = -BCyz / x^2`, `Y = (-BC)^((p-1)/2) (By^p - Cz^p) / (2x^p)`.
pub fn forward_map(eq: &FermatEquation, t: &Triplet) -> Result<CurvePoint, CurveError> {
    if !eq.is_solution(t) {
        return Err(CurveError::NotASolution);
    }
    if t.x.is_zero() {
        return Err(CurveError::ZeroX);
    }
    let p = eq.p();
    let neg_bc: BigInt = -(eq.b() * eq.c());
    let x = BigRational::new(&neg_bc * &t.y * &t.z, &t.x * &t.x);
    let numer = Pow::pow(&neg_bc, (p - 1) / 2) * (eq.b() * Pow::pow(&t.y, p) - eq.c() * Pow::pow(&t.z, p));
    let y = BigRational::new(numer, two() * Pow::pow(&t.x, p));
    Ok(CurvePoint::Affine { x, y })
}

/// A point on a curve model: affine `(X, Y)` or the unique point at infinity.
///
/// Ordering puts infinity first, then affine points by `X` and then `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurvePoint {
    Infinity,
    Affine {
        #[serde(with = "serde_str::rational")]
        x: BigRational,
        #[serde(with = "serde_str::rational")]
        y: BigRational,
    },
}

impl CurvePoint {
    pub fn affine(x: BigRational, y: BigRational) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> CurvePoint {
        CurvePoint::Affine {
            x: ratio(x.into()),
            y: ratio(y.into()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }

    /// The hyperelliptic involution `(X, Y) -> (X, -Y)`.
    pub fn negate_y(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
        }
    }

    /// True when both coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.coords().map_or(true, |(x, y)| x.is_integer() && y.is_integer())
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.coords().is_some_and(|(x, y)| x.is_zero() || y.is_zero())
    }
}

impl fmt::Display for CurvePoint {
    /// Projective notation: `(X : Y : 1)` and `(1 : 0 : 0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("(1 : 0 : 0)"),
            CurvePoint::Affine { x, y } => write!(f, "({x} : {y} : 1)"),
        }
    }
}

/// Equality up to the involution `Y -> -Y`.
pub(crate) fn same_up_to_y_sign(l: &CurvePoint, r: &CurvePoint) -> bool {
    match (l, r) {
        (CurvePoint::Infinity, CurvePoint::Infinity) => true,
        (CurvePoint::Affine { x: lx, y: ly }, CurvePoint::Affine { x: rx, y: ry }) => lx == rx && ly.abs() == ry.abs(),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    fn eq(a: i64, b: i64, c: i64) -> FermatEquation {
        FermatEquation::from_i64(a, b, c, 5).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(int(n), int(d))
    }

    #[test]
    fn build_examples() {
        let m = CurveModel::from_equation(&eq(2, 9, 11));
        assert_eq!(m.rational_constant(), &q(96059601, 1));
        assert_eq!(m.genus(), 2);

        let m = CurveModel::from_equation(&eq(123, 125, 121));
        assert_eq!(m.integral_constant().to_string(), "202689719415562500000000");
        assert!(!m.rational_constant().is_integer());

        let m = CurveModel::from_equation(&eq(16, 9, 7));
        assert_eq!(m.rational_constant(), &q(1008189504, 1));
    }

    #[test]
    fn integral_constant_is_four_to_the_p_times_c() {
        for (a, b, c) in [(2, 9, 11), (123, 125, 121), (16, 9, 7), (-3, 5, 7)] {
            let m = CurveModel::from_equation(&eq(a, b, c));
            assert_eq!(ratio(m.integral_constant().clone()), m.rational_constant() * q(1024, 1));
            assert_eq!(m.p(), 2 * m.genus() + 1);
        }
    }

    #[test]
    fn from_constant_rejects_bad_input() {
        assert_eq!(CurveModel::from_integer_constant(0, 5), Err(CurveError::ZeroConstant));
        assert_eq!(CurveModel::from_integer_constant(1, 4), Err(CurveError::InvalidExponent(4)));
        assert_eq!(CurveModel::from_constant(q(1, 3), 5), Err(CurveError::NonIntegralModel));
        assert!(CurveModel::from_constant(q(3, 4), 5).is_ok());
    }

    #[test]
    fn to_integral_examples() {
        let m = CurveModel::from_integer_constant(96059601, 5).unwrap();
        let pt = CurvePoint::from_ints(99, 98010);
        let n = m.to_integral(&pt).unwrap();
        assert_eq!(n, CurvePoint::from_ints(396, 3136320));
        assert!(m.is_on_integral_model(&n));
        assert_eq!(m.to_integral(&CurvePoint::Infinity).unwrap(), CurvePoint::Infinity);
        let n = m.to_integral(&CurvePoint::from_ints(0, 9801)).unwrap();
        assert_eq!(n, CurvePoint::from_ints(0, 313632));
        assert!(m.is_on_integral_model(&n));
        assert_eq!(m.to_integral(&CurvePoint::from_ints(1, 1)), Err(CurveError::NotOnCurve));
    }

    #[test]
    fn example_one_integral_point() {
        let m = CurveModel::from_equation(&eq(123, 125, 121));
        let n = CurvePoint::from_ints(0, 450210750000);
        assert!(m.is_on_integral_model(&n));
        let pt = m.from_integral(&n).unwrap();
        assert!(m.is_on_curve(&pt));
        assert!(!pt.is_integral());
    }

    #[test]
    fn forward_map_examples() {
        let pt = forward_map(&eq(2, 9, 11), &Triplet::from_i64(1, 1, -1)).unwrap();
        assert_eq!(pt, CurvePoint::from_ints(99, 98010));
        // Y = 63^2 (9 - 7) / (2 (-1)^5): the listed point (-63, 3969) is its mirror.
        let pt = forward_map(&eq(16, 9, 7), &Triplet::from_i64(-1, 1, 1)).unwrap();
        assert_eq!(pt, CurvePoint::from_ints(-63, -3969));
        assert_eq!(pt.negate_y(), CurvePoint::from_ints(-63, 3969));
        // Degree-0 homogeneous with odd p: negating the triplet fixes the point.
        let pt = forward_map(&eq(2, 9, 11), &Triplet::from_i64(-1, -1, 1)).unwrap();
        assert_eq!(pt, CurvePoint::from_ints(99, 98010));
    }

    #[test]
    fn forward_map_errors() {
        let e = eq(2, 9, 11);
        assert_eq!(forward_map(&e, &Triplet::from_i64(1, 1, 1)), Err(CurveError::NotASolution));
        let e = eq(5, 1, 1);
        assert_eq!(forward_map(&e, &Triplet::from_i64(0, 1, -1)), Err(CurveError::ZeroX));
    }

    #[test]
    fn membership_examples() {
        let m = CurveModel::from_integer_constant(96059601, 5).unwrap();
        assert!(m.is_on_curve(&CurvePoint::from_ints(0, 9801)));
        assert!(!m.is_on_curve(&CurvePoint::from_ints(1, 1)));
        assert!(m.is_on_curve(&CurvePoint::Infinity));
    }

    #[test]
    fn point_ordering_and_display() {
        let mut pts = [
            CurvePoint::from_ints(99, 98010),
            CurvePoint::from_ints(0, 9801),
            CurvePoint::Infinity,
            CurvePoint::from_ints(0, -9801),
        ];
        pts.sort();
        assert_eq!(pts[0], CurvePoint::Infinity);
        assert_eq!(pts[1], CurvePoint::from_ints(0, -9801));
        assert_eq!(pts[3].to_string(), "(99 : 98010 : 1)");
        assert_eq!(CurvePoint::Infinity.to_string(), "(1 : 0 : 0)");
    }

    fn known() -> Vec<(FermatEquation, Triplet)> {
        vec![
            (eq(2, 9, 11), Triplet::from_i64(1, 1, -1)),
            (eq(16, 9, 7), Triplet::from_i64(1, -1, -1)),
        ]
    }

    proptest! {
        #[test]
        fn forward_map_lands_on_curve(idx in 0usize..2, orbit in 0usize..8, lambda in 1i64..=20, neg in any::<bool>()) {
            let (e, t) = &known()[idx];
            let (variant, moved) = e.sign_orbit(t).unwrap().swap_remove(orbit);
            let lambda = int(if neg { -lambda } else { lambda });
            let scaled = moved.scaled(&lambda);
            let m = CurveModel::from_equation(&variant.equation);
            let pt = forward_map(&variant.equation, &scaled).unwrap();
            prop_assert!(m.is_on_curve(&pt));
            prop_assert_eq!(pt, forward_map(&variant.equation, &moved).unwrap());
        }

        #[test]
        fn integral_model_is_a_bijection(x in -500i64..500, d in 1i64..6, c in 1i64..10_000) {
            // Pick the constant so that (x/d^2, c/d) lies on the curve.
            let px = q(x, d * d);
            let y = q(c, d);
            let c2 = &y * &y - rational_pow(&px, 5);
            prop_assume!(!c2.is_zero());
            let m2 = CurveModel::from_constant(c2.clone(), 5);
            prop_assume!(m2.is_ok());
            let m2 = m2.unwrap();
            let pt = CurvePoint::affine(px, y);
            prop_assert!(m2.is_on_curve(&pt));
            let n = m2.to_integral(&pt).unwrap();
            prop_assert!(m2.is_on_integral_model(&n));
            prop_assert_eq!(m2.from_integral(&n).unwrap(), pt);
        }
    }
}
