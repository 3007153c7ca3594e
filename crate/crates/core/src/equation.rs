//! The generalized Fermat equation `Ax^p + By^p + Cz^p = 0`.
//!
//! Covers validation of the coefficient constraints, exact evaluation of
//! candidate triplets, the eight-element sign orbit, the `A + B + C = 0`
//! trivial solution, the three lead-coefficient orderings of a coefficient
//! set, and solutions with a zero coordinate (which never reach the curve).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{gcd3, is_prime, is_pth_power_free, rational_pth_root};
use crate::curve::rational_constant;
use crate::error::{Coefficient, EquationError, ValidationError, Violation};
use crate::serde_str;

/// `Ax^p + By^p + Cz^p = 0` with validated coefficients.
///
/// `strict` records whether the coprimality and power-freeness checks were
/// enforced. The exponent and nonzero-coefficient checks always are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FermatEquation {
    #[serde(with = "serde_str::int")]
    a: BigInt,
    #[serde(with = "serde_str::int")]
    b: BigInt,
    #[serde(with = "serde_str::int")]
    c: BigInt,
    p: u32,
    strict: bool,
}

impl FermatEquation {
    /// Checks every constraint and reports all violations at once.
    pub fn validate(a: BigInt, b: BigInt, c: BigInt, p: u32) -> Result<Self, ValidationError> {
        Self::check(a, b, c, p, true)
    }

    /// Exploratory construction: coefficients need not be coprime or
    /// p-th-power-free. The curve correspondence still holds for any such
    /// equation, but the primitive-solution bookkeeping may overcount.
    pub fn validate_relaxed(a: BigInt, b: BigInt, c: BigInt, p: u32) -> Result<Self, ValidationError> {
        Self::check(a, b, c, p, false)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, p: u32) -> Result<Self, ValidationError> {
        Self::validate(a.into(), b.into(), c.into(), p)
    }

    fn check(a: BigInt, b: BigInt, c: BigInt, p: u32, strict: bool) -> Result<Self, ValidationError> {
        let mut violations = Vec::new();
        if p < 5 || !is_prime(p) {
            violations.push(Violation::NonPrimeP(p));
        }
        let coeffs = [(Coefficient::A, &a), (Coefficient::B, &b), (Coefficient::C, &c)];
        for (name, v) in coeffs {
            if v.is_zero() {
                violations.push(Violation::ZeroCoefficient(name));
            }
        }
        if strict {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let (ln, l) = coeffs[i];
                let (rn, r) = coeffs[j];
                if !l.is_zero() && !r.is_zero() && !l.gcd(r).is_one() {
                    violations.push(Violation::NotCoprime(ln, rn));
                }
            }
            // Power-freeness is only meaningful for a usable exponent.
            if p >= 5 && is_prime(p) {
                for (name, v) in coeffs {
                    if !v.is_zero() && !is_pth_power_free(v, p).unwrap_or(true) {
                        violations.push(Violation::NotPowerFree(name));
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(FermatEquation { a, b, c, p, strict })
        } else {
            Err(ValidationError { violations })
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// `A x^p + B y^p + C z^p`, exactly.
    pub fn evaluate(&self, t: &Triplet) -> BigInt {
        let p = self.p;
        &self.a * Pow::pow(&t.x, p) + &self.b * Pow::pow(&t.y, p) + &self.c * Pow::pow(&t.z, p)
    }

    pub fn is_solution(&self, t: &Triplet) -> bool {
        !t.is_zero() && self.evaluate(t).is_zero()
    }

    /// `(1, 1, 1)` when `A + B + C = 0`.
    pub fn trivial_solution_by_sum(&self) -> Option<Triplet> {
        if (&self.a + &self.b + &self.c).is_zero() {
            Some(Triplet::from_i64(1, 1, 1))
        } else {
            None
        }
    }

    /// All eight signed variants of the equation, each paired with the
    /// triplet obtained by flipping the matching coordinates. The identity
    /// comes first.
    pub fn sign_orbit(&self, t: &Triplet) -> Result<Vec<(SignVariant, Triplet)>, EquationError> {
        if !self.is_solution(t) {
            return Err(EquationError::NotASolution);
        }
        Ok(SignVariant::ALL_SIGNS
            .iter()
            .map(|&signs| {
                let [sa, sb, sc] = signs;
                let equation = FermatEquation {
                    a: sa.apply(&self.a),
                    b: sb.apply(&self.b),
                    c: sc.apply(&self.c),
                    p: self.p,
                    strict: self.strict,
                };
                let moved = Triplet::new(sa.apply(&t.x), sb.apply(&t.y), sc.apply(&t.z));
                (SignVariant { signs, equation }, moved)
            })
            .collect())
    }

    /// Primitive solutions with exactly one zero coordinate.
    ///
    /// `x = 0` forces `(y/z)^p = -C/B`, and similarly for the other two
    /// coordinates, so each case is a single rational p-th root test.
    pub fn degenerate_zero_coordinate_solutions(&self) -> Vec<Triplet> {
        let neg_ratio = |n: &BigInt, d: &BigInt| BigRational::new(-n.clone(), d.clone());
        let mut out = Vec::new();
        if let Some(u) = rational_pth_root(&neg_ratio(&self.c, &self.b), self.p) {
            out.push(Triplet::new(BigInt::zero(), u.numer().clone(), u.denom().clone()));
        }
        if let Some(u) = rational_pth_root(&neg_ratio(&self.c, &self.a), self.p) {
            out.push(Triplet::new(u.numer().clone(), BigInt::zero(), u.denom().clone()));
        }
        if let Some(u) = rational_pth_root(&neg_ratio(&self.b, &self.a), self.p) {
            out.push(Triplet::new(u.numer().clone(), u.denom().clone(), BigInt::zero()));
        }
        out.into_iter()
            .filter_map(|t| t.primitive().ok())
            .filter(|t| self.is_solution(t))
            .collect()
    }
}

impl fmt::Display for FermatEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        write!(f, "{}x^{p}", self.a)?;
        for (coef, var) in [(&self.b, 'y'), (&self.c, 'z')] {
            let op = if coef.is_negative() { '-' } else { '+' };
            write!(f, " {op} {}{var}^{p}", coef.abs())?;
        }
        f.write_str(" = 0")
    }
}

/// A candidate integer solution `(x, y, z)`.
///
/// Arbitrary triplets are allowed as values; [`Triplet::primitive`] gives the
/// canonical projective representative (coprime coordinates, first nonzero
/// coordinate positive).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triplet {
    #[serde(with = "serde_str::int")]
    pub x: BigInt,
    #[serde(with = "serde_str::int")]
    pub y: BigInt,
    #[serde(with = "serde_str::int")]
    pub z: BigInt,
}

impl Triplet {
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Self {
        Triplet { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Triplet::new(x.into(), y.into(), z.into())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scaled(&self, lambda: &BigInt) -> Triplet {
        Triplet::new(&self.x * lambda, &self.y * lambda, &self.z * lambda)
    }

    pub fn negated(&self) -> Triplet {
        Triplet::new(-&self.x, -&self.y, -&self.z)
    }

    /// Divides out the content and fixes the sign so the first nonzero
    /// coordinate is positive.
    pub fn primitive(&self) -> Result<Triplet, EquationError> {
        if self.is_zero() {
            return Err(EquationError::ZeroTriplet);
        }
        let g = gcd3(&self.x, &self.y, &self.z);
        let mut t = Triplet::new(&self.x / &g, &self.y / &g, &self.z / &g);
        let lead = [&t.x, &t.y, &t.z].into_iter().find(|v| !v.is_zero()).cloned();
        if lead.is_some_and(|v| v.is_negative()) {
            t = t.negated();
        }
        Ok(t)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && gcd3(&self.x, &self.y, &self.z).is_one()
    }

    /// Same projective point: equal after reduction to primitive form.
    pub fn same_projective(&self, other: &Triplet) -> bool {
        match (self.primitive(), other.primitive()) {
            (Ok(l), Ok(r)) => l == r,
            _ => false,
        }
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl FromStr for Triplet {
    type Err = String;

    /// Parses `x,y,z`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [x, y, z] = parts.as_slice() else {
            return Err(format!("expected three comma-separated integers, got {s:?}"));
        };
        let parse = |v: &str| BigInt::from_str(v).map_err(|e| format!("bad integer {v:?}: {e}"));
        Ok(Triplet::new(parse(x)?, parse(y)?, parse(z)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn apply(self, v: &BigInt) -> BigInt {
        match self {
            Sign::Plus => v.clone(),
            Sign::Minus => -v,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Signs applied to `(A, B, C)` and the resulting equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignVariant {
    pub signs: [Sign; 3],
    pub equation: FermatEquation,
}

impl SignVariant {
    /// Identity first, then single, double and triple flips.
    pub const ALL_SIGNS: [[Sign; 3]; 8] = {
        use Sign::{Minus as M, Plus as P};
        [
            [P, P, P],
            [M, P, P],
            [P, M, P],
            [P, P, M],
            [M, M, P],
            [M, P, M],
            [P, M, M],
            [M, M, M],
        ]
    };
}

/// One lead-coefficient choice for a coefficient set, with the constant of
/// the curve every signed and reordered variant maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrdering {
    pub lead: Coefficient,
    pub equation: FermatEquation,
    pub constant: BigRational,
}

impl CanonicalOrdering {
    /// Each ordering stands for the signed equations `±Lx^p ± My^p ± Nz^p`
    /// and `±Lx^p ± Ny^p ± Mz^p`, 8 of each shape up to global sign.
    pub const SIGNED_EQUATIONS_COVERED: usize = 8;
}

/// The three orderings of a coefficient set, one per lead coefficient, using
/// absolute values: `(A, B, C)`, `(B, A, C)`, `(C, B, A)`.
pub fn canonical_orderings(set: [&BigInt; 3], p: u32) -> Result<[CanonicalOrdering; 3], ValidationError> {
    let [a, b, c] = set.map(|v| v.abs());
    // Validating once on the set surfaces every violation with its original name.
    FermatEquation::validate(a.clone(), b.clone(), c.clone(), p)?;
    let make = |lead: Coefficient, l: &BigInt, m: &BigInt, n: &BigInt| {
        let equation = FermatEquation::validate(l.clone(), m.clone(), n.clone(), p)?;
        let constant = rational_constant(l, m, n, p);
        Ok::<_, ValidationError>(CanonicalOrdering { lead, equation, constant })
    };
    Ok([
        make(Coefficient::A, &a, &b, &c)?,
        make(Coefficient::B, &b, &a, &c)?,
        make(Coefficient::C, &c, &b, &a)?,
    ])
}
