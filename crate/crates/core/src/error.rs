use std::fmt;

use thiserror::Error;

use crate::search::SearchResult;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero has no power-free decomposition")]
    ZeroInput,
    #[error("exponent {0} is out of range")]
    InvalidExponent(u32),
}

/// Names one of the three coefficients of `Ax^p + By^p + Cz^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    A,
    B,
    C,
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::A => f.write_str("A"),
            Coefficient::B => f.write_str("B"),
            Coefficient::C => f.write_str("C"),
        }
    }
}

/// A single violated equation constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPrimeP(u32),
    ZeroCoefficient(Coefficient),
    NotCoprime(Coefficient, Coefficient),
    NotPowerFree(Coefficient),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPrimeP(p) => write!(f, "exponent p = {p} is not a prime >= 5"),
            Violation::ZeroCoefficient(c) => write!(f, "coefficient {c} is zero"),
            Violation::NotCoprime(l, r) => write!(f, "coefficients {l} and {r} are not coprime"),
            Violation::NotPowerFree(c) => write!(f, "coefficient {c} is divisible by a p-th power"),
        }
    }
}

/// Every constraint an equation failed, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid equation: ")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl ValidationError {
    pub fn contains(&self, v: &Violation) -> bool {
        self.violations.contains(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquationError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("triplet is not a solution of the equation")]
    NotASolution,
    #[error("the zero triplet is not a projective point")]
    ZeroTriplet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("triplet is not a solution of the equation")]
    NotASolution,
    #[error("x = 0 is excluded from the change of variables")]
    ZeroX,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("curve constant must be nonzero")]
    ZeroConstant,
    #[error("4^p * c is not an integer, no integral model")]
    NonIntegralModel,
    #[error("exponent p = {0} is not a prime >= 5")]
    InvalidExponent(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search bounds: {0}")]
    InvalidBounds(&'static str),
    #[error("time budget exhausted before the search box was covered")]
    BudgetExceeded(Box<SearchResult>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("recovery needs a point with XY != 0")]
    ZeroCoordinate,
    #[error("the point at infinity has no associated triplet")]
    PointAtInfinity,
    #[error("point is not on the curve")]
    NotOnCurve,
}
