//! Bounded rational point search on the integral model `N^2 = M^p + k`.
//!
//! Rational points of a monic odd-degree integral model have the shape
//! `M = a / d^2`, `N = b / d^p` with `gcd(a, d) = 1`, and then
//! `b^2 = a^p + k d^(2p)`. For each `d <= d_max` the scan runs over
//! `|a| <= a_max`, filters by quadratic residues and confirms survivors with
//! an exact integer square root. Points are reported on the rational model
//! `(X, Y) = (M / 4, N / 2^p)`.
//!
//! Nothing here certifies completeness beyond the box that was scanned.

mod sieve;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{integer_sqrt_exact, rational_pth_root, two};
use crate::curve::{CurveModel, CurvePoint};
use crate::error::SearchError;
use sieve::ResidueSieve;

/// Numerators per parallel work unit.
const CHUNK: i64 = 1 << 15;

pub const DEFAULT_D_MAX: u64 = 8;
pub const DEFAULT_A_MAX: u64 = 1_000_000;

/// The scanned box: `d <= d_max`, `|a| <= a_max` on the integral model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub d_max: u64,
    pub a_max: u64,
    pub time_budget: Option<Duration>,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            d_max: DEFAULT_D_MAX,
            a_max: DEFAULT_A_MAX,
            time_budget: None,
        }
    }
}

impl SearchBounds {
    pub fn new(d_max: u64, a_max: u64) -> Self {
        SearchBounds {
            d_max,
            a_max,
            time_budget: None,
        }
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.d_max == 0 {
            return Err(SearchError::InvalidBounds("d_max must be at least 1"));
        }
        if self.d_max > u64::from(u32::MAX) {
            return Err(SearchError::InvalidBounds("d_max must fit in 32 bits"));
        }
        if self.a_max == 0 {
            return Err(SearchError::InvalidBounds("a_max must be at least 1"));
        }
        if self.a_max > i64::MAX as u64 - CHUNK as u64 {
            return Err(SearchError::InvalidBounds("a_max must fit in 63 bits"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Rational-model points, infinity first, then by `X` and `Y`.
    pub points: Vec<CurvePoint>,
    pub bounds: SearchBounds,
    pub complete_within_bounds: bool,
}

impl SearchResult {
    /// The same points on the integral model `(M, N) = (4X, 2^p Y)`.
    pub fn integral_points(&self, m: &CurveModel) -> Vec<CurvePoint> {
        self.points
            .iter()
            .map(|pt| m.to_integral(pt).expect("search only returns points on the curve"))
            .collect()
    }

    pub fn affine_count(&self) -> usize {
        self.points.iter().filter(|p| !p.is_infinity()).count()
    }
}

/// Everything needed to scan one denominator.
struct DenominatorPlan {
    d: u64,
    shift: BigInt,
    sieve: sieve::ShiftedSieve,
    lo: i64,
    hi: i64,
}

impl DenominatorPlan {
    fn new(k: &BigInt, p: u32, d: u64, a_max: i64, residues: &ResidueSieve) -> Option<Self> {
        let shift = k * Pow::pow(BigInt::from(d), 2 * p);
        // Smallest a with a^p + shift >= 0.
        let root = shift.abs().nth_root(p);
        let floor_a = if shift.is_negative() {
            if Pow::pow(&root, p) == shift.abs() {
                root
            } else {
                root + 1u32
            }
        } else {
            -root
        };
        let lo = if floor_a > BigInt::from(-a_max) {
            floor_a.to_i64()?
        } else {
            -a_max
        };
        if lo > a_max {
            return None;
        }
        let sieve = residues.shifted(&shift);
        Some(DenominatorPlan {
            d,
            shift,
            sieve,
            lo,
            hi: a_max,
        })
    }

    fn chunk_count(&self) -> u64 {
        ((self.hi - self.lo) / CHUNK + 1) as u64
    }

    /// `(a, b)` with `b >= 0`, `b^2 = a^p + shift`, `gcd(a, d) = 1`.
    fn scan_chunk(&self, index: u64, p: u32) -> Vec<(i64, BigInt)> {
        let start = self.lo + index as i64 * CHUNK;
        let end = (start + CHUNK - 1).min(self.hi);
        let mut hits = Vec::new();
        for a in start..=end {
            if !self.sieve.accepts(a) {
                continue;
            }
            if self.d > 1 && a.unsigned_abs().gcd(&self.d) != 1 {
                continue;
            }
            let value = Pow::pow(BigInt::from(a), p) + &self.shift;
            if let Some(b) = integer_sqrt_exact(&value) {
                hits.push((a, b));
            }
        }
        hits
    }
}

/// Every rational point in the box, plus the point at infinity.
///
/// When a time budget runs out the partial result comes back inside
/// [`SearchError::BudgetExceeded`] with `complete_within_bounds = false`.
pub fn search(m: &CurveModel, bounds: &SearchBounds) -> Result<SearchResult, SearchError> {
    bounds.validate()?;
    let started = Instant::now();
    let deadline = bounds.time_budget.map(|b| started + b);
    let out_of_time = Arc::new(AtomicBool::new(false));

    let p = m.p();
    let k = m.integral_constant();
    let a_max = bounds.a_max as i64;
    let residues = ResidueSieve::new(p);

    let plans: Vec<Arc<DenominatorPlan>> = (1..=bounds.d_max)
        .into_par_iter()
        .filter_map(|d| DenominatorPlan::new(k, p, d, a_max, &residues).map(Arc::new))
        .collect();

    let hits: Vec<(u64, i64, BigInt)> = plans
        .par_iter()
        .flat_map(|plan| {
            let out_of_time = Arc::clone(&out_of_time);
            let plan = Arc::clone(plan);
            (0..plan.chunk_count()).into_par_iter().flat_map_iter(move |i| {
                if out_of_time.load(Ordering::Relaxed) || deadline.is_some_and(|t| Instant::now() >= t) {
                    out_of_time.store(true, Ordering::Relaxed);
                    return Vec::new();
                }
                plan.scan_chunk(i, p).into_iter().map(|(a, b)| (plan.d, a, b)).collect()
            })
        })
        .collect();

    let two_p = Pow::pow(two(), p);
    let mut points = BTreeSet::new();
    points.insert(CurvePoint::Infinity);
    for (d, a, b) in hits {
        let d = BigInt::from(d);
        let x = BigRational::new(BigInt::from(a), &d * &d * 4u32);
        let den_y = Pow::pow(&d, p) * &two_p;
        let y = BigRational::new(b.clone(), den_y.clone());
        debug_assert!(m.is_on_curve(&CurvePoint::affine(x.clone(), y.clone())));
        if !b.is_zero() {
            points.insert(CurvePoint::affine(x.clone(), -y.clone()));
        }
        points.insert(CurvePoint::affine(x, y));
    }

    let complete = !out_of_time.load(Ordering::Relaxed);
    let result = SearchResult {
        points: points.into_iter().collect(),
        bounds: bounds.clone(),
        complete_within_bounds: complete,
    };
    if complete {
        Ok(result)
    } else {
        Err(SearchError::BudgetExceeded(Box::new(result)))
    }
}

/// The rational Weierstrass point `(X, 0)`, if `-c` is a rational p-th power.
pub fn search_x_axis(m: &CurveModel) -> Vec<CurvePoint> {
    let neg_c = -m.rational_constant().clone();
    rational_pth_root(&neg_c, m.p())
        .map(|x| CurvePoint::affine(x, BigRational::zero()))
        .into_iter()
        .collect()
}
