//! Rational solutions of the generalized Fermat equation
//! `Ax^p + By^p + Cz^p = 0` through its hyperelliptic curve
//! `Y^2 = X^p + A^2 (BC)^(p-1) / 4`.
//!
//! The pipeline validates the equation, builds the curve, enumerates its
//! rational points inside an explicit height box, and pulls every point with
//! `XY != 0` back to a primitive triplet or records why it has none. Results
//! are complete only relative to the searched box.
//!
//! ```
//! use fermat_descent::{solve, FermatEquation, SearchBounds, Triplet};
//!
//! let eq = FermatEquation::from_i64(2, 9, 11, 5).unwrap();
//! let report = solve(&eq, &SearchBounds::new(2, 1000)).unwrap();
//! assert_eq!(report.solutions, vec![Triplet::from_i64(1, 1, -1)]);
//! ```

pub mod arith;
pub mod curve;
pub mod descent;
pub mod equation;
pub mod error;
pub mod record;
pub mod search;
pub mod serde_str;
pub mod solve;

pub use curve::{forward_map, CurveModel, CurvePoint};
pub use descent::{compute_a_prime, recover, verify_consistency, RatioKind, RecoveryBranch, RecoveryOutcome};
pub use equation::{canonical_orderings, CanonicalOrdering, FermatEquation, Sign, SignVariant, Triplet};
pub use error::{ArithError, Coefficient, CurveError, DescentError, EquationError, SearchError, ValidationError, Violation};
pub use record::{RecordStatus, ReportRecord};
pub use search::{search, search_x_axis, SearchBounds, SearchResult};
pub use solve::{solve, PointOutcome, PointRecovery, SolutionReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
