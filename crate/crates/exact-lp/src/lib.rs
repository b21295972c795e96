//! Exact rational linear programming with independently checkable
//! certificates.
//!
//! Everything here runs over arbitrary-precision rationals — there is no
//! floating point anywhere, so answers are exact and runs are reproducible
//! bit for bit. The crate exists to back computations whose *conclusions*
//! matter, which shapes the design in two ways:
//!
//! 1. [`solve`] never returns a bare verdict. Every outcome carries evidence
//!    sized for independent audit: an optimum comes with a primal assignment
//!    and dual multipliers, infeasibility with a Farkas combination, and
//!    unboundedness with a feasible point plus an improving ray.
//! 2. [`check_certificate`] verifies that evidence against the instance from
//!    scratch. It shares no code with the solver's pivoting, so trusting a
//!    result only requires trusting the checker (a few dozen lines of
//!    arithmetic), not the solver.
//!
//! # Example
//!
//! ```
//! use exact_lp::{check_certificate, solve, LpInstance, LpOutcome, Rational, Relation};
//!
//! // minimize x + y subject to x + y >= 1/3 with x, y >= 0
//! let mut lp = LpInstance::new();
//! lp.add_variable("x")?;
//! lp.add_variable("y")?;
//! lp.add_objective_term("x", Rational::one())?;
//! lp.add_objective_term("y", Rational::one())?;
//! lp.add_constraint(
//!     Some("total"),
//!     [("x".to_string(), Rational::one()), ("y".to_string(), Rational::one())]
//!         .into_iter()
//!         .collect(),
//!     Relation::Ge,
//!     Rational::new(1, 3),
//! )?;
//! lp.set_lower("x", Some(Rational::zero()))?;
//! lp.set_lower("y", Some(Rational::zero()))?;
//!
//! let outcome = solve(&lp);
//! match &outcome {
//!     LpOutcome::Optimal { value, .. } => assert_eq!(*value, Rational::new(1, 3)),
//!     other => panic!("unexpected outcome {other:?}"),
//! }
//! assert_eq!(check_certificate(&lp, &outcome), Ok(true));
//! # Ok::<(), exact_lp::InstanceError>(())
//! ```
//!
//! # File formats
//!
//! [`parse_lp`], [`parse_mps`] and [`write_lp`] implement a documented
//! subset of the LP and MPS text formats for exchanging programs with
//! external solvers. Both dialects parse literals exactly (`0.1` is 1/10,
//! never a float) and treat variables as free unless bounds are stated.

mod certificate;
mod instance;
mod rational;
mod solver;

pub mod format;

pub use certificate::{check_certificate, CertificateError};
pub use format::{parse_lp, parse_mps, write_lp, FormatError};
pub use instance::{Constraint, InstanceError, LpInstance, Relation, VarBounds};
pub use rational::{ParseRationalError, Rational};
pub use solver::{solve, FarkasCertificate, LpOutcome};
