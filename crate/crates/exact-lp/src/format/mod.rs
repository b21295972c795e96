//! Text formats for exchanging programs with external solvers.
//!
//! Two dialects are supported, both documented in the guide's file-format
//! chapter:
//!
//! * an LP format ([`parse_lp`] / [`write_lp`]) — human-readable sections
//!   `Minimize`/`Maximize`, `Subject To`, `Bounds`, `End`;
//! * an MPS format ([`parse_mps`]) — column-oriented sections `NAME`,
//!   `OBJSENSE`, `ROWS`, `COLUMNS`, `RHS`, `RANGES`, `BOUNDS`, `ENDATA`.
//!
//! Both parsers convert every literal to an exact rational (`0.5` becomes
//! exactly 1/2), normalize maximization to minimization by negating the
//! objective, and leave variables **free unless a bound is stated** — the
//! writer always emits an explicit bounds line per variable, so documents it
//! produces carry no implicit conventions. Integrality markers and sections
//! are rejected with [`FormatError::UnsupportedSection`] rather than being
//! silently dropped: these files feed a solver that deliberately works with
//! the rational relaxation.

mod lp;
mod mps;

pub use lp::{parse_lp, write_lp};
pub use mps::parse_mps;

/// Why a document failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    /// Malformed text; positions are 1-based.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// A recognized but deliberately unsupported feature (integrality,
    /// special ordered sets, …).
    #[error("unsupported section at line {line}: {section}")]
    UnsupportedSection { line: usize, section: String },
    /// A data entry referenced a row never declared under `ROWS`.
    #[error("unknown row '{name}' at line {line}")]
    UnknownRow { line: usize, name: String },
    /// A bound referenced a column never seen under `COLUMNS`.
    #[error("unknown column '{name}' at line {line}")]
    UnknownColumn { line: usize, name: String },
}

impl FormatError {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}
