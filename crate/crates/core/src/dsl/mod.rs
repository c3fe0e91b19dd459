//! Text format for presentations.
//!
//! ```text
//! field Q[j]/(j^2 + j + 1)
//! letters x1:(1,0), x2:(0,1)
//! order deglex x2>x1
//! param p = 2
//! relations:
//! x2*x1^2 + p*x1*x2*x1 + p^2*x1^2*x2
//! ```

mod emit;
mod expr;
mod lexer;
mod lie;
mod parser;

pub use emit::emit_presentation;
pub use lie::expand_lie_bracket;
pub use parser::{parse_polynomial, parse_presentation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },
    #[error("line {line}: relation is not homogeneous, degrees {degrees}")]
    Inhomogeneous { line: usize, degrees: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
}
