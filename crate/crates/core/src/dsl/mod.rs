//! Text language for variable sets, events and linear probability
//! inequalities.
//!
//! ```text
//! # comments run to end of line
//! space LG3 { vars q3, q2, q1 }
//! event K32 on LG3 = { q3=+, q2=- }
//! ineq LGW3 on LG3 : K32 <= P{q2=-, q1=+} + P{q3=+, q1=-}
//! ineq CLOSED on LG3 : K32 + P{q2=+, q1=+} <= 1
//! builtin LGWN 4
//! ```
//!
//! Statements end at a newline or `;`. Newlines inside braces and after
//! `+`, `<=`, `:` and `=` are ignored.

pub mod ast;
pub mod compile;
pub mod format;
pub mod lexer;
pub mod parser;

use thiserror::Error;

pub use ast::Ast;
pub use compile::{compile, CompileError, CompiledInequality, Program, Warning};
pub use format::format;
pub use parser::{parse, Diagnostic};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DslError {
    #[error("{0}")]
    Parse(#[from] Diagnostic),
    #[error("{0}")]
    Compile(#[from] CompileError),
}

/// Parses and compiles in one step.
pub fn compile_source(src: &str) -> Result<Program, DslError> {
    Ok(compile(&parse(src)?)?)
}
