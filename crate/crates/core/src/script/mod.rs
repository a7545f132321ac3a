//! The scene language: lexer, parser, pretty-printer and evaluator.
//!
//! ```text
//! scene "all" duration 10s { group = full24; color = orbit(palette("rainbow")); }
//! ```
//!
//! A program is a list of scenes played back to back. Each scene picks a
//! symmetry group whose edge orbits index a palette, an animation and a
//! brightness expression in the external `signal`.

mod ast;
mod eval;
mod lexer;
mod palette;
mod parser;
mod printer;
mod signal;

use std::fmt;

pub use ast::{Animation, ColorRule, FiberAxis, Program, Scalar, Scene, SweepUnit};
pub use eval::{render, EvalError, Frame, Sequencer};
pub use lexer::{lex, Tok, Token};
pub use palette::{gamma_byte, hue_shift, Palette};
pub use parser::parse;
pub use printer::pretty;
pub use signal::{Signal, SignalError};

/// The three-scene demo program.
pub const DEMO_SCRIPT: &str = include_str!("../../scripts/demo.scene");

/// 1-based line and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub message: String,
}

impl Diagnostic {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// Every diagnostic from one parse, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    pub fn first(&self) -> &Diagnostic {
        &self.0[0]
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}
