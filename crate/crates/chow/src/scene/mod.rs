//! The scene language: a line-oriented declarative format for rings,
//! classes, bundles, maps, constructions, and assertions, plus its
//! evaluator and report types.

mod lexer;
mod ast;
mod parser;
mod eval;
mod report;

pub use ast::*;
pub use eval::{eval_expr, eval_scene, eval_scene_full, resolve_names, EvalOptions, SceneEnv};
pub use lexer::{LexError, Token, TokenKind};
pub use parser::{parse_expr_str, parse_scene, ParseError};
pub use report::{format_report, AssertOutcome, Report, ReportEntry, ReportMode};

use crate::error::{EngineError, Result};
use crate::ring::{PresentedRing, RingElement};
use std::collections::HashMap;

/// Parse and evaluate a bare ring-element expression such as
/// `H^4 + 1/2*H^2*T^2` with no class environment.
pub fn parse_element_str(ring: &PresentedRing, src: &str) -> Result<RingElement> {
    let expr = parser::parse_expr_str(src)
        .map_err(|e| EngineError::Other(format!("expression parse error: {e}")))?;
    eval::eval_expr(&expr, ring, &HashMap::new())
}
