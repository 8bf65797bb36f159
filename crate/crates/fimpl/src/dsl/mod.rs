//! The `.fimpl` definition language: a small declarative format for
//! negations, t-norms, implications, aggregators, chains, constructions
//! and method instances.
//!
//! A document is a sequence of named bindings, evaluated top to bottom;
//! `#` starts a line comment. Example:
//!
//! ```text
//! F = agg(max, 2);
//! c = chain[pow(t, 2), t];
//! I = implication(KD);
//! out = construct(F, c, c, [I, I]);
//! ```
//!
//! Piecewise chain components carry explicit interval-closure markers
//! because branch selection at a breakpoint is semantically load-bearing:
//!
//! ```text
//! c2 = chain[t, piecewise([0, 0.5]: t, (0.5, 0.75]: 2 * t - 0.5, (0.75, 1]: 1)];
//! ```
//!
//! [`parse`] produces a [`DefinitionDocument`] or a list of spanned
//! diagnostics, [`elaborate`] materialises the bindings through the
//! operator factories, and [`format_document`] pretty-prints a document
//! canonically so that `parse(format(doc))` is structurally `doc`.

mod ast;
mod elaborate;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

pub use ast::{
    format_document, AggKindName, AggMethodForm, CatalogName, ContrapKindName, Declaration,
    DefinitionDocument, Expr, NegationSpec, PieceBranch, Ref, Spanned, TnormKindName, UnaryExpr,
};
pub use elaborate::{elaborate, Bindings, Bound};
pub use parser::parse;

/// Byte range plus 1-based line/column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A parse or elaboration error anchored to a source location.
#[derive(Debug, Clone, Error)]
#[error("{span}: {message}")]
pub struct Diagnostic {
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub(crate) fn new(span: Span, message: impl Into<String>) -> Self {
        Diagnostic { span, message: message.into() }
    }
}
