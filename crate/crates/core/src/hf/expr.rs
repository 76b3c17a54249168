//! Small expression language for building sets on the command line.
//!
//! ```text
//! expr  := braces | ord(N) | succ(expr) | pow(expr) | union(expr)
//!        | kpair(expr, expr) | set(expr, …) | tuple(expr, …)
//! ```
//!
//! `braces` is ordinary brace notation.

use thiserror::Error;

use super::ops::{big_union, kpair, powerset, succ_vn, tuple_encode, von_neumann, POWERSET_BOUND};
use super::text::{parse_braces, skip_ws};
use super::{HfError, HfSet, ParseError};

/// Largest `n` accepted by `ord(n)`.
pub const MAX_ORD: usize = 64;
const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Braces(#[from] ParseError),
    #[error("offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("offset {offset}: {source}")]
    Build { offset: usize, source: HfError },
}

impl ExprError {
    /// Byte offset of the failure in the input.
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Braces(e) => e.offset,
            ExprError::Syntax { offset, .. } | ExprError::Build { offset, .. } => *offset,
        }
    }
}

/// Evaluates a builder expression such as `kpair(ord(1), pow({}))`.
pub fn eval_expr(src: &str) -> Result<HfSet, ExprError> {
    let mut p = Parser { src, pos: 0, depth: 0 };
    let value = p.expr()?;
    p.pos = skip_ws(src, p.pos);
    if p.pos != src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.pos = skip_ws(self.src, self.pos);
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        let b = self.src.as_bytes();
        while self.pos < b.len() && b[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<HfSet, ExprError> {
        if self.depth >= MAX_DEPTH {
            return Err(self.syntax("expression nested too deeply"));
        }
        self.depth += 1;
        let out = self.expr_inner();
        self.depth -= 1;
        out
    }

    fn expr_inner(&mut self) -> Result<HfSet, ExprError> {
        match self.peek() {
            Some(b'{') => {
                let (set, end) = parse_braces(self.src, self.pos)?;
                self.pos = end;
                Ok(set)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().to_owned();
                self.expect(b'(')?;
                let value = match name.as_str() {
                    "ord" => {
                        let n = self.natural()?;
                        if n > MAX_ORD {
                            return Err(ExprError::Build {
                                offset: start,
                                source: HfError::SizeExceeded {
                                    what: "ord argument",
                                    size: n,
                                    bound: MAX_ORD,
                                },
                            });
                        }
                        von_neumann(n)
                    }
                    "succ" => succ_vn(&self.expr()?),
                    "union" => big_union(&self.expr()?),
                    "pow" => powerset(&self.expr()?, POWERSET_BOUND)
                        .map_err(|source| ExprError::Build { offset: start, source })?,
                    "kpair" => {
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let b = self.expr()?;
                        kpair(&a, &b)
                    }
                    "set" | "tuple" => {
                        let args = self.list()?;
                        if name == "set" {
                            HfSet::from_elems(args)
                        } else {
                            tuple_encode(&args)
                                .map_err(|source| ExprError::Build { offset: start, source })?
                        }
                    }
                    _ => {
                        return Err(ExprError::Syntax {
                            offset: start,
                            msg: format!("unknown builder `{name}`"),
                        })
                    }
                };
                self.expect(b')')?;
                Ok(value)
            }
            Some(_) => Err(self.syntax("expected `{` or a builder name")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    /// Comma-separated expressions up to (not including) `)`.
    fn list(&mut self) -> Result<Vec<HfSet>, ExprError> {
        let mut out = Vec::new();
        if self.peek() == Some(b')') {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn natural(&mut self) -> Result<usize, ExprError> {
        self.peek();
        let start = self.pos;
        let b = self.src.as_bytes();
        while self.pos < b.len() && b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| ExprError::Syntax {
            offset: start,
            msg: "expected a natural number".into(),
        })
    }
}
