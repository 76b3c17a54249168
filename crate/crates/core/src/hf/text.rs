//! Brace notation: `{}`, `{{}}`, `{{},{{}}}`, …
//!
//! Output lists elements in canonical order with no whitespace. Input may
//! contain arbitrary whitespace, duplicates and any element order.

use std::fmt;

use thiserror::Error;

use super::HfSet;

/// Maximum brace nesting accepted by the parser.
pub const MAX_NESTING: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ExpectedSet,
    ExpectedCommaOrClose,
    TrailingInput,
    NestingTooDeep,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unbalanced braces: input ends inside a set"),
            ParseErrorKind::ExpectedSet => f.write_str("expected `{`"),
            ParseErrorKind::ExpectedCommaOrClose => f.write_str("expected `,` or `}`"),
            ParseErrorKind::TrailingInput => f.write_str("unexpected input after the set"),
            ParseErrorKind::NestingTooDeep => write!(f, "nesting deeper than {MAX_NESTING}"),
        }
    }
}

/// A parse failure at a byte offset into the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

/// Canonical brace notation, no whitespace.
pub fn print_hf(x: &HfSet) -> String {
    let mut out = String::new();
    write_set(x, &mut out);
    out
}

fn write_set(x: &HfSet, out: &mut String) {
    out.push('{');
    for (i, e) in x.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_set(e, out);
    }
    out.push('}');
}

/// Parses brace notation, canonicalizing the result.
pub fn parse_hf(s: &str) -> Result<HfSet, ParseError> {
    let (set, end) = parse_braces(s, 0)?;
    let end = skip_ws(s, end);
    if end != s.len() {
        return Err(ParseError {
            offset: end,
            kind: ParseErrorKind::TrailingInput,
        });
    }
    Ok(set)
}

pub(super) fn skip_ws(s: &str, mut i: usize) -> usize {
    let b = s.as_bytes();
    while i < b.len() && b[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

/// Parses one brace expression starting at byte `start` (leading whitespace
/// allowed). Returns the set and the offset just past its closing brace.
pub(super) fn parse_braces(s: &str, start: usize) -> Result<(HfSet, usize), ParseError> {
    enum Want {
        // just after `{`: an element or `}`
        ElemOrClose,
        // just after `,`: an element
        Elem,
        // after a finished element: `,` or `}`
        CommaOrClose,
    }

    let err = |offset, kind| Err(ParseError { offset, kind });
    let mut i = skip_ws(s, start);
    match s[i..].chars().next() {
        Some('{') => {}
        Some(c) => return err(i, ParseErrorKind::UnexpectedChar(c)),
        None => return err(i, ParseErrorKind::ExpectedSet),
    }
    i += 1;
    let mut stack: Vec<Vec<HfSet>> = vec![Vec::new()];
    let mut want = Want::ElemOrClose;
    loop {
        i = skip_ws(s, i);
        let Some(c) = s[i..].chars().next() else {
            return err(i, ParseErrorKind::UnexpectedEnd);
        };
        match (c, &want) {
            ('{', Want::ElemOrClose | Want::Elem) => {
                if stack.len() >= MAX_NESTING {
                    return err(i, ParseErrorKind::NestingTooDeep);
                }
                stack.push(Vec::new());
                want = Want::ElemOrClose;
            }
            ('}', Want::ElemOrClose | Want::CommaOrClose) => {
                let elems = stack.pop().expect("stack is never empty here");
                let set = HfSet::from_elems(elems);
                match stack.last_mut() {
                    Some(parent) => {
                        parent.push(set);
                        want = Want::CommaOrClose;
                    }
                    None => return Ok((set, i + 1)),
                }
            }
            (',', Want::CommaOrClose) => want = Want::Elem,
            (_, Want::CommaOrClose) => return err(i, ParseErrorKind::ExpectedCommaOrClose),
            (_, Want::Elem) => return err(i, ParseErrorKind::ExpectedSet),
            (other, Want::ElemOrClose) => return err(i, ParseErrorKind::UnexpectedChar(other)),
        }
        i += c.len_utf8();
    }
}
