//! Closed terms over a finite signature, written in Polish notation.

mod free;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::hf::{von_neumann, HfSet};

pub use free::{
    check_free_fragment, check_lemma, eval, Clause, FragmentReport, Interpretation, MergedSymbols,
    StringAlgebra, Violation,
};

/// Deepest term accepted by the parser and by [`build`].
pub const MAX_TERM_DEPTH: usize = 2048;
/// Largest fragment [`enumerate_terms`] will produce.
pub const MAX_FRAGMENT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("signature line {line}: {msg}")]
    Signature { line: usize, msg: String },
    #[error("unknown token `{token}` at offset {offset}")]
    UnknownToken { offset: usize, token: String },
    #[error("input ends with {missing} argument(s) still expected")]
    ArityUnderflow { missing: usize },
    #[error("term complete before input ends; trailing tokens start at offset {offset}")]
    TrailingTokens { offset: usize },
    #[error("`{symbol}` takes {expected} argument(s), got {got}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        got: usize,
    },
    #[error("term deeper than {MAX_TERM_DEPTH}")]
    TooDeep,
    #[error("fragment of height {height} has {count} terms, more than {MAX_FRAGMENT}")]
    SizeExceeded { height: usize, count: u128 },
    #[error("contiguous token mode needs single-character symbol names")]
    NotSingleChar,
}

/// An ordered list of `(name, arity)` pairs. Symbol `i` is coded by `ord(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<(String, usize)>,
    codes: Vec<HfSet>,
}

impl Signature {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, usize)>) -> Result<Signature, TermError> {
        let symbols: Vec<(String, usize)> = symbols.into_iter().map(|(n, a)| (n.into(), a)).collect();
        for (i, (name, _)) in symbols.iter().enumerate() {
            let bad = |msg: String| Err(TermError::Signature { line: i + 1, msg });
            if name.is_empty() {
                return bad("empty symbol name".into());
            }
            if name.chars().any(|c| c.is_whitespace() || c == '{' || c == '}') {
                return bad(format!("symbol name {name:?} contains whitespace or a brace"));
            }
            if symbols[..i].iter().any(|(n, _)| n == name) {
                return bad(format!("duplicate symbol `{name}`"));
            }
        }
        let codes = (0..symbols.len()).map(von_neumann).collect();
        Ok(Signature { symbols, codes })
    }

    /// One `name arity` pair per line; `#` starts a comment.
    pub fn parse(src: &str) -> Result<Signature, TermError> {
        let mut symbols = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let words: Vec<&str> = text.split_whitespace().collect();
            let [name, arity] = words[..] else {
                return Err(TermError::Signature {
                    line,
                    msg: "expected `name arity`".into(),
                });
            };
            let arity = arity.parse::<usize>().map_err(|_| TermError::Signature {
                line,
                msg: format!("`{arity}` is not an arity"),
            })?;
            symbols.push((name.to_string(), arity));
            lines.push(line);
        }
        // Report validation failures against source lines, not symbol indices.
        Signature::new(symbols).map_err(|e| match e {
            TermError::Signature { line, msg } => TermError::Signature {
                line: lines[line - 1],
                msg,
            },
            other => other,
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn name(&self, f: usize) -> &str {
        &self.symbols[f].0
    }

    pub fn arity(&self, f: usize) -> usize {
        self.symbols[f].1
    }

    pub fn code(&self, f: usize) -> &HfSet {
        &self.codes[f]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|(n, _)| n == name)
    }

    /// Without a constant there are no closed terms.
    pub fn has_constant(&self) -> bool {
        self.symbols.iter().any(|&(_, a)| a == 0)
    }

    pub fn max_arity(&self) -> usize {
        self.symbols.iter().map(|&(_, a)| a).max().unwrap_or(0)
    }

    pub fn single_char_names(&self) -> bool {
        self.symbols.iter().all(|(n, _)| n.chars().count() == 1)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, arity) in &self.symbols {
            writeln!(f, "{name} {arity}")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct TermNode {
    head: usize,
    args: Vec<Term>,
    height: usize,
    tokens: usize,
}

/// A closed term `F t₀ … t_{n−1}`. Cloning is cheap; subterms are shared.
///
/// The derived order compares heads, then arguments left to right, which is
/// the lexicographic order of the Polish token sequences.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(Arc<TermNode>);

impl Term {
    fn new_unchecked(head: usize, args: Vec<Term>) -> Term {
        let height = args.iter().map(|a| a.height() + 1).max().unwrap_or(0);
        let tokens = 1 + args.iter().map(Term::tokens).sum::<usize>();
        Term(Arc::new(TermNode {
            head,
            args,
            height,
            tokens,
        }))
    }

    pub fn head(&self) -> usize {
        self.0.head
    }

    pub fn args(&self) -> &[Term] {
        &self.0.args
    }

    /// `hgt`: 0 for constants, else the largest `hgt(t_k) + 1`.
    pub fn height(&self) -> usize {
        self.0.height
    }

    /// Length of the Polish string in tokens.
    pub fn tokens(&self) -> usize {
        self.0.tokens
    }

    /// Preorder symbol sequence.
    pub fn symbols(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.tokens());
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t.head());
            stack.extend(t.args().iter().rev());
        }
        out
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.head())?;
        if !self.args().is_empty() {
            f.debug_list().entries(self.args()).finish()?;
        }
        Ok(())
    }
}

/// Applies `f` to `args`.
pub fn build(sig: &Signature, f: usize, args: Vec<Term>) -> Result<Term, TermError> {
    if args.len() != sig.arity(f) {
        return Err(TermError::ArityMismatch {
            symbol: sig.name(f).to_string(),
            expected: sig.arity(f),
            got: args.len(),
        });
    }
    if args.iter().any(|a| a.height() + 1 >= MAX_TERM_DEPTH) {
        return Err(TermError::TooDeep);
    }
    Ok(Term::new_unchecked(f, args))
}

/// Tokens separated by whitespace, e.g. `+ 0 s 0`.
pub fn print_term(sig: &Signature, t: &Term) -> String {
    t.symbols()
        .iter()
        .map(|&f| sig.name(f))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Names concatenated with no separator, e.g. `+0s0`.
pub fn print_term_compact(sig: &Signature, t: &Term) -> String {
    t.symbols().iter().map(|&f| sig.name(f)).collect()
}

/// Parses a whitespace-separated Polish string. The whole input must form
/// exactly one term.
pub fn parse_term(sig: &Signature, s: &str) -> Result<Term, TermError> {
    let mut offset = 0;
    let tokens = s.split_whitespace().map(|tok| {
        let at = offset + s[offset..].find(tok).expect("token comes from s");
        offset = at + tok.len();
        (at, tok)
    });
    parse_tokens(sig, tokens)
}

/// Parses with every non-whitespace character a separate token, as in
/// `ss0` or `+0+00`.
pub fn parse_term_compact(sig: &Signature, s: &str) -> Result<Term, TermError> {
    if !sig.single_char_names() {
        return Err(TermError::NotSingleChar);
    }
    let tokens = s
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, &s[i..i + c.len_utf8()]));
    parse_tokens(sig, tokens)
}

fn parse_tokens<'a>(
    sig: &Signature,
    tokens: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Term, TermError> {
    // Each frame is a symbol still collecting its arguments.
    let mut stack: Vec<(usize, Vec<Term>)> = Vec::new();
    let mut done: Option<Term> = None;
    for (offset, tok) in tokens {
        if done.is_some() {
            return Err(TermError::TrailingTokens { offset });
        }
        let f = sig.index_of(tok).ok_or_else(|| TermError::UnknownToken {
            offset,
            token: tok.to_string(),
        })?;
        if sig.arity(f) > 0 {
            if stack.len() >= MAX_TERM_DEPTH - 1 {
                return Err(TermError::TooDeep);
            }
            stack.push((f, Vec::with_capacity(sig.arity(f))));
            continue;
        }
        let mut t = Term::new_unchecked(f, Vec::new());
        // Close every frame this term completes.
        loop {
            match stack.last_mut() {
                None => {
                    done = Some(t);
                    break;
                }
                Some((g, args)) => {
                    args.push(t);
                    if args.len() < sig.arity(*g) {
                        break;
                    }
                    let (g, args) = stack.pop().expect("frame exists");
                    t = Term::new_unchecked(g, args);
                }
            }
        }
    }
    done.ok_or_else(|| TermError::ArityUnderflow {
        missing: if stack.is_empty() {
            1
        } else {
            stack.iter().map(|(g, a)| sig.arity(*g) - a.len()).sum()
        },
    })
}

/// `pred(F t₀ … t_{n−1}) = ⋃ {pred(t_k) ∪ {t_k} : k < n}`
pub fn pred(t: &Term) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<&Term> = t.args().iter().collect();
    while let Some(u) = stack.pop() {
        if out.insert(u.clone()) {
            stack.extend(u.args());
        }
    }
    out
}

/// `pred(t_k) ∪ {t_k}` if `k < n`, else `∅`.
pub fn pred_k(t: &Term, k: usize) -> BTreeSet<Term> {
    match t.args().get(k) {
        Some(tk) => {
            let mut out = pred(tk);
            out.insert(tk.clone());
            out
        }
        None => BTreeSet::new(),
    }
}

/// `x < y ⟺ x ∈ pred(y)`
pub fn lt(x: &Term, y: &Term) -> bool {
    y.args().iter().any(|a| a == x || (x.height() < a.height() && lt(x, a)))
}

/// `x <_k y ⟺ x ∈ pred_k(y)`
pub fn lt_k(x: &Term, y: &Term, k: usize) -> bool {
    y.args().get(k).is_some_and(|a| a == x || lt(x, a))
}

/// Number of terms of height at most `h`, saturating.
pub fn fragment_size(sig: &Signature, h: usize) -> u128 {
    let constants = (0..sig.len()).filter(|&f| sig.arity(f) == 0).count() as u128;
    let mut count = constants;
    for _ in 0..h {
        count = (0..sig.len())
            .map(|f| {
                u32::try_from(sig.arity(f))
                    .ok()
                    .and_then(|a| count.checked_pow(a))
                    .unwrap_or(u128::MAX)
            })
            .fold(0u128, u128::saturating_add);
    }
    count
}

/// All terms of height `≤ max_height`, ordered by height and then
/// lexicographically.
pub fn enumerate_terms(sig: &Signature, max_height: usize) -> Result<Vec<Term>, TermError> {
    for h in 0..=max_height {
        let count = fragment_size(sig, h);
        if count > MAX_FRAGMENT as u128 {
            return Err(TermError::SizeExceeded { height: h, count });
        }
    }
    if max_height >= MAX_TERM_DEPTH {
        return Err(TermError::TooDeep);
    }
    // all[h]: terms of height ≤ h, in lexicographic order
    let mut current: Vec<Term> = (0..sig.len())
        .filter(|&f| sig.arity(f) == 0)
        .map(|f| Term::new_unchecked(f, Vec::new()))
        .collect();
    for _ in 0..max_height {
        let mut next = Vec::new();
        for f in 0..sig.len() {
            for args in product(&current, sig.arity(f)) {
                next.push(Term::new_unchecked(f, args));
            }
        }
        current = next;
    }
    current.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    Ok(current)
}

/// All `n`-tuples over `items`, in lexicographic order of indices.
pub(crate) fn product<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}
