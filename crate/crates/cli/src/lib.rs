//! Command implementations behind the `hfalg` binary.

pub mod report;
pub mod verify;

use std::fmt::Write as _;
use std::path::Path;

use hfalg::hf::{eval_expr, parse_hf, print_hf, ExprError, HfSet, ParseError};
use hfalg::iterative::{exp_valid_set, find_homs, good_primes, mk_zn, IterError};
use hfalg::ordinals::{is_ordinal, OrdError};
use hfalg::ordinals::sb::{parse_instance, sb_bijection, sb_d_lfp, SbError, SbInstance};
use hfalg::term::{parse_term, parse_term_compact, print_term, Signature, Term, TermError};
use hfalg::vnn::{first_failure, in_ds, term_to_v, VnnError};
use thiserror::Error;

pub use report::{Status, VerifyReport};
pub use verify::{verify, verify_all, Params, THEOREM_IDS};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Vnn(#[from] VnnError),
    #[error(transparent)]
    Sb(#[from] SbError),
    #[error(transparent)]
    Iter(#[from] IterError),
    #[error(transparent)]
    Ord(#[from] OrdError),
    #[error("unknown theorem `{0}`; expected one of: {ids}", ids = THEOREM_IDS.join(", "))]
    UnknownTheorem(String),
}

/// Files available by name even when absent from the working directory.
const BUILTIN_FILES: &[(&str, &str)] = &[
    ("sig-0st.txt", include_str!("../data/sig-0st.txt")),
    ("sig-0plus.txt", include_str!("../data/sig-0plus.txt")),
    ("sig-ab-s.txt", include_str!("../data/sig-ab-s.txt")),
    ("sig-1s.txt", include_str!("../data/sig-1s.txt")),
    ("sb-2n.txt", include_str!("../data/sb-2n.txt")),
];

/// Reads `path`, falling back to a bundled file of the same name.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    match std::fs::read_to_string(path) {
        Ok(s) => Ok(s),
        Err(e) => {
            let builtin = path.file_name().and_then(|n| n.to_str()).and_then(builtin_file);
            builtin.map(str::to_string).ok_or_else(|| CliError::Io {
                path: path.display().to_string(),
                source: e,
            })
        }
    }
}

pub fn builtin_file(name: &str) -> Option<&'static str> {
    BUILTIN_FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load_signature(path: &Path) -> Result<Signature, CliError> {
    Ok(Signature::parse(&read_input(path)?)?)
}

/// A bundled signature by file name.
pub fn builtin_signature(name: &str) -> Signature {
    Signature::parse(builtin_file(name).expect("bundled file")).expect("bundled signature parses")
}

/// Canonical form, rank and ordinal status of a builder expression.
pub fn cmd_hf(expr: &str) -> Result<String, CliError> {
    let x = eval_expr(expr)?;
    let ordinal = if is_ordinal(&x) { "yes" } else { "no" };
    Ok(format!("{}  rank={}  ordinal={ordinal}", print_hf(&x), x.rank()))
}

/// Parses a term with whitespace-separated tokens, or contiguous
/// single-character tokens when `compact` is set.
pub fn parse_term_text(sig: &Signature, s: &str, compact: bool) -> Result<Term, CliError> {
    Ok(if compact { parse_term_compact(sig, s)? } else { parse_term(sig, s)? })
}

/// `F(t₀, …)` notation.
pub fn tree_text(sig: &Signature, t: &Term) -> String {
    let mut out = String::new();
    let mut stack: Vec<Result<&Term, &'static str>> = vec![Ok(t)];
    while let Some(item) = stack.pop() {
        match item {
            Err(s) => out.push_str(s),
            Ok(u) => {
                out.push_str(sig.name(u.head()));
                if !u.args().is_empty() {
                    out.push('(');
                    stack.push(Err(")"));
                    for (i, a) in u.args().iter().enumerate().rev() {
                        stack.push(Ok(a));
                        if i > 0 {
                            stack.push(Err(", "));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn cmd_term(sig: &Signature, s: &str, compact: bool) -> Result<String, CliError> {
    let t = parse_term_text(sig, s, compact)?;
    let mut out = String::new();
    writeln!(out, "term    {}", print_term(sig, &t)).unwrap();
    writeln!(out, "tree    {}", tree_text(sig, &t)).unwrap();
    writeln!(out, "height  {}", t.height()).unwrap();
    writeln!(out, "tokens  {}", t.tokens()).unwrap();
    write!(out, "V       {}", print_hf(&term_to_v(sig, &t))).unwrap();
    Ok(out)
}

pub fn cmd_vnn_build(sig: &Signature, s: &str, compact: bool) -> Result<String, CliError> {
    let t = parse_term_text(sig, s, compact)?;
    Ok(print_hf(&term_to_v(sig, &t)))
}

/// Membership of a set in `D_S`, `ON_S` and `VNN_S`, with the first failing
/// condition.
pub fn cmd_vnn_classify(sig: &Signature, set: &str) -> Result<String, CliError> {
    let x: HfSet = match parse_hf(set) {
        Ok(x) => x,
        Err(_) => eval_expr(set)?,
    };
    let failure = first_failure(sig, &x)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "D_S     {}", yes_no(in_ds(sig, &x))).unwrap();
    writeln!(out, "ON_S    {}", yes_no(failure.is_none())).unwrap();
    write!(out, "VNN_S   {}", yes_no(hfalg::vnn::in_vnns(sig, &x)?)).unwrap();
    if let Some(c) = failure {
        write!(out, "\nfails   {c}").unwrap();
    }
    Ok(out)
}

pub fn cmd_sb(inst: &SbInstance) -> Result<String, CliError> {
    let d = sb_d_lfp(inst)?;
    let g = sb_bijection(inst)?;
    let mut out = String::new();
    let list = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(", ");
    writeln!(out, "D ∩ [0, {}] = {{{}}}", inst.window, list(&mut d.iter().map(i64::to_string))).unwrap();
    write!(out, "g: {}", list(&mut g.iter().map(|(x, y)| format!("{x}↦{y}")))).unwrap();
    Ok(out)
}

pub fn load_instance(path: &Path) -> Result<SbInstance, CliError> {
    Ok(parse_instance(&read_input(path)?)?)
}

pub fn cmd_expset(bound: u64) -> Result<String, CliError> {
    let set = exp_valid_set(bound)?;
    Ok(format!("{{{}}}", set.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")))
}

pub fn cmd_goodprimes() -> String {
    let gp = good_primes();
    let mut lines: Vec<String> = gp
        .stages
        .iter()
        .enumerate()
        .map(|(i, a)| format!("A{} = {}", i + 1, verify::fmt_set(a)))
        .collect();
    lines.push(format!("fixed point {}", verify::fmt_set(gp.fixed_point())));
    lines.extend(gp.rejections.iter().map(verify::fmt_rejection));
    lines.join("\n")
}

/// Number of homomorphisms `Z_n → Z_m`.
pub fn cmd_homcount(n: usize, m: usize) -> Result<usize, CliError> {
    Ok(find_homs(&mk_zn(n)?, &mk_zn(m)?)?.len())
}
