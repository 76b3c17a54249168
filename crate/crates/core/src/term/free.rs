use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use super::{enumerate_terms, parse_term, pred, pred_k, print_term, Signature, Term, TermError};

/// An algebra in a signature: a value for every symbol applied to values.
pub trait Interpretation {
    type Value: Clone + Eq + Hash + fmt::Debug;

    fn apply(&self, sig: &Signature, f: usize, args: &[Self::Value]) -> Self::Value;
}

/// Evaluates `t` under `alg` (the unique homomorphism out of the terms).
pub fn eval<I: Interpretation>(sig: &Signature, alg: &I, t: &Term) -> I::Value {
    let args: Vec<I::Value> = t.args().iter().map(|a| eval(sig, alg, a)).collect();
    alg.apply(sig, t.head(), &args)
}

/// Strings of symbols under concatenation: `F(t₀, …) = F t₀ ⋯`.
#[derive(Debug, Clone, Copy, Default)]
pub struct StringAlgebra;

impl Interpretation for StringAlgebra {
    type Value = Vec<usize>;

    fn apply(&self, _sig: &Signature, f: usize, args: &[Vec<usize>]) -> Vec<usize> {
        let mut out = vec![f];
        for a in args {
            out.extend_from_slice(a);
        }
        out
    }
}

/// The string algebra with symbol `from` interpreted as symbol `to`. When the
/// two symbols have the same arity the result is not free.
#[derive(Debug, Clone, Copy)]
pub struct MergedSymbols {
    pub from: usize,
    pub to: usize,
}

impl Interpretation for MergedSymbols {
    type Value = Vec<usize>;

    fn apply(&self, sig: &Signature, f: usize, args: &[Vec<usize>]) -> Vec<usize> {
        let f = if f == self.from { self.to } else { f };
        StringAlgebra.apply(sig, f, args)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    Injective,
    DisjointRanges,
    Induction,
    RoundTrip,
    PrefixFree,
    /// `x < y ⟺ x <_k y` for some `k`
    LemmaI,
    /// `x < y ∧ y <_k z ⟹ x <_k z`
    LemmaII,
    /// `x < y ⟹ hgt(x) < hgt(y)`
    LemmaIII,
    /// `<` directs `pred_k(x)`
    LemmaIV,
    /// `t_k` is maximal in `pred_k(F t₀ … t_{n−1})`
    LemmaV,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Injective => "injective operations",
            Clause::DisjointRanges => "disjoint ranges",
            Clause::Induction => "induction",
            Clause::RoundTrip => "parse/print round trip",
            Clause::PrefixFree => "prefix-freeness",
            Clause::LemmaI => "lemma (i)",
            Clause::LemmaII => "lemma (ii)",
            Clause::LemmaIII => "lemma (iii)",
            Clause::LemmaIV => "lemma (iv)",
            Clause::LemmaV => "lemma (v)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentReport {
    pub terms: usize,
    /// Number of individual facts checked.
    pub checks: u64,
    pub violation: Option<Violation>,
}

impl FragmentReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks, over all terms of height `≤ max_height` interpreted in `alg`:
/// injective operations with disjoint ranges, generation from the
/// constants, unique readability of the Polish strings, and the five
/// clauses of [`check_lemma`]. Stops at the first violation.
pub fn check_free_fragment<I: Interpretation>(
    sig: &Signature,
    max_height: usize,
    alg: &I,
) -> Result<FragmentReport, TermError> {
    let terms = enumerate_terms(sig, max_height)?;
    let mut checks = 0u64;
    let done = |checks, v| Ok(FragmentReport { terms: terms.len(), checks, violation: Some(v) });

    // Injectivity and disjoint ranges: distinct terms must have distinct
    // values. A collision under one head breaks injectivity, under two heads
    // the ranges overlap.
    let values: Vec<I::Value> = terms.iter().map(|t| eval(sig, alg, t)).collect();
    let mut seen: HashMap<&I::Value, usize> = HashMap::new();
    for (i, v) in values.iter().enumerate() {
        checks += 1;
        if let Some(&j) = seen.get(v) {
            let (a, b) = (&terms[j], &terms[i]);
            let clause = if a.head() == b.head() {
                Clause::Injective
            } else {
                Clause::DisjointRanges
            };
            let witness = format!(
                "`{}` and `{}` both give {v:?}",
                print_term(sig, a),
                print_term(sig, b)
            );
            return done(checks, Violation { clause, witness });
        }
        seen.insert(v, i);
    }

    // Induction: close the constants' values under the operations, using
    // only argument tuples from the fragment.
    let mut reached: HashSet<I::Value> = HashSet::new();
    loop {
        let before = reached.len();
        for t in &terms {
            let args: Vec<I::Value> = t.args().iter().map(|a| eval(sig, alg, a)).collect();
            if args.iter().all(|a| reached.contains(a)) {
                reached.insert(alg.apply(sig, t.head(), &args));
            }
        }
        if reached.len() == before {
            break;
        }
    }
    for (t, v) in terms.iter().zip(&values) {
        checks += 1;
        if !reached.contains(v) {
            let witness = format!("`{}` is not generated by the constants", print_term(sig, t));
            return done(checks, Violation { clause: Clause::Induction, witness });
        }
    }

    // Unique readability.
    for t in &terms {
        let text = print_term(sig, t);
        checks += 1;
        if parse_term(sig, &text).as_ref() != Ok(t) {
            let witness = format!("`{text}` does not parse back to itself");
            return done(checks, Violation { clause: Clause::RoundTrip, witness });
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        for cut in 1..toks.len() {
            checks += 1;
            let prefix = toks[..cut].join(" ");
            if parse_term(sig, &prefix).is_ok() {
                let witness = format!("proper prefix `{prefix}` of `{text}` parses");
                return done(checks, Violation { clause: Clause::PrefixFree, witness });
            }
        }
    }

    let lemma = check_lemma(sig, &terms);
    checks += lemma.checks;
    Ok(FragmentReport { terms: terms.len(), checks, violation: lemma.violation })
}

/// The five clauses relating `<`, `<_k` and `hgt` over `terms`, checked on
/// every pair drawn from `terms`.
pub fn check_lemma(sig: &Signature, terms: &[Term]) -> FragmentReport {
    let show = |t: &Term| format!("`{}`", print_term(sig, t));
    let mut checks = 0u64;
    let fail = |checks, clause, witness| FragmentReport {
        terms: terms.len(),
        checks,
        violation: Some(Violation { clause, witness }),
    };
    let arity_bound = sig.max_arity() + 1;
    for u in terms {
        let p = pred(u);
        let pk: Vec<BTreeSet<Term>> = (0..arity_bound).map(|k| pred_k(u, k)).collect();

        // (i) and (iii), over every candidate x in the fragment
        for x in terms {
            checks += 1;
            let below = p.contains(x);
            if below != pk.iter().any(|s| s.contains(x)) {
                return fail(checks, Clause::LemmaI, format!("{} against {}", show(x), show(u)));
            }
            if below && x.height() >= u.height() {
                return fail(checks, Clause::LemmaIII, format!("{} < {} without a height drop", show(x), show(u)));
            }
        }
        // Sentinel beyond every arity: pred_k is empty.
        checks += 1;
        if !pred_k(u, arity_bound).is_empty() {
            return fail(checks, Clause::LemmaI, format!("pred_{arity_bound} of {} is nonempty", show(u)));
        }

        for (k, set) in pk.iter().enumerate() {
            // (ii): y <_k u ⟹ pred(y) ⊆ pred_k(u)
            for y in set {
                checks += 1;
                if let Some(x) = pred(y).into_iter().find(|x| !set.contains(x)) {
                    return fail(
                        checks,
                        Clause::LemmaII,
                        format!("{} < {} <_{k} {} but not {} <_{k} {}", show(&x), show(y), show(u), show(&x), show(u)),
                    );
                }
            }
            // (iv): every pair has an upper bound (≤) in the set
            for a in set {
                for b in set {
                    checks += 1;
                    let bounded = set.iter().any(|c| (a == c || p_has(c, a)) && (b == c || p_has(c, b)));
                    if !bounded {
                        return fail(
                            checks,
                            Clause::LemmaIV,
                            format!("{} and {} have no upper bound in pred_{k} {}", show(a), show(b), show(u)),
                        );
                    }
                }
            }
            // (v): t_k is maximal
            if let Some(tk) = u.args().get(k) {
                checks += 1;
                if !set.contains(tk) {
                    return fail(checks, Clause::LemmaV, format!("{} ∉ pred_{k} {}", show(tk), show(u)));
                }
                if let Some(w) = set.iter().find(|w| p_has(w, tk)) {
                    return fail(checks, Clause::LemmaV, format!("{} < {} in pred_{k} {}", show(tk), show(w), show(u)));
                }
            }
        }
    }
    FragmentReport { terms: terms.len(), checks, violation: None }
}

/// `x ∈ pred(c)`
fn p_has(c: &Term, x: &Term) -> bool {
    super::lt(x, c)
}
