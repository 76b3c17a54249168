//! Graded tuples and the generalized von Neumann construction for an
//! arbitrary finite signature.
//!
//! A tuple `(x₀, …, x_{n−1}, F)` has grades `x₀ … x_{n−1}` and type `F`;
//! its graded elements `gel(x)` are the union of the grades, and `y ∈′ x`
//! means `y ∈ gel(x)`. Each symbol acts on sets by
//! `F^V(x₀, …) = (gel(x₀) ∪ {x₀}, …, F)`.

mod classes;

use std::collections::HashSet;

use thiserror::Error;

use crate::hf::{big_union, tuple_decode, tuple_encode, union2, HfSet};
use crate::term::{Interpretation, Signature, Term};

pub use classes::{
    check_in_prime_global, check_trees_claim, first_failure, in_ds, in_ons, in_vnns, is_directed,
    is_limit_gen, transitive_closure_size, Condition, InPrimeReport, TreesReport, ONS_CLOSURE_BOUND,
};

/// Largest `n` accepted by [`h_map`].
pub const H_MAP_BOUND: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VnnError {
    #[error("`{symbol}` takes {expected} argument(s), got {got}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        got: usize,
    },
    #[error("{0} is not a tuple")]
    NotATuple(HfSet),
    #[error("{what}: size {size} exceeds bound {bound}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// The grades and type of an `(n+1)`-tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedView {
    pub grades: Vec<HfSet>,
    pub type_code: HfSet,
}

impl GradedView {
    pub fn encode(&self) -> HfSet {
        let mut entries = self.grades.clone();
        entries.push(self.type_code.clone());
        tuple_encode(&entries).expect("at least the type entry")
    }
}

/// Decodes `x` as `(x₀, …, x_{n−1}, type)`.
pub fn graded_view(x: &HfSet) -> Option<GradedView> {
    let mut entries = tuple_decode(x)?;
    let type_code = entries.pop()?;
    Some(GradedView {
        grades: entries,
        type_code,
    })
}

/// `⋃ {x_k : k < n}` for a tuple, `∅` otherwise.
pub fn gel(x: &HfSet) -> HfSet {
    match graded_view(x) {
        Some(v) => v.grades.iter().fold(HfSet::empty(), |acc, g| union2(&acc, g)),
        None => HfSet::empty(),
    }
}

/// `y ∈_k x ⟺ k < n ∧ y ∈ x_k`
pub fn in_k(y: &HfSet, x: &HfSet, k: usize) -> bool {
    pred_k_tuple(x, k).contains(y)
}

/// `y ∈′ x ⟺ y ∈ gel(x)`
pub fn in_prime(y: &HfSet, x: &HfSet) -> bool {
    gel(x).contains(y)
}

/// `x_k` if `k < n`, else `∅`.
pub fn pred_k_tuple(x: &HfSet, k: usize) -> HfSet {
    graded_view(x)
        .and_then(|v| v.grades.get(k).cloned())
        .unwrap_or_else(HfSet::empty)
}

/// `y ∈ pred_k(x) ⟹ gel(y) ⊆ pred_k(x)`
pub fn is_k_transitive(x: &HfSet, k: usize) -> bool {
    let p = pred_k_tuple(x, k);
    p.iter().all(|y| gel(y).is_subset(&p))
}

/// `F^V(x₀, …, x_{n−1}) = (gel(x₀) ∪ {x₀}, …, gel(x_{n−1}) ∪ {x_{n−1}}, F)`
pub fn fv_apply(sig: &Signature, f: usize, args: &[HfSet]) -> Result<HfSet, VnnError> {
    if args.len() != sig.arity(f) {
        return Err(VnnError::ArityMismatch {
            symbol: sig.name(f).to_string(),
            expected: sig.arity(f),
            got: args.len(),
        });
    }
    Ok(fv_unchecked(sig, f, args))
}

fn fv_unchecked(sig: &Signature, f: usize, args: &[HfSet]) -> HfSet {
    GradedView {
        grades: args.iter().map(|a| union2(&gel(a), &HfSet::singleton(a.clone()))).collect(),
        type_code: sig.code(f).clone(),
    }
    .encode()
}

/// The set universe as an algebra in `sig`, under `F^V`.
#[derive(Debug, Clone, Copy, Default)]
pub struct VAlgebra;

impl Interpretation for VAlgebra {
    type Value = HfSet;

    fn apply(&self, sig: &Signature, f: usize, args: &[HfSet]) -> HfSet {
        fv_unchecked(sig, f, args)
    }
}

/// The image of `t` under the homomorphism from terms into `V`.
pub fn term_to_v(sig: &Signature, t: &Term) -> HfSet {
    crate::term::eval(sig, &VAlgebra, t)
}

/// `H(0) = (1)`, `H(n) = ({H(0), …, H(n−1)}, s)`, with `1` coded as `ord(0)`
/// and `s` as `ord(1)` (the signature `1 0`, `s 1`).
pub fn h_map(n: usize) -> Result<HfSet, VnnError> {
    if n > H_MAP_BOUND {
        return Err(VnnError::SizeExceeded {
            what: "H(n)",
            size: n,
            bound: H_MAP_BOUND,
        });
    }
    Ok(h_sequence(n).pop().expect("n + 1 values"))
}

/// `[H(0), …, H(n)]`, no bound.
pub(crate) fn h_sequence(n: usize) -> Vec<HfSet> {
    let one = crate::ordinals::ord(0).as_set().clone();
    let s = crate::ordinals::ord(1).as_set().clone();
    let mut out = vec![GradedView { grades: vec![], type_code: one }.encode()];
    for _ in 0..n {
        let grade = HfSet::from_elems(out.iter().cloned());
        out.push(GradedView { grades: vec![grade], type_code: s.clone() }.encode());
    }
    out
}

/// `⋃⋃⋃x`
pub fn triple_union(x: &HfSet) -> HfSet {
    big_union(&big_union(&big_union(x)))
}

/// Distinct values in `pool` together with everything reachable through `∈′`.
pub fn gel_closure(pool: &[HfSet]) -> Vec<HfSet> {
    let mut seen: HashSet<HfSet> = HashSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<HfSet> = pool.to_vec();
    while let Some(x) = stack.pop() {
        if seen.insert(x.clone()) {
            stack.extend(gel(&x).iter().cloned());
            out.push(x);
        }
    }
    out
}
