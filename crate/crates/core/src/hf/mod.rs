//! Hereditarily finite sets.
//!
//! An [`HfSet`] is stored in canonical form: its elements are kept sorted
//! under [`canonical_cmp`] with no duplicates, so two values are equal exactly
//! when they have the same elements. Values are hash-consed through a global
//! table, which makes equality a pointer comparison. Sharing is never visible
//! through the API.

mod expr;
mod intern;
mod ops;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

pub use expr::{eval_expr, ExprError};
pub use ops::{
    big_union, kpair, kpair_decode, mem, powerset, separation, succ_vn, tuple_decode,
    tuple_encode, union2, von_neumann, wiener_pair, zermelo_succ, POWERSET_BOUND,
};
pub use text::{parse_hf, print_hf, ParseError, ParseErrorKind, MAX_NESTING};

/// Errors raised by set-building operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("{what}: size {size} exceeds bound {bound}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("tuples must have at least one entry")]
    EmptyTuple,
}

pub(crate) struct Node {
    elems: Box<[HfSet]>,
    rank: u32,
}

/// A hereditarily finite set in canonical form.
#[derive(Clone)]
pub struct HfSet(Arc<Node>);

impl HfSet {
    /// The empty set.
    pub fn empty() -> HfSet {
        intern::intern(Vec::new())
    }

    /// Builds the set whose elements are the distinct members of `xs`.
    pub fn from_elems<I: IntoIterator<Item = HfSet>>(xs: I) -> HfSet {
        let mut v: Vec<HfSet> = xs.into_iter().collect();
        v.sort_by(canonical_cmp);
        v.dedup();
        intern::intern(v)
    }

    /// `{x}`
    pub fn singleton(x: HfSet) -> HfSet {
        intern::intern(vec![x])
    }

    /// `{x, y}`
    pub fn pair(x: HfSet, y: HfSet) -> HfSet {
        match canonical_cmp(&x, &y) {
            Ordering::Less => intern::intern(vec![x, y]),
            Ordering::Greater => intern::intern(vec![y, x]),
            Ordering::Equal => intern::intern(vec![x]),
        }
    }

    /// Caller guarantees `elems` is strictly increasing under [`canonical_cmp`].
    pub(crate) fn from_sorted(elems: Vec<HfSet>) -> HfSet {
        debug_assert!(elems
            .windows(2)
            .all(|w| canonical_cmp(&w[0], &w[1]) == Ordering::Less));
        intern::intern(elems)
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[HfSet] {
        &self.0.elems
    }

    pub fn len(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    /// Least `n` with `self ∈ R(n+1)`: 0 for ∅, otherwise one more than the
    /// largest rank of an element.
    pub fn rank(&self) -> usize {
        self.0.rank as usize
    }

    /// Membership test `x ∈ self`.
    pub fn contains(&self, x: &HfSet) -> bool {
        if x.rank() >= self.rank() {
            return false;
        }
        self.0
            .elems
            .binary_search_by(|e| canonical_cmp(e, x))
            .is_ok()
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &HfSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // Both sides are sorted, so a merge walk suffices.
        let mut rest = other.elements().iter();
        'outer: for x in self.elements() {
            for y in rest.by_ref() {
                match canonical_cmp(y, x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HfSet> {
        self.0.elems.iter()
    }

    /// `Some(x)` when `self = {x}`.
    pub fn as_singleton(&self) -> Option<&HfSet> {
        match self.elements() {
            [x] => Some(x),
            _ => None,
        }
    }

    fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }
}

/// The canonical strict total order: rank first, then lexicographic on the
/// sorted element sequences.
pub fn canonical_cmp(x: &HfSet, y: &HfSet) -> Ordering {
    if Arc::ptr_eq(&x.0, &y.0) {
        return Ordering::Equal;
    }
    x.rank().cmp(&y.rank()).then_with(|| {
        for (a, b) in x.elements().iter().zip(y.elements()) {
            match canonical_cmp(a, b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        x.len().cmp(&y.len())
    })
}

/// `mk_set`: the canonical set of the distinct members of `xs`.
pub fn mk_set<I: IntoIterator<Item = HfSet>>(xs: I) -> HfSet {
    HfSet::from_elems(xs)
}

/// Rank of `x`.
pub fn rank(x: &HfSet) -> usize {
    x.rank()
}

impl PartialEq for HfSet {
    fn eq(&self, other: &Self) -> bool {
        // Interning makes extensional equality coincide with identity.
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for HfSet {}

impl Hash for HfSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.addr().hash(state);
    }
}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HfSet {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(self, other)
    }
}

impl Default for HfSet {
    fn default() -> Self {
        HfSet::empty()
    }
}

impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_hf(self))
    }
}

impl fmt::Debug for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_hf(self))
    }
}

impl std::str::FromStr for HfSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hf(s)
    }
}

impl<'a> IntoIterator for &'a HfSet {
    type Item = &'a HfSet;
    type IntoIter = std::slice::Iter<'a, HfSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// All sets of rank `< n`, i.e. the finite level `R(n)`, in canonical order.
///
/// Panics for `n > 5`: `|R(6)| = 2^65536`.
pub fn level(n: usize) -> Vec<HfSet> {
    assert!(n <= 5, "R({n}) is too large to enumerate");
    let mut cur: Vec<HfSet> = Vec::new();
    for _ in 0..n {
        let base = cur;
        let k = base.len();
        let mut next = Vec::with_capacity(1usize << k);
        for mask in 0u64..(1u64 << k) {
            let elems = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| base[i].clone())
                .collect::<Vec<_>>();
            // `base` is sorted, so any sub-selection is sorted as well.
            next.push(HfSet::from_sorted(elems));
        }
        next.sort();
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> HfSet {
        HfSet::empty()
    }

    #[test]
    fn mk_set_basics() {
        assert!(mk_set([]).is_empty());
        assert_eq!(mk_set([e(), e()]), HfSet::singleton(e()));
        let one = HfSet::singleton(e());
        assert_eq!(mk_set([one.clone(), e()]), mk_set([e(), one]));
    }

    #[test]
    fn membership() {
        let one = HfSet::singleton(e());
        let two = mk_set([e(), one.clone()]);
        assert!(mem(&e(), &one));
        assert!(!mem(&e(), &e()));
        assert!(mem(&one, &two));
        assert!(!mem(&two, &two));
    }

    #[test]
    fn levels_have_expected_sizes() {
        let sizes: Vec<usize> = (0..=4).map(|n| level(n).len()).collect();
        assert_eq!(sizes, vec![0, 1, 2, 4, 16]);
        for x in level(4) {
            assert!(x.rank() < 4);
        }
    }

    #[test]
    fn canonical_cmp_on_small_sets() {
        assert_eq!(canonical_cmp(&e(), &HfSet::singleton(e())), Ordering::Less);
        let x = von_neumann(3);
        assert_eq!(canonical_cmp(&x, &x), Ordering::Equal);
    }

    #[test]
    fn canonical_cmp_is_a_strict_total_order_on_r4() {
        let all = level(4);
        for a in &all {
            for b in &all {
                let ab = canonical_cmp(a, b);
                assert_eq!(ab, canonical_cmp(b, a).reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &all {
                    if ab == Ordering::Less && canonical_cmp(b, c) == Ordering::Less {
                        assert_eq!(canonical_cmp(a, c), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn subset_merge_walk() {
        let three = von_neumann(3);
        let two = von_neumann(2);
        assert!(two.is_subset(&three));
        assert!(!three.is_subset(&two));
        assert!(e().is_subset(&e()));
        let odd = mk_set([HfSet::singleton(e())]);
        assert!(odd.is_subset(&three));
        let stray = mk_set([HfSet::singleton(HfSet::singleton(e()))]);
        assert!(!stray.is_subset(&three));
    }

    #[test]
    fn rank_strictly_decreases_along_membership() {
        for x in level(5).iter().step_by(97) {
            for y in x {
                assert!(y.rank() < x.rank());
            }
        }
    }
}
