//! Zermelo numerals `∅, {∅}, {{∅}}, …` obtained without an axiom of
//! infinity: the classes Zm, Zm′ and C, and the Whitehead–Russell notion of
//! finiteness.

use crate::hf::{big_union, level, HfSet};

use super::OrdError;

/// Largest `|x|` accepted by [`is_zm_prime`] (subset enumeration).
pub const ZM_PRIME_BOUND: usize = 20;
/// Largest `|x|` for which [`is_sis_wo_member`] searches orderings.
pub const SIS_WO_BOUND: usize = 8;
/// Largest `|x|` accepted by [`is_wr_finite`].
pub const WR_FINITE_BOUND: usize = 3;
/// Largest rank bound accepted by [`zm_prime_union`].
pub const ZM_UNION_MAX_RANK: usize = 5;

/// Every element is `∅` or `{y}` for some element `y` of `x`.
pub fn is_zm(x: &HfSet) -> bool {
    x.iter()
        .all(|e| e.is_empty() || e.as_singleton().is_some_and(|y| x.contains(y)))
}

/// Member of Zm whose every nonempty subset `s` has an element disjoint
/// from `s`.
pub fn is_zm_prime(x: &HfSet) -> Result<bool, OrdError> {
    if x.len() > ZM_PRIME_BOUND {
        return Err(OrdError::SizeExceeded {
            what: "Zm' candidate",
            size: x.len(),
            bound: ZM_PRIME_BOUND,
        });
    }
    if !is_zm(x) {
        return Ok(false);
    }
    let xs = x.elements();
    // inside[i]: which elements of x are members of xs[i]
    let inside: Vec<u32> = xs
        .iter()
        .map(|e| {
            xs.iter()
                .enumerate()
                .filter(|(_, y)| e.contains(y))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let all_have_disjoint = (1u32..(1u32 << xs.len())).all(|s| {
        (0..xs.len()).any(|i| s & (1 << i) != 0 && inside[i] & s == 0)
    });
    Ok(all_have_disjoint)
}

/// `{∅, {∅}, {{∅}}, …}` up to and including rank `max_rank`.
pub fn zermelo_numerals(max_rank: usize) -> HfSet {
    let mut out = Vec::with_capacity(max_rank + 1);
    let mut cur = HfSet::empty();
    for _ in 0..=max_rank {
        out.push(cur.clone());
        cur = HfSet::singleton(cur);
    }
    HfSet::from_elems(out)
}

/// The union of all Zm′ members of rank `≤ rank_bound`.
///
/// Candidates are all sets of rank `≤ rank_bound` whose elements are each
/// `∅` or a singleton; every Zm member has this shape, so the search is
/// exhaustive for Zm′.
pub fn zm_prime_union(rank_bound: usize) -> Result<HfSet, OrdError> {
    if rank_bound > ZM_UNION_MAX_RANK {
        return Err(OrdError::SizeExceeded {
            what: "Zm' union rank bound",
            size: rank_bound,
            bound: ZM_UNION_MAX_RANK,
        });
    }
    let mut candidates = Vec::new();
    if rank_bound >= 1 {
        candidates.push(HfSet::empty());
    }
    if rank_bound >= 2 {
        candidates.extend(level(rank_bound - 1).into_iter().map(HfSet::singleton));
    }
    let mut members = Vec::new();
    for mask in 0u64..(1u64 << candidates.len()) {
        let x = HfSet::from_elems(
            (0..candidates.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| candidates[i].clone()),
        );
        if is_zm_prime(&x)? {
            members.push(x);
        }
    }
    Ok(big_union(&HfSet::from_elems(members)))
}

/// An ordering of `x` (as indices into `x.elements()`) placing each `y`
/// before `{y}` whenever both are elements, found by depth-first search with
/// the precedence constraints used for pruning.
pub fn sis_wo_order(x: &HfSet) -> Result<Option<Vec<usize>>, OrdError> {
    if x.len() > SIS_WO_BOUND {
        return Err(OrdError::SizeExceeded {
            what: "ordering search",
            size: x.len(),
            bound: SIS_WO_BOUND,
        });
    }
    let xs = x.elements();
    // must_follow[i] = Some(j) when xs[i] = {xs[j]}
    let must_follow: Vec<Option<usize>> = xs
        .iter()
        .map(|e| e.as_singleton().and_then(|y| xs.iter().position(|z| z == y)))
        .collect();

    fn extend(
        order: &mut Vec<usize>,
        placed: &mut [bool],
        must_follow: &[Option<usize>],
    ) -> bool {
        if order.len() == placed.len() {
            return true;
        }
        for i in 0..placed.len() {
            let ready = must_follow[i].is_none_or(|j| placed[j]);
            if placed[i] || !ready {
                continue;
            }
            placed[i] = true;
            order.push(i);
            if extend(order, placed, must_follow) {
                return true;
            }
            order.pop();
            placed[i] = false;
        }
        false
    }

    let mut order = Vec::with_capacity(xs.len());
    let mut placed = vec![false; xs.len()];
    Ok(extend(&mut order, &mut placed, &must_follow).then_some(order))
}

/// Membership in the class C: every element is `∅` or a singleton of an
/// element, and some well-ordering puts `y` before `{y}`.
///
/// Finite total orders are well-orders, so the second clause asks for a
/// total order satisfying the precedence constraints. The ordering search is
/// only reached (and only size-limited) once the first clause holds.
pub fn is_sis_wo_member(x: &HfSet) -> Result<bool, OrdError> {
    if !is_zm(x) {
        return Ok(false);
    }
    Ok(sis_wo_order(x)?.is_some())
}

/// Whitehead–Russell finiteness, evaluated literally: every `S ⊆ P(x)` that
/// contains `∅` and is closed under `y ↦ {c} ∪ y` (for each `c ∈ x`) must
/// contain `x`.
pub fn is_wr_finite(x: &HfSet) -> Result<bool, OrdError> {
    if x.len() > WR_FINITE_BOUND {
        return Err(OrdError::SizeExceeded {
            what: "Whitehead-Russell candidate",
            size: x.len(),
            bound: WR_FINITE_BOUND,
        });
    }
    let n = x.len();
    // Subsets of x are bitmasks over its elements; a family S ⊆ P(x) is a
    // bitmask over those.
    let subsets = 1usize << n;
    let full = subsets - 1;
    let finite = (0u64..(1u64 << subsets)).all(|family| {
        let has = |y: usize| family & (1 << y) != 0;
        let closed = (0..subsets)
            .filter(|&y| has(y))
            .all(|y| (0..n).all(|c| has(y | (1 << c))));
        !(has(0) && closed) || has(full)
    });
    assert!(finite, "hereditarily finite set {x} failed the finiteness test");
    Ok(finite)
}
