use std::collections::BTreeMap;

use super::{HfError, HfSet};

/// Default bound on `|x|` for [`powerset`].
pub const POWERSET_BOUND: usize = 16;

/// `x ∈ y`
pub fn mem(x: &HfSet, y: &HfSet) -> bool {
    y.contains(x)
}

/// `x ∪ y`
pub fn union2(x: &HfSet, y: &HfSet) -> HfSet {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let (xs, ys) = (x.elements(), y.elements());
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => {
                out.push(xs[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(ys[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(xs[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&xs[i..]);
    out.extend_from_slice(&ys[j..]);
    HfSet::from_sorted(out)
}

/// `⋃x`, the set of elements of elements of `x`.
pub fn big_union(x: &HfSet) -> HfSet {
    HfSet::from_elems(x.iter().flat_map(|y| y.iter().cloned()))
}

/// `P(x)`. Fails when `|x|` exceeds `bound`.
pub fn powerset(x: &HfSet, bound: usize) -> Result<HfSet, HfError> {
    if x.len() > bound || x.len() >= usize::BITS as usize {
        return Err(HfError::SizeExceeded {
            what: "powerset argument",
            size: x.len(),
            bound,
        });
    }
    let xs = x.elements();
    let subsets = (0u64..(1u64 << xs.len())).map(|mask| {
        HfSet::from_sorted(
            xs.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect(),
        )
    });
    Ok(HfSet::from_elems(subsets))
}

/// `{y ∈ x : pred(y)}`
pub fn separation(x: &HfSet, mut pred: impl FnMut(&HfSet) -> bool) -> HfSet {
    HfSet::from_sorted(x.iter().filter(|y| pred(y)).cloned().collect())
}

/// Kuratowski pair `(x, y) = {{x}, {x, y}}`.
pub fn kpair(x: &HfSet, y: &HfSet) -> HfSet {
    HfSet::pair(
        HfSet::singleton(x.clone()),
        HfSet::pair(x.clone(), y.clone()),
    )
}

/// Inverse of [`kpair`]; `None` on anything not of pair shape.
pub fn kpair_decode(p: &HfSet) -> Option<(HfSet, HfSet)> {
    match p.elements() {
        // (x, x) = {{x}}
        [only] => {
            let x = only.as_singleton()?;
            Some((x.clone(), x.clone()))
        }
        [a, b] => {
            let (single, double) = match (a.len(), b.len()) {
                (1, 2) => (a, b),
                (2, 1) => (b, a),
                _ => return None,
            };
            let x = single.as_singleton()?;
            let (u, v) = (&double.elements()[0], &double.elements()[1]);
            if u == x {
                Some((x.clone(), v.clone()))
            } else if v == x {
                Some((x.clone(), u.clone()))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Wiener's pair `{{{x}, ∅}, {{y}}}`.
pub fn wiener_pair(x: &HfSet, y: &HfSet) -> HfSet {
    let sx = HfSet::singleton(x.clone());
    let sy = HfSet::singleton(y.clone());
    HfSet::pair(
        HfSet::pair(sx, HfSet::empty()),
        HfSet::singleton(sy),
    )
}

/// `x ∪ {x}`
pub fn succ_vn(x: &HfSet) -> HfSet {
    union2(x, &HfSet::singleton(x.clone()))
}

/// `{x}`
pub fn zermelo_succ(x: &HfSet) -> HfSet {
    HfSet::singleton(x.clone())
}

/// The von Neumann numeral for `n`: `∅, {∅}, {∅,{∅}}, …`.
pub fn von_neumann(n: usize) -> HfSet {
    // ord(k) has rank k, so appending keeps the element list sorted.
    let mut elems: Vec<HfSet> = Vec::with_capacity(n);
    let mut cur = HfSet::empty();
    for _ in 0..n {
        elems.push(cur);
        cur = HfSet::from_sorted(elems.clone());
    }
    cur
}

/// `n` when `x` is the von Neumann numeral of `n`.
pub(crate) fn numeral_value(x: &HfSet) -> Option<usize> {
    // ord(n) has exactly n elements, namely ord(0..n), ordered by rank.
    for (k, e) in x.iter().enumerate() {
        if e.len() != k || e.rank() != k {
            return None;
        }
    }
    (x.rank() == x.len() && *x == von_neumann(x.len())).then_some(x.len())
}

/// `(x_0, …, x_n) = {(0, x_0), …, (n, x_n)}` using Kuratowski pairs with
/// von Neumann indices.
pub fn tuple_encode(xs: &[HfSet]) -> Result<HfSet, HfError> {
    if xs.is_empty() {
        return Err(HfError::EmptyTuple);
    }
    Ok(HfSet::from_elems(
        xs.iter()
            .enumerate()
            .map(|(k, x)| kpair(&von_neumann(k), x)),
    ))
}

/// Recovers `[x_0, …, x_n]` when `t` is exactly an (n+1)-tuple.
pub fn tuple_decode(t: &HfSet) -> Option<Vec<HfSet>> {
    if t.is_empty() {
        return None;
    }
    let mut entries = BTreeMap::new();
    for p in t {
        let (idx, val) = kpair_decode(p)?;
        let k = numeral_value(&idx)?;
        if entries.insert(k, val).is_some() {
            return None;
        }
    }
    // Indices are distinct naturals, so contiguity from 0 means the largest
    // one is `len - 1`.
    let last = *entries.keys().next_back()?;
    (last + 1 == entries.len()).then(|| entries.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::{level, mk_set, parse_hf};

    fn hf(s: &str) -> HfSet {
        parse_hf(s).unwrap()
    }

    #[test]
    fn unions() {
        assert_eq!(big_union(&von_neumann(2)), von_neumann(1));
        assert_eq!(big_union(&HfSet::empty()), HfSet::empty());
        let x = von_neumann(4);
        assert_eq!(union2(&HfSet::empty(), &x), x);
        assert_eq!(union2(&von_neumann(2), &hf("{{{}},{{{}}}}")), hf("{{},{{}},{{{}}}}"));
    }

    #[test]
    fn powerset_examples() {
        assert_eq!(powerset(&HfSet::empty(), 16).unwrap(), hf("{{}}"));
        assert_eq!(powerset(&hf("{{}}"), 16).unwrap(), hf("{{},{{}}}"));
        assert_eq!(powerset(&von_neumann(3), 16).unwrap().len(), 8);
        let big = von_neumann(17);
        assert_eq!(
            powerset(&big, POWERSET_BOUND),
            Err(HfError::SizeExceeded {
                what: "powerset argument",
                size: 17,
                bound: 16
            })
        );
    }

    #[test]
    fn powerset_laws_on_small_sets() {
        let mut checked = 0;
        for x in level(4).into_iter().chain(level(5).into_iter().filter(|x| x.len() <= 5)) {
            let p = powerset(&x, POWERSET_BOUND).unwrap();
            assert_eq!(big_union(&p), x);
            assert!(p.contains(&x));
            checked += 1;
        }
        assert_eq!(checked, 16 + 6885);
    }

    #[test]
    fn separation_examples() {
        let x = von_neumann(3);
        assert_eq!(separation(&x, |_| false), HfSet::empty());
        assert_eq!(separation(&x, |_| true), x);
        let transitive = |y: &HfSet| y.iter().all(|z| z.is_subset(y));
        assert_eq!(separation(&x, transitive), x);
    }

    #[test]
    fn kuratowski_pairs() {
        let e = HfSet::empty();
        assert_eq!(kpair(&e, &e), hf("{{{}}}"));
        let (a, b) = (von_neumann(1), von_neumann(2));
        assert_eq!(kpair_decode(&kpair(&a, &b)), Some((a.clone(), b.clone())));
        assert_eq!(kpair_decode(&kpair(&b, &a)), Some((b, a)));
        assert_eq!(kpair_decode(&kpair(&e, &e)), Some((e.clone(), e.clone())));
    }

    #[test]
    fn kpair_decode_rejects_ordinal_two() {
        // ord(2) = {∅, {∅}}: its elements have sizes 0 and 1, never 1 and 2.
        assert_eq!(kpair_decode(&von_neumann(2)), None);
        assert_eq!(kpair_decode(&HfSet::empty()), None);
        assert_eq!(kpair_decode(&von_neumann(3)), None);
        // {{a},{b,c}} with a ∉ {b,c}
        assert_eq!(kpair_decode(&hf("{{{}},{{{}},{{{}}}}}")), None);
    }

    #[test]
    fn kuratowski_injective_on_r4() {
        let all = level(4);
        let mut seen = std::collections::HashMap::new();
        for a in &all {
            for b in &all {
                let p = kpair(a, b);
                assert_eq!(kpair_decode(&p), Some((a.clone(), b.clone())));
                if let Some(prev) = seen.insert(p, (a.clone(), b.clone())) {
                    panic!("collision: {prev:?} vs ({a}, {b})");
                }
            }
        }
        assert_eq!(seen.len(), 256);
    }

    #[test]
    fn wiener_pair_examples() {
        let e = HfSet::empty();
        assert_eq!(wiener_pair(&e, &e), hf("{{{{}},{}},{{{}}}}"));
        assert_ne!(wiener_pair(&e, &e), kpair(&e, &e));
        let all = level(4);
        let mut seen = std::collections::HashSet::new();
        for a in &all {
            for b in &all {
                assert!(seen.insert(wiener_pair(a, b)), "collision at ({a}, {b})");
            }
        }
    }

    #[test]
    fn successors() {
        assert_eq!(succ_vn(&HfSet::empty()), hf("{{}}"));
        assert_eq!(succ_vn(&von_neumann(2)), von_neumann(3));
        let z2 = zermelo_succ(&zermelo_succ(&HfSet::empty()));
        assert_eq!(z2, hf("{{{}}}"));
        let all = level(4);
        let vn: std::collections::HashSet<_> = all.iter().map(succ_vn).collect();
        let zs: std::collections::HashSet<_> = all.iter().map(zermelo_succ).collect();
        assert_eq!(vn.len(), all.len());
        assert_eq!(zs.len(), all.len());
    }

    #[test]
    fn ranks() {
        assert_eq!(HfSet::empty().rank(), 0);
        for n in 0..=20 {
            assert_eq!(von_neumann(n).rank(), n);
        }
        // {{0},{0,1}}: {0,1} = ord(2) has rank 2, so the pair has rank 3.
        assert_eq!(kpair(&von_neumann(0), &von_neumann(1)).rank(), 3);
    }

    #[test]
    fn tuples() {
        let (a, b, c) = (von_neumann(1), hf("{{{}}}"), von_neumann(0));
        let t = tuple_encode(&[a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(tuple_decode(&t), Some(vec![a, b, c]));
        assert_eq!(tuple_decode(&HfSet::empty()), None);
        assert_eq!(tuple_encode(&[]), Err(HfError::EmptyTuple));
        // ([∅]) = {(0, ∅)} = {{{∅}}} since (∅,∅) = {{∅}}.
        assert_eq!(tuple_encode(&[HfSet::empty()]).unwrap(), hf("{{{{}}}}"));
    }

    #[test]
    fn tuple_decode_rejects_malformed() {
        let e = HfSet::empty();
        // gap: indices {0, 2}
        let gap = mk_set([kpair(&von_neumann(0), &e), kpair(&von_neumann(2), &e)]);
        assert_eq!(tuple_decode(&gap), None);
        // duplicate index
        let dup = mk_set([kpair(&von_neumann(0), &e), kpair(&von_neumann(0), &von_neumann(1))]);
        assert_eq!(tuple_decode(&dup), None);
        // non-ordinal index {{∅}}
        let bad = mk_set([kpair(&hf("{{{}}}"), &e)]);
        assert_eq!(tuple_decode(&bad), None);
        // not starting at 0
        let late = mk_set([kpair(&von_neumann(1), &e)]);
        assert_eq!(tuple_decode(&late), None);
    }

    #[test]
    fn tuples_round_trip_over_small_sequences() {
        let pool = level(3);
        let mut count = 0;
        let mut seqs: Vec<Vec<HfSet>> = vec![vec![]];
        for _ in 0..4 {
            let mut next = Vec::new();
            for s in &seqs {
                for x in &pool {
                    let mut t = s.clone();
                    t.push(x.clone());
                    let enc = tuple_encode(&t).unwrap();
                    assert_eq!(tuple_decode(&enc).as_deref(), Some(&t[..]));
                    count += 1;
                    next.push(t);
                }
            }
            seqs = next;
        }
        assert_eq!(count, 4 + 16 + 64 + 256);
    }

    #[test]
    fn numeral_value_matches_construction() {
        for n in 0..12 {
            assert_eq!(numeral_value(&von_neumann(n)), Some(n));
        }
        assert_eq!(numeral_value(&hf("{{{}}}")), None);
        assert_eq!(numeral_value(&hf("{{},{{{}}}}")), None);
    }
}
