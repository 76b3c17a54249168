use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{gel, gel_closure, graded_view, is_k_transitive, triple_union, GradedView, VnnError};
use crate::hf::{big_union, HfSet};
use crate::term::Signature;

/// Largest transitive closure accepted by the `ON_S` tests.
pub const ONS_CLOSURE_BOUND: usize = 10_000;

/// The defining conditions of `D_S` (the first four) and `ON_S` (all seven).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    TypedTuple,
    TypedElements,
    Transitive,
    TransitiveElements,
    Directed,
    DirectedElements,
    WellFounded,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::TypedTuple => "(i) tuple typed by an n-ary symbol with nonempty grades",
            Condition::TypedElements => "(ii) every graded element satisfies (i)",
            Condition::Transitive => "(iii) k-transitive for every k",
            Condition::TransitiveElements => "(iv) every graded element is k-transitive",
            Condition::Directed => "(v) every grade is directed by ∈′",
            Condition::DirectedElements => "(vi) every grade of a graded element is directed by ∈′",
            Condition::WellFounded => "(vii) ∈′ is well-founded on the graded elements",
        })
    }
}

#[derive(Default)]
struct Gels(HashMap<HfSet, HfSet>);

impl Gels {
    fn get(&mut self, x: &HfSet) -> HfSet {
        self.0.entry(x.clone()).or_insert_with(|| gel(x)).clone()
    }

    /// `a = c ∨ a ∈′ c`
    fn le(&mut self, a: &HfSet, c: &HfSet) -> bool {
        a == c || self.get(c).contains(a)
    }
}

fn typed(sig: &Signature, x: &HfSet) -> Option<GradedView> {
    let v = graded_view(x)?;
    let n = v.grades.len();
    let ok = (0..sig.len()).any(|f| sig.arity(f) == n && *sig.code(f) == v.type_code)
        && v.grades.iter().all(|g| !g.is_empty());
    ok.then_some(v)
}

fn transitive_all(x: &HfSet, n: usize) -> bool {
    // k = n stands in for every k ≥ n, where pred_k is empty
    (0..=n).all(|k| is_k_transitive(x, k))
}

fn directed_with(p: &HfSet, gels: &mut Gels) -> bool {
    let elems = p.elements();
    for (i, a) in elems.iter().enumerate() {
        for b in &elems[i + 1..] {
            if !elems.iter().any(|c| gels.le(a, c) && gels.le(b, c)) {
                return false;
            }
        }
    }
    true
}

/// Every pair in `p` has an upper bound in `p` under reflexive `∈′`.
pub fn is_directed(p: &HfSet) -> bool {
    directed_with(p, &mut Gels::default())
}

fn acyclic(nodes: &[HfSet], gels: &mut Gels) -> bool {
    let index: HashMap<&HfSet, usize> = nodes.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut indegree = vec![0usize; nodes.len()];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (j, b) in nodes.iter().enumerate() {
        for a in gels.get(b).iter() {
            if let Some(&i) = index.get(a) {
                out[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut ready: Vec<usize> = (0..nodes.len()).filter(|&i| indegree[i] == 0).collect();
    let mut removed = 0;
    while let Some(i) = ready.pop() {
        removed += 1;
        for &j in &out[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    removed == nodes.len()
}

/// Number of distinct sets hereditarily below `x`, capped at `bound + 1`.
pub fn transitive_closure_size(x: &HfSet, bound: usize) -> usize {
    let mut seen: HashSet<HfSet> = HashSet::new();
    let mut stack: Vec<HfSet> = x.elements().to_vec();
    while let Some(y) = stack.pop() {
        if seen.insert(y.clone()) {
            if seen.len() > bound {
                break;
            }
            stack.extend(y.iter().cloned());
        }
    }
    seen.len()
}

fn ds_failure(sig: &Signature, x: &HfSet, gels: &mut Gels) -> Option<Condition> {
    let Some(v) = typed(sig, x) else {
        return Some(Condition::TypedTuple);
    };
    let g = gels.get(x);
    let mut views = Vec::with_capacity(g.len());
    for y in g.iter() {
        match typed(sig, y) {
            Some(w) => views.push(w),
            None => return Some(Condition::TypedElements),
        }
    }
    if !transitive_all(x, v.grades.len()) {
        return Some(Condition::Transitive);
    }
    if !g.iter().zip(&views).all(|(y, w)| transitive_all(y, w.grades.len())) {
        return Some(Condition::TransitiveElements);
    }
    None
}

/// Membership in `D_S`.
pub fn in_ds(sig: &Signature, x: &HfSet) -> bool {
    ds_failure(sig, x, &mut Gels::default()).is_none()
}

/// The first of the seven conditions that `x` violates, `None` for members
/// of `ON_S`.
pub fn first_failure(sig: &Signature, x: &HfSet) -> Result<Option<Condition>, VnnError> {
    let size = transitive_closure_size(x, ONS_CLOSURE_BOUND);
    if size > ONS_CLOSURE_BOUND {
        return Err(VnnError::SizeExceeded {
            what: "transitive closure",
            size,
            bound: ONS_CLOSURE_BOUND,
        });
    }
    let mut gels = Gels::default();
    if let Some(c) = ds_failure(sig, x, &mut gels) {
        return Ok(Some(c));
    }
    let v = graded_view(x).expect("checked by (i)");
    if !v.grades.iter().all(|p| directed_with(p, &mut gels)) {
        return Ok(Some(Condition::Directed));
    }
    let g = gels.get(x);
    for y in g.iter() {
        let w = graded_view(y).expect("checked by (ii)");
        if !w.grades.iter().all(|p| directed_with(p, &mut gels)) {
            return Ok(Some(Condition::DirectedElements));
        }
    }
    if !acyclic(g.elements(), &mut gels) {
        return Ok(Some(Condition::WellFounded));
    }
    Ok(None)
}

/// Membership in `ON_S`.
pub fn in_ons(sig: &Signature, x: &HfSet) -> Result<bool, VnnError> {
    Ok(first_failure(sig, x)?.is_none())
}

/// Some grade `x_k` (`k < n`) has no `∈′`-maximal element.
pub fn is_limit_gen(x: &HfSet) -> Result<bool, VnnError> {
    let v = graded_view(x).ok_or_else(|| VnnError::NotATuple(x.clone()))?;
    let mut gels = Gels::default();
    Ok(v.grades.iter().any(|p| {
        !p.iter().any(|m| p.iter().all(|w| !gels.get(w).contains(m)))
    }))
}

/// Members of `ON_S` such that neither `x` nor any graded element is a limit.
pub fn in_vnns(sig: &Signature, x: &HfSet) -> Result<bool, VnnError> {
    if !in_ons(sig, x)? {
        return Ok(false);
    }
    let limit = is_limit_gen(x)? || gel(x).iter().any(|y| is_limit_gen(y).unwrap_or(true));
    // finite nonempty grades ordered acyclically always have maximal elements
    assert!(!limit, "limit in ON_S: {x}");
    Ok(true)
}

/// Outcome of [`check_trees_claim`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreesReport {
    pub members: usize,
    pub pairs_checked: usize,
    pub failure: Option<String>,
}

impl TreesReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `∈′` is a strict total order on `gel(x)` for every `x` in
/// `pool`, where the signature has no symbol of arity above one and every
/// pool member lies in `ON_S`.
pub fn check_trees_claim(sig: &Signature, pool: &[HfSet]) -> Result<TreesReport, VnnError> {
    if sig.max_arity() > 1 {
        return Err(VnnError::Precondition(format!(
            "signature has a symbol of arity {}",
            sig.max_arity()
        )));
    }
    for x in pool {
        if let Some(c) = first_failure(sig, x)? {
            return Err(VnnError::Precondition(format!("{x} is not in ON_S: fails {c}")));
        }
    }
    let mut gels = Gels::default();
    let mut report = TreesReport {
        members: pool.len(),
        pairs_checked: 0,
        failure: None,
    };
    for x in pool {
        let elems = gels.get(x).elements().to_vec();
        let lt = |gels: &mut Gels, a: &HfSet, b: &HfSet| gels.get(b).contains(a);
        for a in &elems {
            if lt(&mut gels, a, a) {
                report.failure = Some(format!("{a} ∈′ itself inside gel({x})"));
                return Ok(report);
            }
            for b in &elems {
                if a == b {
                    continue;
                }
                report.pairs_checked += 1;
                let (ab, ba) = (lt(&mut gels, a, b), lt(&mut gels, b, a));
                if ab == ba {
                    report.failure = Some(format!("{a} and {b} in gel({x}) are not comparable exactly one way"));
                    return Ok(report);
                }
                if ab {
                    for c in &elems {
                        if lt(&mut gels, b, c) && !lt(&mut gels, a, c) {
                            report.failure = Some(format!("∈′ is not transitive on {a}, {b}, {c}"));
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Outcome of [`check_in_prime_global`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InPrimeReport {
    /// Sets in the `∈′`-closure of the pool.
    pub nodes: usize,
    pub edges: usize,
    pub acyclic: bool,
    /// Pool members with `gel(x) ⊆ ⋃⋃⋃x`.
    pub triple_union_holds: usize,
    /// Pool members with `gel(x) ⊆ ⋃⋃x`.
    pub double_union_holds: usize,
    pub members: usize,
}

impl InPrimeReport {
    pub fn passed(&self) -> bool {
        self.acyclic && self.triple_union_holds == self.members
    }
}

/// Acyclicity of `∈′` over the `∈′`-closure of `pool`, and the containment
/// `gel(x) ⊆ ⋃⋃⋃x` for each member.
pub fn check_in_prime_global(pool: &[HfSet]) -> InPrimeReport {
    let nodes = gel_closure(pool);
    let mut gels = Gels::default();
    let edges = nodes.iter().map(|x| gels.get(x).len()).sum();
    let acyclic = acyclic(&nodes, &mut gels);
    let mut triple = 0;
    let mut double = 0;
    for x in pool {
        let g = gels.get(x);
        if g.is_subset(&triple_union(x)) {
            triple += 1;
        }
        if g.is_subset(&big_union(&big_union(x))) {
            double += 1;
        }
    }
    InPrimeReport {
        nodes: nodes.len(),
        edges,
        acyclic,
        triple_union_holds: triple,
        double_union_holds: double,
        members: pool.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::{tuple_encode, von_neumann};
    use crate::term::enumerate_terms;
    use crate::vnn::{fv_apply, h_map, h_sequence, in_prime, term_to_v};

    fn sig(spec: &[(&str, usize)]) -> Signature {
        Signature::new(spec.iter().copied()).unwrap()
    }

    fn images(s: &Signature, h: usize) -> Vec<HfSet> {
        enumerate_terms(s, h).unwrap().iter().map(|t| term_to_v(s, t)).collect()
    }

    #[test]
    fn h_values_are_in_d_1s() {
        let s = sig(&[("1", 0), ("s", 1)]);
        let hs = h_sequence(10);
        for (n, x) in hs.iter().enumerate() {
            assert!(in_ds(&s, x), "H({n})");
            assert!(in_vnns(&s, x).unwrap());
            for (m, y) in hs.iter().enumerate() {
                assert_eq!(in_prime(y, x), m < n);
            }
        }
    }

    #[test]
    fn empty_grade_fails_first_condition() {
        let s = sig(&[("1", 0), ("s", 1)]);
        let x = tuple_encode(&[HfSet::empty(), von_neumann(1)]).unwrap();
        assert!(!in_ds(&s, &x));
        assert_eq!(first_failure(&s, &x), Ok(Some(Condition::TypedTuple)));
        // wrong type code for a one-grade tuple
        let y = tuple_encode(&[HfSet::singleton(h_map(0).unwrap()), von_neumann(0)]).unwrap();
        assert!(!in_ds(&s, &y));
        assert_eq!(first_failure(&s, &HfSet::empty()), Ok(Some(Condition::TypedTuple)));
    }

    #[test]
    fn two_constants_break_directedness() {
        let s = sig(&[("a", 0), ("b", 0), ("s", 1)]);
        let a = fv_apply(&s, 0, &[]).unwrap();
        let b = fv_apply(&s, 1, &[]).unwrap();
        let x = tuple_encode(&[HfSet::from_elems([a, b]), s.code(2).clone()]).unwrap();
        assert!(in_ds(&s, &x));
        assert_eq!(first_failure(&s, &x), Ok(Some(Condition::Directed)));
        assert!(!in_vnns(&s, &x).unwrap());
        // x bounds a and b in the grade of s^V(x), so only (vi) fails there
        let above = fv_apply(&s, 2, &[x]).unwrap();
        assert_eq!(first_failure(&s, &above), Ok(Some(Condition::DirectedElements)));
    }

    #[test]
    fn missing_predecessor_breaks_transitivity() {
        let s = sig(&[("1", 0), ("s", 1)]);
        let broken = tuple_encode(&[HfSet::singleton(h_map(1).unwrap()), von_neumann(1)]).unwrap();
        assert_eq!(first_failure(&s, &broken), Ok(Some(Condition::Transitive)));
        let above = tuple_encode(&[HfSet::from_elems([h_map(0).unwrap(), h_map(1).unwrap(), broken.clone()]), von_neumann(1)]).unwrap();
        assert_eq!(first_failure(&s, &above), Ok(Some(Condition::TransitiveElements)));
        let untyped = tuple_encode(&[HfSet::singleton(von_neumann(3)), von_neumann(1)]).unwrap();
        assert_eq!(first_failure(&s, &untyped), Ok(Some(Condition::TypedElements)));
    }

    #[test]
    fn term_images_are_in_vnns() {
        for s in [sig(&[("0", 0), ("s", 1), ("t", 1)]), sig(&[("0", 0), ("+", 2)])] {
            for x in images(&s, 3) {
                assert_eq!(first_failure(&s, &x), Ok(None));
                assert!(in_vnns(&s, &x).unwrap());
                assert!(!is_limit_gen(&x).unwrap());
            }
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(is_limit_gen(&HfSet::empty()), Err(VnnError::NotATuple(_))));
        assert_eq!(is_limit_gen(&h_map(0).unwrap()), Ok(false));
        let x = tuple_encode(&[HfSet::empty(), von_neumann(1)]).unwrap();
        assert_eq!(is_limit_gen(&x), Ok(true));
    }

    #[test]
    fn pairwise_directedness_matches_subsets() {
        let s = sig(&[("0", 0), ("s", 1), ("t", 1)]);
        let imgs = images(&s, 2);
        let mut gels = Gels::default();
        // every subset of up to 6 images, directed pairwise iff every
        // nonempty subset has an upper bound
        for mask in 1u32..(1 << 6) {
            let p = HfSet::from_elems((0..6).filter(|i| mask >> i & 1 == 1).map(|i| imgs[i].clone()));
            let elems = p.elements().to_vec();
            let full = (1u32..(1 << elems.len())).all(|sub| {
                elems.iter().any(|c| {
                    (0..elems.len()).filter(|i| sub >> i & 1 == 1).all(|i| gels.le(&elems[i], c))
                })
            });
            assert_eq!(is_directed(&p), full, "{p}");
        }
    }

    #[test]
    fn trees_claim() {
        let s = sig(&[("0", 0), ("s", 1), ("t", 1)]);
        let r = check_trees_claim(&s, &images(&s, 4)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.members, 31);
        let one_s = sig(&[("1", 0), ("s", 1)]);
        assert!(check_trees_claim(&one_s, &h_sequence(10)).unwrap().passed());
        let abs = sig(&[("a", 0), ("b", 0), ("s", 1)]);
        let a = fv_apply(&abs, 0, &[]).unwrap();
        let b = fv_apply(&abs, 1, &[]).unwrap();
        let x = tuple_encode(&[HfSet::from_elems([a, b]), abs.code(2).clone()]).unwrap();
        assert!(matches!(check_trees_claim(&abs, &[x]), Err(VnnError::Precondition(_))));
        let plus = sig(&[("0", 0), ("+", 2)]);
        assert!(matches!(check_trees_claim(&plus, &[]), Err(VnnError::Precondition(_))));
    }

    #[test]
    fn global_acyclicity() {
        let s = sig(&[("0", 0), ("+", 2)]);
        let pool = images(&s, 3);
        let r = check_in_prime_global(&pool);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.nodes, 26);
        let empty = check_in_prime_global(&[]);
        assert!(empty.passed() && empty.nodes == 0);
        // the two-fold union stops at the grades themselves
        assert!(r.double_union_holds < r.members);
    }

    #[test]
    fn closure_size() {
        assert_eq!(transitive_closure_size(&von_neumann(5), 100), 5);
        assert_eq!(transitive_closure_size(&von_neumann(50), 10), 11);
    }
}
