//! Finite iterative structures: a carrier `{0, …, n−1}` with an initial
//! element and a successor map.

mod godel;
mod numbers;
mod order;
mod skolem;

use std::fmt;

use thiserror::Error;

pub use godel::{godel_eval, PrimRec, MAX_STEPS};
pub use numbers::{exp_valid_set, factorize, good_primes, is_prime, GoodPrimes, Rejection, EXP_BOUND};
pub use order::{
    all_structures, next_permutation, thm_order_conditions, OrderConditions, ORDER_CARRIER_BOUND,
};
pub use skolem::{chi_eq, chi_lt, skolem_lt_check, skolem_lt_check_with, skolem_step, unary_recursion_fails};

/// Largest `|A|·|B|` accepted by [`find_homs`].
pub const HOM_SEARCH_BOUND: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IterError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("{what}: size {size} exceeds bound {bound}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("structure does not admit induction")]
    NotInductive,
    #[error("expected {expected} argument(s), got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid description: {0}")]
    InvalidDescription(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("evaluation exceeded {MAX_STEPS} steps")]
    StepLimit,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IterStruct {
    init: usize,
    succ: Vec<usize>,
}

impl IterStruct {
    pub fn new(init: usize, succ: Vec<usize>) -> Result<IterStruct, IterError> {
        let n = succ.len();
        if n == 0 {
            return Err(IterError::InvalidShape("empty carrier".into()));
        }
        if init >= n {
            return Err(IterError::InvalidShape(format!("initial element {init} outside 0..{n}")));
        }
        if let Some(bad) = succ.iter().find(|&&s| s >= n) {
            return Err(IterError::InvalidShape(format!("successor value {bad} outside 0..{n}")));
        }
        Ok(IterStruct { init, succ })
    }

    pub fn size(&self) -> usize {
        self.succ.len()
    }

    pub fn init(&self) -> usize {
        self.init
    }

    pub fn succ(&self, x: usize) -> usize {
        self.succ[x]
    }

    pub fn succ_map(&self) -> &[usize] {
        &self.succ
    }

    /// Elements reachable from the initial one, in order of first visit.
    pub fn orbit(&self) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        let mut x = self.init;
        while !seen[x] {
            seen[x] = true;
            out.push(x);
            x = self.succ[x];
        }
        out
    }
}

impl fmt::Debug for IterStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IterStruct(init={}, succ={:?})", self.init, self.succ)
    }
}

/// `ℤ/nℤ` with initial element 0 and `x ↦ x + 1`.
pub fn mk_zn(n: usize) -> Result<IterStruct, IterError> {
    if n == 0 {
        return Err(IterError::InvalidShape("Z_0 has no elements".into()));
    }
    IterStruct::new(0, (0..n).map(|x| (x + 1) % n).collect())
}

/// A path of `tail` elements whose last element starts a cycle of length
/// `cycle`: elements `0 … tail+cycle−2`, the successor of the last one is
/// `tail − 1`. `mk_lasso(1, n)` is `ℤ/nℤ`.
pub fn mk_lasso(tail: usize, cycle: usize) -> Result<IterStruct, IterError> {
    if tail == 0 || cycle == 0 {
        return Err(IterError::InvalidShape(format!("lasso({tail}, {cycle}) needs tail ≥ 1 and cycle ≥ 1")));
    }
    let size = tail + cycle - 1;
    IterStruct::new(0, (0..size).map(|x| if x + 1 < size { x + 1 } else { tail - 1 }).collect())
}

/// No proper substructure: every element is reachable from the initial one.
pub fn admits_induction(a: &IterStruct) -> bool {
    a.orbit().len() == a.size()
}

/// Whether `a` and `b` are isomorphic, by trying every bijection.
pub fn isomorphic(a: &IterStruct, b: &IterStruct) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.size()).collect();
    loop {
        if perm[a.init] == b.init && (0..a.size()).all(|x| perm[a.succ(x)] == b.succ(perm[x])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// All homomorphisms `h: a → b` (`h(init) = init`, `h ∘ s = s ∘ h`).
///
/// When `a` admits induction the map is forced along the orbit, so there is
/// at most one. Otherwise unreachable elements are assigned by backtracking.
pub fn find_homs(a: &IterStruct, b: &IterStruct) -> Result<Vec<Vec<usize>>, IterError> {
    let product = a.size().saturating_mul(b.size());
    if product > HOM_SEARCH_BOUND {
        return Err(IterError::SizeExceeded {
            what: "homomorphism search",
            size: product,
            bound: HOM_SEARCH_BOUND,
        });
    }
    let mut h: Vec<Option<usize>> = vec![None; a.size()];
    let (mut x, mut y) = (a.init, b.init);
    loop {
        match h[x] {
            Some(v) if v == y => break,
            Some(_) => return Ok(Vec::new()),
            None => {
                h[x] = Some(y);
                x = a.succ(x);
                y = b.succ(y);
            }
        }
    }
    let mut out = Vec::new();
    extend_hom(a, b, &mut h, &mut out);
    Ok(out)
}

fn extend_hom(a: &IterStruct, b: &IterStruct, h: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
    let Some(x) = h.iter().position(Option::is_none) else {
        out.push(h.iter().map(|v| v.expect("complete")).collect());
        return;
    };
    for y in 0..b.size() {
        h[x] = Some(y);
        let consistent = (0..a.size()).all(|u| match (h[u], h[a.succ(u)]) {
            (Some(hu), Some(hsu)) => b.succ(hu) == hsu,
            _ => true,
        });
        if consistent {
            extend_hom(a, b, h, out);
        }
    }
    h[x] = None;
}

/// Whether `a` has exactly one homomorphism into each target. Only a finite
/// surrogate for admitting recursion, which quantifies over all structures.
pub fn admits_recursion_vs(a: &IterStruct, targets: &[IterStruct]) -> Result<bool, IterError> {
    for b in targets {
        if find_homs(a, b)?.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which element the initial one denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// The initial element is 1.
    OneBased,
    /// The initial element is 0.
    ZeroBased,
}

impl Convention {
    /// The number the initial element stands for.
    pub fn first(self) -> usize {
        match self {
            Convention::OneBased => 1,
            Convention::ZeroBased => 0,
        }
    }

    /// The element denoting the number `n`: the initial element moved
    /// `n − first()` steps. `None` below the first number.
    pub fn numeral(self, a: &IterStruct, n: usize) -> Option<usize> {
        let steps = n.checked_sub(self.first())?;
        let orbit = a.orbit();
        if steps < orbit.len() {
            return Some(orbit[steps]);
        }
        // past the tail, walk around the cycle
        let last = *orbit.last().expect("orbit contains init");
        let start = orbit.iter().position(|&x| x == a.succ(last)).expect("orbit is closed");
        Some(orbit[start + (steps - start) % (orbit.len() - start)])
    }
}

/// The map `h` with `h(init) = base` and `h(s(x)) = step(h(x))`, if the
/// equations are consistent around the cycle.
fn iterate(a: &IterStruct, base: usize, step: impl Fn(usize) -> usize) -> Result<Option<Vec<usize>>, IterError> {
    if !admits_induction(a) {
        return Err(IterError::NotInductive);
    }
    let mut h: Vec<Option<usize>> = vec![None; a.size()];
    let (mut x, mut y) = (a.init(), base);
    loop {
        match h[x] {
            Some(v) => return Ok((v == y).then(|| h.into_iter().map(|v| v.expect("inductive")).collect())),
            None => {
                h[x] = Some(y);
                x = a.succ(x);
                y = step(y);
            }
        }
    }
}

fn check_element(a: &IterStruct, m: usize) -> Result<(), IterError> {
    if m >= a.size() {
        return Err(IterError::InvalidShape(format!("element {m} outside 0..{}", a.size())));
    }
    Ok(())
}

/// `x ↦ m + x`.
///
/// One-based: `m + 1 = s(m)`, `m + s(x) = s(m + x)`.
/// Zero-based: `m + 0 = m`, `m + s(x) = s(m + x)`.
pub fn rec_add(a: &IterStruct, m: usize, conv: Convention) -> Result<Option<Vec<usize>>, IterError> {
    check_element(a, m)?;
    let base = match conv {
        Convention::OneBased => a.succ(m),
        Convention::ZeroBased => m,
    };
    iterate(a, base, |y| a.succ(y))
}

/// `x ↦ m · x`.
///
/// One-based: `m · 1 = m`, `m · s(x) = m · x + m`.
/// Zero-based: `m · 0 = 0`, `m · s(x) = m · x + m`.
pub fn rec_mul(a: &IterStruct, m: usize, conv: Convention) -> Result<Option<Vec<usize>>, IterError> {
    check_element(a, m)?;
    match add_table(a, conv)? {
        Some(plus) => mul_with(a, m, conv, &plus),
        None => Ok(None),
    }
}

fn mul_with(a: &IterStruct, m: usize, conv: Convention, plus: &[Vec<usize>]) -> Result<Option<Vec<usize>>, IterError> {
    let base = match conv {
        Convention::OneBased => m,
        Convention::ZeroBased => a.init(),
    };
    iterate(a, base, |y| plus[y][m])
}

/// `x ↦ m^x`.
///
/// One-based: `m¹ = m`, `m^{s(x)} = m^x · m`.
/// Zero-based: `m⁰ = s(0)`, `m^{s(x)} = m^x · m`.
pub fn rec_exp(a: &IterStruct, m: usize, conv: Convention) -> Result<Option<Vec<usize>>, IterError> {
    check_element(a, m)?;
    let times = mul_table(a, conv)?;
    let base = match conv {
        Convention::OneBased => m,
        Convention::ZeroBased => a.succ(a.init()),
    };
    match times {
        Some(times) => iterate(a, base, |y| times[y][m]),
        None => Ok(None),
    }
}

/// `plus[y][x] = y + x`, if addition is well defined for every `y`.
fn add_table(a: &IterStruct, conv: Convention) -> Result<Option<Vec<Vec<usize>>>, IterError> {
    (0..a.size()).map(|y| rec_add(a, y, conv)).collect()
}

fn mul_table(a: &IterStruct, conv: Convention) -> Result<Option<Vec<Vec<usize>>>, IterError> {
    let Some(plus) = add_table(a, conv)? else {
        return Ok(None);
    };
    (0..a.size()).map(|y| mul_with(a, y, conv, &plus)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(mk_zn(1).unwrap().succ_map(), &[0]);
        assert_eq!(mk_zn(6).unwrap().succ(5), 0);
        assert!(isomorphic(&mk_lasso(1, 3).unwrap(), &mk_zn(3).unwrap()));
        assert!(!isomorphic(&mk_lasso(2, 2).unwrap(), &mk_zn(3).unwrap()));
        assert_eq!(mk_lasso(3, 1).unwrap().succ_map(), &[1, 2, 2]);
        assert!(matches!(mk_zn(0), Err(IterError::InvalidShape(_))));
        assert!(mk_lasso(0, 2).is_err());
        assert!(IterStruct::new(2, vec![0, 1]).is_err());
        assert!(IterStruct::new(0, vec![0, 5]).is_err());
    }

    #[test]
    fn induction() {
        for n in 1..=12 {
            assert!(admits_induction(&mk_zn(n).unwrap()));
        }
        assert!(admits_induction(&mk_lasso(2, 3).unwrap()));
        assert!(!admits_induction(&IterStruct::new(0, vec![0, 1]).unwrap()));
    }

    /// Substructure enumeration: an inductive structure has no proper subset
    /// containing init and closed under succ.
    #[test]
    fn induction_matches_subalgebra_enumeration() {
        for s in all_structures(4) {
            let n = s.size();
            let proper_sub = (0u32..(1 << n) - 1).any(|mask| {
                let has = |x: usize| mask & (1 << x) != 0;
                has(s.init()) && (0..n).filter(|&x| has(x)).all(|x| has(s.succ(x)))
            });
            assert_eq!(admits_induction(&s), !proper_sub, "{s:?}");
        }
    }

    #[test]
    fn hom_counts_follow_divisibility() {
        for n in 1..=12 {
            for m in 1..=12 {
                let count = find_homs(&mk_zn(n).unwrap(), &mk_zn(m).unwrap()).unwrap().len();
                assert_eq!(count, usize::from(n % m == 0), "Z{n} → Z{m}");
            }
        }
        let a = mk_lasso(2, 3).unwrap();
        assert!(find_homs(&a, &a).unwrap().contains(&(0..a.size()).collect()));
    }

    #[test]
    fn non_inductive_search() {
        // 0 ↦ 0 fixed, 1 ↦ 1 fixed and unreachable: any fixed point of b works for 1
        let a = IterStruct::new(0, vec![0, 1]).unwrap();
        let b = IterStruct::new(0, vec![0, 1, 0]).unwrap();
        let homs = find_homs(&a, &b).unwrap();
        assert_eq!(homs, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn recursion_surrogate() {
        let z4 = mk_zn(4).unwrap();
        assert!(!admits_recursion_vs(&z4, &[mk_zn(2).unwrap(), mk_zn(3).unwrap()]).unwrap());
        assert!(admits_recursion_vs(&mk_zn(1).unwrap(), &[mk_zn(1).unwrap()]).unwrap());
        assert!(admits_recursion_vs(&z4, &[]).unwrap());
    }

    #[test]
    fn addition_and_multiplication_always_defined() {
        for n in 1..=12 {
            let z = mk_zn(n).unwrap();
            for m in 0..n {
                for conv in [Convention::OneBased, Convention::ZeroBased] {
                    assert!(rec_add(&z, m, conv).unwrap().is_some(), "Z{n} + {m}");
                    assert!(rec_mul(&z, m, conv).unwrap().is_some(), "Z{n} · {m}");
                }
            }
        }
    }

    #[test]
    fn one_based_values_match_residues() {
        // element i of Z_n denotes the residue of i + 1; exponentiation
        // needs n among the valid moduli
        let n = 6;
        let z = mk_zn(n).unwrap();
        let num = |i: usize| i + 1;
        let elem = |v: usize| (v + n - 1) % n;
        for m in 0..n {
            let add = rec_add(&z, m, Convention::OneBased).unwrap().unwrap();
            let mul = rec_mul(&z, m, Convention::OneBased).unwrap().unwrap();
            let exp = rec_exp(&z, m, Convention::OneBased).unwrap().unwrap();
            for x in 0..n {
                assert_eq!(add[x], elem(num(m) + num(x)));
                assert_eq!(mul[x], elem(num(m) * num(x) % n));
                assert_eq!(exp[x], elem((num(m) as u64).pow(num(x) as u32) as usize % n));
            }
        }
    }

    #[test]
    fn exponentiation_examples() {
        let z6 = mk_zn(6).unwrap();
        for m in 0..6 {
            assert!(rec_exp(&z6, m, Convention::OneBased).unwrap().is_some());
        }
        let z4 = mk_zn(4).unwrap();
        let two = Convention::OneBased.numeral(&z4, 2).unwrap();
        assert_eq!(two, 1);
        assert_eq!(rec_exp(&z4, two, Convention::OneBased).unwrap(), None);
    }

    #[test]
    fn zero_based_exponentiation_fails_beyond_z1() {
        assert!(rec_exp(&mk_zn(1).unwrap(), 0, Convention::ZeroBased).unwrap().is_some());
        for n in 2..=12 {
            let z = mk_zn(n).unwrap();
            let zero = Convention::ZeroBased.numeral(&z, 0).unwrap();
            assert_eq!(rec_exp(&z, zero, Convention::ZeroBased).unwrap(), None, "Z{n}");
        }
    }

    #[test]
    fn exp_validity_agrees_with_modular_test() {
        let valid = exp_valid_set(100).unwrap();
        for n in 1..=100 {
            let z = mk_zn(n).unwrap();
            let all = (0..n).all(|m| rec_exp(&z, m, Convention::OneBased).unwrap().is_some());
            assert_eq!(all, valid.contains(&(n as u64)), "n = {n}");
        }
    }

    #[test]
    fn numerals() {
        let z5 = mk_zn(5).unwrap();
        assert_eq!(Convention::OneBased.numeral(&z5, 0), None);
        assert_eq!(Convention::OneBased.numeral(&z5, 1), Some(0));
        assert_eq!(Convention::OneBased.numeral(&z5, 7), Some(1));
        assert_eq!(Convention::ZeroBased.numeral(&z5, 7), Some(2));
    }

    #[test]
    fn non_inductive_rejected() {
        let a = IterStruct::new(0, vec![0, 1]).unwrap();
        assert_eq!(rec_add(&a, 0, Convention::OneBased), Err(IterError::NotInductive));
    }
}
