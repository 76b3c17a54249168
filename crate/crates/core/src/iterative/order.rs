use super::{admits_induction, IterError, IterStruct};

/// Largest carrier accepted by [`thm_order_conditions`].
pub const ORDER_CARRIER_BOUND: usize = 8;

/// Outcome of testing one structure under one total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderConditions {
    /// First element (in the order) with `s(x) ≤ x`, if any.
    pub increasing_fails_at: Option<usize>,
    /// Well-ordered (automatic when finite) and every element other than the
    /// initial one is a successor.
    pub clause_a: bool,
    /// Admits induction.
    pub clause_b: bool,
    /// `x < s(x)` everywhere together with clause (a).
    pub holds_a: bool,
    /// `x < s(x)` everywhere together with clause (b).
    pub holds_b: bool,
}

/// Rearranges `v` into the next permutation in lexicographic order; `false`
/// after the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `order` lists the carrier from least to greatest.
pub fn thm_order_conditions(a: &IterStruct, order: &[usize]) -> Result<OrderConditions, IterError> {
    let n = a.size();
    if n > ORDER_CARRIER_BOUND {
        return Err(IterError::SizeExceeded {
            what: "ordered carrier",
            size: n,
            bound: ORDER_CARRIER_BOUND,
        });
    }
    let mut position = vec![usize::MAX; n];
    for (i, &x) in order.iter().enumerate() {
        if x >= n || position[x] != usize::MAX {
            return Err(IterError::InvalidShape(format!("{order:?} is not an ordering of 0..{n}")));
        }
        position[x] = i;
    }
    if order.len() != n {
        return Err(IterError::InvalidShape(format!("{order:?} is not an ordering of 0..{n}")));
    }
    let increasing_fails_at = order.iter().copied().find(|&x| position[a.succ(x)] <= position[x]);
    let clause_a = (0..n).all(|x| x == a.init() || (0..n).any(|y| a.succ(y) == x));
    let clause_b = admits_induction(a);
    let holds_a = increasing_fails_at.is_none() && clause_a;
    let holds_b = increasing_fails_at.is_none() && clause_b;
    // The greatest element has nowhere to go, so a finite nonempty carrier
    // never satisfies x < s(x) throughout.
    assert!(increasing_fails_at.is_some(), "finite structure ordered with x < s(x): {a:?} {order:?}");
    Ok(OrderConditions {
        increasing_fails_at,
        clause_a,
        clause_b,
        holds_a,
        holds_b,
    })
}

/// Every iterative structure with carrier size `1 ..= max_size`.
pub fn all_structures(max_size: usize) -> Vec<IterStruct> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        let maps = n.pow(n as u32);
        for init in 0..n {
            for code in 0..maps {
                let mut c = code;
                let succ = (0..n)
                    .map(|_| {
                        let v = c % n;
                        c /= n;
                        v
                    })
                    .collect();
                out.push(IterStruct::new(init, succ).expect("values in range"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iterative::{mk_lasso, mk_zn};

    #[test]
    fn examples() {
        let z3 = mk_zn(3).unwrap();
        let r = thm_order_conditions(&z3, &[0, 1, 2]).unwrap();
        assert_eq!(r.increasing_fails_at, Some(2));
        assert!(r.clause_a && r.clause_b && !r.holds_a && !r.holds_b);

        let lasso = mk_lasso(3, 1).unwrap();
        let r = thm_order_conditions(&lasso, &[0, 1, 2]).unwrap();
        assert_eq!(r.increasing_fails_at, Some(2));
        assert!(r.clause_a && r.clause_b && !r.holds_a);
        let unreachable = IterStruct::new(0, vec![0, 0]).unwrap();
        let r = thm_order_conditions(&unreachable, &[0, 1]).unwrap();
        assert!(!r.clause_a && !r.clause_b);

        assert!(thm_order_conditions(&z3, &[0, 1]).is_err());
        assert!(thm_order_conditions(&z3, &[0, 1, 1]).is_err());
        assert!(thm_order_conditions(&mk_zn(9).unwrap(), &[0; 9]).is_err());
    }

    #[test]
    fn no_finite_structure_is_increasing() {
        let structures = all_structures(4);
        assert_eq!(structures.len(), 1 + 2 * 4 + 3 * 27 + 4 * 256);
        let mut orders_checked = 0;
        for s in &structures {
            let mut order: Vec<usize> = (0..s.size()).collect();
            loop {
                let r = thm_order_conditions(s, &order).unwrap();
                assert!(!r.holds_a && !r.holds_b);
                orders_checked += 1;
                if !next_permutation(&mut order) {
                    break;
                }
            }
        }
        assert_eq!(orders_checked, 1 + 2 * 4 * 2 + 3 * 27 * 6 + 4 * 256 * 24);
    }

    #[test]
    fn permutations() {
        let mut v = vec![0, 1, 2];
        let mut all = vec![v.clone()];
        while next_permutation(&mut v) {
            all.push(v.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[5], vec![2, 1, 0]);
    }
}
