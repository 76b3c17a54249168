use std::collections::BTreeSet;

use super::IterError;

/// Largest bound accepted by [`exp_valid_set`].
pub const EXP_BOUND: u64 = 100_000;

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = u128::from(m);
    let mut acc = 1 % m128;
    let mut b = u128::from(base % m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `{n ≤ bound : xⁿ⁺¹ ≡ x (mod n) for every x < n}`
pub fn exp_valid_set(bound: u64) -> Result<BTreeSet<u64>, IterError> {
    if bound > EXP_BOUND {
        return Err(IterError::SizeExceeded {
            what: "exponent validity bound",
            size: usize::try_from(bound).unwrap_or(usize::MAX),
            bound: EXP_BOUND as usize,
        });
    }
    Ok((1..=bound)
        .filter(|&n| (0..n).all(|x| pow_mod(x, n + 1, n) == x))
        .collect())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A candidate `1 + ∏B` that turned out composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub factors_of_b: Vec<u64>,
    pub candidate: u64,
    pub factorization: Vec<(u64, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPrimes {
    /// `A₁ = ∅, A₂, …` up to the first repetition (the last entry is the
    /// fixed point).
    pub stages: Vec<BTreeSet<u64>>,
    /// Odd composite candidates built from the primes added in the last
    /// growing step, explaining why growth stops.
    pub rejections: Vec<Rejection>,
}

impl GoodPrimes {
    pub fn fixed_point(&self) -> &BTreeSet<u64> {
        self.stages.last().expect("at least A₁")
    }
}

/// `A′ = A ∪ {p prime : p = 1 + ∏B, B ⊆ A}`
fn next_stage(a: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut out = a.clone();
    out.extend(candidates(a).into_iter().map(|(_, c)| c).filter(|&c| is_prime(c)));
    out
}

/// `(B, 1 + ∏B)` for every `B ⊆ a`.
fn candidates(a: &BTreeSet<u64>) -> Vec<(Vec<u64>, u64)> {
    let elems: Vec<u64> = a.iter().copied().collect();
    (0u64..(1 << elems.len()))
        .map(|mask| {
            let b: Vec<u64> = (0..elems.len()).filter(|i| mask & (1 << i) != 0).map(|i| elems[i]).collect();
            let c = 1 + b.iter().product::<u64>();
            (b, c)
        })
        .collect()
}

/// Iterates `A_{x+1} = A_x′` from `A₁ = ∅` until it stops growing.
pub fn good_primes() -> GoodPrimes {
    let mut stages = vec![BTreeSet::new()];
    loop {
        let last = stages.last().expect("nonempty");
        let next = next_stage(last);
        if &next == last {
            break;
        }
        stages.push(next);
    }
    let n = stages.len();
    let newest: BTreeSet<u64> = if n >= 2 {
        stages[n - 1].difference(&stages[n - 2]).copied().collect()
    } else {
        BTreeSet::new()
    };
    let rejections = candidates(&stages[n - 1])
        .into_iter()
        .filter(|(b, c)| c % 2 == 1 && !is_prime(*c) && b.iter().any(|p| newest.contains(p)))
        .map(|(factors_of_b, candidate)| Rejection {
            factorization: factorize(candidate),
            factors_of_b,
            candidate,
        })
        .collect();
    GoodPrimes { stages, rejections }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn exp_set() {
        assert_eq!(exp_valid_set(5000).unwrap(), set(&[1, 2, 6, 42, 1806]));
        assert_eq!(exp_valid_set(1).unwrap(), set(&[1]));
        assert_eq!(pow_mod(2, 7, 6), 2);
        assert!(exp_valid_set(EXP_BOUND + 1).is_err());
    }

    #[test]
    fn stages_and_rejections() {
        let g = good_primes();
        let expected = [set(&[]), set(&[2]), set(&[2, 3]), set(&[2, 3, 7]), set(&[2, 3, 7, 43])];
        assert_eq!(g.stages, expected);
        let rej: Vec<(u64, Vec<(u64, u32)>)> =
            g.rejections.iter().map(|r| (r.candidate, r.factorization.clone())).collect();
        assert_eq!(
            rej,
            vec![
                (87, vec![(3, 1), (29, 1)]),
                (259, vec![(7, 1), (37, 1)]),
                (603, vec![(3, 2), (67, 1)]),
                (1807, vec![(13, 1), (139, 1)]),
            ]
        );
    }

    #[test]
    fn chain_order_and_products() {
        let g = good_primes();
        let p: Vec<u64> = g.fixed_point().iter().copied().collect();
        for &a in &p {
            for &b in &p {
                assert_eq!(a < b, (b - 1) % a == 0, "{a} {b}");
            }
        }
        let prefixes: BTreeSet<u64> = (0..=p.len()).map(|k| p[..k].iter().product()).collect();
        assert_eq!(prefixes, exp_valid_set(5000).unwrap());
    }

    #[test]
    fn factoring() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(is_prime(43) && !is_prime(1) && !is_prime(1807));
    }
}
