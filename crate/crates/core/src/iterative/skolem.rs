//! The order `m < x` on the naturals (starting at 1) obtained by recursion
//! without addition.

/// `χ<(m, x)`: 1 if `m < x`, else 0.
pub fn chi_lt(m: u64, x: u64) -> u8 {
    u8::from(m < x)
}

/// `χ=(m, x)`: 1 if `m = x`, else 0.
pub fn chi_eq(m: u64, x: u64) -> u8 {
    u8::from(m == x)
}

/// `t(x, y) = (x + 1, max(y, χ=(m, x)))` on `ℕ × {0, 1}`.
pub fn skolem_step(m: u64, (x, y): (u64, u8)) -> (u64, u8) {
    (x + 1, y.max(chi_eq(m, x)))
}

/// Checks that `x ↦ (x, χ<(m, x))` is the homomorphism from `(ℕ, 1, s)` to
/// `(ℕ × {0,1}, (1, 0), t)` on `1 ≤ x ≤ x_max`, using the step `t`.
///
/// The homomorphism is computed by iterating from the base pair, so it is
/// the only candidate; each value is compared with the direct table (zeros
/// through `x = m`, ones after).
pub fn skolem_lt_check(m: u64, x_max: u64) -> Result<(), String> {
    skolem_lt_check_with(m, x_max, |p| skolem_step(m, p))
}

/// [`skolem_lt_check`] with an arbitrary step operation.
pub fn skolem_lt_check_with(m: u64, x_max: u64, step: impl Fn((u64, u8)) -> (u64, u8)) -> Result<(), String> {
    if m < 2 {
        return Err(format!("m = {m}: the construction needs m ≥ 2"));
    }
    if x_max < m + 2 {
        return Err(format!("x_max = {x_max} is below m + 2 = {}", m + 2));
    }
    let mut h = (1u64, 0u8);
    if h != (1, chi_lt(m, 1)) {
        return Err(format!("base pair (1, 0) differs from (1, χ<({m}, 1))"));
    }
    for x in 1..x_max {
        h = step(h);
        let table = u8::from(x + 1 > m);
        if h != (x + 1, chi_lt(m, x + 1)) || chi_lt(m, x + 1) != table {
            return Err(format!(
                "m = {m}: step gives {h:?} at x = {}, expected ({}, {table})",
                x + 1,
                x + 1
            ));
        }
    }
    Ok(())
}

/// `χ<(m, ·)` is not itself defined by recursion on `{0, 1}` alone: no
/// `u: {0,1} → {0,1}` has `χ<(m, x+1) = u(χ<(m, x))` for all `x ≤ x_max`.
pub fn unary_recursion_fails(m: u64, x_max: u64) -> bool {
    (0u8..4).all(|code| {
        let u = |y: u8| (code >> y) & 1;
        (1..x_max).any(|x| u(chi_lt(m, x)) != chi_lt(m, x + 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_homomorphism() {
        assert_eq!(skolem_lt_check(3, 10), Ok(()));
        assert_eq!((chi_lt(3, 3), chi_lt(3, 4)), (0, 1));
        assert_eq!(skolem_lt_check(2, 5), Ok(()));
        for m in 2..=10 {
            assert_eq!(skolem_lt_check(m, 20), Ok(()));
        }
        assert!(skolem_lt_check(1, 10).is_err());
        assert!(skolem_lt_check(5, 6).is_err());
    }

    #[test]
    fn tampered_step_fails() {
        // forgets to carry the flag forward
        let bad = |(x, _y): (u64, u8)| (x + 1, chi_eq(3, x));
        let e = skolem_lt_check_with(3, 10, bad).unwrap_err();
        assert!(e.contains("x = 5"), "{e}");
    }

    #[test]
    fn one_bit_recursion_is_not_enough() {
        for m in 2..=10 {
            assert!(unary_recursion_fails(m, 20));
        }
        // with m = 1 the table is 0, 1, 1, … which u = const 1 produces
        assert!(!unary_recursion_fails(1, 20));
    }
}
